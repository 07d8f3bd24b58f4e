// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include "scalelaw/cli.hpp"
#include "scalelaw/csv.hpp"
#include "scalelaw/errors.hpp"
#include "scalelaw/format.hpp"
#include "scalelaw/estimation.hpp"
#include "scalelaw/report.hpp"
#include "scalelaw/simulation.hpp"
#include "scalelaw/speedup_laws.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

using namespace scalelaw;

namespace {

struct Verdict {
    bool pass;
    std::string detail;
};

int failures = 0;

void report(const char* id, const char* title, const std::function<Verdict()>& criterion) {
    Verdict v;
    try {
        v = criterion();
    } catch (const std::exception& e) {
        v = {false, std::string("unexpected exception: ") + e.what()};
    }
    if (!v.pass) ++failures;
    std::printf("[%s] %s %s: %s\n", v.pass ? "PASS" : "FAIL", id, title, v.detail.c_str());
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<double> beta_grid() {
    std::vector<double> betas;
    for (int i = 0; i <= 100; ++i) betas.push_back(i / 100.0);
    return betas;
}

std::vector<ProcessorCount> p_grid() {
    std::vector<ProcessorCount> ps;
    for (ProcessorCount p = 1; p <= 1024; ++p) ps.push_back(p);
    return ps;
}

// Smallest n with amdahl(beta(n), 64) > 63.9 for fixed serial time, beta_s = 1/10.
// beta(n) = 1/(1 + 9n) and S = 64 / (1 + 63 beta), so S > 63.9 reduces in
// integers to 640 (1 + 9n) > 639 (64 + 9n), i.e. 9n > 40256.
constexpr ProblemSize kAsymptoticBound = 4473;

ProblemSize integer_oracle_bound() {
    ProblemSize n = 1;
    while (!(9 * n > 40256)) ++n;
    return n;
}

struct CliOutcome {
    int code;
    std::string out;
    std::string err;
};

CliOutcome invoke(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

int main() {
    report("AC1", "paper fixtures", [] {
        const SpeedupLimit half = amdahl_limit(SerialFraction::base(cli::parse_fraction("1/2")));
        const SpeedupLimit tenth = amdahl_limit(SerialFraction::base(cli::parse_fraction("1/10")));
        const bool pass = !half.is_unbounded() && !tenth.is_unbounded() && half.value() == 2.0 &&
                          tenth.value() == 10.0;
        return Verdict{pass, "limit(1/2) = " + format_number(half.value()) +
                                 ", limit(1/10) = " + format_number(tenth.value())};
    });

    report("AC2", "Amdahl vs converted Gustafson-Barsis", [] {
        const auto start = std::chrono::steady_clock::now();
        const auto betas = beta_grid();
        const auto ps = p_grid();
        const double deviation = verify_equivalence(betas, ps);
        const double elapsed = seconds_since(start);
        return Verdict{deviation <= 1e-12 && elapsed < 1.0,
                       "max relative deviation " + format_number(deviation) + " (<= 1e-12) over 101 x 1024 grid in " +
                           format_number(elapsed) + " s (< 1 s)"};
    });

    report("AC3", "round-trip frame conversion", [] {
        double worst = 0.0;
        for (double beta : beta_grid()) {
            for (ProcessorCount p : p_grid()) {
                const SerialFraction on_p = convert_fraction_base_to_p(SerialFraction::base(beta), p);
                worst = std::max(worst, std::abs(convert_fraction_p_to_base(on_p, p).value() - beta));
            }
        }
        return Verdict{worst <= 1e-12, "max absolute error " + format_number(worst) + " (<= 1e-12)"};
    });

    report("AC4", "estimator oracle equivalence", [] {
        std::mt19937_64 rng(20260101);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        double worst = 0.0;
        for (int trial = 0; trial < 50; ++trial) {
            // (0, 100]: 100 * (1 - u) with u in [0, 1)
            const TwoPartModel truth(100.0 * (1.0 - unit(rng)), 100.0 * (1.0 - unit(rng)));
            std::vector<TimingRecord> records;
            for (ProcessorCount p : {1, 2, 4, 8, 16, 32}) {
                records.push_back({1, p, total_time(truth, p), std::nullopt});
            }
            const FitResult fit = fit_two_part_model(records);
            worst = std::max(worst, std::abs(fit.model.serial_time() - truth.serial_time()) / truth.serial_time());
            worst = std::max(worst,
                             std::abs(fit.model.parallel_work() - truth.parallel_work()) / truth.parallel_work());
        }
        return Verdict{worst <= 1e-9, "50 models, max relative parameter error " + format_number(worst) +
                                          " (<= 1e-9)"};
    });

    report("AC5", "speedup approaches p as n grows", [] {
        const auto start = std::chrono::steady_clock::now();
        if (integer_oracle_bound() != kAsymptoticBound) {
            return Verdict{false, "frozen bound disagrees with integer oracle"};
        }
        const ScalingScenario scenario(FixedSerial{0.1, 1.0});
        constexpr ProcessorCount p = 64;
        double previous = 0.0;
        std::optional<ProblemSize> first_above;
        for (ProblemSize n = 1; n <= kAsymptoticBound; ++n) {
            const double s = amdahl_speedup(serial_fraction_of_scenario(scenario, n), p);
            if (!(s > previous)) {
                return Verdict{false, "speedup not strictly increasing at n=" + std::to_string(n)};
            }
            previous = s;
            if (!first_above && s > 63.9) first_above = n;
        }
        const double elapsed = seconds_since(start);
        const bool pass = first_above.has_value() && elapsed < 1.0;
        return Verdict{pass, "strictly increasing on n=1.." + std::to_string(kAsymptoticBound) +
                                 ", first n with S > 63.9 is " +
                                 (first_above ? std::to_string(*first_above) : std::string("none")) + " (N* = " +
                                 std::to_string(kAsymptoticBound) + ") in " + format_number(elapsed) + " s"};
    });

    report("AC6", "noise robustness", [] {
        // T_s = 2, W = 8 at n = 1.
        const ScalingScenario scenario(FixedSerial{0.2, 10.0});
        const std::vector<ProblemSize> ns{1};
        const std::vector<ProcessorCount> ps{1, 2, 4, 8, 16, 32};
        const double truth = scenario.serial_time(1);
        int within = 0;
        for (std::uint64_t seed = 1; seed <= 100; ++seed) {
            const auto g = generate_timings(scenario, ns, ps, NoiseSpec::multiplicative(0.01, seed),
                                            MisspecSpec::none());
            const FitResult fit = fit_two_part_model(g.records);
            if (std::abs(fit.model.serial_time() - truth) <= 0.05 * truth) ++within;
        }
        return Verdict{within >= 95, std::to_string(within) + "/100 trials within 5% of T_s (>= 95)"};
    });

    report("AC7", "CSV round trip and CLI exit codes", [] {
        std::string detail;
        bool pass = true;
        auto expect = [&](bool ok, const std::string& what) {
            if (!ok) {
                pass = false;
                detail += "failed: " + what + "; ";
            }
        };

        const auto records = parse_timing_csv("n,p,time\n100,1,10.0\n100,4,4.0");
        expect(records == std::vector<TimingRecord>{{100, 1, 10.0, std::nullopt}, {100, 4, 4.0, std::nullopt}},
               "two-record parse");
        std::ostringstream csv;
        emit_report(records_report(records), ReportFormat::Csv, csv);
        expect(parse_timing_csv(csv.str()) == records, "emit/parse round trip");

        try {
            parse_timing_csv("p,time\n1,10.0");
            expect(false, "missing column n");
        } catch (const SchemaError& e) {
            expect(e.column() == "n", "schema error names n");
        }
        try {
            parse_timing_csv("n,p,time\n100,4,-1.0");
            expect(false, "negative time");
        } catch (const RowError& e) {
            expect(e.row() == 2 && std::string(e.what()).find("non-positive time") != std::string::npos,
                   "row error at row 2");
        }

        const CliOutcome limit = invoke({"limit", "--beta", "0.5"});
        expect(limit.code == 0 && limit.out == "2\n", "limit --beta 0.5 prints 2");

        const CliOutcome verify = invoke({"verify", "--beta-steps", "101", "--p-max", "1024"});
        expect(verify.code == 0 && std::stod(verify.out) <= 1e-12, "verify exit 0 with deviation <= 1e-12");

        const auto path = std::filesystem::temp_directory_path() /
                          ("scalelaw_acceptance_" + std::to_string(::getpid()) + ".csv");
        std::ofstream(path) << "n,p,time\n100,1,10.0\n";
        const CliOutcome fit = invoke({"fit", "--input", path.string()});
        std::filesystem::remove(path);
        expect(fit.code == 1 && fit.err.find("at least two distinct processor counts") != std::string::npos,
               "fit on one row exits 1 with insufficient-data message");

        const CliOutcome usage = invoke({"limit"});
        expect(usage.code == 2, "usage error exits 2");

        if (pass) detail = "3 parse examples, round trip, 3 CLI examples, usage exit code";
        return Verdict{pass, detail};
    });

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
