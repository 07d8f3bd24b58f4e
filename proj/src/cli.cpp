#include "scalelaw/cli.hpp"

#include "scalelaw/csv.hpp"
#include "scalelaw/errors.hpp"
#include "scalelaw/estimation.hpp"
#include "scalelaw/report.hpp"
#include "scalelaw/simulation.hpp"
#include "scalelaw/speedup_laws.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>

namespace scalelaw::cli {

namespace {

class UsageError : public ParseError {
public:
    using ParseError::ParseError;
};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) return {};
    return s.substr(first, s.find_last_not_of(" \t") - first + 1);
}

std::optional<double> to_double(std::string_view s) {
    s = trim(s);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(value)) {
        return std::nullopt;
    }
    return value;
}

std::optional<std::int64_t> to_int(std::string_view s) {
    s = trim(s);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return value;
}

ReportFormat parse_format(const std::string& name) {
    if (name == "csv") return ReportFormat::Csv;
    if (name == "json") return ReportFormat::Json;
    return ReportFormat::HumanTable;
}

CLI::Option* add_format(CLI::App* sub, std::string& format) {
    return sub->add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
}

struct ScenarioArgs {
    std::string kind;
    std::string beta_s;
    double baseline = 1.0;
    std::optional<int> serial_degree;
    std::optional<int> parallel_degree;
};

void add_scenario_options(CLI::App* sub, ScenarioArgs& args) {
    sub->add_option("--scenario", args.kind, "Scaling scenario")->check(CLI::IsMember({"fixed-serial", "poly"}));
    sub->add_option("--beta-s", args.beta_s, "Serial fraction of the n=1 problem (decimal or a/b)");
    sub->add_option("--baseline", args.baseline, "Single-processor time of the n=1 problem, seconds")
        ->capture_default_str();
    sub->add_option("--serial-degree", args.serial_degree, "Exponent of n in the serial time (poly)");
    sub->add_option("--parallel-degree", args.parallel_degree, "Exponent of n in the parallel work (poly)");
}

ScalingScenario build_scenario(const ScenarioArgs& args) {
    if (args.beta_s.empty()) {
        throw UsageError("--beta-s is required with --scenario");
    }
    const double beta_s = parse_fraction(args.beta_s);
    if (args.kind == "poly") {
        if (!args.serial_degree || !args.parallel_degree) {
            throw UsageError("--scenario poly requires --serial-degree and --parallel-degree");
        }
        return ScalingScenario(PolynomialGrowth{*args.serial_degree, *args.parallel_degree, beta_s, args.baseline});
    }
    return ScalingScenario(FixedSerial{beta_s, args.baseline});
}

std::vector<TimingRecord> read_records(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot open input file '" + path + "'");
    }
    return parse_timing_csv(in);
}

TimingRecord mean_record(std::span<const TimingRecord> records, ProblemSize n, ProcessorCount p) {
    double sum = 0.0;
    std::size_t count = 0;
    for (const TimingRecord& r : records) {
        if (r.n == n && r.p == p) {
            sum += r.time;
            ++count;
        }
    }
    if (count == 0) {
        throw InsufficientData("no record with n=" + std::to_string(n) + " and p=" + std::to_string(p));
    }
    return {n, p, sum / static_cast<double>(count), std::nullopt};
}

}  // namespace

double parse_fraction(std::string_view text) {
    const std::string_view s = trim(text);
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        if (auto v = to_double(s)) return *v;
        throw ParseError("invalid fraction '" + std::string(text) + "'");
    }
    const auto num = to_double(s.substr(0, slash));
    const auto den = to_double(s.substr(slash + 1));
    if (!num || !den) {
        throw ParseError("invalid fraction '" + std::string(text) + "'");
    }
    if (*den == 0.0) {
        throw ParseError("fraction '" + std::string(text) + "' has a zero denominator");
    }
    return *num / *den;
}

std::vector<std::int64_t> parse_int_list(std::string_view text) {
    std::vector<std::int64_t> values;
    auto bad = [&](std::string_view item) {
        return ParseError("invalid list item '" + std::string(item) + "' in '" + std::string(text) + "'");
    };
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        const std::string_view item = trim(text.substr(start, comma - start));
        start = comma + 1;

        const auto colon = item.find(':');
        if (colon == std::string_view::npos) {
            const auto v = to_int(item);
            if (!v) throw bad(item);
            values.push_back(*v);
            continue;
        }
        const auto colon2 = item.find(':', colon + 1);
        const auto lo = to_int(item.substr(0, colon));
        const auto hi = to_int(item.substr(colon + 1, colon2 == std::string_view::npos ? colon2 : colon2 - colon - 1));
        if (!lo || !hi || *hi < *lo) throw bad(item);

        std::string_view step_text = colon2 == std::string_view::npos ? "1" : item.substr(colon2 + 1);
        const bool geometric = !step_text.empty() && step_text.front() == '*';
        if (geometric) step_text.remove_prefix(1);
        const auto step = to_int(step_text);
        if (!step || *step < 1 || (geometric && (*step < 2 || *lo < 1))) throw bad(item);

        for (std::int64_t v = *lo; v <= *hi;) {
            values.push_back(v);
            if (geometric) {
                if (v > *hi / *step) break;
                v *= *step;
            } else {
                if (v > *hi - *step) break;
                v += *step;
            }
        }
    }
    return values;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Two-part scalability model: speedup laws, frame conversion and timing fits", "scalelaw"};
    app.require_subcommand(1);

    std::string format = "table";

    // predict
    std::string law;
    std::string beta_text;
    std::int64_t p = 1;
    std::string frame_text;
    auto* predict = app.add_subcommand("predict", "Speedup from Amdahl's or Gustafson-Barsis law");
    predict->add_option("--law", law, "Speedup law")->required()->check(CLI::IsMember({"amdahl", "gustafson"}));
    predict->add_option("--beta", beta_text, "Serial fraction (decimal or a/b)")->required();
    predict->add_option("--p", p, "Processor count")->required();
    predict->add_option("--frame", frame_text, "Frame the fraction was measured in (default: the law's own)")
        ->check(CLI::IsMember({"base", "on-p"}));
    add_format(predict, format);

    // limit
    auto* limit = app.add_subcommand("limit", "Speedup bound with unlimited processors");
    limit->add_option("--beta", beta_text, "Base-frame serial fraction")->required();
    add_format(limit, format);

    // convert
    std::string to_frame;
    auto* convert = app.add_subcommand("convert", "Convert a serial fraction between the base and p-processor frames");
    convert->add_option("--beta", beta_text, "Serial fraction to convert")->required();
    convert->add_option("--p", p, "Processor count")->required();
    convert->add_option("--to", to_frame, "Target frame")->required()->check(CLI::IsMember({"base", "on-p"}));
    add_format(convert, format);

    // fit
    std::string input;
    std::optional<std::int64_t> fit_n;
    std::optional<std::int64_t> fit_p;
    std::optional<double> speedup;
    std::string method = "ls";
    auto* fit = app.add_subcommand("fit", "Estimate the two-part model from measured timings");
    fit->add_option("--input", input, "CSV file with columns n,p,time[,replicate]");
    fit->add_option("--n", fit_n, "Fit only this problem size");
    fit->add_option("--method", method, "ls: least squares over all p; pair: exact solve from p=1 and one p")
        ->check(CLI::IsMember({"ls", "pair"}))
        ->capture_default_str();
    fit->add_option("--p", fit_p, "Processor count for --method pair or --speedup");
    fit->add_option("--speedup", speedup, "Invert a measured speedup into a base-frame serial fraction");
    add_format(fit, format);

    // simulate
    ScenarioArgs sim_scenario;
    std::string n_list;
    std::string p_list;
    double sigma = 0.0;
    std::uint64_t seed = 0;
    std::string overhead = "none";
    double overhead_c = 0.0;
    bool coupling = false;
    auto* simulate = app.add_subcommand("simulate", "Generate synthetic timings from a scaling scenario");
    add_scenario_options(simulate, sim_scenario);
    simulate->get_option("--scenario")->required();
    simulate->add_option("--n", n_list, "Problem sizes: list or range (a:b, a:b:step, a:b:*k)");
    simulate->add_option("--p", p_list, "Processor counts: list or range")->required();
    simulate->add_option("--sigma", sigma, "Relative std-dev of multiplicative noise")->capture_default_str();
    simulate->add_option("--seed", seed, "Noise seed")->capture_default_str();
    simulate->add_option("--overhead", overhead, "Overhead outside the model")
        ->check(CLI::IsMember({"none", "linear", "log"}))
        ->capture_default_str();
    simulate->add_option("--overhead-c", overhead_c, "Overhead coefficient, seconds")->capture_default_str();
    simulate->add_flag("--gustafson-coupling", coupling, "Set n = p and report T(n,1)/T(n,p) per p");
    add_format(simulate, format);

    // verify
    std::int64_t beta_steps = 101;
    std::int64_t p_max = 1024;
    auto* verify = app.add_subcommand("verify", "Check Gustafson-Barsis on converted fractions against Amdahl");
    verify->add_option("--beta-steps", beta_steps, "Grid points on [0,1]")->capture_default_str();
    verify->add_option("--p-max", p_max, "Largest processor count; grid is 1..p-max")->capture_default_str();
    add_format(verify, format);

    // curve
    ScenarioArgs curve_scenario;
    std::optional<std::int64_t> curve_n;
    bool with_limit = false;
    auto* curve = app.add_subcommand("curve", "Plot-ready Amdahl speedup curve");
    curve->add_option("--beta", beta_text, "Base-frame serial fraction");
    add_scenario_options(curve, curve_scenario);
    curve->add_option("--n", curve_n, "Problem size when using --scenario");
    curve->add_option("--p", p_list, "Processor counts: list or range")->required();
    curve->add_flag("--with-limit", with_limit, "Add the speedup bound as a constant column");
    add_format(curve, format);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsageError;
    }

    const ReportFormat fmt = parse_format(format);
    try {
        if (predict->parsed()) {
            const double beta = parse_fraction(beta_text);
            const bool base_frame = frame_text.empty() ? law == "amdahl" : frame_text == "base";
            const SerialFraction fraction =
                base_frame ? SerialFraction::base(beta) : SerialFraction::on_processors(beta, p);
            const double s = law == "amdahl" ? amdahl_speedup(fraction, p) : gustafson_speedup(fraction, p);
            emit_report(speedup_report(law, fraction, p, s), fmt, out);
        } else if (limit->parsed()) {
            emit_report(limit_report(amdahl_limit(SerialFraction::base(parse_fraction(beta_text)))), fmt, out);
        } else if (convert->parsed()) {
            const double beta = parse_fraction(beta_text);
            const SerialFraction converted = to_frame == "on-p"
                                                 ? convert_fraction_base_to_p(SerialFraction::base(beta), p)
                                                 : convert_fraction_p_to_base(SerialFraction::on_processors(beta, p), p);
            emit_report(fraction_report(converted), fmt, out);
        } else if (fit->parsed()) {
            if (speedup) {
                if (!input.empty()) throw UsageError("--speedup and --input are mutually exclusive");
                if (!fit_p) throw UsageError("--speedup requires --p");
                emit_report(fraction_report(estimate_beta_from_speedup(*speedup, *fit_p)), fmt, out);
                return kExitOk;
            }
            if (input.empty()) throw UsageError("fit requires --input or --speedup");
            std::vector<TimingRecord> records = read_records(input);
            if (fit_n) {
                std::erase_if(records, [&](const TimingRecord& r) { return r.n != *fit_n; });
                if (records.empty()) {
                    throw InsufficientData("no records with n=" + std::to_string(*fit_n));
                }
            }
            if (method == "pair") {
                if (records.empty()) throw InsufficientData("pair estimate needs records at p=1 and p>=2");
                const ProblemSize n = fit_n ? *fit_n : records.front().n;
                ProcessorCount scaled_p = 0;
                for (const TimingRecord& r : records) {
                    if (r.n == n) scaled_p = std::max(scaled_p, r.p);
                }
                if (fit_p) scaled_p = *fit_p;
                const TwoPartModel model =
                    estimate_serial_time_pair(mean_record(records, n, 1), mean_record(records, n, scaled_p));
                emit_report(model_report(model), fmt, out);
            } else {
                emit_report(fit_report(fit_by_problem_size(records)), fmt, out);
            }
        } else if (simulate->parsed()) {
            const ScalingScenario scenario = build_scenario(sim_scenario);
            const std::vector<std::int64_t> ps = parse_int_list(p_list);
            if (coupling) {
                emit_report(curve_report(gustafson_experiment(scenario, ps)), fmt, out);
                return kExitOk;
            }
            if (n_list.empty()) throw UsageError("simulate requires --n unless --gustafson-coupling is set");
            const std::vector<std::int64_t> ns = parse_int_list(n_list);
            const NoiseSpec noise =
                sigma > 0.0 ? NoiseSpec::multiplicative(sigma, seed) : NoiseSpec{NoiseKind::None, sigma, seed};
            MisspecSpec misspec;
            misspec.c = overhead_c;
            misspec.overhead = overhead == "linear" ? OverheadKind::LinearInP
                               : overhead == "log"  ? OverheadKind::LogInP
                                                    : OverheadKind::None;
            if (sigma < 0.0) throw InvalidArgument("--sigma must be >= 0");
            const GeneratedTimings generated = generate_timings(scenario, ns, ps, noise, misspec);
            emit_report(records_report(generated.records, generated.resampled), fmt, out);
        } else if (verify->parsed()) {
            if (beta_steps < 2) throw InvalidArgument("--beta-steps must be >= 2");
            if (p_max < 1) throw InvalidArgument("--p-max must be >= 1");
            std::vector<double> betas;
            const double intervals = static_cast<double>(beta_steps - 1);
            for (std::int64_t i = 0; i < beta_steps; ++i) {
                betas.push_back(static_cast<double>(i) / intervals);
            }
            std::vector<ProcessorCount> ps;
            for (ProcessorCount q = 1; q <= p_max; ++q) ps.push_back(q);
            const double deviation = verify_equivalence(betas, ps);
            emit_report(verify_report(deviation, betas.size(), ps.size()), fmt, out);
            if (deviation > 1e-12) {
                err << "error: laws disagree by " << deviation << " (tolerance 1e-12)\n";
                return kExitDomainError;
            }
        } else if (curve->parsed()) {
            const std::vector<std::int64_t> ps = parse_int_list(p_list);
            const bool from_beta = !beta_text.empty();
            if (from_beta == !curve_scenario.kind.empty()) {
                throw UsageError("curve requires exactly one of --beta or --scenario");
            }
            SerialFraction beta = SerialFraction::base(0.0);
            SpeedupCurve result;
            if (from_beta) {
                beta = SerialFraction::base(parse_fraction(beta_text));
                result = speedup_curve(beta, ps);
            } else {
                if (!curve_n) throw UsageError("curve --scenario requires --n");
                const ScalingScenario scenario = build_scenario(curve_scenario);
                beta = serial_fraction_of_scenario(scenario, *curve_n);
                result = speedup_curve(scenario, *curve_n, ps);
            }
            emit_report(curve_report(result, with_limit ? std::optional(amdahl_limit(beta)) : std::nullopt), fmt,
                        out);
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsageError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomainError;
    }
    return kExitOk;
}

}  // namespace scalelaw::cli
