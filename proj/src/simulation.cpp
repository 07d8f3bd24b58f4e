#include "scalelaw/simulation.hpp"

#include "scalelaw/errors.hpp"
#include "scalelaw/format.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace scalelaw {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t cell_seed(std::uint64_t seed, ProblemSize n, ProcessorCount p) {
    std::uint64_t h = splitmix64(seed);
    h = splitmix64(h ^ static_cast<std::uint64_t>(n));
    return splitmix64(h ^ static_cast<std::uint64_t>(p));
}

template <class T>
std::vector<T> sorted_unique(std::span<const T> values, const char* what) {
    if (values.empty()) {
        throw InvalidArgument(std::string(what) + " list must not be empty");
    }
    std::vector<T> out(values.begin(), values.end());
    for (T v : out) {
        if (v < 1) {
            throw InvalidArgument(std::string(what) + " values must be >= 1, got " + std::to_string(v));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void validate(const NoiseSpec& noise) {
    if (noise.kind == NoiseKind::Multiplicative && !(noise.sigma >= 0.0 && std::isfinite(noise.sigma))) {
        throw InvalidArgument("noise sigma must be >= 0, got " + format_number(noise.sigma));
    }
}

void validate(const MisspecSpec& misspec) {
    if (misspec.overhead != OverheadKind::None && !(misspec.c >= 0.0 && std::isfinite(misspec.c))) {
        throw InvalidArgument("overhead coefficient must be >= 0, got " + format_number(misspec.c));
    }
}

}  // namespace

double overhead_seconds(const MisspecSpec& misspec, ProcessorCount p) {
    switch (misspec.overhead) {
    case OverheadKind::None:
        return 0.0;
    case OverheadKind::LinearInP:
        return misspec.c * static_cast<double>(p);
    case OverheadKind::LogInP:
        return misspec.c * std::log2(static_cast<double>(p));
    }
    return 0.0;
}

GeneratedTimings generate_timings(const ScalingScenario& scenario, std::span<const ProblemSize> n_values,
                                  std::span<const ProcessorCount> p_values, const NoiseSpec& noise,
                                  const MisspecSpec& misspec) {
    validate(noise);
    validate(misspec);
    const std::vector<ProblemSize> ns = sorted_unique(n_values, "problem size");
    const std::vector<ProcessorCount> ps = sorted_unique(p_values, "processor count");

    GeneratedTimings out;
    out.records.reserve(ns.size() * ps.size());
    for (ProblemSize n : ns) {
        const TwoPartModel model = scenario.model_at(n);
        for (ProcessorCount p : ps) {
            const double base = total_time(model, p) + overhead_seconds(misspec, p);
            double time = base;
            if (noise.kind == NoiseKind::Multiplicative && noise.sigma > 0.0) {
                std::mt19937_64 engine(cell_seed(noise.seed, n, p));
                std::normal_distribution<double> eps(0.0, noise.sigma);
                time = base * (1.0 + eps(engine));
                while (!(time > 0.0)) {
                    ++out.resampled;
                    time = base * (1.0 + eps(engine));
                }
            }
            out.records.push_back({n, p, time, std::nullopt});
        }
    }
    return out;
}

SpeedupCurve gustafson_experiment(const ScalingScenario& scenario, std::span<const ProcessorCount> p_values) {
    if (p_values.empty()) {
        throw InvalidArgument("processor list must not be empty");
    }
    SpeedupCurve curve;
    curve.label = "gustafson n=p " + scenario.label();
    for (std::size_t i = 0; i < p_values.size(); ++i) {
        const ProcessorCount p = p_values[i];
        if (p < 1) {
            throw InvalidArgument("processor count must be >= 1, got " + std::to_string(p));
        }
        if (i > 0 && p <= p_values[i - 1]) {
            throw InvalidArgument("processor list must be strictly increasing");
        }
        const ProblemSize n = p;
        const ProcessorCount machines[] = {1, p};
        const GeneratedTimings runs =
            generate_timings(scenario, std::span(&n, 1), machines, NoiseSpec::none(), MisspecSpec::none());
        const double t1 = runs.records.front().time;
        const double tp = runs.records.back().time;
        curve.points.push_back({p, t1 / tp});
    }
    return curve;
}

}  // namespace scalelaw
