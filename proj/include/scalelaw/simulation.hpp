#pragma once

#include "scalelaw/estimation.hpp"
#include "scalelaw/scenario.hpp"
#include "scalelaw/speedup_laws.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace scalelaw {

enum class NoiseKind { None, Multiplicative };

/// Multiplicative Gaussian timing jitter: time * (1 + eps), eps ~ N(0, sigma).
struct NoiseSpec {
    NoiseKind kind = NoiseKind::None;
    double sigma = 0.0;
    std::uint64_t seed = 0;

    static NoiseSpec none() { return {}; }
    static NoiseSpec multiplicative(double sigma, std::uint64_t seed) {
        return {NoiseKind::Multiplicative, sigma, seed};
    }
};

enum class OverheadKind { None, LinearInP, LogInP };

/**
 * Extra per-run cost outside the two-part model, used only to feed estimators
 * data the model cannot explain. LinearInP adds c * p seconds, LogInP adds
 * c * log2(p) seconds.
 */
struct MisspecSpec {
    OverheadKind overhead = OverheadKind::None;
    double c = 0.0;

    static MisspecSpec none() { return {}; }
};

struct GeneratedTimings {
    std::vector<TimingRecord> records;  // ordered by (n, p)
    std::size_t resampled = 0;          // perturbed times that came out <= 0 and were redrawn
};

/// Overhead seconds added on p processors.
double overhead_seconds(const MisspecSpec& misspec, ProcessorCount p);

/**
 * Synthetic timings for every (n, p) in the cross product of the two grids
 * (deduplicated, ascending). Each cell draws from its own generator seeded
 * from (seed, n, p), so a cell's value does not depend on the rest of the grid.
 */
GeneratedTimings generate_timings(const ScalingScenario& scenario, std::span<const ProblemSize> n_values,
                                  std::span<const ProcessorCount> p_values, const NoiseSpec& noise,
                                  const MisspecSpec& misspec);

/**
 * Reproduces scaled-speedup measurements by growing the problem with the
 * machine: for each p, runs n = p on one and on p processors (noise-free)
 * and reports T(n,1) / T(n,p).
 */
SpeedupCurve gustafson_experiment(const ScalingScenario& scenario, std::span<const ProcessorCount> p_values);

}  // namespace scalelaw
