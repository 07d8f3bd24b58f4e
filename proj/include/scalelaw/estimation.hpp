#pragma once

#include "scalelaw/fraction.hpp"
#include "scalelaw/model.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace scalelaw {

/// One benchmark observation: wall time of problem size n on p processors.
struct TimingRecord {
    ProblemSize n;
    ProcessorCount p;
    double time;
    std::optional<std::int64_t> replicate;

    friend bool operator==(const TimingRecord&, const TimingRecord&) = default;
};

/// Throws InvalidArgument unless n >= 1, p >= 1 and time is positive and finite.
void validate(const TimingRecord& record);

/// Replicates at one processor count reduced to their mean; min and max kept for reporting.
struct ReducedPoint {
    ProcessorCount p;
    double mean_time;
    double min_time;
    double max_time;
    std::size_t count;
};

struct PointResidual {
    ProcessorCount p;
    double relative_residual;  // (observed - predicted) / observed
};

struct FitResult {
    TwoPartModel model;
    SerialFraction base_fraction;
    double rms_relative_residual;
    bool clamped;
    std::vector<PointResidual> per_point_residuals;  // one per input record, input order
    std::vector<ReducedPoint> points;                // ascending p
};

/**
 * Solves the two-part model exactly from a single-processor run and one run
 * on p >= 2 processors of the same problem size.
 *
 * Throws ModelViolation when the pair implies negative serial time
 * (superlinear speedup) or serial time above T(n,1) (slowdown).
 */
TwoPartModel estimate_serial_time_pair(const TimingRecord& base, const TimingRecord& scaled);

/// Base-frame serial fraction (p/s - 1)/(p - 1) that makes Amdahl's law give speedup s.
SerialFraction estimate_beta_from_speedup(double speedup, ProcessorCount p);

/**
 * Least-squares fit of time = serial_time + parallel_work * (1/p) over records
 * of a single problem size. Replicates at the same p are averaged first.
 * A negative coefficient is clamped to zero, the other one re-fit, and the
 * result flagged as clamped.
 */
FitResult fit_two_part_model(std::span<const TimingRecord> records);

/// Fits every problem size present, keyed by n.
std::map<ProblemSize, FitResult> fit_by_problem_size(std::span<const TimingRecord> records);

/// Serial fraction on p processors implied by a fit: T_s / T(n,p).
SerialFraction scaled_fraction_of_fit(const FitResult& fit, ProcessorCount p);

}  // namespace scalelaw
