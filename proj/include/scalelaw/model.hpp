#pragma once

#include "scalelaw/fraction.hpp"

namespace scalelaw {

/**
 * Execution time of one problem size split into a serial part that takes the
 * same time on every machine and parallel work that divides perfectly across
 * processors. serial_time + parallel_work is the single-processor time T(n,1).
 */
class TwoPartModel {
public:
    /// Throws InvalidArgument on negative or non-finite parts, or when both are zero.
    TwoPartModel(double serial_time, double parallel_work, ProblemSize n = 1);

    double serial_time() const noexcept { return serial_time_; }
    double parallel_work() const noexcept { return parallel_work_; }
    ProblemSize problem_size() const noexcept { return n_; }

    double single_processor_time() const noexcept { return serial_time_ + parallel_work_; }

    /// Serial fraction on one processor, serial_time / T(n,1).
    SerialFraction base_fraction() const;

private:
    double serial_time_;
    double parallel_work_;
    ProblemSize n_;
};

/// Wall time on p processors: serial_time + parallel_work / p.
double total_time(const TwoPartModel& model, ProcessorCount p);

}  // namespace scalelaw
