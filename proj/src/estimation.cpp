#include "scalelaw/estimation.hpp"

#include "scalelaw/errors.hpp"
#include "scalelaw/format.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace scalelaw {

namespace {

// Relative slack for values that are zero in exact arithmetic but pick up
// rounding error (e.g. serial time of a perfectly parallel run).
constexpr double kRoundoff = 1e-12;

std::vector<ReducedPoint> reduce_replicates(std::span<const TimingRecord> records) {
    std::map<ProcessorCount, ReducedPoint> by_p;
    for (const TimingRecord& r : records) {
        auto [it, inserted] = by_p.try_emplace(r.p, ReducedPoint{r.p, 0.0, r.time, r.time, 0});
        ReducedPoint& point = it->second;
        point.mean_time += r.time;
        point.min_time = std::min(point.min_time, r.time);
        point.max_time = std::max(point.max_time, r.time);
        ++point.count;
    }
    std::vector<ReducedPoint> points;
    points.reserve(by_p.size());
    for (auto& [p, point] : by_p) {
        point.mean_time /= static_cast<double>(point.count);
        points.push_back(point);
    }
    return points;
}

}  // namespace

void validate(const TimingRecord& record) {
    if (record.n < 1) {
        throw InvalidArgument("timing record problem size must be >= 1, got " + std::to_string(record.n));
    }
    if (record.p < 1) {
        throw InvalidArgument("timing record processor count must be >= 1, got " + std::to_string(record.p));
    }
    if (!(record.time > 0.0) || !std::isfinite(record.time)) {
        throw InvalidArgument("timing record time must be positive, got " + format_number(record.time));
    }
}

TwoPartModel estimate_serial_time_pair(const TimingRecord& base, const TimingRecord& scaled) {
    validate(base);
    validate(scaled);
    if (base.n != scaled.n) {
        throw InvalidArgument("pair estimate needs one problem size, got n=" + std::to_string(base.n) +
                              " and n=" + std::to_string(scaled.n));
    }
    if (base.p != 1) {
        throw InvalidArgument("pair estimate needs a single-processor base record, got p=" +
                              std::to_string(base.p));
    }
    if (scaled.p < 2) {
        throw InvalidArgument("pair estimate needs a scaled record with p >= 2, got p=" +
                              std::to_string(scaled.p));
    }

    const double p = static_cast<double>(scaled.p);
    const double t1 = base.time;
    double serial = (p * scaled.time - t1) / (p - 1.0);
    const double slack = kRoundoff * t1;

    if (serial < -slack) {
        throw ModelViolation("superlinear speedup: p*T(n,p) = " + format_number(p * scaled.time) +
                             " is below T(n,1) = " + format_number(t1));
    }
    if (serial > t1 + slack) {
        throw ModelViolation("slowdown: T(n,p) = " + format_number(scaled.time) + " exceeds T(n,1) = " +
                             format_number(t1));
    }
    serial = std::clamp(serial, 0.0, t1);
    return TwoPartModel(serial, t1 - serial, base.n);
}

SerialFraction estimate_beta_from_speedup(double speedup, ProcessorCount p) {
    if (p < 2) {
        throw InvalidArgument("speedup inversion needs p >= 2, got " + std::to_string(p));
    }
    if (!(speedup > 0.0) || !std::isfinite(speedup)) {
        throw InvalidArgument("speedup must be positive, got " + format_number(speedup));
    }
    const double pd = static_cast<double>(p);
    if (speedup > pd * (1.0 + kRoundoff)) {
        throw ModelViolation("superlinear speedup " + format_number(speedup) + " on " + std::to_string(p) +
                             " processors");
    }
    if (speedup < 1.0 - kRoundoff) {
        throw ModelViolation("slowdown: speedup " + format_number(speedup) + " is below 1");
    }
    const double beta = (pd / speedup - 1.0) / (pd - 1.0);
    return SerialFraction::base(std::clamp(beta, 0.0, 1.0));
}

FitResult fit_two_part_model(std::span<const TimingRecord> records) {
    if (records.empty()) {
        throw InsufficientData("fit needs at least two distinct processor counts, got no records");
    }
    const ProblemSize n = records.front().n;
    for (const TimingRecord& r : records) {
        validate(r);
        if (r.n != n) {
            throw InvalidArgument("fit needs a single problem size, got n=" + std::to_string(n) + " and n=" +
                                  std::to_string(r.n));
        }
    }

    std::vector<ReducedPoint> points = reduce_replicates(records);
    if (points.size() < 2) {
        throw InsufficientData("fit needs at least two distinct processor counts, got " +
                               std::to_string(points.size()));
    }

    double x_mean = 0.0;
    double y_mean = 0.0;
    double y_max = 0.0;
    for (const ReducedPoint& pt : points) {
        x_mean += 1.0 / static_cast<double>(pt.p);
        y_mean += pt.mean_time;
        y_max = std::max(y_max, pt.mean_time);
    }
    x_mean /= static_cast<double>(points.size());
    y_mean /= static_cast<double>(points.size());

    double sxx = 0.0;
    double sxy = 0.0;
    double xx = 0.0;
    double xy = 0.0;
    for (const ReducedPoint& pt : points) {
        const double x = 1.0 / static_cast<double>(pt.p);
        sxx += (x - x_mean) * (x - x_mean);
        sxy += (x - x_mean) * (pt.mean_time - y_mean);
        xx += x * x;
        xy += x * pt.mean_time;
    }

    double work = sxy / sxx;
    double serial = y_mean - work * x_mean;
    bool clamped = false;
    const double slack = kRoundoff * y_max;

    if (serial < 0.0) {
        if (serial < -slack) {
            clamped = true;
            work = xy / xx;
        }
        serial = 0.0;
    } else if (work < 0.0) {
        if (work < -slack) {
            clamped = true;
            serial = y_mean;
        }
        work = 0.0;
    }

    FitResult result{
        .model = TwoPartModel(serial, work, n),
        .base_fraction = SerialFraction::base(serial / (serial + work), n),
        .rms_relative_residual = 0.0,
        .clamped = clamped,
        .per_point_residuals = {},
        .points = std::move(points),
    };

    double sum_sq = 0.0;
    result.per_point_residuals.reserve(records.size());
    for (const TimingRecord& r : records) {
        const double predicted = total_time(result.model, r.p);
        const double residual = (r.time - predicted) / r.time;
        result.per_point_residuals.push_back({r.p, residual});
        sum_sq += residual * residual;
    }
    result.rms_relative_residual = std::sqrt(sum_sq / static_cast<double>(records.size()));
    return result;
}

std::map<ProblemSize, FitResult> fit_by_problem_size(std::span<const TimingRecord> records) {
    std::map<ProblemSize, std::vector<TimingRecord>> groups;
    for (const TimingRecord& r : records) {
        groups[r.n].push_back(r);
    }
    if (groups.empty()) {
        throw InsufficientData("fit needs at least two distinct processor counts, got no records");
    }
    std::map<ProblemSize, FitResult> fits;
    for (const auto& [n, group] : groups) {
        fits.emplace(n, fit_two_part_model(group));
    }
    return fits;
}

SerialFraction scaled_fraction_of_fit(const FitResult& fit, ProcessorCount p) {
    const double t_p = total_time(fit.model, p);
    return SerialFraction::on_processors(std::clamp(fit.model.serial_time() / t_p, 0.0, 1.0), p,
                                         fit.model.problem_size());
}

}  // namespace scalelaw
