#include "scalelaw/speedup_laws.hpp"

#include "scalelaw/errors.hpp"
#include "scalelaw/format.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace scalelaw {

namespace {

void require_processors(ProcessorCount p) {
    if (p < 1) {
        throw InvalidArgument("processor count must be >= 1, got " + std::to_string(p));
    }
}

void require_base(const SerialFraction& beta, const char* op) {
    if (!beta.frame().is_base()) {
        throw FrameMismatch(std::string(op) + " expects a base-frame serial fraction, got one measured on " +
                            std::to_string(beta.frame().processors()) + " processors");
    }
}

void require_increasing(std::span<const ProcessorCount> p_values) {
    if (p_values.empty()) {
        throw InvalidArgument("processor list must not be empty");
    }
    for (std::size_t i = 0; i < p_values.size(); ++i) {
        require_processors(p_values[i]);
        if (i > 0 && p_values[i] <= p_values[i - 1]) {
            throw InvalidArgument("processor list must be strictly increasing");
        }
    }
}

// 1 + (p - 1) * beta; never below 1 for beta in [0,1].
double scaled_denominator(double beta, ProcessorCount p) {
    return 1.0 + static_cast<double>(p - 1) * beta;
}

}  // namespace

Frame Frame::on_processors(ProcessorCount p) {
    require_processors(p);
    return Frame{p};
}

SerialFraction::SerialFraction(double value, Frame frame, std::optional<ProblemSize> n)
    : value_(value), frame_(frame), n_(n) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw InvalidArgument("serial fraction must lie in [0,1], got " + format_number(value));
    }
    if (n && *n < 1) {
        throw InvalidArgument("problem size must be >= 1, got " + std::to_string(*n));
    }
}

TwoPartModel::TwoPartModel(double serial_time, double parallel_work, ProblemSize n)
    : serial_time_(serial_time), parallel_work_(parallel_work), n_(n) {
    if (!std::isfinite(serial_time) || !std::isfinite(parallel_work)) {
        throw InvalidArgument("model times must be finite");
    }
    if (serial_time < 0.0 || parallel_work < 0.0) {
        throw InvalidArgument("serial time and parallel work must be non-negative");
    }
    if (serial_time + parallel_work <= 0.0) {
        throw InvalidArgument("serial time and parallel work cannot both be zero");
    }
    if (n < 1) {
        throw InvalidArgument("problem size must be >= 1, got " + std::to_string(n));
    }
}

SerialFraction TwoPartModel::base_fraction() const {
    return SerialFraction::base(serial_time_ / single_processor_time(), n_);
}

double total_time(const TwoPartModel& model, ProcessorCount p) {
    require_processors(p);
    return model.serial_time() + model.parallel_work() / static_cast<double>(p);
}

double SpeedupLimit::value() const {
    if (!value_) {
        throw InvalidArgument("speedup limit is unbounded");
    }
    return *value_;
}

double amdahl_speedup(const SerialFraction& beta1, ProcessorCount p) {
    require_processors(p);
    require_base(beta1, "amdahl_speedup");
    // Same as 1 / (beta + (1 - beta) / p), exact at both ends of [0,1].
    return static_cast<double>(p) / scaled_denominator(beta1.value(), p);
}

SpeedupLimit amdahl_limit(const SerialFraction& beta1) {
    require_base(beta1, "amdahl_limit");
    if (beta1.value() == 0.0) {
        return SpeedupLimit::unbounded();
    }
    return SpeedupLimit::bounded(1.0 / beta1.value());
}

double gustafson_speedup(const SerialFraction& betap, ProcessorCount p) {
    require_processors(p);
    if (betap.frame().processors() != p) {
        throw FrameMismatch("gustafson_speedup on " + std::to_string(p) +
                            " processors got a serial fraction measured on " +
                            std::to_string(betap.frame().processors()));
    }
    const double pd = static_cast<double>(p);
    return pd - (pd - 1.0) * betap.value();
}

SerialFraction convert_fraction_base_to_p(const SerialFraction& beta1, ProcessorCount p) {
    require_processors(p);
    require_base(beta1, "convert_fraction_base_to_p");
    const double beta = beta1.value();
    const double converted = static_cast<double>(p) * beta / scaled_denominator(beta, p);
    return SerialFraction::on_processors(std::clamp(converted, 0.0, 1.0), p, beta1.problem_size());
}

SerialFraction convert_fraction_p_to_base(const SerialFraction& betap, ProcessorCount p) {
    require_processors(p);
    if (betap.frame().processors() != p) {
        throw FrameMismatch("convert_fraction_p_to_base on " + std::to_string(p) +
                            " processors got a serial fraction measured on " +
                            std::to_string(betap.frame().processors()));
    }
    if (p == 1) {
        return betap;
    }
    const double beta = betap.value();
    const double pd = static_cast<double>(p);
    const double denominator = pd - (pd - 1.0) * beta;
    if (!(denominator > 0.0)) {
        throw InvariantViolation("non-positive denominator converting fraction to base frame");
    }
    return SerialFraction::base(std::clamp(beta / denominator, 0.0, 1.0), betap.problem_size());
}

SerialFraction serial_fraction_of_scenario(const ScalingScenario& scenario, ProblemSize n) {
    if (n < 1) {
        throw InvalidArgument("problem size must be >= 1, got " + std::to_string(n));
    }
    const double serial = scenario.serial_time(n);
    const double parallel = scenario.parallel_work(n);
    return SerialFraction::base(serial / (serial + parallel), n);
}

SpeedupCurve speedup_curve(const SerialFraction& beta1, std::span<const ProcessorCount> p_values) {
    require_base(beta1, "speedup_curve");
    require_increasing(p_values);
    SpeedupCurve curve;
    curve.label = "amdahl beta=" + format_number(beta1.value());
    curve.points.reserve(p_values.size());
    for (ProcessorCount p : p_values) {
        curve.points.push_back({p, amdahl_speedup(beta1, p)});
    }
    return curve;
}

SpeedupCurve speedup_curve(const ScalingScenario& scenario, ProblemSize n,
                           std::span<const ProcessorCount> p_values) {
    SpeedupCurve curve = speedup_curve(serial_fraction_of_scenario(scenario, n), p_values);
    curve.label = scenario.label() + " n=" + std::to_string(n);
    return curve;
}

double verify_equivalence(std::span<const double> beta_grid, std::span<const ProcessorCount> p_grid) {
    if (beta_grid.empty() || p_grid.empty()) {
        throw InvalidArgument("verification grids must not be empty");
    }
    std::vector<SerialFraction> fractions;
    fractions.reserve(beta_grid.size());
    for (double beta : beta_grid) {
        fractions.push_back(SerialFraction::base(beta));
    }
    for (ProcessorCount p : p_grid) {
        require_processors(p);
    }

    double worst = 0.0;
    for (const SerialFraction& beta1 : fractions) {
        for (ProcessorCount p : p_grid) {
            const double amdahl = amdahl_speedup(beta1, p);
            const double gustafson = gustafson_speedup(convert_fraction_base_to_p(beta1, p), p);
            worst = std::max(worst, std::abs(amdahl - gustafson) / amdahl);
        }
    }
    return worst;
}

}  // namespace scalelaw
