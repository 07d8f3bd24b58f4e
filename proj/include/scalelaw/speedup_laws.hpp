#pragma once

#include "scalelaw/fraction.hpp"
#include "scalelaw/model.hpp"
#include "scalelaw/scenario.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace scalelaw {

/// Upper bound on speedup with unlimited processors. Unbounded when the
/// serial fraction is zero.
class SpeedupLimit {
public:
    static SpeedupLimit unbounded() noexcept { return SpeedupLimit{std::nullopt}; }
    static SpeedupLimit bounded(double value) noexcept { return SpeedupLimit{value}; }

    bool is_unbounded() const noexcept { return !value_; }
    /// Throws InvalidArgument when unbounded.
    double value() const;

private:
    explicit SpeedupLimit(std::optional<double> v) noexcept : value_(v) {}

    std::optional<double> value_;
};

struct CurvePoint {
    ProcessorCount p;
    double speedup;
};

/// Speedup samples with strictly increasing p.
struct SpeedupCurve {
    std::vector<CurvePoint> points;
    std::string label;
};

/// 1 / (beta + (1 - beta) / p) with beta in the base frame.
double amdahl_speedup(const SerialFraction& beta1, ProcessorCount p);

/// 1 / beta, or unbounded for beta = 0.
SpeedupLimit amdahl_limit(const SerialFraction& beta1);

/// p - (p - 1) * beta with beta measured on the same p-processor machine.
double gustafson_speedup(const SerialFraction& betap, ProcessorCount p);

/// Re-expresses a base-frame fraction on p processors: beta(n,p) = beta(n,1) * S(n,p).
SerialFraction convert_fraction_base_to_p(const SerialFraction& beta1, ProcessorCount p);

/// Inverse of convert_fraction_base_to_p: beta(n,1) = beta(n,p) / (p - (p - 1) * beta(n,p)).
SerialFraction convert_fraction_p_to_base(const SerialFraction& betap, ProcessorCount p);

/// Base-frame serial fraction T_s(n) / (T_s(n) + W(n)) of a scenario at size n.
SerialFraction serial_fraction_of_scenario(const ScalingScenario& scenario, ProblemSize n);

/// Amdahl speedup sampled at each p. p_values must be nonempty, >= 1 and strictly increasing.
SpeedupCurve speedup_curve(const SerialFraction& beta1, std::span<const ProcessorCount> p_values);
SpeedupCurve speedup_curve(const ScalingScenario& scenario, ProblemSize n,
                           std::span<const ProcessorCount> p_values);

/**
 * Checks that Gustafson's law applied to the converted fraction reproduces
 * Amdahl's law on every (beta, p) grid point. Returns the largest relative
 * deviation |S_A - S_G| / S_A.
 */
double verify_equivalence(std::span<const double> beta_grid,
                          std::span<const ProcessorCount> p_grid);

}  // namespace scalelaw
