#pragma once

#include "scalelaw/model.hpp"

#include <string>
#include <variant>

namespace scalelaw {

/// Serial time constant in n, parallel work linear in n. Both anchored at T(1,1).
struct FixedSerial {
    double beta_s;
    double baseline_time;
};

/// T_s(n) = n^serial_degree * beta_s * T(1,1), W(n) = n^parallel_degree * (1 - beta_s) * T(1,1).
struct PolynomialGrowth {
    int serial_degree;
    int parallel_degree;
    double beta_s;
    double baseline_time;
};

/**
 * How serial time and parallel work grow with problem size. beta_s is the
 * base-frame serial fraction of the n = 1 problem and baseline_time its
 * single-processor wall time.
 */
class ScalingScenario {
public:
    using Kind = std::variant<FixedSerial, PolynomialGrowth>;

    /// Throws InvalidArgument unless 0 < beta_s < 1, baseline_time > 0 and, for
    /// polynomial growth, parallel_degree > serial_degree >= 0.
    ScalingScenario(FixedSerial kind);
    ScalingScenario(PolynomialGrowth kind);

    const Kind& kind() const noexcept { return kind_; }
    double beta_s() const noexcept;
    double baseline_time() const noexcept;

    double serial_time(ProblemSize n) const;
    double parallel_work(ProblemSize n) const;
    TwoPartModel model_at(ProblemSize n) const;

    std::string label() const;

private:
    Kind kind_;
};

}  // namespace scalelaw
