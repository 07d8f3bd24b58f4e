#include "scalelaw/scenario.hpp"

#include "scalelaw/errors.hpp"
#include "scalelaw/format.hpp"

#include <cmath>
#include <string>

namespace scalelaw {

namespace {

void validate_anchor(double beta_s, double baseline_time) {
    if (!(beta_s > 0.0 && beta_s < 1.0)) {
        throw InvalidArgument("scenario beta_s must lie in (0,1), got " + format_number(beta_s));
    }
    if (!(baseline_time > 0.0) || !std::isfinite(baseline_time)) {
        throw InvalidArgument("scenario baseline time must be positive, got " + format_number(baseline_time));
    }
}

void require_size(ProblemSize n) {
    if (n < 1) {
        throw InvalidArgument("problem size must be >= 1, got " + std::to_string(n));
    }
}

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

}  // namespace

ScalingScenario::ScalingScenario(FixedSerial kind) : kind_(kind) {
    validate_anchor(kind.beta_s, kind.baseline_time);
}

ScalingScenario::ScalingScenario(PolynomialGrowth kind) : kind_(kind) {
    validate_anchor(kind.beta_s, kind.baseline_time);
    if (kind.serial_degree < 0 || kind.parallel_degree <= kind.serial_degree) {
        throw InvalidArgument("polynomial scenario requires parallel_degree > serial_degree >= 0");
    }
}

double ScalingScenario::beta_s() const noexcept {
    return std::visit([](const auto& k) { return k.beta_s; }, kind_);
}

double ScalingScenario::baseline_time() const noexcept {
    return std::visit([](const auto& k) { return k.baseline_time; }, kind_);
}

double ScalingScenario::serial_time(ProblemSize n) const {
    require_size(n);
    return std::visit(
        overloaded{
            [](const FixedSerial& k) { return k.beta_s * k.baseline_time; },
            [n](const PolynomialGrowth& k) {
                return std::pow(static_cast<double>(n), k.serial_degree) * k.beta_s * k.baseline_time;
            },
        },
        kind_);
}

double ScalingScenario::parallel_work(ProblemSize n) const {
    require_size(n);
    return std::visit(
        overloaded{
            [n](const FixedSerial& k) { return static_cast<double>(n) * (1.0 - k.beta_s) * k.baseline_time; },
            [n](const PolynomialGrowth& k) {
                return std::pow(static_cast<double>(n), k.parallel_degree) * (1.0 - k.beta_s) * k.baseline_time;
            },
        },
        kind_);
}

TwoPartModel ScalingScenario::model_at(ProblemSize n) const {
    return TwoPartModel(serial_time(n), parallel_work(n), n);
}

std::string ScalingScenario::label() const {
    return std::visit(
        overloaded{
            [](const FixedSerial& k) {
                return "fixed-serial beta_s=" + format_number(k.beta_s);
            },
            [](const PolynomialGrowth& k) {
                return "poly " + std::to_string(k.serial_degree) + "/" + std::to_string(k.parallel_degree) +
                       " beta_s=" + format_number(k.beta_s);
            },
        },
        kind_);
}

}  // namespace scalelaw
