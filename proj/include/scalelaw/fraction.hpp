#pragma once

#include <cstdint>
#include <optional>

namespace scalelaw {

using ProcessorCount = std::int64_t;
using ProblemSize = std::int64_t;

/**
 * Reference frame of a serial fraction: the machine whose total wall time the
 * fraction is measured against. OnP(1) and Base describe the same machine and
 * compare equal.
 */
class Frame {
public:
    static Frame base() noexcept { return Frame{1}; }

    /// Throws InvalidArgument if p < 1.
    static Frame on_processors(ProcessorCount p);

    bool is_base() const noexcept { return processors_ == 1; }
    ProcessorCount processors() const noexcept { return processors_; }

    friend bool operator==(Frame, Frame) = default;

private:
    explicit Frame(ProcessorCount p) noexcept : processors_(p) {}

    ProcessorCount processors_;
};

/**
 * Portion of a run's wall time spent in the non-parallelizable part, tagged
 * with the frame it was measured in. The same program has a different
 * fraction on every machine size; mixing frames is the error this type
 * exists to prevent.
 */
class SerialFraction {
public:
    /// Throws InvalidArgument unless value is in [0,1] and n (if given) is >= 1.
    SerialFraction(double value, Frame frame, std::optional<ProblemSize> n = std::nullopt);

    static SerialFraction base(double value, std::optional<ProblemSize> n = std::nullopt) {
        return SerialFraction(value, Frame::base(), n);
    }
    static SerialFraction on_processors(double value, ProcessorCount p,
                                        std::optional<ProblemSize> n = std::nullopt) {
        return SerialFraction(value, Frame::on_processors(p), n);
    }

    double value() const noexcept { return value_; }
    Frame frame() const noexcept { return frame_; }
    std::optional<ProblemSize> problem_size() const noexcept { return n_; }

private:
    double value_;
    Frame frame_;
    std::optional<ProblemSize> n_;
};

}  // namespace scalelaw
