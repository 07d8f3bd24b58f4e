#include "scalelaw/format.hpp"

#include <array>
#include <charconv>

namespace scalelaw {

std::string format_number(double value) {
    std::array<char, 64> buffer{};
    auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
    return std::string(buffer.data(), end);
}

}  // namespace scalelaw
