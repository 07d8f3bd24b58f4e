#pragma once

#include <string>

namespace scalelaw {

/// Shortest decimal text that parses back to exactly the same double.
std::string format_number(double value);

}  // namespace scalelaw
