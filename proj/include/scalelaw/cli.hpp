#pragma once

#include "scalelaw/fraction.hpp"

#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace scalelaw::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

/// Accepts a decimal ("0.1") or a ratio of two decimals ("1/10"). Throws ParseError.
double parse_fraction(std::string_view text);

/**
 * Expands a comma-separated list whose items are integers or inclusive
 * ranges "a:b", "a:b:step" (arithmetic) or "a:b:*k" (geometric).
 * Order is preserved. Throws ParseError.
 */
std::vector<std::int64_t> parse_int_list(std::string_view text);

/**
 * Runs one `scalelaw` invocation. args excludes the program name. The
 * report goes to out and diagnostics to err. Returns 0 on success, 1 on a
 * domain error (model violation, insufficient data, violated precondition)
 * and 2 on a usage or input-parsing error.
 */
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace scalelaw::cli
