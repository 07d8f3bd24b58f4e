#pragma once

#include "scalelaw/estimation.hpp"

#include <istream>
#include <string_view>
#include <vector>

namespace scalelaw {

/**
 * Reads benchmark timings from comma-separated text. The first row is a
 * header that must name the columns n, p and time in any order; a replicate
 * column is optional and other columns are ignored. Fields may be quoted.
 *
 * Throws EmptyInput, SchemaError (missing column) or RowError (bad value,
 * with the 1-based line number of the offending row).
 */
std::vector<TimingRecord> parse_timing_csv(std::istream& in);
std::vector<TimingRecord> parse_timing_csv(std::string_view text);

}  // namespace scalelaw
