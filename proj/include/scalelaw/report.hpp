#pragma once

#include "scalelaw/estimation.hpp"
#include "scalelaw/speedup_laws.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace scalelaw {

enum class ReportFormat { HumanTable, Csv, Json };

/// Empty cell (monostate), integer, real, text or flag.
using Cell = std::variant<std::monostate, std::int64_t, double, std::string, bool>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// Tabular view (human table and CSV) plus the JSON object of one result.
struct Report {
    Table table;
    nlohmann::json json;
};

nlohmann::json to_json(const SerialFraction& fraction);
nlohmann::json to_json(const TwoPartModel& model);
nlohmann::json to_json(const FitResult& fit);
nlohmann::json to_json(const SpeedupCurve& curve);
nlohmann::json to_json(const TimingRecord& record);

Report speedup_report(std::string_view law, const SerialFraction& beta, ProcessorCount p, double speedup);
Report limit_report(const SpeedupLimit& limit);
Report fraction_report(const SerialFraction& fraction);
Report model_report(const TwoPartModel& model);
Report fit_report(const std::map<ProblemSize, FitResult>& fits);
Report curve_report(const SpeedupCurve& curve, std::optional<SpeedupLimit> limit = std::nullopt);
Report records_report(std::span<const TimingRecord> records, std::optional<std::size_t> resampled = std::nullopt);
Report verify_report(double max_relative_deviation, std::size_t beta_points, std::size_t p_points);

/**
 * Writes a report. HumanTable aligns columns under a header, except a single
 * value which is printed bare. Csv writes a header and rows with RFC 4180
 * quoting. Json writes the report's object on one line.
 */
void emit_report(const Report& report, ReportFormat format, std::ostream& out);

}  // namespace scalelaw
