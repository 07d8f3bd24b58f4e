#include "scalelaw/report.hpp"

#include "scalelaw/format.hpp"

#include <algorithm>

namespace scalelaw {

namespace {

using nlohmann::json;

std::string cell_text(const Cell& cell) {
    struct {
        std::string operator()(std::monostate) const { return {}; }
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(double v) const { return format_number(v); }
        std::string operator()(const std::string& v) const { return v; }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
    } visitor;
    return std::visit(visitor, cell);
}

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\r\n") == std::string::npos) {
        return text;
    }
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string frame_name(const Frame& frame) { return frame.is_base() ? "base" : "on-p"; }

void emit_table(const Table& table, std::ostream& out) {
    if (table.columns.size() == 1 && table.rows.size() == 1) {
        out << cell_text(table.rows.front().front()) << '\n';
        return;
    }
    std::vector<std::vector<std::string>> text;
    std::vector<std::size_t> width(table.columns.size());
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        width[c] = table.columns[c].size();
    }
    for (const auto& row : table.rows) {
        auto& line = text.emplace_back();
        for (std::size_t c = 0; c < row.size(); ++c) {
            line.push_back(cell_text(row[c]));
            width[c] = std::max(width[c], line.back().size());
        }
    }
    auto write_line = [&](const std::vector<std::string>& cells) {
        std::string line;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c > 0) line += "  ";
            line += cells[c];
            if (c + 1 < cells.size()) line.append(width[c] - cells[c].size(), ' ');
        }
        out << line << '\n';
    };
    write_line(table.columns);
    for (const auto& line : text) {
        write_line(line);
    }
}

void emit_csv(const Table& table, std::ostream& out) {
    auto write_line = [&](const auto& cells, auto to_text) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c > 0) out << ',';
            out << csv_field(to_text(cells[c]));
        }
        out << '\n';
    };
    write_line(table.columns, [](const std::string& s) { return s; });
    for (const auto& row : table.rows) {
        write_line(row, cell_text);
    }
}

json limit_json(const SpeedupLimit& limit) {
    return limit.is_unbounded() ? json("unbounded") : json(limit.value());
}

Cell limit_cell(const SpeedupLimit& limit) {
    return limit.is_unbounded() ? Cell{std::string("unbounded")} : Cell{limit.value()};
}

}  // namespace

json to_json(const SerialFraction& fraction) {
    json j{{"value", fraction.value()}, {"frame", frame_name(fraction.frame())}};
    if (!fraction.frame().is_base()) j["p"] = fraction.frame().processors();
    if (fraction.problem_size()) j["n"] = *fraction.problem_size();
    return j;
}

json to_json(const TwoPartModel& model) {
    return json{{"serial_time", model.serial_time()},
                {"parallel_work", model.parallel_work()},
                {"n", model.problem_size()}};
}

json to_json(const FitResult& fit) {
    json residuals = json::array();
    for (const PointResidual& r : fit.per_point_residuals) {
        residuals.push_back({{"p", r.p}, {"relative_residual", r.relative_residual}});
    }
    json points = json::array();
    for (const ReducedPoint& pt : fit.points) {
        points.push_back({{"p", pt.p},
                          {"mean_time", pt.mean_time},
                          {"min_time", pt.min_time},
                          {"max_time", pt.max_time},
                          {"count", pt.count}});
    }
    return json{{"model", to_json(fit.model)},
                {"base_fraction", to_json(fit.base_fraction)},
                {"rms_relative_residual", fit.rms_relative_residual},
                {"clamped", fit.clamped},
                {"per_point_residuals", std::move(residuals)},
                {"points", std::move(points)}};
}

json to_json(const SpeedupCurve& curve) {
    json points = json::array();
    for (const CurvePoint& pt : curve.points) {
        points.push_back({{"p", pt.p}, {"speedup", pt.speedup}});
    }
    return json{{"label", curve.label}, {"points", std::move(points)}};
}

json to_json(const TimingRecord& record) {
    json j{{"n", record.n}, {"p", record.p}, {"time", record.time}};
    if (record.replicate) j["replicate"] = *record.replicate;
    return j;
}

Report speedup_report(std::string_view law, const SerialFraction& beta, ProcessorCount p, double speedup) {
    Report r;
    r.table.columns = {"law", "beta", "frame", "p", "speedup"};
    r.table.rows.push_back({std::string(law), beta.value(), frame_name(beta.frame()), p, speedup});
    r.json = {{"law", std::string(law)}, {"beta", to_json(beta)}, {"p", p}, {"speedup", speedup}};
    return r;
}

Report limit_report(const SpeedupLimit& limit) {
    Report r;
    r.table.columns = {"limit"};
    r.table.rows.push_back({limit_cell(limit)});
    r.json = {{"limit", limit_json(limit)}};
    return r;
}

Report fraction_report(const SerialFraction& fraction) {
    Report r;
    r.table.columns = {"value", "frame", "p"};
    r.table.rows.push_back({fraction.value(), frame_name(fraction.frame()), fraction.frame().processors()});
    r.json = to_json(fraction);
    return r;
}

Report model_report(const TwoPartModel& model) {
    Report r;
    r.table.columns = {"n", "serial_time", "parallel_work", "base_fraction"};
    r.table.rows.push_back(
        {model.problem_size(), model.serial_time(), model.parallel_work(), model.base_fraction().value()});
    r.json = to_json(model);
    r.json["base_fraction"] = to_json(model.base_fraction());
    return r;
}

Report fit_report(const std::map<ProblemSize, FitResult>& fits) {
    Report r;
    r.table.columns = {"n", "serial_time", "parallel_work", "base_fraction", "rms_relative_residual", "clamped"};
    r.json = {{"fits", json::array()}};
    for (const auto& [n, fit] : fits) {
        r.table.rows.push_back({n, fit.model.serial_time(), fit.model.parallel_work(), fit.base_fraction.value(),
                                fit.rms_relative_residual, fit.clamped});
        r.json["fits"].push_back(to_json(fit));
    }
    return r;
}

Report curve_report(const SpeedupCurve& curve, std::optional<SpeedupLimit> limit) {
    Report r;
    r.table.columns = {"p", "speedup"};
    if (limit) r.table.columns.push_back("limit");
    for (const CurvePoint& pt : curve.points) {
        std::vector<Cell> row{pt.p, pt.speedup};
        if (limit) row.push_back(limit_cell(*limit));
        r.table.rows.push_back(std::move(row));
    }
    r.json = to_json(curve);
    if (limit) r.json["limit"] = limit_json(*limit);
    return r;
}

Report records_report(std::span<const TimingRecord> records, std::optional<std::size_t> resampled) {
    const bool with_replicate =
        std::any_of(records.begin(), records.end(), [](const TimingRecord& rec) { return rec.replicate.has_value(); });
    Report r;
    r.table.columns = {"n", "p", "time"};
    if (with_replicate) r.table.columns.push_back("replicate");
    r.json = {{"records", json::array()}};
    for (const TimingRecord& rec : records) {
        std::vector<Cell> row{rec.n, rec.p, rec.time};
        if (with_replicate) row.push_back(rec.replicate ? Cell{*rec.replicate} : Cell{});
        r.table.rows.push_back(std::move(row));
        r.json["records"].push_back(to_json(rec));
    }
    if (resampled) r.json["resampled"] = *resampled;
    return r;
}

Report verify_report(double max_relative_deviation, std::size_t beta_points, std::size_t p_points) {
    Report r;
    r.table.columns = {"max_relative_deviation"};
    r.table.rows.push_back({max_relative_deviation});
    r.json = {{"max_relative_deviation", max_relative_deviation},
              {"beta_points", beta_points},
              {"p_points", p_points}};
    return r;
}

void emit_report(const Report& report, ReportFormat format, std::ostream& out) {
    switch (format) {
    case ReportFormat::HumanTable:
        emit_table(report.table, out);
        break;
    case ReportFormat::Csv:
        emit_csv(report.table, out);
        break;
    case ReportFormat::Json:
        out << report.json.dump() << '\n';
        break;
    }
}

}  // namespace scalelaw
