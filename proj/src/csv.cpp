#include "scalelaw/csv.hpp"

#include "scalelaw/errors.hpp"

#include <charconv>
#include <cmath>
#include <iterator>
#include <optional>
#include <string>

namespace scalelaw {

namespace {

struct Row {
    std::size_t line;
    std::vector<std::string> fields;
};

std::vector<Row> split_rows(std::string_view text) {
    std::vector<Row> rows;
    Row current{1, {}};
    std::string field;
    bool in_quotes = false;
    bool row_has_content = false;
    std::size_t line = 1;

    auto finish_row = [&] {
        current.fields.push_back(std::move(field));
        field.clear();
        if (row_has_content) {
            rows.push_back(std::move(current));
        }
        current = Row{line, {}};
        row_has_content = false;
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                if (c == '\n') {
                    ++line;
                }
                field.push_back(c);
            }
            continue;
        }
        switch (c) {
        case '"':
            in_quotes = true;
            row_has_content = true;
            break;
        case ',':
            current.fields.push_back(std::move(field));
            field.clear();
            row_has_content = true;
            break;
        case '\r':
            break;
        case '\n':
            ++line;
            finish_row();
            break;
        default:
            if (c != ' ' && c != '\t') {
                row_has_content = true;
            }
            field.push_back(c);
        }
    }
    finish_row();
    return rows;
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

std::optional<std::int64_t> parse_int(std::string_view s) {
    s = trim(s);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return value;
}

std::optional<double> parse_double(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return value;
}

}  // namespace

std::vector<TimingRecord> parse_timing_csv(std::string_view text) {
    if (text.starts_with("\xEF\xBB\xBF")) {
        text.remove_prefix(3);
    }
    const std::vector<Row> rows = split_rows(text);
    if (rows.empty()) {
        throw EmptyInput();
    }

    const Row& header = rows.front();
    std::optional<std::size_t> col_n, col_p, col_time, col_replicate;
    for (std::size_t i = 0; i < header.fields.size(); ++i) {
        const std::string_view name = trim(header.fields[i]);
        if (name == "n") col_n = i;
        else if (name == "p") col_p = i;
        else if (name == "time") col_time = i;
        else if (name == "replicate") col_replicate = i;
    }
    if (!col_n) throw SchemaError("n");
    if (!col_p) throw SchemaError("p");
    if (!col_time) throw SchemaError("time");

    std::vector<TimingRecord> records;
    records.reserve(rows.size() - 1);
    for (auto row = std::next(rows.begin()); row != rows.end(); ++row) {
        auto field = [&](std::size_t col) -> std::string_view {
            if (col >= row->fields.size()) {
                throw RowError(row->line, "expected at least " + std::to_string(col + 1) + " fields, got " +
                                              std::to_string(row->fields.size()));
            }
            return row->fields[col];
        };

        const auto n = parse_int(field(*col_n));
        if (!n) throw RowError(row->line, "non-integer n '" + std::string(trim(field(*col_n))) + "'");
        if (*n < 1) throw RowError(row->line, "n must be >= 1");

        const auto p = parse_int(field(*col_p));
        if (!p) throw RowError(row->line, "non-integer p '" + std::string(trim(field(*col_p))) + "'");
        if (*p < 1) throw RowError(row->line, "p must be >= 1");

        const auto time = parse_double(field(*col_time));
        if (!time || !std::isfinite(*time)) {
            throw RowError(row->line, "invalid time '" + std::string(trim(field(*col_time))) + "'");
        }
        if (*time <= 0.0) throw RowError(row->line, "non-positive time");

        std::optional<std::int64_t> replicate;
        if (col_replicate && *col_replicate < row->fields.size() && !trim(row->fields[*col_replicate]).empty()) {
            replicate = parse_int(row->fields[*col_replicate]);
            if (!replicate) throw RowError(row->line, "non-integer replicate");
        }
        records.push_back({*n, *p, *time, replicate});
    }
    return records;
}

std::vector<TimingRecord> parse_timing_csv(std::istream& in) {
    const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_timing_csv(std::string_view(text));
}

}  // namespace scalelaw
