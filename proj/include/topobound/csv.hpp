#pragma once

#include <charconv>
#include <cstdint>
#include <ctime>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "topobound/code.hpp" // kMetricName, stamped into every header block
#include "topobound/errors.hpp"

namespace topobound {

inline constexpr const char* kToolName = "topobound";
inline constexpr const char* kToolVersion = "0.1.0";

// One result table, the unit every subcommand emits. Cells stay typed until
// serialization so the JSON form keeps numbers as numbers.
using Cell = std::variant<std::int64_t, std::uint64_t, double, bool, std::string>;

struct ResultTable {
    std::string subcommand;
    std::string config; // key=value pairs, comma separated, no spaces
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

// Shortest round-trip decimal for doubles; reruns must be byte-identical,
// so no locale- or precision-dependent printf formats.
inline std::string format_cell(const Cell& c) {
    struct V {
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(std::uint64_t v) const { return std::to_string(v); }
        std::string operator()(double v) const {
            char buf[64];
            auto r = std::to_chars(buf, buf + sizeof buf, v);
            return std::string(buf, r.ptr);
        }
        std::string operator()(bool v) const { return v ? "1" : "0"; }
        std::string operator()(const std::string& v) const { return v; }
    };
    return std::visit(V{}, c);
}

inline std::string utc_timestamp() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

inline void write_csv(std::ostream& os, const ResultTable& t, bool with_timestamp) {
    os << "# " << kToolName << " v" << kToolVersion << "\n";
    if (with_timestamp) os << "# timestamp=" << utc_timestamp() << "\n";
    os << "# subcommand=" << t.subcommand << "\n";
    os << "# config=" << t.config << "\n";
    os << "# metric=" << kMetricName << "\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        os << (i ? "," : "") << t.columns[i];
    os << "\n";
    for (const auto& row : t.rows) {
        if (row.size() != t.columns.size())
            throw ContractError("write_csv: row width does not match header");
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << format_cell(row[i]);
        os << "\n";
    }
}

inline void write_json(std::ostream& os, const ResultTable& t, bool with_timestamp) {
    nlohmann::json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    if (with_timestamp) j["timestamp"] = utc_timestamp();
    j["subcommand"] = t.subcommand;
    j["config"] = t.config;
    j["metric"] = kMetricName;
    j["columns"] = t.columns;
    auto rows = nlohmann::json::array();
    for (const auto& row : t.rows) {
        if (row.size() != t.columns.size())
            throw ContractError("write_json: row width does not match header");
        auto jr = nlohmann::json::array();
        for (const auto& c : row)
            std::visit([&jr](const auto& v) { jr.push_back(v); }, c);
        rows.push_back(std::move(jr));
    }
    j["rows"] = std::move(rows);
    os << j.dump(2) << "\n";
}

// Single-row tables can be rendered as one flat object keyed by column name,
// which reads better for info-style queries than a columns/rows pair.
inline void write_json_object(std::ostream& os, const ResultTable& t, bool with_timestamp) {
    if (t.rows.size() != 1 || t.rows[0].size() != t.columns.size())
        throw ContractError("write_json_object: needs exactly one full row");
    nlohmann::json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    if (with_timestamp) j["timestamp"] = utc_timestamp();
    j["subcommand"] = t.subcommand;
    j["config"] = t.config;
    j["metric"] = kMetricName;
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        std::visit([&](const auto& v) { j[t.columns[i]] = v; }, t.rows[0][i]);
    os << j.dump(2) << "\n";
}

// Parsed CSV with the header block split back out. Cells come back as text;
// numeric access goes through the checked helpers below.
struct ParsedTable {
    std::string tool_line;
    std::string timestamp; // empty when the file was written without one
    std::string subcommand;
    std::string config;
    std::string metric;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    std::size_t column(const std::string& name) const {
        for (std::size_t i = 0; i < columns.size(); ++i)
            if (columns[i] == name) return i;
        throw ParseError("csv: no column named '" + name + "'");
    }
};

inline std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        auto pos = line.find(',', start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

inline ParsedTable read_csv(std::istream& is) {
    ParsedTable t;
    std::string line;
    std::size_t lineno = 0;
    bool saw_header = false;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::string body = line.substr(1);
            if (!body.empty() && body[0] == ' ') body = body.substr(1);
            if (lineno == 1) {
                if (body.rfind(kToolName, 0) != 0)
                    throw ParseError("csv line 1: expected a '# " + std::string(kToolName) +
                                     " v...' banner");
                t.tool_line = body;
                continue;
            }
            auto eq = body.find('=');
            if (eq == std::string::npos)
                throw ParseError("csv line " + std::to_string(lineno) +
                                 ": comment is not key=value");
            auto key = body.substr(0, eq);
            auto val = body.substr(eq + 1);
            if (key == "timestamp")
                t.timestamp = val;
            else if (key == "subcommand")
                t.subcommand = val;
            else if (key == "config")
                t.config = val;
            else if (key == "metric")
                t.metric = val;
            else
                throw ParseError("csv line " + std::to_string(lineno) + ": unknown header key '" +
                                 key + "'");
            continue;
        }
        if (lineno == 1)
            throw ParseError("csv line 1: file does not start with the tool banner");
        if (!saw_header) {
            t.columns = split_fields(line);
            saw_header = true;
            continue;
        }
        auto fields = split_fields(line);
        if (fields.size() != t.columns.size())
            throw ParseError("csv line " + std::to_string(lineno) + ": expected " +
                             std::to_string(t.columns.size()) + " fields, got " +
                             std::to_string(fields.size()));
        t.rows.push_back(std::move(fields));
    }
    if (!saw_header) throw ParseError("csv: no column header line");
    if (t.subcommand.empty()) throw ParseError("csv: missing '# subcommand=' header");
    return t;
}

inline double cell_as_double(const ParsedTable& t, std::size_t row, std::size_t col) {
    const auto& s = t.rows[row][col];
    double v = 0;
    auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec != std::errc{} || r.ptr != s.data() + s.size())
        throw ParseError("csv row " + std::to_string(row + 1) + ": '" + s + "' is not a number");
    return v;
}

} // namespace topobound
