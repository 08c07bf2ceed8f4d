// Copyright 2026 The linmimo Authors
// SPDX-License-Identifier: Apache-2.0

#include "linmimo/cli/table.hpp"

#include <cmath>
#include <cstdio>
#include <json.hpp>

#include "linmimo/types.hpp"

namespace linmimo::cli {

namespace {

std::string printf_double(const char* fmt, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

bool finite_text(const std::string& s) {
    return s != "nan" && s != "-nan" && s != "inf" && s != "-inf";
}

std::string csv_field(const Cell& c) {
    if (c.numeric || c.text.find_first_of(",\"\n") == std::string::npos) return c.text;
    std::string out = "\"";
    for (char ch : c.text) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + '"';
}

}  // namespace

Cell real(double v) { return {printf_double("%.10g", v), true}; }
Cell probability(double v) { return {printf_double("%.5e", v), true}; }
Cell integer(std::int64_t v) { return {std::to_string(v), true}; }
Cell text(std::string_view s) { return {std::string(s), false}; }
Cell blank() { return {"", false}; }

Format parse_format(std::string_view name) {
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    throw InvalidArgument("unknown format '" + std::string(name) + "' (expected csv or json)");
}

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != header_.size())
        throw InvalidArgument("row has " + std::to_string(row.size()) + " cells, header has " +
                              std::to_string(header_.size()));
    rows_.push_back(std::move(row));
}

std::string Table::to_csv() const {
    std::string out;
    for (std::size_t i = 0; i < header_.size(); ++i) out += (i ? "," : "") + header_[i];
    out += '\n';
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_field(row[i]);
        out += '\n';
    }
    return out;
}

std::string Table::to_json() const {
    std::string out = "[";
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        out += r ? ",\n  {" : "\n  {";
        for (std::size_t i = 0; i < header_.size(); ++i) {
            const Cell& c = rows_[r][i];
            out += (i ? ", " : "") + nlohmann::json(header_[i]).dump() + ": ";
            if (c.numeric)
                out += finite_text(c.text) ? c.text : "null";
            else
                out += c.text.empty() ? "null" : nlohmann::json(c.text).dump();
        }
        out += "}";
    }
    out += rows_.empty() ? "]\n" : "\n]\n";
    return out;
}

int CsvData::column(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return static_cast<int>(i);
    return -1;
}

CsvData parse_csv(std::string_view content) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    bool quoted = false;
    bool any = false;
    for (std::size_t i = 0; i < content.size(); ++i) {
        const char ch = content[i];
        if (quoted) {
            if (ch == '"' && i + 1 < content.size() && content[i + 1] == '"') {
                field += '"';
                ++i;
            } else if (ch == '"') {
                quoted = false;
            } else {
                field += ch;
            }
            continue;
        }
        if (ch == '"') {
            quoted = true;
            any = true;
        } else if (ch == ',') {
            record.push_back(std::move(field));
            field.clear();
            any = true;
        } else if (ch == '\n' || ch == '\r') {
            if (ch == '\r' && i + 1 < content.size() && content[i + 1] == '\n') ++i;
            if (any || !field.empty()) {
                record.push_back(std::move(field));
                records.push_back(std::move(record));
            }
            field.clear();
            record.clear();
            any = false;
        } else {
            field += ch;
            any = true;
        }
    }
    if (quoted) throw InvalidArgument("unterminated quoted CSV field");
    if (any || !field.empty()) {
        record.push_back(std::move(field));
        records.push_back(std::move(record));
    }
    if (records.empty()) throw InvalidArgument("CSV input is empty");
    CsvData data;
    data.header = std::move(records.front());
    for (std::size_t r = 1; r < records.size(); ++r) {
        if (records[r].size() != data.header.size())
            throw InvalidArgument("CSV line " + std::to_string(r + 1) + " has " +
                                  std::to_string(records[r].size()) + " fields, expected " +
                                  std::to_string(data.header.size()));
        data.rows.push_back(std::move(records[r]));
    }
    return data;
}

}  // namespace linmimo::cli
