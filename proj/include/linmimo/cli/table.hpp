// Copyright 2026 The linmimo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace linmimo::cli {

/// One preformatted output value. Numeric cells are emitted unquoted in JSON.
struct Cell {
    std::string text;
    bool numeric = false;
};

Cell real(double v);         ///< %.10g
Cell probability(double v);  ///< %.5e, six significant digits
Cell integer(std::int64_t v);
Cell text(std::string_view s);
Cell blank();

enum class Format { csv, json };

Format parse_format(std::string_view name);

class Table {
  public:
    explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

    /// Throws InvalidArgument when the row width differs from the header.
    void add_row(std::vector<Cell> row);

    const std::vector<std::string>& header() const { return header_; }
    const std::vector<std::vector<Cell>>& rows() const { return rows_; }

    std::string to_csv() const;
    /// Array of objects keyed by header; non-finite numbers become null.
    std::string to_json() const;
    std::string render(Format f) const { return f == Format::csv ? to_csv() : to_json(); }

  private:
    std::vector<std::string> header_;
    std::vector<std::vector<Cell>> rows_;
};

/// Minimal CSV reader for files written by Table::to_csv (quoted fields allowed).
struct CsvData {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    /// Column index by name, or -1.
    int column(std::string_view name) const;
};

CsvData parse_csv(std::string_view content);

}  // namespace linmimo::cli
