#pragma once

#include "rootcontract/rational.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace rootcontract {

/// A report cell: bare integer, exact rational ("p/q"), or text.
using Cell = std::variant<long long, Rat, std::string>;

std::string cell_text(const Cell& cell);

struct Row {
    std::vector<std::pair<std::string, Cell>> cells;

    /// Text that reads as a rational is stored as Rat, so that rendering and
    /// parsing agree on the cell type.
    Row& add(std::string column, Cell value);
    const Cell* find(std::string_view column) const;
    /// Value of the "key" column, empty when absent.
    std::string key() const;

    friend bool operator==(const Row&, const Row&) = default;
};

struct Report {
    std::string schema_version{"1"};
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<Row> rows;
    /// Row key -> "formula", "oracle" or "both-agree".
    std::vector<std::pair<std::string, std::string>> provenance;

    Row& add_row() { return rows.emplace_back(); }
    void set_provenance(const std::string& key, const std::string& source);
    std::string provenance_of(std::string_view key) const;
    /// Columns in first-seen order across all rows.
    std::vector<std::string> columns() const;
    /// Value of `column` in the row whose key is `key`; throws std::out_of_range.
    const Cell& at(std::string_view key, std::string_view column = "value") const;

    friend bool operator==(const Report&, const Report&) = default;
};

enum class Format { Markdown, Csv, Json };

Format parse_format(std::string_view text);

std::string render_json(const Report& report);
std::string render_markdown(const Report& report);
std::string render_csv(const Report& report);
std::string render(const Report& report, Format format);

/// Inverse of render_json; throws std::invalid_argument on malformed input.
Report parse_json(std::string_view text);

}  // namespace rootcontract
