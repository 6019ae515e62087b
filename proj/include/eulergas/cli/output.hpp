#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace eulergas::cli {

/// Missing value with the reason it could not be computed.
struct Null {
  std::string reason;
};

/// Exact integer or rational kept as text ("190569292", "2/39").
struct Exact {
  std::string text;
};

using Cell = std::variant<Null, double, std::int64_t, bool, Exact, std::string>;

enum class Format { Csv, Json, Table };

Format parse_format(const std::string& name);

/// Tabular result of one command; meta entries describe the whole run.
struct Table {
  std::string command;
  std::vector<std::pair<std::string, Cell>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  bool has_nulls() const;
};

/// Shortest round-trippable text for a double (17 significant digits).
std::string format_double(double v);

/// CSV: "# key=value" meta lines, header, rows. Nulls are empty cells and an
/// "errors" column lists "column: reason" pairs.
void write_csv(std::ostream& out, const Table& table);
/// JSON object {"schema": 1, "command", "meta", "columns", "rows"}; nulls are
/// JSON null with reasons under the row's "errors" object.
void write_json(std::ostream& out, const Table& table);
/// Aligned plain-text table.
void write_table(std::ostream& out, const Table& table);

void write(std::ostream& out, const Table& table, Format format);

}  // namespace eulergas::cli
