#include "eulergas/cli/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "eulergas/errors.hpp"

namespace eulergas::cli {

namespace {

template <class... F>
struct Overload : F... {
  using F::operator()...;
};
template <class... F>
Overload(F...) -> Overload<F...>;

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

// Nulls plus non-finite doubles, which JSON cannot carry.
bool is_null(const Cell& c) {
  if (std::holds_alternative<Null>(c)) return true;
  if (const double* d = std::get_if<double>(&c)) return !std::isfinite(*d);
  return false;
}

std::string null_reason(const Cell& c) {
  if (const Null* n = std::get_if<Null>(&c)) return n->reason;
  return "non-finite value " + format_double(std::get<double>(c));
}

std::string plain(const Cell& c, bool human) {
  return std::visit(Overload{
                        [](const Null&) { return std::string("null"); },
                        [human](double d) {
                          if (!human) return format_double(d);
                          char buf[32];
                          std::snprintf(buf, sizeof buf, "%.12g", d);
                          return std::string(buf);
                        },
                        [](std::int64_t i) { return std::to_string(i); },
                        [](bool b) { return std::string(b ? "true" : "false"); },
                        [](const Exact& e) { return e.text; },
                        [](const std::string& s) { return s; },
                    },
                    c);
}

std::string json_value(const Cell& c) {
  if (is_null(c)) return "null";
  return std::visit(Overload{
                        [](const Null&) { return std::string("null"); },
                        [](double d) { return format_double(d); },
                        [](std::int64_t i) { return std::to_string(i); },
                        [](bool b) { return std::string(b ? "true" : "false"); },
                        [](const Exact& e) { return json_string(e.text); },
                        [](const std::string& s) { return json_string(s); },
                    },
                    c);
}

std::string row_errors(const Table& t, const std::vector<Cell>& row) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (!is_null(row[i])) continue;
    if (!out.empty()) out += "; ";
    out += t.columns[i] + ": " + null_reason(row[i]);
  }
  return out;
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  if (name == "table") return Format::Table;
  throw DomainError("unknown format '" + name + "' (expected csv|json|table)");
}

bool Table::has_nulls() const {
  for (const auto& row : rows)
    for (const auto& c : row)
      if (is_null(c)) return true;
  return false;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& out, const Table& t) {
  for (const auto& [key, value] : t.meta) out << "# " << key << "=" << plain(value, false) << "\n";
  const bool errors = t.has_nulls();
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << csv_quote(t.columns[i]);
  if (errors) out << ",errors";
  out << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ",";
      if (!is_null(row[i])) out << csv_quote(plain(row[i], false));
    }
    if (errors) out << "," << csv_quote(row_errors(t, row));
    out << "\n";
  }
}

void write_json(std::ostream& out, const Table& t) {
  out << "{\"schema\":1,\"command\":" << json_string(t.command) << ",\"meta\":{";
  for (std::size_t i = 0; i < t.meta.size(); ++i)
    out << (i ? "," : "") << json_string(t.meta[i].first) << ":" << json_value(t.meta[i].second);
  out << "},\"columns\":[";
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << json_string(t.columns[i]);
  out << "],\"rows\":[";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    out << (r ? "," : "") << "{";
    for (std::size_t i = 0; i < row.size(); ++i)
      out << (i ? "," : "") << json_string(t.columns[i]) << ":" << json_value(row[i]);
    bool first = true;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (!is_null(row[i])) continue;
      out << (first ? ",\"errors\":{" : ",") << json_string(t.columns[i]) << ":"
          << json_string(null_reason(row[i]));
      first = false;
    }
    if (!first) out << "}";
    out << "}";
  }
  out << "]}\n";
}

void write_table(std::ostream& out, const Table& t) {
  for (const auto& [key, value] : t.meta) out << key << ": " << plain(value, true) << "\n";
  std::vector<std::vector<std::string>> text;
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
  for (const auto& row : t.rows) {
    auto& line = text.emplace_back();
    for (std::size_t i = 0; i < row.size(); ++i) {
      line.push_back(plain(row[i], true));
      width[i] = std::max(width[i], line.back().size());
    }
  }
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out << (i ? "  " : "") << cells[i];
      if (i + 1 < cells.size()) out << std::string(width[i] - cells[i].size(), ' ');
    }
    out << "\n";
  };
  emit(t.columns);
  for (const auto& line : text) emit(line);
  for (const auto& row : t.rows)
    if (const std::string e = row_errors(t, row); !e.empty()) out << "! " << e << "\n";
}

void write(std::ostream& out, const Table& table, Format format) {
  switch (format) {
    case Format::Csv:
      write_csv(out, table);
      break;
    case Format::Json:
      write_json(out, table);
      break;
    case Format::Table:
      write_table(out, table);
      break;
  }
}

}  // namespace eulergas::cli
