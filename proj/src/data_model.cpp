#include "nomcode/data_model.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "nomcode/error.hpp"

namespace nomcode {

namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t";
  const auto first = s.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kSpace);
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_line(std::string_view line, std::size_t row) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    const auto cell = trim(line.substr(start, comma == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : comma - start));
    if (!cell.empty() && cell.front() == '"') {
      throw ParseError(row, cells.size() + 1,
                       "quoted fields are not supported");
    }
    cells.emplace_back(cell);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

}  // namespace

ParseError::ParseError(std::size_t row, std::size_t column,
                       const std::string& what)
    : DataError("row " + std::to_string(row) +
                (column > 0 ? ", column " + std::to_string(column) : "") +
                ": " + what),
      row_(row),
      column_(column) {}

std::string_view to_string(Role role) {
  switch (role) {
    case Role::NumericFeature:
      return "numeric";
    case Role::NominalFeature:
      return "nominal";
    case Role::Decision:
      return "decision";
  }
  return "unknown";
}

Role parse_role(std::string_view text) {
  if (text == "numeric") return Role::NumericFeature;
  if (text == "nominal") return Role::NominalFeature;
  if (text == "decision") return Role::Decision;
  throw DataError("unknown column role '" + std::string(text) +
                  "' (expected numeric, nominal or decision)");
}

AttributeSchema::AttributeSchema(std::vector<ColumnSpec> columns)
    : columns_(std::move(columns)) {
  std::set<std::string_view> seen;
  std::size_t decisions = 0;
  for (const auto& c : columns_) {
    if (c.name.empty()) throw DataError("schema: empty column name");
    if (!seen.insert(c.name).second) {
      throw DataError("schema: duplicate column name '" + c.name + "'");
    }
    if (c.role == Role::Decision) ++decisions;
  }
  if (decisions > 1) throw DataError("schema: more than one decision column");
  if (decisions == columns_.size()) {
    throw DataError("schema: at least one feature column is required");
  }
}

std::optional<std::size_t> AttributeSchema::find(std::string_view name) const {
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t AttributeSchema::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw DataError("unknown column '" + std::string(name) + "'");
}

std::optional<std::size_t> AttributeSchema::decision_index() const {
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i].role == Role::Decision) return i;
  }
  return std::nullopt;
}

std::vector<std::size_t> AttributeSchema::indices_with_role(Role role) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i].role == role) out.push_back(i);
  }
  return out;
}

Dataset::Dataset(AttributeSchema schema, std::vector<Record> rows)
    : schema_(std::move(schema)), rows_(std::move(rows)) {
  if (rows_.empty()) throw DataError("dataset has no rows");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto& row = rows_[r];
    if (row.size() != schema_.size()) {
      throw DataError("dataset row " + std::to_string(r + 1) + " has " +
                      std::to_string(row.size()) + " cells, expected " +
                      std::to_string(schema_.size()));
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      const auto& spec = schema_[c];
      const auto where = "dataset row " + std::to_string(r + 1) +
                         ", column '" + spec.name + "'";
      if (spec.role == Role::NumericFeature) {
        const auto* v = std::get_if<double>(&row[c]);
        if (v == nullptr) throw DataError(where + ": expected a number");
        if (!std::isfinite(*v)) throw DataError(where + ": non-finite number");
      } else {
        const auto* s = std::get_if<std::string>(&row[c]);
        if (s == nullptr) throw DataError(where + ": expected a token");
        if (s->empty()) throw DataError(where + ": empty token");
      }
    }
  }
}

std::vector<Cell> Dataset::column(std::string_view name) const {
  const auto c = schema_.index_of(name);
  std::vector<Cell> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) out.push_back(row[c]);
  return out;
}

std::vector<double> Dataset::numeric_column(std::string_view name) const {
  const auto c = schema_.index_of(name);
  if (schema_[c].role != Role::NumericFeature) {
    throw DataError("column '" + std::string(name) + "' is not numeric");
  }
  std::vector<double> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) out.push_back(std::get<double>(row[c]));
  return out;
}

std::vector<std::string> Dataset::token_column(std::string_view name) const {
  const auto c = schema_.index_of(name);
  if (schema_[c].role == Role::NumericFeature) {
    throw DataError("column '" + std::string(name) + "' is numeric");
  }
  std::vector<std::string> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) out.push_back(std::get<std::string>(row[c]));
  return out;
}

RawTable read_csv_table(std::istream& in) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw ParseError(1, 0, "missing header line");

  RawTable table;
  table.header = split_line(lines.front(), 1);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto row = i + 1;
    auto cells = split_line(lines[i], row);
    if (cells.size() != table.header.size()) {
      throw ParseError(row, 0,
                       "expected " + std::to_string(table.header.size()) +
                           " cells, found " + std::to_string(cells.size()));
    }
    table.rows.push_back(std::move(cells));
  }
  return table;
}

std::optional<double> parse_decimal(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  std::size_t int_digits = 0;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
    ++i;
    ++int_digits;
  }
  std::size_t frac_digits = 0;
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      ++i;
      ++frac_digits;
    }
  }
  if (i != text.size() || int_digits + frac_digits == 0) return std::nullopt;

  // from_chars rejects a leading '+'.
  auto body = text;
  if (body.front() == '+') body.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(),
                                         value, std::chars_format::fixed);
  if (ec != std::errc() || ptr != body.data() + body.size() ||
      !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

Dataset parse_csv(std::istream& in, const AttributeSchema& schema,
                  const CsvOptions& options) {
  const auto table = read_csv_table(in);
  if (table.header.size() != schema.size()) {
    throw ParseError(1, 0,
                     "header has " + std::to_string(table.header.size()) +
                         " columns, schema declares " +
                         std::to_string(schema.size()));
  }
  for (std::size_t c = 0; c < schema.size(); ++c) {
    if (table.header[c] != schema[c].name) {
      throw ParseError(1, c + 1,
                       "header name '" + table.header[c] +
                           "' does not match schema column '" + schema[c].name +
                           "'");
    }
  }
  if (table.rows.empty()) throw ParseError(2, 0, "no data rows");

  std::vector<Record> rows;
  rows.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto line = r + 2;
    Record record;
    record.reserve(schema.size());
    for (std::size_t c = 0; c < schema.size(); ++c) {
      const auto& text = table.rows[r][c];
      const auto& spec = schema[c];
      if (spec.role == Role::NumericFeature) {
        if (text.empty()) {
          throw ParseError(line, c + 1,
                           "empty cell in numeric column '" + spec.name + "'");
        }
        const auto value = parse_decimal(text);
        if (!value) {
          throw ParseError(line, c + 1,
                           "cannot parse '" + text + "' as a number in column '" +
                               spec.name + "'");
        }
        record.emplace_back(*value);
      } else if (text.empty()) {
        if (spec.role == Role::NominalFeature && options.missing_as_category) {
          record.emplace_back(*options.missing_as_category);
        } else {
          throw ParseError(line, c + 1,
                           "empty cell in column '" + spec.name + "'");
        }
      } else {
        record.emplace_back(text);
      }
    }
    rows.push_back(std::move(record));
  }
  return Dataset(schema, std::move(rows));
}

Dataset parse_csv(std::string_view text, const AttributeSchema& schema,
                  const CsvOptions& options) {
  std::istringstream in{std::string(text)};
  return parse_csv(in, schema, options);
}

Dataset load_csv(const std::string& path, const AttributeSchema& schema,
                 const CsvOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path + "'");
  return parse_csv(in, schema, options);
}

std::string to_csv(const Dataset& dataset) {
  std::string out;
  const auto& schema = dataset.schema();
  for (std::size_t c = 0; c < schema.size(); ++c) {
    if (c > 0) out += ',';
    out += schema[c].name;
  }
  out += '\n';
  for (const auto& row : dataset.rows()) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += ',';
      if (const auto* v = std::get_if<double>(&row[c])) {
        char buf[512];
        const auto res = std::to_chars(buf, buf + sizeof(buf), *v,
                                       std::chars_format::fixed);
        out.append(buf, res.ptr);
      } else {
        out += std::get<std::string>(row[c]);
      }
    }
    out += '\n';
  }
  return out;
}

AttributeSchema parse_schema_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError(std::string("schema: invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("columns") ||
      !doc["columns"].is_array()) {
    throw DataError("schema: expected an object with a \"columns\" array");
  }
  std::vector<ColumnSpec> columns;
  for (const auto& entry : doc["columns"]) {
    if (!entry.is_object() || !entry.contains("name") ||
        !entry.contains("role") || !entry["name"].is_string() ||
        !entry["role"].is_string()) {
      throw DataError("schema: each column needs string \"name\" and \"role\"");
    }
    columns.push_back({entry["name"].get<std::string>(),
                       parse_role(entry["role"].get<std::string>())});
  }
  return AttributeSchema(std::move(columns));
}

AttributeSchema load_schema(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open schema '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_schema_json(buffer.str());
}

std::string schema_to_json(const AttributeSchema& schema) {
  nlohmann::ordered_json doc;
  doc["columns"] = nlohmann::ordered_json::array();
  for (const auto& c : schema.columns()) {
    doc["columns"].push_back({{"name", c.name}, {"role", to_string(c.role)}});
  }
  return doc.dump(2);
}

}  // namespace nomcode
