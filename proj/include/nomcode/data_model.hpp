#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace nomcode {

enum class Role { NumericFeature, NominalFeature, Decision };

std::string_view to_string(Role role);
/// Accepts the schema-file spellings "numeric", "nominal" and "decision".
Role parse_role(std::string_view text);

struct ColumnSpec {
  std::string name;
  Role role;

  bool operator==(const ColumnSpec&) const = default;
};

/// Ordered column declarations. Names are unique and non-empty, there is at
/// most one decision column and at least one feature column.
class AttributeSchema {
 public:
  explicit AttributeSchema(std::vector<ColumnSpec> columns);

  const std::vector<ColumnSpec>& columns() const noexcept { return columns_; }
  std::size_t size() const noexcept { return columns_.size(); }
  const ColumnSpec& operator[](std::size_t i) const { return columns_[i]; }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws DataError for an unknown name.
  std::size_t index_of(std::string_view name) const;
  std::optional<std::size_t> decision_index() const;

  std::vector<std::size_t> indices_with_role(Role role) const;

  bool operator==(const AttributeSchema&) const = default;

 private:
  std::vector<ColumnSpec> columns_;
};

/// Numeric cells hold a finite double, nominal and decision cells a
/// non-empty token.
using Cell = std::variant<double, std::string>;
using Record = std::vector<Cell>;

class Dataset {
 public:
  /// Validates shape and cell types; throws DataError on violation.
  Dataset(AttributeSchema schema, std::vector<Record> rows);

  const AttributeSchema& schema() const noexcept { return schema_; }
  const std::vector<Record>& rows() const noexcept { return rows_; }
  std::size_t row_count() const noexcept { return rows_.size(); }

  std::vector<Cell> column(std::string_view name) const;
  /// Column as doubles; the column must be numeric.
  std::vector<double> numeric_column(std::string_view name) const;
  /// Column as tokens; the column must be nominal or the decision.
  std::vector<std::string> token_column(std::string_view name) const;

  bool operator==(const Dataset&) const = default;

 private:
  AttributeSchema schema_;
  std::vector<Record> rows_;
};

/// Header plus untyped string cells, as read from a CSV file.
struct RawTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct CsvOptions {
  /// When set, empty nominal cells are replaced by this token instead of
  /// being rejected.
  std::optional<std::string> missing_as_category;
};

/// Splits comma-separated lines (LF or CRLF), trimming spaces and tabs
/// around every cell. Quoted fields are rejected. Every row must have the
/// header's arity.
RawTable read_csv_table(std::istream& in);

/// Strict decimal parser: optional sign, digits, optional fraction. No
/// exponents, no locale. Returns nullopt on anything else.
std::optional<double> parse_decimal(std::string_view text);

Dataset parse_csv(std::istream& in, const AttributeSchema& schema,
                  const CsvOptions& options = {});
Dataset parse_csv(std::string_view text, const AttributeSchema& schema,
                  const CsvOptions& options = {});
Dataset load_csv(const std::string& path, const AttributeSchema& schema,
                 const CsvOptions& options = {});

/// Writes the dataset back as CSV. Numbers use the shortest fixed-point
/// form that reads back to the same double.
std::string to_csv(const Dataset& dataset);

/// Schema files look like
/// {"columns":[{"name":"Door","role":"numeric"}, ...]}.
AttributeSchema parse_schema_json(std::string_view text);
AttributeSchema load_schema(const std::string& path);
std::string schema_to_json(const AttributeSchema& schema);

}  // namespace nomcode
