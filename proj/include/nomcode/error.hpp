#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nomcode {

/// Raised for invalid input data or violated preconditions on data.
/// The CLI maps it to exit code 2.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// CSV ingestion failure with a 1-based position. Row 1 is the header line;
/// column 0 means the problem concerns the whole row.
class ParseError : public DataError {
 public:
  ParseError(std::size_t row, std::size_t column, const std::string& what);

  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t row_;
  std::size_t column_;
};

}  // namespace nomcode
