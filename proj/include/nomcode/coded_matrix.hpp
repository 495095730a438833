#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nomcode {

using Complex = std::complex<double>;

enum class ColumnSource { Numeric, ComplexCoded, AdHocCoded, OneHot };

std::string_view to_string(ColumnSource source);
ColumnSource parse_column_source(std::string_view text);

struct CodedColumn {
  std::string name;
  ColumnSource source;

  bool operator==(const CodedColumn&) const = default;
};

/// Per-column standardization parameters: x' = (x - mean) / scale. With
/// per-channel scaling the real and imaginary parts use separate scales.
struct ColumnScaling {
  Complex mean;
  double scale_re = 1.0;
  double scale_im = 1.0;

  bool operator==(const ColumnScaling&) const = default;
};

/// Row-major N x D complex matrix. Numeric and ad-hoc columns are real.
class CodedMatrix {
 public:
  CodedMatrix(std::vector<CodedColumn> columns, std::size_t rows,
              std::vector<Complex> data,
              std::optional<std::vector<std::string>> decision = std::nullopt);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }
  const std::vector<CodedColumn>& columns() const noexcept { return columns_; }

  Complex operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols() + c];
  }
  std::span<const Complex> row(std::size_t r) const {
    return {data_.data() + r * cols(), cols()};
  }
  std::vector<Complex> column(std::size_t c) const;
  const std::vector<Complex>& data() const noexcept { return data_; }

  const std::optional<std::vector<std::string>>& decision() const noexcept {
    return decision_;
  }

  /// Present after standardization.
  const std::optional<std::vector<ColumnScaling>>& scaling() const noexcept {
    return scaling_;
  }
  CodedMatrix with_scaling(std::vector<ColumnScaling> scaling) const;

  /// Real view with re/im interleaved: 2D real columns, zero imaginary parts.
  CodedMatrix real_expansion() const;

  bool operator==(const CodedMatrix&) const = default;

 private:
  std::vector<CodedColumn> columns_;
  std::size_t rows_;
  std::vector<Complex> data_;
  std::optional<std::vector<std::string>> decision_;
  std::optional<std::vector<ColumnScaling>> scaling_;
};

}  // namespace nomcode
