#include "nomcode/coded_matrix.hpp"

#include <cmath>

#include "nomcode/error.hpp"

namespace nomcode {

std::string_view to_string(ColumnSource source) {
  switch (source) {
    case ColumnSource::Numeric:
      return "numeric";
    case ColumnSource::ComplexCoded:
      return "complex";
    case ColumnSource::AdHocCoded:
      return "adhoc";
    case ColumnSource::OneHot:
      return "onehot";
  }
  return "unknown";
}

ColumnSource parse_column_source(std::string_view text) {
  if (text == "numeric") return ColumnSource::Numeric;
  if (text == "complex") return ColumnSource::ComplexCoded;
  if (text == "adhoc") return ColumnSource::AdHocCoded;
  if (text == "onehot") return ColumnSource::OneHot;
  throw DataError("unknown column source '" + std::string(text) + "'");
}

CodedMatrix::CodedMatrix(std::vector<CodedColumn> columns, std::size_t rows,
                         std::vector<Complex> data,
                         std::optional<std::vector<std::string>> decision)
    : columns_(std::move(columns)),
      rows_(rows),
      data_(std::move(data)),
      decision_(std::move(decision)) {
  if (columns_.empty()) throw DataError("coded matrix has no columns");
  if (rows_ == 0) throw DataError("coded matrix has no rows");
  if (data_.size() != rows_ * columns_.size()) {
    throw DataError("coded matrix data size does not match its shape");
  }
  if (decision_ && decision_->size() != rows_) {
    throw DataError("coded matrix label count does not match its row count");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) {
    const auto& z = data_[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw DataError("coded matrix entry is not finite");
    }
    const auto source = columns_[i % columns_.size()].source;
    if ((source == ColumnSource::Numeric ||
         source == ColumnSource::AdHocCoded) &&
        z.imag() != 0.0) {
      throw DataError("real column '" + columns_[i % columns_.size()].name +
                      "' has a non-zero imaginary part");
    }
  }
}

std::vector<Complex> CodedMatrix::column(std::size_t c) const {
  std::vector<Complex> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

CodedMatrix CodedMatrix::with_scaling(std::vector<ColumnScaling> scaling) const {
  if (scaling.size() != cols()) {
    throw DataError("scaling metadata does not match column count");
  }
  CodedMatrix copy = *this;
  copy.scaling_ = std::move(scaling);
  return copy;
}

CodedMatrix CodedMatrix::real_expansion() const {
  std::vector<CodedColumn> columns;
  columns.reserve(2 * cols());
  for (const auto& c : columns_) {
    columns.push_back({c.name + ".re", ColumnSource::Numeric});
    columns.push_back({c.name + ".im", ColumnSource::Numeric});
  }
  std::vector<Complex> data;
  data.reserve(2 * data_.size());
  for (const auto& z : data_) {
    data.emplace_back(z.real(), 0.0);
    data.emplace_back(z.imag(), 0.0);
  }
  return CodedMatrix(std::move(columns), rows_, std::move(data), decision_);
}

}  // namespace nomcode
