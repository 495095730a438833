#include "nomcode/complex_space.hpp"

#include <cmath>
#include <string>

#include "nomcode/error.hpp"

namespace nomcode {

namespace {

void require_same_length(std::span<const Complex> x,
                         std::span<const Complex> y) {
  if (x.size() != y.size()) {
    throw DataError("vector length mismatch: " + std::to_string(x.size()) +
                    " vs " + std::to_string(y.size()));
  }
}

struct Moments {
  Complex mean;
  double dispersion_joint = 0.0;
  double dispersion_re = 0.0;
  double dispersion_im = 0.0;
};

Moments column_moments(const std::vector<Complex>& col, double denominator) {
  Moments m;
  for (const auto& z : col) m.mean += z;
  m.mean /= static_cast<double>(col.size());
  double ss = 0.0, ss_re = 0.0, ss_im = 0.0;
  for (const auto& z : col) {
    const auto d = z - m.mean;
    ss += std::norm(d);
    ss_re += d.real() * d.real();
    ss_im += d.imag() * d.imag();
  }
  m.dispersion_joint = std::sqrt(ss / denominator);
  m.dispersion_re = std::sqrt(ss_re / denominator);
  m.dispersion_im = std::sqrt(ss_im / denominator);
  return m;
}

}  // namespace

Complex inner_product(std::span<const Complex> x, std::span<const Complex> y) {
  require_same_length(x, y);
  Complex sum{};
  for (std::size_t i = 0; i < x.size(); ++i) sum += x[i] * std::conj(y[i]);
  return sum;
}

double norm(std::span<const Complex> x) {
  // (x, x) summed as moduli so the result is real and non-negative exactly.
  double sum = 0.0;
  for (const auto& z : x) sum += std::norm(z);
  return std::sqrt(sum);
}

double squared_distance(std::span<const Complex> x,
                        std::span<const Complex> y) {
  require_same_length(x, y);
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) sum += std::norm(y[i] - x[i]);
  return sum;
}

double distance(std::span<const Complex> x, std::span<const Complex> y) {
  return std::sqrt(squared_distance(x, y));
}

CodedMatrix standardize(const CodedMatrix& matrix,
                        const StandardizeOptions& options) {
  const auto n = matrix.rows();
  if (n < 2) throw DataError("standardization needs at least two rows");
  const double denominator = options.denominator == Denominator::Population
                                 ? static_cast<double>(n)
                                 : static_cast<double>(n - 1);

  std::vector<ColumnScaling> scaling;
  scaling.reserve(matrix.cols());
  for (std::size_t c = 0; c < matrix.cols(); ++c) {
    const auto col = matrix.column(c);
    const auto& name = matrix.columns()[c].name;
    bool constant = true;
    bool imag_zero = true;
    for (const auto& z : col) {
      constant = constant && z == col.front();
      imag_zero = imag_zero && z.imag() == 0.0;
    }
    if (constant) {
      throw DataError("column '" + name +
                      "' has zero dispersion and cannot be standardized");
    }
    const auto m = column_moments(col, denominator);
    ColumnScaling s{m.mean, m.dispersion_joint, m.dispersion_joint};
    if (options.complex_scaling == ComplexScaling::PerChannel) {
      if (m.dispersion_re == 0.0 || (!imag_zero && m.dispersion_im == 0.0)) {
        throw DataError("column '" + name +
                        "' has a zero-dispersion channel and cannot be "
                        "standardized per channel");
      }
      s.scale_re = m.dispersion_re;
      s.scale_im = imag_zero ? 1.0 : m.dispersion_im;
    }
    scaling.push_back(s);
  }

  std::vector<Complex> data;
  data.reserve(matrix.data().size());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < matrix.cols(); ++c) {
      const auto d = matrix(r, c) - scaling[c].mean;
      data.emplace_back(d.real() / scaling[c].scale_re,
                        d.imag() / scaling[c].scale_im);
    }
  }
  return CodedMatrix(matrix.columns(), n, std::move(data), matrix.decision())
      .with_scaling(std::move(scaling));
}

}  // namespace nomcode
