#pragma once

#include <span>
#include <vector>

#include "nomcode/coded_matrix.hpp"

namespace nomcode {

using ComplexVector = std::vector<Complex>;

/// Hermitian inner product sum x_i * conj(y_i); linear in the first argument.
Complex inner_product(std::span<const Complex> x, std::span<const Complex> y);

/// sqrt((x, x)).
double norm(std::span<const Complex> x);

double squared_distance(std::span<const Complex> x, std::span<const Complex> y);

/// ||y - x||.
double distance(std::span<const Complex> x, std::span<const Complex> y);

enum class Denominator { Population, Sample };

enum class ComplexScaling {
  /// One complex variable: complex mean, one real scale from the moduli of
  /// the deviations.
  Joint,
  /// Real and imaginary parts z-scored independently. An imaginary channel
  /// that is identically zero is left untouched.
  PerChannel,
};

struct StandardizeOptions {
  Denominator denominator = Denominator::Population;
  ComplexScaling complex_scaling = ComplexScaling::Joint;
};

/// Centers every column on its complex mean and divides by its dispersion.
/// Needs at least two rows; a constant column is a DataError naming it.
CodedMatrix standardize(const CodedMatrix& matrix,
                        const StandardizeOptions& options = {});

}  // namespace nomcode
