#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "nomcode/complex_space.hpp"
#include "nomcode/error.hpp"
#include "nomcode/nominal_coder.hpp"
#include "oracles.hpp"

using namespace nomcode;

namespace {

constexpr Complex I{0.0, 1.0};

ComplexVector random_vector(std::mt19937_64& gen, std::size_t dim) {
  std::normal_distribution<double> g(0.0, 3.0);
  ComplexVector v(dim);
  for (auto& z : v) z = {g(gen), g(gen)};
  return v;
}

CodedMatrix real_column(std::vector<double> values) {
  std::vector<Complex> data(values.begin(), values.end());
  return CodedMatrix({{"x", ColumnSource::Numeric}}, values.size(), data);
}

}  // namespace

TEST_CASE("inner product examples") {
  const ComplexVector x{1.0 + I, 2.0};
  CHECK(inner_product(x, x) == Complex(6.0, 0.0));
  CHECK(inner_product(ComplexVector{I}, ComplexVector{1.0}) == I);
  CHECK(inner_product(ComplexVector{1.0}, ComplexVector{I}) == -I);
  CHECK_THROWS_AS(inner_product(ComplexVector{1.0}, ComplexVector{1.0, 2.0}),
                  DataError);
}

TEST_CASE("inner product of coded car rows") {
  // Nominal parts of rows 3 and 4 of the coded car table.
  const ComplexVector row3{-2.0, 3.0, 2.5, 2.5};
  const ComplexVector row4{2.5, 3.0, 2.5, 2.5};
  CHECK(oracle::inner_product_by_parts(row3, row4) == Complex(16.5, 0.0));
  CHECK(inner_product(row3, row4) == Complex(16.5, 0.0));

  const auto coded = encode_dataset(fixtures::cars(), EncodeMode::NominalOnly);
  CHECK(inner_product(coded.row(2), coded.row(3)) == Complex(16.5, 0.0));
}

TEST_CASE("norm examples") {
  CHECK(norm(ComplexVector{0.0, 0.0, 0.0}) == 0.0);
  CHECK(norm(ComplexVector{1.0 + I, 2.0}) == doctest::Approx(std::sqrt(6.0)));
  const auto b = 2.0 * unit_root(1, 3);
  CHECK(norm(ComplexVector{b}) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("distance examples") {
  const ComplexVector x{1.0 + 2.0 * I, -3.0};
  CHECK(distance(x, x) == 0.0);
  CHECK(distance(ComplexVector{2.0}, ComplexVector{-2.0}) == 4.0);
  const ComplexVector b{2.0 * unit_root(1, 3)};
  const ComplexVector c{2.0 * unit_root(2, 3)};
  CHECK(distance(b, c) == doctest::Approx(2.0 * std::sqrt(3.0)).epsilon(1e-14));
  CHECK_THROWS_AS(distance(ComplexVector{1.0}, ComplexVector{}), DataError);
}

TEST_CASE("inner-product space axioms on random vectors") {
  std::mt19937_64 gen(31337);
  std::uniform_int_distribution<std::size_t> dim(1, 8);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto d = dim(gen);
    const auto x = random_vector(gen, d), y = random_vector(gen, d),
               z = random_vector(gen, d);
    const auto a = random_vector(gen, 1)[0];

    const auto xx = inner_product(x, x);
    CHECK(std::abs(xx.imag()) <= 1e-12);
    CHECK(xx.real() >= 0.0);

    CHECK(std::abs(inner_product(x, y) - std::conj(inner_product(y, x))) <= 1e-12);
    CHECK(std::abs(inner_product(x, y) - oracle::inner_product_by_parts(x, y)) <=
          1e-10);

    ComplexVector axz(d);
    for (std::size_t i = 0; i < d; ++i) axz[i] = a * x[i] + z[i];
    CHECK(std::abs(inner_product(axz, y) -
                   (a * inner_product(x, y) + inner_product(z, y))) <= 1e-10);

    const double dxy = distance(x, y), dyz = distance(y, z), dxz = distance(x, z);
    CHECK(dxy >= 0.0);
    CHECK(distance(x, x) == 0.0);
    CHECK(dxy > 0.0);
    CHECK(dxy == distance(y, x));
    CHECK(dxz <= dxy + dyz + 1e-10);

    // Same distance as the real vector of length 2d.
    std::vector<Complex> xr, yr;
    for (std::size_t i = 0; i < d; ++i) {
      xr.insert(xr.end(), {x[i].real(), x[i].imag()});
      yr.insert(yr.end(), {y[i].real(), y[i].imag()});
    }
    double sq = 0.0;
    for (std::size_t i = 0; i < 2 * d; ++i) {
      const double diff = xr[i].real() - yr[i].real();
      sq += diff * diff;
    }
    CHECK(std::abs(dxy - std::sqrt(sq)) <= 1e-12 * std::max(1.0, dxy));
  }
}

TEST_CASE("standardize a real column") {
  const auto s = standardize(real_column({1, 2, 3}));
  CHECK(s(0, 0).real() == doctest::Approx(-std::sqrt(1.5)));
  CHECK(s(1, 0) == Complex(0.0, 0.0));
  CHECK(s(2, 0).real() == doctest::Approx(std::sqrt(1.5)));
  REQUIRE(s.scaling());
  CHECK(s.scaling()->front().mean == Complex(2.0, 0.0));
  CHECK(s.scaling()->front().scale_re == doctest::Approx(std::sqrt(2.0 / 3.0)));

  const auto sample = standardize(real_column({1, 2, 3}), {Denominator::Sample});
  CHECK(sample(0, 0).real() == doctest::Approx(-1.0));
}

TEST_CASE("standardize the coded color column") {
  const auto coded = encode_dataset(fixtures::cars(), EncodeMode::NominalOnly);
  const auto color = coded.column(0);
  const auto m = oracle::two_pass_moments(color);
  // Two-pass oracle: sum is 6 - 6 + 10, so the mean is 1 and the population
  // variance is (3 * 1 + 3 * 9 + 4 * 2.25) / 10 = 3.9.
  CHECK(m.mean == Complex(1.0, 0.0));
  CHECK(m.sigma == doctest::Approx(std::sqrt(3.9)).epsilon(1e-15));
  CHECK(m.sigma == doctest::Approx(1.9748417658).epsilon(1e-9));

  const auto s = standardize(coded);
  REQUIRE(s.scaling());
  CHECK(std::abs(s.scaling()->front().mean - m.mean) <= 1e-12);
  CHECK(s.scaling()->front().scale_re == doctest::Approx(m.sigma).epsilon(1e-14));
  // Blue, Black, Red
  CHECK(s(0, 0).real() == doctest::Approx(1.0 / m.sigma));
  CHECK(s(1, 0).real() == doctest::Approx(-3.0 / m.sigma));
  CHECK(s(3, 0).real() == doctest::Approx(1.5 / m.sigma));
  CHECK(s(0, 0).real() == doctest::Approx(0.50637).epsilon(1e-4));
  CHECK(s(1, 0).real() == doctest::Approx(-1.51911).epsilon(1e-4));
  CHECK(s(3, 0).real() == doctest::Approx(0.75955).epsilon(1e-4));
}

TEST_CASE("standardized columns have zero mean and unit RMS deviation") {
  std::mt19937_64 gen(8);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 15, d = 1 + trial % 4;
    std::vector<Complex> data;
    for (std::size_t i = 0; i < n; ++i) {
      const auto row = random_vector(gen, d);
      data.insert(data.end(), row.begin(), row.end());
    }
    std::vector<CodedColumn> cols;
    for (std::size_t c = 0; c < d; ++c) {
      cols.push_back({"c" + std::to_string(c), ColumnSource::ComplexCoded});
    }
    const auto s = standardize(CodedMatrix(cols, n, data));
    for (std::size_t c = 0; c < d; ++c) {
      const auto m = oracle::two_pass_moments(s.column(c));
      CHECK(std::abs(m.mean) <= 1e-12);
      CHECK(m.sigma == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("per-channel scaling keeps real columns as z-scores") {
  const auto coded = encode_dataset(fixtures::cars(), EncodeMode::Combined);
  const auto joint = standardize(coded);
  const auto split = standardize(coded, {Denominator::Population,
                                         ComplexScaling::PerChannel});
  for (std::size_t r = 0; r < coded.rows(); ++r) {
    for (std::size_t c = 0; c < coded.cols(); ++c) {
      CHECK(std::abs(joint(r, c) - split(r, c)) <= 1e-12);
    }
  }

  std::vector<Complex> data{{1, 1}, {2, -1}, {3, 4}, {0, 2}};
  const CodedMatrix complex_col({{"z", ColumnSource::ComplexCoded}}, 4, data);
  const auto s = standardize(complex_col, {Denominator::Population,
                                           ComplexScaling::PerChannel});
  std::vector<Complex> re, im;
  for (const auto& z : s.column(0)) {
    re.emplace_back(z.real());
    im.emplace_back(z.imag());
  }
  CHECK(oracle::two_pass_moments(re).sigma == doctest::Approx(1.0));
  CHECK(oracle::two_pass_moments(im).sigma == doctest::Approx(1.0));
}

TEST_CASE("standardize errors") {
  CHECK_THROWS_AS(standardize(real_column({5})), DataError);
  try {
    standardize(CodedMatrix({{"a", ColumnSource::Numeric}, {"flat", ColumnSource::Numeric}},
                            3, {1.0, 7.0, 2.0, 7.0, 3.0, 7.0}));
    FAIL("expected zero-dispersion error");
  } catch (const DataError& e) {
    CHECK(std::string(e.what()).find("flat") != std::string::npos);
  }
}
