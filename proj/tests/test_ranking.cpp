#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "doctest.h"
#include "nomcode/error.hpp"
#include "nomcode/ranking.hpp"
#include "oracles.hpp"

using nomcode::tied_ranks;

TEST_CASE("distinct values rank 1..n") {
  const std::vector<double> v{21, 28, 33, 44, 45, 54, 55, 60, 63, 76};
  const std::vector<double> expected{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  CHECK(tied_ranks(v) == expected);
}

TEST_CASE("tied values share their mean position") {
  const std::vector<double> v{21, 28, 44, 44, 44, 54, 55, 55, 55, 55};
  const std::vector<double> expected{1, 2, 4, 4, 4, 6, 8.5, 8.5, 8.5, 8.5};
  CHECK(tied_ranks(v) == expected);
  CHECK(tied_ranks(std::vector<double>{7, 7, 7}) ==
        std::vector<double>{2, 2, 2});
}

TEST_CASE("ranks keep input order") {
  const std::vector<double> v{55, 21, 44, 55};
  CHECK(tied_ranks(v) == std::vector<double>{3.5, 1, 2, 3.5});
}

TEST_CASE("rank errors") {
  CHECK_THROWS_AS(tied_ranks(std::vector<double>{}), nomcode::DataError);
  CHECK_THROWS_AS(
      tied_ranks(std::vector<double>{1.0, std::numeric_limits<double>::quiet_NaN()}),
      nomcode::DataError);
  CHECK_THROWS_AS(
      tied_ranks(std::vector<double>{std::numeric_limits<double>::infinity()}),
      nomcode::DataError);
}

TEST_CASE("rank properties on random inputs") {
  std::mt19937_64 gen(17);
  std::uniform_int_distribution<int> len(1, 40), val(0, 12);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<double> v(static_cast<std::size_t>(len(gen)));
    for (auto& x : v) x = val(gen) * 0.5;
    const auto r = tied_ranks(v);
    const double n = static_cast<double>(v.size());
    CHECK(std::accumulate(r.begin(), r.end(), 0.0) == n * (n + 1) / 2);
    CHECK(r == oracle::ranks_by_counting(v));
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[i] < v[j]) CHECK(r[i] < r[j]);
        if (v[i] == v[j]) CHECK(r[i] == r[j]);
      }
    }
  }
}

TEST_CASE("distinct values give a permutation of 1..n") {
  std::mt19937_64 gen(5);
  std::vector<double> v(25);
  std::iota(v.begin(), v.end(), -3.0);
  std::shuffle(v.begin(), v.end(), gen);
  auto r = tied_ranks(v);
  std::sort(r.begin(), r.end());
  for (std::size_t i = 0; i < r.size(); ++i) {
    CHECK(r[i] == static_cast<double>(i + 1));
  }
}
