#include "nomcode/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "nomcode/error.hpp"

namespace nomcode {

std::vector<double> tied_ranks(std::span<const double> values) {
  if (values.empty()) throw DataError("ranks: empty input");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw DataError("ranks: non-finite value at position " +
                      std::to_string(i + 1));
    }
  }

  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return values[a] < values[b];
  });

  std::vector<double> ranks(values.size());
  std::size_t run_start = 0;
  while (run_start < order.size()) {
    auto run_end = run_start + 1;
    while (run_end < order.size() &&
           values[order[run_end]] == values[order[run_start]]) {
      ++run_end;
    }
    // Positions run_start+1 .. run_end, averaged.
    const double rank = 0.5 * static_cast<double>(run_start + 1 + run_end);
    for (auto i = run_start; i < run_end; ++i) ranks[order[i]] = rank;
    run_start = run_end;
  }
  return ranks;
}

}  // namespace nomcode
