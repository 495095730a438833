#pragma once

#include <span>
#include <vector>

namespace nomcode {

/// Tied ranks in input order: every value gets the mean of the 1-based
/// positions its value occupies in the ascending sort. Equality is exact.
/// Throws DataError on empty input or a non-finite value.
std::vector<double> tied_ranks(std::span<const double> values);

}  // namespace nomcode
