#pragma once

#include <cstddef>
#include <vector>

#include "eulergas/arith/bigcount.hpp"

namespace eulergas::arith {

/// p(0..n) by coin-counting dynamic programming over parts 1..n of the
/// Euler product. O(n^2) big-integer additions; practical to n ~ 2e4,
/// representable (slowly) to n = 1e5.
std::vector<BigCount> partition_counts(std::size_t n);

/// Exact p(n); ground truth for the Rademacher series.
BigCount partition_count_oracle(std::size_t n);

}  // namespace eulergas::arith
