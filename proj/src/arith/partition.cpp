#include "eulergas/arith/partition.hpp"

namespace eulergas::arith {

std::vector<BigCount> partition_counts(std::size_t n) {
  // ways[m] after processing part k = partitions of m into parts <= k.
  std::vector<mpz_class> ways(n + 1, 0);
  ways[0] = 1;
  for (std::size_t part = 1; part <= n; ++part)
    for (std::size_t m = part; m <= n; ++m)
      mpz_add(ways[m].get_mpz_t(), ways[m].get_mpz_t(), ways[m - part].get_mpz_t());

  std::vector<BigCount> out;
  out.reserve(n + 1);
  for (const auto& w : ways) out.emplace_back(w);
  return out;
}

BigCount partition_count_oracle(std::size_t n) { return partition_counts(n).back(); }

}  // namespace eulergas::arith
