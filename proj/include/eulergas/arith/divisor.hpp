#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace eulergas::arith {

/// Sum of k-th powers of the divisors of n, exactly. Negative k gives a
/// rational; sigma_{-1}(n) = sigma_1(n) / n. Throws DomainError for n = 0.
mpq_class divisor_sigma(int k, std::uint64_t n);

/// sigma_k(m) for m = 0..n_max as doubles (entry 0 is zero), by sieve.
/// Entries are exact for k >= 0 while they stay below 2^53.
std::vector<double> divisor_sigma_table(int k, std::size_t n_max);

}  // namespace eulergas::arith

namespace eulergas::arith {

/// Lazily grown sigma_k sieve for series whose length is not known upfront.
class DivisorSigmaSieve {
 public:
  explicit DivisorSigmaSieve(int k, std::size_t initial = 1024) : k_(k) { grow(initial); }
  double operator()(std::size_t m) {
    if (m >= table_.size()) grow(std::max(2 * table_.size(), m + 1));
    return table_[m];
  }

 private:
  void grow(std::size_t n) { table_ = divisor_sigma_table(k_, n); }
  int k_;
  std::vector<double> table_;
};

}  // namespace eulergas::arith
