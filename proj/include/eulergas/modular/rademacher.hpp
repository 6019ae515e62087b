#pragma once

#include <cstddef>
#include <cstdint>

#include "eulergas/arith/bigcount.hpp"
#include "eulergas/arith/dedekind.hpp"
#include "eulergas/precision.hpp"

namespace eulergas::modular {

struct RademacherResult {
  std::uint64_t n = 0;
  arith::BigCount value;
  std::size_t terms_used = 0;
  double residual = 0.0;  // distance of the truncated sum from value
  arith::DedekindConvention convention = arith::DedekindConvention::ClassicalSawtooth;
  unsigned work_bits = 0;
};

/// Bits needed to resolve p(n) to +-0.5: pi sqrt(2n/3) / ln 2 + 64.
unsigned rademacher_work_bits(std::uint64_t n);

/// Exact p(n) from the Rademacher series, d/dn taken in closed form.
/// Starts with ceil(2 sqrt n) terms and grows the cut by 1.5x until three
/// consecutive cuts round to the same integer with residual < 0.25.
/// Throws ConvergenceError when that never happens within the term cap.
RademacherResult rademacher_p(std::uint64_t n,
                              arith::DedekindConvention convention =
                                  arith::DedekindConvention::ClassicalSawtooth,
                              const PrecisionPolicy& policy = {});

/// q = 1 contribution: (1 / (2 pi sqrt 2)) d/dn [exp(K lambda) / lambda],
/// K = pi sqrt(2/3), lambda = sqrt(n - 1/24).
double leading_term_p(std::uint64_t n);

/// Hardy-Ramanujan estimate exp(pi sqrt(2n/3)) / (4 n sqrt 3).
double asymptotic_p(std::uint64_t n);

}  // namespace eulergas::modular
