#include "eulergas/arith/divisor.hpp"

#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include "eulergas/arith/farey.hpp"
#include "eulergas/arith/special.hpp"
#include "eulergas/errors.hpp"

using eulergas::arith::divisor_sigma;
using eulergas::arith::divisor_sigma_table;

namespace {

mpq_class brute_sigma(int k, unsigned long n) {
  mpq_class s = 0;
  for (unsigned long d = 1; d <= n; ++d) {
    if (n % d) continue;
    mpq_class term = 1;
    for (int i = 0; i < std::abs(k); ++i) term *= d;
    s += k >= 0 ? term : 1 / term;
  }
  s.canonicalize();
  return s;
}

}  // namespace

TEST(DivisorSigma, Examples) {
  EXPECT_EQ(divisor_sigma(1, 1), 1);
  EXPECT_EQ(divisor_sigma(0, 6), 4);
  EXPECT_EQ(divisor_sigma(1, 4), 7);
  EXPECT_EQ(divisor_sigma(-1, 4), eulergas::arith::make_rational(7, 4));
}

TEST(DivisorSigma, ZeroIsDomainError) {
  EXPECT_THROW(divisor_sigma(1, 0), eulergas::DomainError);
}

TEST(DivisorSigma, MatchesEnumeration) {
  for (int k = -2; k <= 3; ++k)
    for (unsigned long n = 1; n <= 120; ++n) EXPECT_EQ(divisor_sigma(k, n), brute_sigma(k, n)) << k << " " << n;
}

TEST(DivisorSigma, SigmaMinusOneIsSigmaOneOverN) {
  for (unsigned long n = 1; n <= 200; ++n)
    EXPECT_EQ(divisor_sigma(-1, n), divisor_sigma(1, n) / mpq_class(n));
}

TEST(DivisorSigma, MultiplicativeOnCoprimePairs) {
  for (int k : {-1, 0, 1, 2})
    for (unsigned long m = 1; m <= 50; ++m)
      for (unsigned long n = 1; n <= 50; ++n) {
        if (std::gcd(m, n) != 1) continue;
        EXPECT_EQ(divisor_sigma(k, m * n), divisor_sigma(k, m) * divisor_sigma(k, n));
      }
}

TEST(DivisorSigma, SieveAgreesWithExact) {
  for (int k : {-1, 0, 1}) {
    const auto table = divisor_sigma_table(k, 500);
    for (unsigned long n = 1; n <= 500; ++n)
      EXPECT_NEAR(table[n], divisor_sigma(k, n).get_d(), 1e-12 * table[n]);
  }
}

// Partial Dirichlet sums against zeta(s) zeta(s-k), with the tail bounded
// by integrating sigma_k envelopes: sigma_{-1} <= 1 + ln n,
// sigma_0 <= 2 sqrt n, sigma_1 <= n (1 + ln n).
TEST(DivisorSigma, DirichletSeriesWithinTailBound) {
  using eulergas::arith::riemann_zeta;
  constexpr std::size_t N = 100000;
  const double n = static_cast<double>(N);
  struct Case {
    double s;
    int k;
    double tail;
  };
  const double log_tail = (1.0 + std::log(n)) / (2.0 * n * n) + 1.0 / (4.0 * n * n);
  const Case cases[] = {
      {3.0, -1, log_tail},
      {3.0, 0, 4.0 / 3.0 * std::pow(n, -1.5)},
      {4.0, 1, log_tail},
  };
  for (const auto& c : cases) {
    const auto sigma = divisor_sigma_table(c.k, N);
    long double partial = 0.0L;
    for (std::size_t m = N; m >= 1; --m) partial += sigma[m] / std::pow(static_cast<long double>(m), c.s);
    const double target = riemann_zeta(c.s) * riemann_zeta(c.s - c.k);
    const double gap = target - static_cast<double>(partial);
    EXPECT_GE(gap, -1e-14) << "s=" << c.s << " k=" << c.k;
    EXPECT_LE(gap, c.tail + 1e-14) << "s=" << c.s << " k=" << c.k;
  }
}
