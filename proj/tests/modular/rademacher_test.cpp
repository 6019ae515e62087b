#include "eulergas/modular/rademacher.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "eulergas/arith/partition.hpp"
#include "eulergas/errors.hpp"

using namespace eulergas::modular;
using eulergas::arith::BigCount;
using eulergas::arith::DedekindConvention;

TEST(Rademacher, Examples) {
  EXPECT_EQ(rademacher_p(0).value, BigCount(1));
  EXPECT_EQ(rademacher_p(1).value, BigCount(1));
  EXPECT_EQ(rademacher_p(4).value, BigCount(5));
  const auto r = rademacher_p(100);
  EXPECT_EQ(r.value, BigCount(190569292));
  EXPECT_LT(r.residual, 1e-3);
}

TEST(Rademacher, MatchesOracleUpTo250) {
  const auto oracle = eulergas::arith::partition_counts(250);
  for (std::uint64_t n = 1; n <= 250; ++n) {
    const auto r = rademacher_p(n);
    EXPECT_EQ(r.value, oracle[n]) << n;
    EXPECT_LT(r.residual, 0.25);
  }
}

TEST(Rademacher, WorkingPrecisionCoversMagnitude) {
  const auto r = rademacher_p(400);
  EXPECT_GE(r.work_bits, r.value.bits() + 64);
  EXPECT_EQ(rademacher_work_bits(300), static_cast<unsigned>(std::ceil(M_PI * std::sqrt(200.0) / M_LN2)) + 64);
}

TEST(Rademacher, BeyondSixtyFourBits) {
  const auto oracle = eulergas::arith::partition_counts(1200);
  const auto r = rademacher_p(1200);
  EXPECT_EQ(r.value, oracle[1200]);
  EXPECT_FALSE(r.value.fits_uint64());
}

TEST(Rademacher, TermCountScalesLikeSqrtN) {
  for (std::uint64_t n : {10u, 100u, 400u, 1000u}) {
    const auto r = rademacher_p(n);
    EXPECT_LE(static_cast<double>(r.terms_used), 6.0 * std::sqrt(static_cast<double>(n)) + 3.0) << n;
  }
}

TEST(Rademacher, UncenteredConventionDoesNotSettle) {
  // the dominant q = 1 term still rounds correctly for tiny n
  const auto small = rademacher_p(10, DedekindConvention::Uncentered);
  EXPECT_GT(small.residual, 0.1);
  EXPECT_GT(rademacher_p(10).residual, 0.0);
  EXPECT_LT(rademacher_p(10).residual, 0.01);
  for (std::uint64_t n : {50u, 100u}) {
    try {
      rademacher_p(n, DedekindConvention::Uncentered);
      FAIL() << n;
    } catch (const eulergas::ConvergenceError& e) {
      EXPECT_EQ(e.convention(), "uncentered");
      EXPECT_GT(e.terms(), 0u);
      EXPECT_GT(e.residual(), 1.0);
    }
  }
}

TEST(LeadingTerm, Accuracy) {
  const double p100 = 190569292.0;
  EXPECT_LT(std::abs(leading_term_p(100) - p100) / p100, 5e-4);
  EXPECT_EQ(std::lround(leading_term_p(4)), 5);
  double previous = 1e9;
  for (std::uint64_t n : {100u, 1000u, 10000u}) {
    const double gap = std::abs(leading_term_p(n) / asymptotic_p(n) - 1.0);
    EXPECT_LT(gap, previous);
    previous = gap;
  }
}

TEST(Asymptotic, SmallNValue) { EXPECT_NEAR(asymptotic_p(4), 6.1, 0.01); }
