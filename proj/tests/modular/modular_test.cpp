#include "eulergas/modular/modular.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "eulergas/arith/partition.hpp"
#include "eulergas/errors.hpp"

using namespace eulergas::modular;
using eulergas::PrecisionPolicy;
constexpr double pi = std::numbers::pi;
const Complex I{0.0, 1.0};

TEST(PartitionGenerating, OriginIsOne) {
  EXPECT_EQ(partition_generating(Nome(Complex(0.0, 0.0))), Complex(1.0, 0.0));
}

TEST(PartitionGenerating, MatchesCoefficientSeries) {
  const auto p = eulergas::arith::partition_counts(60);
  for (double y : {0.1, 0.3, -0.4}) {
    long double series = 0.0L, power = 1.0L;
    for (int n = 0; n <= 60; ++n) {
      series += p[n].to_double() * power;
      power *= y;
    }
    const Complex z = partition_generating(Nome(Complex(y, 0.0)));
    EXPECT_NEAR(z.real() / static_cast<double>(series), 1.0, 1e-12) << y;
    EXPECT_EQ(z.imag(), 0.0);
  }
  EXPECT_GT(partition_generating(Nome(Complex(0.1, 0.0))).real(), 1.0);
}

TEST(PartitionGenerating, LogBracketNearUnitCircle) {
  // (1/(1-y)) sum y^m/m^2 < ln Z(y) < (1/(1-y)) y pi^2/6
  const double y = std::exp(-1.0);
  const double log_z = std::log(partition_generating(Nome::from_mode(1.0)).real());
  double lower = 0.0;
  for (int m = 200; m >= 1; --m) lower += std::pow(y, m) / (m * m);
  lower /= 1.0 - y;
  const double upper = y * pi * pi / 6.0 / (1.0 - y);
  EXPECT_GT(log_z, lower);
  EXPECT_LT(log_z, upper);
}

TEST(PartitionGenerating, GuardBandAndTermCap) {
  EXPECT_THROW(partition_generating(Nome(Complex(1.0 - 1e-10, 0.0))), eulergas::PrecisionError);
  try {
    partition_generating(Nome(Complex(0.999, 0.0)), PrecisionPolicy(1e-12, 53, 1000));
    FAIL() << "expected PrecisionError";
  } catch (const eulergas::PrecisionError& e) {
    EXPECT_GT(e.attempted_terms(), 1000u);
  }
}

TEST(Eta, DefinitionalIdentityRandomTau) {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> re(-1.0, 1.0), im(0.05, 3.0);
  for (int i = 0; i < 20; ++i) {
    const HalfPlanePoint tau(re(rng), im(rng));
    const Complex lhs = partition_generating(Nome::from_tau(tau)) * eta(tau);
    const Complex rhs = std::exp(I * pi * tau.value() / 12.0);
    EXPECT_LT(std::abs(lhs - rhs) / std::abs(rhs), 1e-11) << tau.re() << " " << tau.im();
  }
}

TEST(Eta, FixedPointAtI) {
  const HalfPlanePoint tau(0.0, 1.0);
  const Complex direct = eta(tau.inverted());
  EXPECT_LT(std::abs(direct - eta_transform(tau, EtaTransform::Inversion)), 1e-15);
  const Complex z = partition_generating(Nome::from_tau(tau));
  EXPECT_NEAR(std::abs(z * eta(tau) / std::exp(I * pi * tau.value() / 12.0)), 1.0, 1e-12);
}

TEST(Eta, ShiftAndInversionLaws) {
  const HalfPlanePoint a(0.3, 0.8);
  EXPECT_LT(std::abs(eta(a.shifted(1.0)) / eta(a) - std::exp(I * pi / 12.0)), 1e-12);
  const HalfPlanePoint b(0.0, 2.0);
  EXPECT_LT(std::abs(eta(b.inverted()) - eta_transform(b, EtaTransform::Inversion)),
            1e-12 * std::abs(eta(b)));

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> re(-0.5, 0.5), im(0.3, 2.5);
  for (int i = 0; i < 25; ++i) {
    const HalfPlanePoint t(re(rng), im(rng));
    const double scale = std::abs(eta(t));
    EXPECT_LT(std::abs(eta(t.shifted(1.0)) - eta_transform(t, EtaTransform::Shift)), 1e-12 * scale);
    EXPECT_LT(std::abs(eta(t.inverted()) - eta_transform(t, EtaTransform::Inversion)), 1e-11 * scale);
  }
}

TEST(Eta, LowerHalfPlaneRejected) {
  EXPECT_THROW(HalfPlanePoint(0.1, 0.0), eulergas::DomainError);
  EXPECT_THROW(HalfPlanePoint(0.1, -1.0), eulergas::DomainError);
}

TEST(FunctionalEquation, DualEvaluation) {
  for (double x : {0.25, 0.5, 1.0, 2.0, 4.0 * pi * pi}) {
    const double lhs = partition_generating(Nome::from_mode(x)).real();
    const double rhs = functional_equation_rhs(x);
    EXPECT_LT(std::abs(lhs - rhs) / lhs, 1e-10) << x;
  }
}

TEST(FunctionalEquation, DualFactorNegligibleBelowOne) {
  // for x <= 1 the dual nome is e^{-4 pi^2/x}; Z(y') - 1 ~ y' < e^{-4 pi^2}
  const double x = 1.0;
  const double bare = std::exp(-x / 24.0 + 0.5 * std::log(x / (2.0 * pi)) + pi * pi / (6.0 * x));
  EXPECT_LT(std::abs(functional_equation_rhs(x) / bare - 1.0), std::exp(-4.0 * pi * pi) * 1.01 + 1e-15);
}

TEST(CauchyCoefficients, SmallCircleQuadratureRecoversPartitions) {
  constexpr int kNodes = 64;
  constexpr double radius = 0.5;
  const auto p = eulergas::arith::partition_counts(10);
  for (int n = 0; n <= 10; ++n) {
    Complex acc{0.0, 0.0};
    for (int j = 0; j < kNodes; ++j) {
      const double theta = 2.0 * pi * j / kNodes;
      const Complex y = std::polar(radius, theta);
      acc += partition_generating(Nome(y)) * std::polar(1.0, -n * theta);
    }
    const double coefficient = acc.real() / kNodes / std::pow(radius, n);
    EXPECT_NEAR(coefficient, p[n].to_double(), 1e-6) << n;
  }
}

namespace {

// -4 i pi d(ln eta)/dtau by a five-point stencil on ln of eta ratios.
Complex g2_from_eta(const HalfPlanePoint& tau) {
  const double h = 1e-3 * tau.im();
  const Complex e0 = eta(tau);
  auto log_ratio = [&](double step) {
    return std::log(eta(HalfPlanePoint(tau.value() + Complex(step, 0.0))) / e0);
  };
  const Complex d = (-log_ratio(2 * h) + 8.0 * log_ratio(h) - 8.0 * log_ratio(-h) + log_ratio(-2 * h)) /
                    (12.0 * h);
  return -4.0 * I * pi * d;
}

}  // namespace

TEST(EisensteinG2, ConstantTermAtInfinity) {
  const Complex g = eisenstein_g2(HalfPlanePoint(0.2, 40.0));
  EXPECT_NEAR(g.real(), pi * pi / 3.0, 1e-14);
  EXPECT_NEAR(g.imag(), 0.0, 1e-14);
}

TEST(EisensteinG2, FourierMatchesLogDerivativeOfEta) {
  for (const HalfPlanePoint& tau :
       {HalfPlanePoint::from_mode(1.0), HalfPlanePoint(0.1, 0.5), HalfPlanePoint(-0.35, 1.2)}) {
    const Complex fourier = eisenstein_g2(tau);
    const Complex numeric = g2_from_eta(tau);
    EXPECT_LT(std::abs(fourier - numeric) / std::abs(fourier), 1e-8) << tau.re() << " " << tau.im();
  }
}

TEST(EisensteinG2, QuasiModularInversion) {
  // G2(-1/tau) = tau^2 G2(tau) - 2 pi i tau
  const HalfPlanePoint tau(0.15, 0.9);
  const Complex lhs = eisenstein_g2(tau.inverted());
  const Complex rhs = tau.value() * tau.value() * eisenstein_g2(tau) - 2.0 * pi * I * tau.value();
  EXPECT_LT(std::abs(lhs - rhs) / std::abs(lhs), 1e-11);
}
