#include "eulergas/arith/special.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "eulergas/errors.hpp"

namespace eulergas::arith {

namespace {

// B_{2k} / (2k)! for k = 1..12.
constexpr std::array<long double, 12> kBernoulliOverFactorial = {
    1.0L / 6.0L / 2.0L,
    -1.0L / 30.0L / 24.0L,
    1.0L / 42.0L / 720.0L,
    -1.0L / 30.0L / 40320.0L,
    5.0L / 66.0L / 3628800.0L,
    -691.0L / 2730.0L / 479001600.0L,
    7.0L / 6.0L / 87178291200.0L,
    -3617.0L / 510.0L / 20922789888000.0L,
    43867.0L / 798.0L / 6402373705728000.0L,
    -174611.0L / 330.0L / 2432902008176640000.0L,
    854513.0L / 138.0L / 1124000727777607680000.0L,
    -236364091.0L / 2730.0L / 620448401733239439360000.0L,
};

long double zeta_em(long double s, std::size_t n_cut, long double& last_correction) {
  long double head = 0.0L;
  for (std::size_t n = n_cut - 1; n >= 1; --n) head += std::pow(static_cast<long double>(n), -s);
  const long double N = static_cast<long double>(n_cut);
  long double tail = std::pow(N, 1.0L - s) / (s - 1.0L) + 0.5L * std::pow(N, -s);
  // rising factorial s (s+1) ... (s+2k-2) times N^{-s-2k+1}
  long double rising = s;
  long double power = std::pow(N, -s - 1.0L);
  for (std::size_t k = 0; k < kBernoulliOverFactorial.size(); ++k) {
    last_correction = kBernoulliOverFactorial[k] * rising * power;
    tail += last_correction;
    rising *= (s + 2.0L * k + 1.0L) * (s + 2.0L * k + 2.0L);
    power /= N * N;
  }
  return head + tail;
}

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};

double lanczos_gamma(double s) {
  if (s < 0.5) return std::numbers::pi / (std::sin(std::numbers::pi * s) * lanczos_gamma(1.0 - s));
  const double z = s - 1.0;
  double a = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) a += kLanczos[i] / (z + static_cast<double>(i));
  const double t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

}  // namespace

double riemann_zeta(double s, const PrecisionPolicy& policy) {
  if (!(s > 1.0))
    throw DomainError("riemann_zeta: s must be > 1 (got " + std::to_string(s) + ")");
  std::size_t n_cut = 10;
  for (;;) {
    long double last = 0.0L;
    const long double z = zeta_em(s, n_cut, last);
    if (std::fabs(last) < policy.rel_tol() * 1e-2 * std::fabs(z) || 2 * n_cut > policy.max_terms())
      return static_cast<double>(z);
    n_cut *= 2;
  }
}

double gamma_fn(double s, const PrecisionPolicy&) {
  if (!(s > 0.0))
    throw DomainError("gamma_fn: s must be > 0 (got " + std::to_string(s) + ")");
  // exact on small integers
  if (s == std::floor(s) && s <= 21.0) {
    double f = 1.0;
    for (int i = 2; i < static_cast<int>(s); ++i) f *= i;
    return f;
  }
  return lanczos_gamma(s);
}

double euler_gamma() {
  constexpr int kN = 50;
  long double harmonic = 0.0L;
  for (int n = kN; n >= 1; --n) harmonic += 1.0L / n;
  const long double N = kN;
  const long double N2 = N * N;
  return static_cast<double>(harmonic - std::log(N) - 1.0L / (2.0L * N) + 1.0L / (12.0L * N2) -
                             1.0L / (120.0L * N2 * N2) + 1.0L / (252.0L * N2 * N2 * N2));
}

}  // namespace eulergas::arith
