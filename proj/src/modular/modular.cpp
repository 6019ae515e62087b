#include "eulergas/modular/modular.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "eulergas/arith/divisor.hpp"
#include "eulergas/errors.hpp"

namespace eulergas::modular {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kGuardBand = 1e-9;

// prod_{n>=1} (1 - y^n) with the truncation rule shared by Z and eta.
Complex euler_product(const Complex& y, const PrecisionPolicy& policy) {
  const double r = std::abs(y);
  if (r == 0.0) return {1.0, 0.0};
  const double stop = policy.rel_tol() * (1.0 - r);
  if (r >= 1.0 - kGuardBand) {
    throw PrecisionError("euler product: |y| = " + std::to_string(r) +
                             " is inside the 1e-9 guard band of the unit circle",
                         0);
  }
  const double needed = std::ceil(std::log(stop) / std::log(r));
  if (needed > static_cast<double>(policy.max_terms())) {
    throw PrecisionError("euler product: |y| = " + std::to_string(r) + " needs ~" +
                             std::to_string(needed) + " factors (max_terms " +
                             std::to_string(policy.max_terms()) + ")",
                         static_cast<std::size_t>(needed));
  }
  Complex prod{1.0, 0.0};
  Complex yn{1.0, 0.0};
  for (std::size_t n = 1;; ++n) {
    yn *= y;
    prod *= Complex(1.0, 0.0) - yn;
    if (std::abs(yn) < stop) break;
  }
  return prod;
}

}  // namespace

HalfPlanePoint::HalfPlanePoint(double re, double im) : re_(re), im_(im) {
  if (!(im > 0.0))
    throw DomainError("HalfPlanePoint: Im(tau) must be > 0 (got " + std::to_string(im) + ")");
}

HalfPlanePoint HalfPlanePoint::from_mode(double x) {
  if (!(x > 0.0)) throw DomainError("HalfPlanePoint: mode variable x must be > 0");
  return {0.0, x / (2.0 * kPi)};
}

HalfPlanePoint HalfPlanePoint::inverted() const { return HalfPlanePoint(-1.0 / value()); }

Nome::Nome(Complex y) : y_(y) {
  if (!(std::abs(y) < 1.0)) throw DomainError("Nome: |y| must be < 1");
}

Nome Nome::from_tau(const HalfPlanePoint& tau) {
  return Nome(std::exp(Complex(0.0, 2.0 * kPi) * tau.value()));
}

Nome Nome::from_mode(double x) {
  if (!(x > 0.0)) throw DomainError("Nome: mode variable x must be > 0");
  return Nome(Complex(std::exp(-x), 0.0));
}

Complex partition_generating(const Nome& y, const PrecisionPolicy& policy) {
  return Complex(1.0, 0.0) / euler_product(y.value(), policy);
}

Complex eta(const HalfPlanePoint& tau, const PrecisionPolicy& policy) {
  const Complex prefactor = std::exp(Complex(0.0, kPi / 12.0) * tau.value());
  return prefactor * euler_product(Nome::from_tau(tau).value(), policy);
}

Complex eta_transform(const HalfPlanePoint& tau, EtaTransform which,
                      const PrecisionPolicy& policy) {
  const Complex e = eta(tau, policy);
  if (which == EtaTransform::Shift) return std::exp(Complex(0.0, kPi / 12.0)) * e;
  return std::sqrt(tau.value() / Complex(0.0, 1.0)) * e;
}

double functional_equation_rhs(double x, const PrecisionPolicy& policy) {
  if (!(x > 0.0)) throw DomainError("functional_equation_rhs: x must be > 0");
  const double dual = 4.0 * kPi * kPi / x;
  const double z_dual = partition_generating(Nome::from_mode(dual), policy).real();
  const double log_rhs = -x / 24.0 - 0.5 * std::log(2.0 * kPi) + 0.5 * std::log(x) +
                         kPi * kPi / (6.0 * x) + std::log(z_dual);
  return std::exp(log_rhs);
}

Complex eisenstein_g2(const HalfPlanePoint& tau, const PrecisionPolicy& policy) {
  const Complex y = Nome::from_tau(tau).value();
  const double r = std::abs(y);
  const double constant = kPi * kPi / 3.0;
  const double scale = 8.0 * kPi * kPi;  // -2 (2 i pi)^2
  if (r == 0.0) return {constant, 0.0};

  arith::DivisorSigmaSieve sigma(1);
  auto envelope = [r](double m) { return m * (1.0 + std::log(m)) * std::pow(r, m); };
  Complex sum{0.0, 0.0};
  Complex yn{1.0, 0.0};
  for (std::size_t n = 1;; ++n) {
    if (n > policy.max_terms())
      throw PrecisionError("eisenstein_g2: series did not reach rel_tol", n);
    yn *= y;
    sum += sigma(n) * yn;
    const double m = static_cast<double>(n);
    const double ratio = envelope(m + 2.0) / envelope(m + 1.0);
    if (ratio >= 1.0) continue;
    const double tail = scale * envelope(m + 1.0) / (1.0 - ratio);
    if (tail < policy.rel_tol() * std::abs(Complex(constant) - scale * sum)) break;
  }
  return Complex(constant, 0.0) - scale * sum;
}

}  // namespace eulergas::modular
