#pragma once

#include <complex>

#include "eulergas/precision.hpp"

namespace eulergas::modular {

using Complex = std::complex<double>;

/// Point tau of the upper half-plane, Im(tau) > 0.
class HalfPlanePoint {
 public:
  HalfPlanePoint(double re, double im);
  explicit HalfPlanePoint(Complex tau) : HalfPlanePoint(tau.real(), tau.imag()) {}

  /// tau = i x / (2 pi), the physical slice for mode variable x.
  static HalfPlanePoint from_mode(double x);

  double re() const noexcept { return re_; }
  double im() const noexcept { return im_; }
  Complex value() const noexcept { return {re_, im_}; }

  HalfPlanePoint shifted(double by) const { return {re_ + by, im_}; }
  /// -1/tau
  HalfPlanePoint inverted() const;

 private:
  double re_;
  double im_;
};

/// y = exp(2 i pi tau), |y| < 1.
class Nome {
 public:
  explicit Nome(Complex y);
  static Nome from_tau(const HalfPlanePoint& tau);
  /// y = exp(-x)
  static Nome from_mode(double x);

  Complex value() const noexcept { return y_; }
  double modulus() const noexcept { return std::abs(y_); }

 private:
  Complex y_;
};

/// Z(y) = prod_{n>=1} 1 / (1 - y^n), truncated once |y^n| < rel_tol (1 - |y|).
/// Throws PrecisionError when |y| >= 1 - 1e-9 or the product would need more
/// than policy.max_terms() factors.
Complex partition_generating(const Nome& y, const PrecisionPolicy& policy = {});

/// eta(tau) = exp(i pi tau / 12) prod_{n>=1} (1 - y^n).
Complex eta(const HalfPlanePoint& tau, const PrecisionPolicy& policy = {});

enum class EtaTransform { Shift, Inversion };

/// Right-hand side of the generator laws: exp(i pi/12) eta(tau) for Shift,
/// sqrt(tau/i) eta(tau) (principal root) for Inversion. Compare against a
/// direct evaluation at tau + 1 or -1/tau.
Complex eta_transform(const HalfPlanePoint& tau, EtaTransform which,
                      const PrecisionPolicy& policy = {});

/// y^{1/24} (2 pi)^{-1/2} (ln 1/y)^{1/2} exp(pi^2 / (6 ln 1/y)) Z(y')
/// with y = e^{-x}, y' = e^{-4 pi^2 / x}. Equals Z(e^{-x}).
double functional_equation_rhs(double x, const PrecisionPolicy& policy = {});

/// G_2(tau) = 2 zeta(2) + 2 (2 i pi)^2 sum sigma_1(n) y^n.
Complex eisenstein_g2(const HalfPlanePoint& tau, const PrecisionPolicy& policy = {});

}  // namespace eulergas::modular
