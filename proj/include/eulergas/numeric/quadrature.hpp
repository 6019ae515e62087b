#pragma once

#include <cstddef>
#include <functional>

namespace eulergas::numeric {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // sum of |Kronrod - Gauss| over final intervals
  std::size_t evaluations = 0;
  bool converged = false;
};

struct QuadratureOptions {
  double rel_tol = 1e-12;
  double abs_tol = 1e-15;
  std::size_t max_intervals = 4000;
};

/// Adaptive Gauss-Kronrod (7/15) on [a, b]; the interval with the largest
/// error estimate is bisected until the total estimate meets
/// max(abs_tol, rel_tol * |value|). Endpoints are never evaluated.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& options = {});

/// Integral over [0, inf): [0, 1] directly, [1, inf) as u = 1/x on (0, 1].
QuadratureResult integrate_half_line(const std::function<double(double)>& f,
                                     const QuadratureOptions& options = {});

}  // namespace eulergas::numeric
