#pragma once

#include "eulergas/precision.hpp"

namespace eulergas::arith {

/// Riemann zeta for real s > 1 by Euler-Maclaurin summation.
double riemann_zeta(double s, const PrecisionPolicy& policy = {});

/// Gamma for s > 0 (Lanczos, g = 7). Accurate to ~1e-15 relative.
double gamma_fn(double s, const PrecisionPolicy& policy = {});

/// Euler-Mascheroni constant from H_N - ln N with Euler-Maclaurin correction.
double euler_gamma();

}  // namespace eulergas::arith
