#pragma once

#include <cstddef>

#include "eulergas/precision.hpp"

namespace eulergas::thermo {

/// Mode variable x = h nu / kT, x > 0.
class ModeVariable {
 public:
  explicit ModeVariable(double x);
  double value() const noexcept { return x_; }

 private:
  double x_;
};

/// Exact series are refused below this x; the low-frequency forms apply there.
inline constexpr double kSmallModeThreshold = 1e-6;

/// Which of the two equivalent expansions to sum.
enum class SeriesRoute {
  Divisor,  // sum sigma_k(m) e^{-m x}
  Bose,     // sum over single-frequency Bose factors
};

struct SeriesValue {
  double value = 0.0;
  std::size_t terms = 0;
  double tail_bound = 0.0;  // rigorous bound on the omitted remainder
};

/// F/kT = -sum sigma_{-1}(m) e^{-m x} = sum ln(1 - e^{-n x}).
SeriesValue free_energy_series(double x, SeriesRoute route, const PrecisionPolicy& policy = {});
/// N = sum sigma_0(m) e^{-m x} = sum 1 / (e^{n x} - 1).
SeriesValue occupation_series(double x, SeriesRoute route, const PrecisionPolicy& policy = {});
/// E/kT = x sum sigma_1(m) e^{-m x} = x sum n / (e^{n x} - 1).
SeriesValue internal_energy_series(double x, SeriesRoute route,
                                   const PrecisionPolicy& policy = {});

double free_energy(double x, const PrecisionPolicy& policy = {});
double occupation(double x, const PrecisionPolicy& policy = {});
double internal_energy(double x, const PrecisionPolicy& policy = {});

/// -pi^2/(6x) - ln(x/2pi)/2 + x/24
double free_energy_lowfreq(double x);
/// (gamma - ln x) / x
double occupation_lowfreq(double x);
/// pi^2/(6x) - 1/2 + x/24
double internal_energy_lowfreq(double x);
/// pi^2/(3x) + ln(x/2pi)/2 - 1/2
double entropy_lowfreq(double x);

/// Exact remainders of the low-frequency forms.
/// F - F_lf = sum_l ln(1 - e^{-4 pi^2 l / x}) (<= 0).
double free_energy_lowfreq_error(double x);
/// E - E_lf = -sum_l (4 pi^2 l / x) / (e^{4 pi^2 l / x} - 1) (<= 0).
double internal_energy_lowfreq_error(double x);
/// N - N_lf lies in (0, 1/4) for every x > 0.
inline constexpr double kOccupationLowfreqGap = 0.25;

struct EntropyValue {
  double series = 0.0;    // sum sigma_1(m) (x + 1/m) e^{-m x}
  double identity = 0.0;  // E/kT - F/kT from the same truncation
  std::size_t terms = 0;
  double tail_bound = 0.0;
};

EntropyValue entropy(double x, const PrecisionPolicy& policy = {});

/// epsilon^2 / (kT)^2 = x^2 sum m sigma_1(m) e^{-m x}.
double per_mode_energy_fluctuation(double x, const PrecisionPolicy& policy = {});

enum class PlanckVariant { Planck, ZeroPoint };

/// Planck: x / (e^x - 1).  ZeroPoint: x coth(x/2).
double planck_factor(double x, PlanckVariant variant);

struct ThermoPerMode {
  double f_over_kT = 0.0;
  double n_occ = 0.0;
  double e_over_kT = 0.0;
  double s_over_k = 0.0;  // e_over_kT - f_over_kT
  std::size_t terms_used = 0;
  double tail_bound = 0.0;  // largest tail bound of the three series
};

ThermoPerMode thermo_per_mode(double x, const PrecisionPolicy& policy = {});

/// Full-range evaluators for any x > 0 (inversion law or small-x expansion
/// below x = 1, direct Bose sums above), accurate to a few ulp.
/// ln Z(e^{-x}) = -F/kT
double log_partition_value(double x);
/// N(x) = sum 1 / (e^{n x} - 1)
double occupation_value(double x);
/// sum n / (e^{n x} - 1) = E / (kT x)
double energy_sum_value(double x);

enum class MellinKind { FreeEnergy, Occupation, Energy };

struct MellinCheck {
  double integral = 0.0;
  double closed_form = 0.0;
  double quadrature_error = 0.0;
  std::size_t evaluations = 0;
};

/// Integral over (0, inf) of g(x) x^{s-1} against its Gamma-zeta closed form:
/// FreeEnergy g = -F/kT = ln Z, target Gamma(s) zeta(s) zeta(s+1);
/// Occupation g = N, target Gamma(s) zeta(s)^2;
/// Energy g = E/(kT x), target Gamma(s) zeta(s) zeta(s-1).
MellinCheck mellin_check(double s, MellinKind kind, const PrecisionPolicy& policy = {});

}  // namespace eulergas::thermo
