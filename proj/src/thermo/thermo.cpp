#include "eulergas/thermo/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "eulergas/arith/divisor.hpp"
#include "eulergas/arith/special.hpp"
#include "eulergas/errors.hpp"
#include "eulergas/numeric/quadrature.hpp"
#include "eulergas/numeric/summation.hpp"

namespace eulergas::thermo {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double kDualScale = 4.0 * pi * pi;
constexpr std::size_t kErrorSumCap = 10'000'000;

void require_positive(double x, const char* who) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw DomainError(std::string(who) + ": x must be positive and finite");
}

void require_series_range(double x, const char* who) {
  require_positive(x, who);
  if (x < kSmallModeThreshold) {
    std::ostringstream msg;
    msg << who << ": exact series refused for x = " << x << " below " << kSmallModeThreshold
        << "; use the low-frequency form";
    throw PrecisionError(msg.str(), 0);
  }
}

std::size_t estimated_terms(double x, const PrecisionPolicy& policy) {
  const double n = (-std::log(policy.rel_tol()) + 40.0) / x + 16.0;
  return static_cast<std::size_t>(std::min(n, static_cast<double>(policy.max_terms()) + 1.0));
}

// Sums term(1) + term(2) + ... until tail(m), a bound on sum_{j>m} |term(j)|,
// drops below rel_tol times the partial sum.
template <class Term, class Tail>
SeriesValue sum_series(const char* who, Term term, Tail tail, const PrecisionPolicy& policy) {
  numeric::CompensatedSum acc;
  for (std::size_t m = 1;; ++m) {
    if (m > policy.max_terms()) {
      std::ostringstream msg;
      msg << who << ": more than " << policy.max_terms() << " terms needed";
      throw PrecisionError(msg.str(), m);
    }
    acc.add(term(m));
    const double partial = acc.value();
    const double bound = tail(m);
    if (bound <= policy.rel_tol() * std::fabs(partial)) return {partial, m, bound};
  }
}

// Tail bound from an envelope env(j) >= |term(j)| whose successive ratios do
// not increase: sum_{j>m} env(j) <= env(m+1) / (1 - env(m+2)/env(m+1)).
template <class Envelope>
double envelope_tail(Envelope env, std::size_t m) {
  const double first = env(m + 1);
  if (first == 0.0) return 0.0;
  const double rho = env(m + 2) / first;
  if (rho >= 1.0) return HUGE_VAL;
  return first / (1.0 - rho);
}

double log_envelope(std::size_t m) { return 1.0 + std::log(static_cast<double>(m)); }

SeriesValue divisor_series(const char* who, int k, double x, double prefactor,
                           double (*weight)(std::size_t), double (*env_weight)(std::size_t),
                           const PrecisionPolicy& policy) {
  arith::DivisorSigmaSieve sigma(k, estimated_terms(x, policy));
  return sum_series(
      who,
      [&](std::size_t m) {
        return prefactor * sigma(m) * weight(m) * std::exp(-static_cast<double>(m) * x);
      },
      [&](std::size_t m) {
        return envelope_tail(
            [&](std::size_t j) {
              return std::fabs(prefactor) * env_weight(j) *
                     std::exp(-static_cast<double>(j) * x);
            },
            m);
      },
      policy);
}

double unit_weight(std::size_t) { return 1.0; }
double index_weight(std::size_t m) { return static_cast<double>(m); }
// sigma_{-1}(m) <= 1 + ln m
double env_sigma_minus1(std::size_t m) { return log_envelope(m); }
// sigma_0(m) <= 2 sqrt m
double env_sigma0(std::size_t m) { return 2.0 * std::sqrt(static_cast<double>(m)); }
// sigma_1(m) <= m (1 + ln m)
double env_sigma1(std::size_t m) { return static_cast<double>(m) * log_envelope(m); }
// m sigma_1(m) <= m^2 (1 + ln m)
double env_m_sigma1(std::size_t m) {
  const double d = static_cast<double>(m);
  return d * d * log_envelope(m);
}

// Bose-form terms t(n) satisfy t(n+1) <= r(n) t(n) with r(n) non-increasing.
template <class Term, class Ratio>
SeriesValue bose_series(const char* who, Term term, Ratio ratio, const PrecisionPolicy& policy) {
  return sum_series(
      who, term,
      [&](std::size_t m) {
        const double r = ratio(m + 1);
        if (r >= 1.0) return HUGE_VAL;
        return std::fabs(term(m + 1)) / (1.0 - r);
      },
      policy);
}

// sum_{l>=1} g(l) for a positive, geometrically decaying g, to full precision.
template <class Term>
double dual_sum(Term g) {
  numeric::CompensatedSum acc;
  for (std::size_t l = 1; l <= kErrorSumCap; ++l) {
    const double t = g(static_cast<double>(l));
    acc.add(t);
    if (std::fabs(t) <= 1e-18 * std::fabs(acc.value())) return acc.value();
  }
  throw PrecisionError("low-frequency remainder: sum did not settle", kErrorSumCap);
}

}  // namespace

ModeVariable::ModeVariable(double x) : x_(x) { require_positive(x, "ModeVariable"); }

SeriesValue free_energy_series(double x, SeriesRoute route, const PrecisionPolicy& policy) {
  require_series_range(x, "free_energy");
  if (route == SeriesRoute::Divisor) {
    // sigma_{-1}(m) = sigma_1(m) / m
    return divisor_series(
        "free_energy", 1, x, -1.0, [](std::size_t m) { return 1.0 / static_cast<double>(m); },
        env_sigma_minus1, policy);
  }
  const double r = std::exp(-x);
  return bose_series(
      "free_energy",
      [x](std::size_t n) { return std::log1p(-std::exp(-static_cast<double>(n) * x)); },
      [r](std::size_t) { return r; }, policy);
}

SeriesValue occupation_series(double x, SeriesRoute route, const PrecisionPolicy& policy) {
  require_series_range(x, "occupation");
  if (route == SeriesRoute::Divisor)
    return divisor_series("occupation", 0, x, 1.0, unit_weight, env_sigma0, policy);
  const double r = std::exp(-x);
  return bose_series(
      "occupation", [x](std::size_t n) { return 1.0 / std::expm1(static_cast<double>(n) * x); },
      [r](std::size_t) { return r; }, policy);
}

SeriesValue internal_energy_series(double x, SeriesRoute route, const PrecisionPolicy& policy) {
  require_series_range(x, "internal_energy");
  if (route == SeriesRoute::Divisor)
    return divisor_series("internal_energy", 1, x, x, unit_weight, env_sigma1, policy);
  const double r = std::exp(-x);
  return bose_series(
      "internal_energy",
      [x](std::size_t n) {
        const double d = static_cast<double>(n);
        return x * d / std::expm1(d * x);
      },
      [r](std::size_t n) { return r * (static_cast<double>(n) + 1.0) / static_cast<double>(n); },
      policy);
}

double free_energy(double x, const PrecisionPolicy& policy) {
  return free_energy_series(x, SeriesRoute::Divisor, policy).value;
}

double occupation(double x, const PrecisionPolicy& policy) {
  return occupation_series(x, SeriesRoute::Divisor, policy).value;
}

double internal_energy(double x, const PrecisionPolicy& policy) {
  return internal_energy_series(x, SeriesRoute::Divisor, policy).value;
}

double free_energy_lowfreq(double x) {
  require_positive(x, "free_energy_lowfreq");
  return -pi * pi / (6.0 * x) - 0.5 * std::log(x / (2.0 * pi)) + x / 24.0;
}

double occupation_lowfreq(double x) {
  require_positive(x, "occupation_lowfreq");
  return (arith::euler_gamma() - std::log(x)) / x;
}

double internal_energy_lowfreq(double x) {
  require_positive(x, "internal_energy_lowfreq");
  return pi * pi / (6.0 * x) - 0.5 + x / 24.0;
}

double entropy_lowfreq(double x) {
  require_positive(x, "entropy_lowfreq");
  return pi * pi / (3.0 * x) + 0.5 * std::log(x / (2.0 * pi)) - 0.5;
}

double free_energy_lowfreq_error(double x) {
  require_positive(x, "free_energy_lowfreq_error");
  const double a = kDualScale / x;
  if (a > 745.0) return 0.0;
  return dual_sum([a](double l) { return std::log1p(-std::exp(-a * l)); });
}

double internal_energy_lowfreq_error(double x) {
  require_positive(x, "internal_energy_lowfreq_error");
  const double a = kDualScale / x;
  if (a > 745.0) return 0.0;
  return -dual_sum([a](double l) { return a * l / std::expm1(a * l); });
}

EntropyValue entropy(double x, const PrecisionPolicy& policy) {
  require_series_range(x, "entropy");
  arith::DivisorSigmaSieve sigma(1, estimated_terms(x, policy));
  const SeriesValue s = sum_series(
      "entropy",
      [&](std::size_t m) {
        const double d = static_cast<double>(m);
        return sigma(m) * (x + 1.0 / d) * std::exp(-d * x);
      },
      [&](std::size_t m) {
        return envelope_tail(
            [&](std::size_t j) {
              const double d = static_cast<double>(j);
              return log_envelope(j) * (x * d + 1.0) * std::exp(-d * x);
            },
            m);
      },
      policy);
  const ThermoPerMode t = thermo_per_mode(x, policy);
  return {s.value, t.s_over_k, s.terms, s.tail_bound};
}

double per_mode_energy_fluctuation(double x, const PrecisionPolicy& policy) {
  require_series_range(x, "per_mode_energy_fluctuation");
  return divisor_series("per_mode_energy_fluctuation", 1, x, x * x, index_weight, env_m_sigma1,
                        policy)
      .value;
}

double planck_factor(double x, PlanckVariant variant) {
  require_positive(x, "planck_factor");
  const double planck = x / std::expm1(x);
  if (variant == PlanckVariant::Planck) return planck;
  return x / std::tanh(0.5 * x);
}

ThermoPerMode thermo_per_mode(double x, const PrecisionPolicy& policy) {
  const SeriesValue f = free_energy_series(x, SeriesRoute::Divisor, policy);
  const SeriesValue n = occupation_series(x, SeriesRoute::Divisor, policy);
  const SeriesValue e = internal_energy_series(x, SeriesRoute::Divisor, policy);
  ThermoPerMode out;
  out.f_over_kT = f.value;
  out.n_occ = n.value;
  out.e_over_kT = e.value;
  out.s_over_k = e.value - f.value;
  out.terms_used = std::max({f.terms, n.terms, e.terms});
  out.tail_bound = std::max({f.tail_bound, n.tail_bound, e.tail_bound});
  return out;
}

double log_partition_value(double x) {
  require_positive(x, "log_partition_value");
  if (x < 1e-8) return pi * pi / (6.0 * x);
  if (x < 1.0) return -free_energy_lowfreq(x) - free_energy_lowfreq_error(x);
  return dual_sum([x](double n) { return -std::log1p(-std::exp(-n * x)); });
}

double occupation_value(double x) {
  require_positive(x, "occupation_value");
  if (x < 1e-8) return occupation_lowfreq(x);
  if (x < 0.05) {
    const double x2 = x * x;
    return occupation_lowfreq(x) + 0.25 - x / 144.0 - x * x2 / 86400.0 -
           x * x2 * x2 / 7620480.0;
  }
  return dual_sum([x](double n) { return 1.0 / std::expm1(n * x); });
}

double energy_sum_value(double x) {
  require_positive(x, "energy_sum_value");
  if (x < 1e-8) return pi * pi / (6.0 * x * x);
  if (x < 1.0) return (internal_energy_lowfreq(x) + internal_energy_lowfreq_error(x)) / x;
  return dual_sum([x](double n) { return n / std::expm1(n * x); });
}

MellinCheck mellin_check(double s, MellinKind kind, const PrecisionPolicy& policy) {
  const double s_min = kind == MellinKind::Energy ? 2.0 : 1.0;
  if (!(s > s_min) || !std::isfinite(s))
    throw DomainError("mellin_check: s must exceed " + std::to_string(static_cast<int>(s_min)));

  double (*g)(double) = nullptr;
  double closed = arith::gamma_fn(s, policy) * arith::riemann_zeta(s, policy);
  switch (kind) {
    case MellinKind::FreeEnergy:
      g = log_partition_value;
      closed *= arith::riemann_zeta(s + 1.0, policy);
      break;
    case MellinKind::Occupation:
      g = occupation_value;
      closed *= arith::riemann_zeta(s, policy);
      break;
    case MellinKind::Energy:
      g = energy_sum_value;
      closed *= arith::riemann_zeta(s - 1.0, policy);
      break;
  }

  numeric::QuadratureOptions options;
  options.rel_tol = std::max(policy.rel_tol(), 1e-11);
  const numeric::QuadratureResult q = numeric::integrate_half_line(
      [g, s](double x) { return g(x) * std::pow(x, s - 1.0); }, options);
  if (!q.converged)
    throw PrecisionError("mellin_check: quadrature did not reach tolerance", q.evaluations);
  return {q.value, closed, q.error, q.evaluations};
}

}  // namespace eulergas::thermo
