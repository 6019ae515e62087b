#include "eulergas/modular/rademacher.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include <mpfr.h>

#include "eulergas/errors.hpp"

namespace eulergas::modular {

namespace {

// Owning mpfr_t at a fixed precision.
class MpReal {
 public:
  explicit MpReal(mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_ui(v_, 0, MPFR_RNDN); }
  ~MpReal() { mpfr_clear(v_); }
  MpReal(const MpReal&) = delete;
  MpReal& operator=(const MpReal&) = delete;
  mpfr_ptr get() noexcept { return v_; }
  mpfr_srcptr get() const noexcept { return v_; }
  operator mpfr_ptr() noexcept { return v_; }
  operator mpfr_srcptr() const noexcept { return v_; }

 private:
  mpfr_t v_;
};

// Evaluates and accumulates the q-th Rademacher terms at fixed precision.
class RademacherSeries {
 public:
  RademacherSeries(std::uint64_t n, arith::DedekindConvention convention, mpfr_prec_t bits)
      : n_(n), convention_(convention), bits_(bits), lambda_(bits), lambda_sq_(bits),
        k1_(bits), two_pi_(bits), re_(bits), im_(bits), t_(bits), u_(bits), kq_(bits),
        d_(bits), a_re_(bits), a_im_(bits), s_(bits), c_(bits) {
    // lambda^2 = n - 1/24 = (24 n - 1) / 24, exact
    mpfr_set_ui(lambda_sq_, 24, MPFR_RNDN);
    mpfr_mul_ui(lambda_sq_, lambda_sq_, n, MPFR_RNDN);
    mpfr_sub_ui(lambda_sq_, lambda_sq_, 1, MPFR_RNDN);
    mpfr_div_ui(lambda_sq_, lambda_sq_, 24, MPFR_RNDN);
    mpfr_sqrt(lambda_, lambda_sq_, MPFR_RNDN);
    // K_1 = pi sqrt(2/3)
    mpfr_set_ui(k1_, 2, MPFR_RNDN);
    mpfr_div_ui(k1_, k1_, 3, MPFR_RNDN);
    mpfr_sqrt(k1_, k1_, MPFR_RNDN);
    mpfr_const_pi(t_, MPFR_RNDN);
    mpfr_mul(k1_, k1_, t_, MPFR_RNDN);
    mpfr_mul_ui(two_pi_, t_, 2, MPFR_RNDN);
  }

  std::uint64_t terms() const noexcept { return q_done_; }

  void extend_to(std::uint64_t q_max) {
    for (std::uint64_t q = q_done_ + 1; q <= q_max; ++q) add_term(q);
    q_done_ = std::max(q_done_, q_max);
  }

  // (sum_re, sum_im) / (pi sqrt 2); rounds re to the nearest integer.
  void current(mpz_class& rounded, double& residual) {
    MpReal scale(bits_), re(bits_), frac(bits_);
    mpfr_const_pi(scale, MPFR_RNDN);
    mpfr_set_ui(frac, 2, MPFR_RNDN);
    mpfr_sqrt(frac, frac, MPFR_RNDN);
    mpfr_mul(scale, scale, frac, MPFR_RNDN);
    mpfr_div(re, re_, scale, MPFR_RNDN);
    mpfr_rint(frac, re, MPFR_RNDN);
    mpfr_get_z(rounded.get_mpz_t(), frac, MPFR_RNDN);
    mpfr_sub(frac, re, frac, MPFR_RNDN);
    const double dre = mpfr_get_d(frac, MPFR_RNDN);
    mpfr_div(frac, im_, scale, MPFR_RNDN);
    const double dim = mpfr_get_d(frac, MPFR_RNDN);
    residual = std::hypot(dre, dim);
  }

 private:
  void add_term(std::uint64_t q) {
    // A_q(n) at working precision
    const auto qq = static_cast<std::int64_t>(q);
    mpfr_set_ui(a_re_, q == 1 ? 1 : 0, MPFR_RNDN);
    mpfr_set_ui(a_im_, 0, MPFR_RNDN);
    if (q > 1) {
      for (std::int64_t p = 1; p < qq; ++p) {
        if (std::gcd(p, qq) != 1) continue;
        const arith::Rational phase = arith::kloosterman_phase(p, qq, n_, convention_);
        mpfr_set_q(t_, phase.get_mpq_t(), MPFR_RNDN);
        mpfr_mul(t_, t_, two_pi_, MPFR_RNDN);
        mpfr_sin_cos(s_, c_, t_, MPFR_RNDN);
        mpfr_add(a_re_, a_re_, c_, MPFR_RNDN);
        mpfr_add(a_im_, a_im_, s_, MPFR_RNDN);
      }
    }
    // d/dn [sinh(K_q lambda)/lambda] = (K_q cosh(K_q lambda) - sinh(K_q lambda)/lambda) / (2 lambda^2)
    mpfr_div_ui(kq_, k1_, q, MPFR_RNDN);
    mpfr_mul(t_, kq_, lambda_, MPFR_RNDN);
    mpfr_sinh_cosh(s_, c_, t_, MPFR_RNDN);
    mpfr_mul(d_, kq_, c_, MPFR_RNDN);
    mpfr_div(u_, s_, lambda_, MPFR_RNDN);
    mpfr_sub(d_, d_, u_, MPFR_RNDN);
    mpfr_div(d_, d_, lambda_sq_, MPFR_RNDN);
    mpfr_div_ui(d_, d_, 2, MPFR_RNDN);
    // times sqrt(q)
    mpfr_sqrt_ui(u_, q, MPFR_RNDN);
    mpfr_mul(d_, d_, u_, MPFR_RNDN);

    mpfr_mul(t_, a_re_, d_, MPFR_RNDN);
    mpfr_add(re_, re_, t_, MPFR_RNDN);
    mpfr_mul(t_, a_im_, d_, MPFR_RNDN);
    mpfr_add(im_, im_, t_, MPFR_RNDN);
  }

  std::uint64_t n_;
  arith::DedekindConvention convention_;
  mpfr_prec_t bits_;
  std::uint64_t q_done_ = 0;
  MpReal lambda_, lambda_sq_, k1_, two_pi_, re_, im_, t_, u_, kq_, d_, a_re_, a_im_, s_, c_;
};

struct Checkpoint {
  mpz_class rounded;
  double residual;
};

}  // namespace

unsigned rademacher_work_bits(std::uint64_t n) {
  const double magnitude = std::numbers::pi * std::sqrt(2.0 * static_cast<double>(n) / 3.0);
  return static_cast<unsigned>(std::ceil(magnitude / std::numbers::ln2)) + 64;
}

RademacherResult rademacher_p(std::uint64_t n, arith::DedekindConvention convention,
                              const PrecisionPolicy& policy) {
  RademacherResult out;
  out.n = n;
  out.convention = convention;
  if (n == 0) {
    out.value = arith::BigCount(1);
    return out;
  }
  const unsigned bits = std::max(policy.work_bits(), rademacher_work_bits(n));
  if (bits > MPFR_PREC_MAX)
    throw PrecisionError("rademacher_p: n = " + std::to_string(n) + " needs " +
                             std::to_string(bits) + " bits",
                         0);
  out.work_bits = bits;

  const auto start =
      static_cast<std::uint64_t>(std::ceil(2.0 * std::sqrt(static_cast<double>(n))));
  const std::uint64_t cap =
      std::min<std::uint64_t>(std::max<std::uint64_t>(16 * start, 64), policy.max_terms());

  RademacherSeries series(n, convention, bits);
  std::vector<Checkpoint> history;
  std::uint64_t q = std::min(start, cap);
  for (;;) {
    series.extend_to(q);
    Checkpoint cp;
    series.current(cp.rounded, cp.residual);
    history.push_back(cp);

    const std::size_t h = history.size();
    if (h >= 3) {
      bool settled = true;
      for (std::size_t i = h - 3; i < h; ++i)
        settled = settled && history[i].residual < 0.25 && history[i].rounded == cp.rounded;
      if (settled && sgn(cp.rounded) >= 0) {
        out.value = arith::BigCount(cp.rounded);
        out.terms_used = series.terms();
        out.residual = cp.residual;
        return out;
      }
    }
    if (q >= cap) {
      throw ConvergenceError("rademacher_p: n = " + std::to_string(n) + " did not settle on an integer after " +
                                 std::to_string(q) + " terms (residual " +
                                 std::to_string(cp.residual) + ", convention " +
                                 std::string(arith::to_string(convention)) + ")",
                             q, cp.residual, std::string(arith::to_string(convention)));
    }
    q = std::min<std::uint64_t>(cap, (3 * q + 1) / 2);
  }
}

double leading_term_p(std::uint64_t n) {
  if (n == 0) throw DomainError("leading_term_p: n must be >= 1");
  const long double pi = std::numbers::pi_v<long double>;
  const long double k = pi * std::sqrt(2.0L / 3.0L);
  const long double lambda = std::sqrt(static_cast<long double>(n) - 1.0L / 24.0L);
  // d/dn [e^{K lambda}/lambda] = e^{K lambda} (K/lambda - 1/lambda^2) / (2 lambda)
  const long double deriv =
      std::exp(k * lambda) * (k / lambda - 1.0L / (lambda * lambda)) / (2.0L * lambda);
  return static_cast<double>(deriv / (2.0L * pi * std::sqrt(2.0L)));
}

double asymptotic_p(std::uint64_t n) {
  if (n == 0) throw DomainError("asymptotic_p: n must be >= 1");
  const long double nn = static_cast<long double>(n);
  const long double pi = std::numbers::pi_v<long double>;
  return static_cast<double>(std::exp(pi * std::sqrt(2.0L * nn / 3.0L)) /
                             (4.0L * nn * std::sqrt(3.0L)));
}

}  // namespace eulergas::modular
