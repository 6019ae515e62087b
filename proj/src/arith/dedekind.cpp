#include "eulergas/arith/dedekind.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "eulergas/errors.hpp"

namespace eulergas::arith {

std::string_view to_string(DedekindConvention c) {
  return c == DedekindConvention::Uncentered ? "uncentered" : "classical";
}

DedekindConvention parse_dedekind_convention(std::string_view name) {
  if (name == "uncentered") return DedekindConvention::Uncentered;
  if (name == "classical") return DedekindConvention::ClassicalSawtooth;
  throw DomainError("unknown Dedekind convention '" + std::string(name) +
                    "' (expected uncentered|classical)");
}

std::int64_t dedekind_kernel(std::int64_t p, std::int64_t q) {
  std::int64_t sum = 0;
  std::int64_t r = 0;  // p*l mod q, updated incrementally
  const std::int64_t step = ((p % q) + q) % q;
  for (std::int64_t l = 1; l < q; ++l) {
    r += step;
    if (r >= q) r -= q;
    sum += l * r;
  }
  return sum;
}

DedekindValue dedekind_sum(std::int64_t p, std::int64_t q, DedekindConvention convention) {
  if (q < 1) throw DomainError("dedekind_sum: q must be >= 1");
  if (std::gcd(p, q) != 1)
    throw DomainError("dedekind_sum: gcd(" + std::to_string(p) + ", " + std::to_string(q) +
                      ") != 1");
  const mpz_class qq = mpz_class(q) * q;
  Rational value = make_rational(mpz_class(dedekind_kernel(p, q)), qq);
  if (convention == DedekindConvention::ClassicalSawtooth)
    value -= make_rational(mpz_class(q - 1), 4);
  return {value, convention};
}

Rational kloosterman_phase(std::int64_t p, std::int64_t q, std::uint64_t n,
                           DedekindConvention convention) {
  const Rational s = dedekind_sum(p, q, convention).value;
  Rational t = s / 2 - make_rational(mpz_class(static_cast<unsigned long>(n % q)) * p, q);
  // reduce to [0, 1)
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  t -= fl;
  return t;
}

std::complex<double> kloosterman_A(std::int64_t q, std::uint64_t n,
                                   DedekindConvention convention) {
  if (q < 1) throw DomainError("kloosterman_A: q must be >= 1");
  if (q == 1) return {1.0, 0.0};
  long double re = 0.0L, im = 0.0L;
  for (std::int64_t p = 1; p < q; ++p) {
    if (std::gcd(p, q) != 1) continue;
    const long double turns = kloosterman_phase(p, q, n, convention).get_d();
    const long double angle = 2.0L * std::numbers::pi_v<long double> * turns;
    re += std::cos(angle);
    im += std::sin(angle);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

}  // namespace eulergas::arith
