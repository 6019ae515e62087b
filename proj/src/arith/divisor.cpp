#include "eulergas/arith/divisor.hpp"

#include <cmath>
#include <cstdlib>

#include "eulergas/errors.hpp"

namespace eulergas::arith {

namespace {

mpz_class ipow(std::uint64_t d, unsigned e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), d, e);
  return r;
}

}  // namespace

mpq_class divisor_sigma(int k, std::uint64_t n) {
  if (n == 0) throw DomainError("divisor_sigma: n must be >= 1");
  const unsigned e = static_cast<unsigned>(std::abs(k));
  mpz_class pos = 0;
  mpq_class neg = 0;
  auto add = [&](std::uint64_t d) {
    if (k >= 0) {
      pos += ipow(d, e);
    } else {
      neg += mpq_class(mpz_class(1), ipow(d, e));
    }
  };
  for (std::uint64_t d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    add(d);
    if (d != n / d) add(n / d);
  }
  if (k >= 0) return mpq_class(pos);
  neg.canonicalize();
  return neg;
}

std::vector<double> divisor_sigma_table(int k, std::size_t n_max) {
  std::vector<double> sigma(n_max + 1, 0.0);
  for (std::size_t d = 1; d <= n_max; ++d) {
    const double w = std::pow(static_cast<double>(d), k);
    for (std::size_t m = d; m <= n_max; m += d) sigma[m] += w;
  }
  return sigma;
}

}  // namespace eulergas::arith
