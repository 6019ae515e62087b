#include "eulergas/arith/farey.hpp"

#include <numeric>

#include "eulergas/errors.hpp"

namespace eulergas::arith {

namespace {
__extension__ typedef __int128 Wide;
}  // namespace

Fraction::Fraction(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den < 1) throw DomainError("Fraction: denominator must be >= 1");
}

Fraction Fraction::reduced(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("Fraction: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

bool Fraction::is_reduced() const noexcept { return std::gcd(num_, den_) == 1; }

std::string Fraction::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

bool operator<(const Fraction& a, const Fraction& b) {
  return static_cast<Wide>(a.num()) * b.den() < static_cast<Wide>(b.num()) * a.den();
}

std::vector<Fraction> farey_sequence(std::int64_t order) {
  if (order < 1) throw DomainError("farey_sequence: order must be >= 1");
  // Successor rule for consecutive terms a/b < c/d of F_N.
  std::vector<Fraction> seq;
  std::int64_t a = 0, b = 1, c = 1, d = order;
  seq.emplace_back(a, b);
  while (c <= order) {
    seq.emplace_back(c, d);
    if (c == 1 && d == 1) break;
    const std::int64_t k = (order + b) / d;
    const std::int64_t nc = k * c - a;
    const std::int64_t nd = k * d - b;
    a = c;
    b = d;
    c = nc;
    d = nd;
  }
  return seq;
}

bool farey_adjacent(const Fraction& left, const Fraction& right) {
  return static_cast<Wide>(right.num()) * left.den() -
             static_cast<Wide>(left.num()) * right.den() ==
         1;
}

FordCircle ford_circle(const Fraction& f) {
  if (!f.is_reduced())
    throw DomainError("ford_circle: fraction " + f.to_string() + " is not reduced");
  const mpz_class q = f.den();
  const Rational r = make_rational(1, 2 * q * q);
  return {f, f.to_rational(), r, r};
}

TangencyPoints ford_tangency(const Fraction& left, const Fraction& mid,
                             const Fraction& right) {
  if (!left.is_reduced() || !mid.is_reduced() || !right.is_reduced())
    throw DomainError("ford_tangency: fractions must be reduced");
  if (!farey_adjacent(left, mid) || !farey_adjacent(mid, right))
    throw DomainError("ford_tangency: " + left.to_string() + ", " + mid.to_string() +
                      ", " + right.to_string() + " are not Farey-adjacent");

  const mpz_class q = mid.den();
  const mpz_class q1 = left.den();
  const mpz_class q2 = right.den();
  const Rational base = mid.to_rational();

  auto make = [&](const mpz_class& qn, int sign) {
    const mpz_class s = q * q + qn * qn;
    const Rational re = make_rational(sign * qn, q * s);
    const Rational im = make_rational(1, s);
    return ExactComplex{base + re, im};
  };
  return {make(q1, -1), make(q2, +1)};
}

Rational ford_separation(const FordCircle& a, const FordCircle& b) {
  const Rational dx = a.center_x - b.center_x;
  const Rational dy = a.center_y - b.center_y;
  const Rational rs = a.radius + b.radius;
  return dx * dx + dy * dy - rs * rs;
}

}  // namespace eulergas::arith
