#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace eulergas::arith {

using Rational = mpq_class;

/// num/den in lowest terms; den must be nonzero.
inline Rational make_rational(const mpz_class& num, const mpz_class& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// p/q with q >= 1. Construction does not reduce; operations that need a
/// reduced fraction check `is_reduced()` and reject otherwise.
class Fraction {
 public:
  Fraction(std::int64_t num, std::int64_t den);

  /// Canonical (reduced) form of num/den.
  static Fraction reduced(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_reduced() const noexcept;
  Rational to_rational() const { return make_rational(num_, den_); }
  double to_double() const noexcept { return static_cast<double>(num_) / den_; }
  std::string to_string() const;

  friend bool operator==(const Fraction&, const Fraction&) = default;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

/// Strict order by value (cross-multiplication, exact).
bool operator<(const Fraction& a, const Fraction& b);

/// Exact complex number with rational parts.
struct ExactComplex {
  Rational re;
  Rational im;
};

struct FordCircle {
  Fraction fraction;
  Rational center_x;
  Rational center_y;
  Rational radius;
};

struct TangencyPoints {
  ExactComplex left;   // contact with the left neighbour's circle
  ExactComplex right;  // contact with the right neighbour's circle
};

/// Reduced fractions in [0, 1] with denominator <= order, increasing.
std::vector<Fraction> farey_sequence(std::int64_t order);

/// Unimodularity: right.num * left.den - left.num * right.den == 1.
bool farey_adjacent(const Fraction& left, const Fraction& right);

FordCircle ford_circle(const Fraction& f);

/// Points where C(mid) touches C(left) and C(right). The triple must be
/// pairwise Farey-adjacent.
TangencyPoints ford_tangency(const Fraction& left, const Fraction& mid,
                             const Fraction& right);

/// Squared distance between centres minus (r1 + r2)^2. Zero exactly when
/// the circles are tangent, positive when disjoint.
Rational ford_separation(const FordCircle& a, const FordCircle& b);

}  // namespace eulergas::arith
