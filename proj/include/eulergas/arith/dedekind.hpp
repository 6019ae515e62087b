#pragma once

#include <complex>
#include <cstdint>
#include <string_view>

#include "eulergas/arith/farey.hpp"
#include "eulergas/precision.hpp"

namespace eulergas::arith {

/// Uncentered sums (l/q)*frac(p*l/q) over l = 1..q with no offsets.
/// ClassicalSawtooth sums ((l/q))((p*l/q)) with ((t)) = t - floor(t) - 1/2
/// (zero at integers). The two differ by exactly (q - 1)/4.
enum class DedekindConvention { Uncentered, ClassicalSawtooth };

std::string_view to_string(DedekindConvention c);
DedekindConvention parse_dedekind_convention(std::string_view name);

struct DedekindValue {
  Rational value;
  DedekindConvention convention;
};

/// s(p, q) for gcd(p, q) = 1. p is taken modulo q.
DedekindValue dedekind_sum(std::int64_t p, std::int64_t q, DedekindConvention convention);

/// Sum of l * (p*l mod q) for l = 1..q-1; both conventions are affine in it.
std::int64_t dedekind_kernel(std::int64_t p, std::int64_t q);

/// A_q(n) = sum over p mod q, gcd(p,q)=1, of exp(i*pi*s(p,q) - 2*i*pi*n*p/q).
/// For q = 1 the single residue p = 0 contributes 1.
std::complex<double> kloosterman_A(std::int64_t q, std::uint64_t n,
                                   DedekindConvention convention);

/// Phase of one A_q(n) term in turns, reduced to [0, 1):
/// s(p,q)/2 - n*p/q mod 1.
Rational kloosterman_phase(std::int64_t p, std::int64_t q, std::uint64_t n,
                           DedekindConvention convention);

}  // namespace eulergas::arith
