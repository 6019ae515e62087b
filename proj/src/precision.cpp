#include "eulergas/precision.hpp"

#include <cmath>

#include "eulergas/errors.hpp"

namespace eulergas {

PrecisionPolicy::PrecisionPolicy(double rel_tol, unsigned work_bits, std::size_t max_terms)
    : rel_tol_(rel_tol), work_bits_(work_bits), max_terms_(max_terms) {
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) throw DomainError("rel_tol must lie in (0, 1)");
  if (work_bits < 53) throw DomainError("work_bits must be at least 53");
  if (max_terms == 0) throw DomainError("max_terms must be positive");
}

}  // namespace eulergas
