#pragma once

#include <cstddef>

namespace eulergas {

/// Accuracy contract shared by every series, product and quadrature.
class PrecisionPolicy {
 public:
  PrecisionPolicy() = default;
  PrecisionPolicy(double rel_tol, unsigned work_bits, std::size_t max_terms);

  double rel_tol() const noexcept { return rel_tol_; }
  unsigned work_bits() const noexcept { return work_bits_; }
  std::size_t max_terms() const noexcept { return max_terms_; }

  PrecisionPolicy with_rel_tol(double rel_tol) const {
    return {rel_tol, work_bits_, max_terms_};
  }

 private:
  double rel_tol_ = 1e-12;
  unsigned work_bits_ = 53;
  std::size_t max_terms_ = 10'000'000;
};

}  // namespace eulergas
