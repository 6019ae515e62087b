#include "eulergas/arith/bigcount.hpp"

#include <limits>

#include "eulergas/errors.hpp"

namespace eulergas::arith {

BigCount::BigCount(const mpz_class& v) : value_(v) {
  if (sgn(value_) < 0) throw DomainError("BigCount: negative value " + v.get_str());
}

BigCount::BigCount(const std::string& decimal) {
  if (decimal.empty() || value_.set_str(decimal, 10) != 0)
    throw DomainError("BigCount: not a decimal integer: '" + decimal + "'");
  if (sgn(value_) < 0) throw DomainError("BigCount: negative value " + decimal);
}

bool BigCount::fits_uint64() const {
  return mpz_sizeinbase(value_.get_mpz_t(), 2) <= 64;
}

std::uint64_t BigCount::to_uint64() const {
  if (!fits_uint64()) throw DomainError("BigCount: value exceeds 64 bits");
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, value_.get_mpz_t());
  return out;
}

std::size_t BigCount::bits() const { return mpz_sizeinbase(value_.get_mpz_t(), 2); }

}  // namespace eulergas::arith
