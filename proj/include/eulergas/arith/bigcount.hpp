#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace eulergas::arith {

/// Arbitrary-size nonnegative integer (partition counts, divisor sums).
class BigCount {
 public:
  BigCount() = default;
  BigCount(std::uint64_t v) : value_(static_cast<unsigned long>(v)) {}
  explicit BigCount(const mpz_class& v);
  explicit BigCount(const std::string& decimal);

  const mpz_class& mpz() const noexcept { return value_; }
  std::string to_string() const { return value_.get_str(); }
  double to_double() const { return value_.get_d(); }
  bool fits_uint64() const;
  std::uint64_t to_uint64() const;
  std::size_t bits() const;

  BigCount& operator+=(const BigCount& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  friend BigCount operator+(BigCount lhs, const BigCount& rhs) { return lhs += rhs; }

  friend bool operator==(const BigCount& a, const BigCount& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const BigCount& a, const BigCount& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpz_class value_{0};
};

}  // namespace eulergas::arith
