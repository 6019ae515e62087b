#pragma once

#include <string>

namespace eulergas {

/// SI dimension as exponents of kg, m, s, K.
struct Dimension {
  int kg = 0;
  int m = 0;
  int s = 0;
  int K = 0;

  friend bool operator==(const Dimension&, const Dimension&) = default;
};

/// Factor by which a value of dimension d changes when mass, length, time and
/// temperature numbers are multiplied by the given scales.
double unit_scale(const Dimension& d, double mass, double length, double time, double temperature);

/// "kg m^2 s^-1" style label; "1" for a dimensionless quantity.
std::string to_string(const Dimension& d);

}  // namespace eulergas
