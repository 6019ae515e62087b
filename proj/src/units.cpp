#include "eulergas/units.hpp"

#include <cmath>

namespace eulergas {

double unit_scale(const Dimension& d, double mass, double length, double time, double temperature) {
  return std::pow(mass, d.kg) * std::pow(length, d.m) * std::pow(time, d.s) *
         std::pow(temperature, d.K);
}

std::string to_string(const Dimension& d) {
  std::string out;
  auto put = [&out](const char* symbol, int e) {
    if (e == 0) return;
    if (!out.empty()) out += ' ';
    out += symbol;
    if (e != 1) out += '^' + std::to_string(e);
  };
  put("kg", d.kg);
  put("m", d.m);
  put("s", d.s);
  put("K", d.K);
  return out.empty() ? "1" : out;
}

}  // namespace eulergas
