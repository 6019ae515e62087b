#include "eulergas/phonon/phonon.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include "eulergas/arith/special.hpp"
#include "eulergas/config.hpp"
#include "eulergas/errors.hpp"
#include "eulergas/numeric/quadrature.hpp"

namespace eulergas::phonon {

namespace {

constexpr double pi = std::numbers::pi;

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw DomainError(std::string(what) + " must be positive and finite");
}

double x_max(const SolidSpec& solid, const PhysicalConstants& constants) {
  return debye_temperature(solid, constants) / solid.temperature();
}

std::map<std::string, ResonatorSpec> presets_from(const KeyValueFile& file) {
  static const std::set<std::string> kKeys = {"q_factor", "carrier", "active_volume", "temperature", "c_ph"};
  std::set<std::string> names;
  for (const auto& [key, value] : file.entries()) {
    const auto dot = key.find('.');
    if (dot == std::string::npos || kKeys.count(key.substr(dot + 1)) == 0)
      throw DomainError(file.origin() + ": unknown preset key '" + key + "'");
    names.insert(key.substr(0, dot));
  }
  std::map<std::string, ResonatorSpec> out;
  for (const auto& name : names) {
    auto get = [&](const char* key) { return file.number(name + "." + key); };
    out.emplace(name, ResonatorSpec(get("q_factor"), get("carrier"), get("active_volume"),
                                    get("temperature"), get("c_ph")));
  }
  return out;
}

}  // namespace

double debye_velocity(double c_t, double c_l) {
  require_positive(c_t, "transverse velocity");
  require_positive(c_l, "longitudinal velocity");
  return std::cbrt(3.0 / (2.0 / (c_t * c_t * c_t) + 1.0 / (c_l * c_l * c_l)));
}

SolidSpec::SolidSpec(double n_atoms, double volume, double c_ph, double temperature)
    : n_atoms_(n_atoms), volume_(volume), c_ph_(c_ph), temperature_(temperature) {
  require_positive(n_atoms, "atom count");
  require_positive(volume, "volume");
  require_positive(c_ph, "sound velocity");
  require_positive(temperature, "temperature");
}

SolidSpec SolidSpec::from_velocities(double n_atoms, double volume, double c_t, double c_l,
                                     double temperature) {
  return {n_atoms, volume, debye_velocity(c_t, c_l), temperature};
}

double debye_frequency(const SolidSpec& s) {
  return std::cbrt(3.0 * s.n_atoms() * s.c_ph() * s.c_ph() * s.c_ph() / (4.0 * pi * s.volume()));
}

double debye_temperature(const SolidSpec& solid, const PhysicalConstants& constants) {
  return constants.h() * debye_frequency(solid) / constants.k();
}

double debye_function(double x_m, const PrecisionPolicy& policy) {
  require_positive(x_m, "x_m");
  numeric::QuadratureOptions options;
  options.rel_tol = std::max(policy.rel_tol(), 1e-14);
  options.abs_tol = 0.0;
  const auto r = numeric::integrate(
      [](double x) { return x * x * x / std::expm1(x); }, 0.0, x_m, options);
  if (!r.converged) throw PrecisionError("debye_function: quadrature did not reach tolerance", r.evaluations);
  return 3.0 * r.value / (x_m * x_m * x_m);
}

SpecificHeat specific_heat(const SolidSpec& solid, const PhysicalConstants& constants, HeatModel model,
                           const PrecisionPolicy& policy) {
  SpecificHeat out;
  out.x_m = x_max(solid, constants);
  double ratio = 4.0 * debye_function(out.x_m, policy) - 3.0 * out.x_m / std::expm1(out.x_m);
  if (model == HeatModel::General) ratio *= arith::riemann_zeta(3.0, policy);
  out.ratio_to_3Nk = ratio;
  out.joules_per_kelvin = 3.0 * solid.n_atoms() * constants.k() * ratio;
  return out;
}

double internal_energy(const SolidSpec& solid, const PhysicalConstants& constants,
                       const PrecisionPolicy& policy) {
  return 3.0 * solid.n_atoms() * constants.k() * solid.temperature() *
         debye_function(x_max(solid, constants), policy);
}

EnergyFluctuation energy_fluctuation(const SolidSpec& solid, const PhysicalConstants& constants,
                                     const PrecisionPolicy& policy) {
  const double T = solid.temperature();
  const double cv = specific_heat(solid, constants, HeatModel::Conventional, policy).joules_per_kelvin;
  EnergyFluctuation out;
  out.epsilon_sq = constants.k() * T * T * cv;
  out.relative = std::sqrt(2.0 / (3.0 * solid.n_atoms()));
  out.relative_model = std::sqrt(out.epsilon_sq) / internal_energy(solid, constants, policy);
  return out;
}

ResonatorSpec::ResonatorSpec(double q_factor, double carrier, double active_volume, double temperature,
                             double c_ph)
    : q_factor_(q_factor), carrier_(carrier), active_volume_(active_volume),
      temperature_(temperature), c_ph_(c_ph) {
  require_positive(q_factor, "quality factor");
  require_positive(carrier, "carrier frequency");
  require_positive(active_volume, "active volume");
  require_positive(temperature, "temperature");
  require_positive(c_ph, "sound velocity");
}

FlickerFloor flicker_floor(const ResonatorSpec& r, const PhysicalConstants& k) {
  const double c3 = r.c_ph() * r.c_ph() * r.c_ph();
  FlickerFloor out;
  out.a_ph = 9.0 * k.h() * c3 / (4.0 * std::pow(pi, 3) * k.k() * r.temperature());
  const double q2 = r.q_factor() * r.q_factor();
  out.h_minus_1 = out.a_ph / (4.0 * q2 * q2 * r.active_volume());
  return out;
}

double phonon_fractional_noise(double nu, const ResonatorSpec& r, const PhysicalConstants& k) {
  require_positive(nu, "frequency");
  return flicker_floor(r, k).a_ph / (r.active_volume() * nu);
}

double frequency_noise(double nu, const ResonatorSpec& r, const PhysicalConstants& k) {
  require_positive(nu, "frequency");
  return flicker_floor(r, k).h_minus_1 / nu;
}

ResonatorSpec resonator_preset(const std::string& name) {
  if (name == "p5-5mhz") return {2e6, 5e6, 1e-6, 300.0, 3.5e3};
  throw DomainError("unknown resonator preset '" + name + "'");
}

std::map<std::string, ResonatorSpec> parse_resonator_presets(const std::string& text,
                                                             const std::string& origin) {
  return presets_from(KeyValueFile::parse(text, origin));
}

std::map<std::string, ResonatorSpec> load_resonator_presets(const std::filesystem::path& path) {
  return presets_from(KeyValueFile::load(path));
}

}  // namespace eulergas::phonon
