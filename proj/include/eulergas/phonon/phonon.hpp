#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "eulergas/precision.hpp"
#include "eulergas/radiation/radiation.hpp"
#include "eulergas/units.hpp"

namespace eulergas::phonon {

using radiation::PhysicalConstants;

/// Average sound velocity from 3 / c_ph^3 = 2 / c_t^3 + 1 / c_l^3.
double debye_velocity(double c_transverse, double c_longitudinal);

/// N0 atoms in volume V (m^3) at temperature T (K) with mean sound speed c_ph (m/s).
class SolidSpec {
 public:
  SolidSpec(double n_atoms, double volume, double c_ph, double temperature);
  static SolidSpec from_velocities(double n_atoms, double volume, double c_transverse,
                                   double c_longitudinal, double temperature);

  double n_atoms() const noexcept { return n_atoms_; }
  double volume() const noexcept { return volume_; }
  double c_ph() const noexcept { return c_ph_; }
  double temperature() const noexcept { return temperature_; }
  SolidSpec at_temperature(double temperature) const {
    return {n_atoms_, volume_, c_ph_, temperature};
  }

 private:
  double n_atoms_;
  double volume_;
  double c_ph_;
  double temperature_;
};

/// nu_m = (3 N0 c_ph^3 / (4 pi V))^{1/3} in Hz.
double debye_frequency(const SolidSpec& solid);
/// theta_D = h nu_m / k in K.
double debye_temperature(const SolidSpec& solid, const PhysicalConstants& constants = {});

/// D(x_m) = (3 / x_m^3) * integral_0^{x_m} x^3 / (e^x - 1) dx by adaptive quadrature.
double debye_function(double x_m, const PrecisionPolicy& policy = {});

enum class HeatModel { Conventional, General };

struct SpecificHeat {
  double x_m = 0.0;              // theta_D / T
  double ratio_to_3Nk = 0.0;     // C_v / (3 N0 k), i.e. in units of 3R per mole
  double joules_per_kelvin = 0.0;
};

/// C_v = dE/dT with E = 3 N0 k T D(x_m), i.e. C_v / 3Nk = 4 D - 3 x_m / (e^{x_m} - 1).
/// General multiplies by zeta(3).
SpecificHeat specific_heat(const SolidSpec& solid, const PhysicalConstants& constants, HeatModel model,
                           const PrecisionPolicy& policy = {});

/// Conventional internal energy 3 N0 k T D(x_m) in J.
double internal_energy(const SolidSpec& solid, const PhysicalConstants& constants,
                       const PrecisionPolicy& policy = {});

struct EnergyFluctuation {
  double epsilon_sq = 0.0;     // k T^2 C_v in J^2 (Conventional C_v)
  double relative = 0.0;       // (2 / (3 N0))^{1/2}
  double relative_model = 0.0; // sqrt(epsilon_sq) / E from the same model
};

EnergyFluctuation energy_fluctuation(const SolidSpec& solid, const PhysicalConstants& constants = {},
                                     const PrecisionPolicy& policy = {});

/// Quartz resonator: quality factor Q, carrier (Hz), active volume (m^3),
/// temperature (K), sound speed c_ph (m/s).
class ResonatorSpec {
 public:
  ResonatorSpec(double q_factor, double carrier, double active_volume, double temperature, double c_ph);
  double q_factor() const noexcept { return q_factor_; }
  double carrier() const noexcept { return carrier_; }
  double active_volume() const noexcept { return active_volume_; }
  double temperature() const noexcept { return temperature_; }
  double c_ph() const noexcept { return c_ph_; }

 private:
  double q_factor_;
  double carrier_;
  double active_volume_;
  double temperature_;
  double c_ph_;
};

struct FlickerFloor {
  double a_ph = 0.0;       // 9 h c_ph^3 / (4 pi^3 k T), m^3 s^-2
  double h_minus_1 = 0.0;  // A_ph / (4 Q^4 V)
};

FlickerFloor flicker_floor(const ResonatorSpec& resonator, const PhysicalConstants& constants = {});

/// S_u / u^2 = A_ph / (V nu), s^-1.
double phonon_fractional_noise(double nu, const ResonatorSpec& resonator,
                               const PhysicalConstants& constants = {});
/// S_omega / omega^2 = h_{-1} / nu.
double frequency_noise(double nu, const ResonatorSpec& resonator, const PhysicalConstants& constants = {});

/// Built-in presets: "p5-5mhz" (Q = 2e6, 5 MHz, 1 cm^3, 300 K, 3.5 km/s).
ResonatorSpec resonator_preset(const std::string& name);
/// Reads "[name]" sections with keys q_factor, carrier, active_volume,
/// temperature, c_ph; unknown or missing keys are rejected.
std::map<std::string, ResonatorSpec> load_resonator_presets(const std::filesystem::path& path);
std::map<std::string, ResonatorSpec> parse_resonator_presets(const std::string& text,
                                                             const std::string& origin = "<string>");

namespace dims {
inline constexpr Dimension velocity{0, 1, -1, 0};
inline constexpr Dimension frequency{0, 0, -1, 0};
inline constexpr Dimension temperature{0, 0, 0, 1};
inline constexpr Dimension heat_capacity{1, 2, -2, -1};
inline constexpr Dimension energy{1, 2, -2, 0};
inline constexpr Dimension energy_sq{2, 4, -4, 0};
inline constexpr Dimension a_ph{0, 3, -2, 0};
inline constexpr Dimension h_minus_1{0, 0, -2, 0};
inline constexpr Dimension fractional_noise{0, 0, -1, 0};
inline constexpr Dimension dimensionless{0, 0, 0, 0};
}  // namespace dims

}  // namespace eulergas::phonon
