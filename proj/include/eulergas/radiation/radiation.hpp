#pragma once

#include <filesystem>
#include <string>

#include "eulergas/precision.hpp"
#include "eulergas/units.hpp"

namespace eulergas::radiation {

/// Planck constant (J s), Boltzmann constant (J/K), speed of light (m/s).
class PhysicalConstants {
 public:
  /// Exact SI values of the 2019 redefinition (CODATA 2018).
  PhysicalConstants() = default;
  PhysicalConstants(double h, double k, double c);

  /// Reads "h", "k", "c" from a key = value file; unknown keys are rejected
  /// and missing keys keep their CODATA value.
  static PhysicalConstants from_file(const std::filesystem::path& path);
  static PhysicalConstants from_text(const std::string& text, const std::string& origin = "<string>");

  double h() const noexcept { return h_; }
  double k() const noexcept { return k_; }
  double c() const noexcept { return c_; }

 private:
  double h_ = 6.62607015e-34;
  double k_ = 1.380649e-23;
  double c_ = 2.99792458e8;
};

/// Cavity of volume V (m^3) at temperature T (K).
class CavitySpec {
 public:
  CavitySpec(double volume, double temperature);
  double volume() const noexcept { return volume_; }
  double temperature() const noexcept { return temperature_; }

 private:
  double volume_;
  double temperature_;
};

enum class GasModel { Conventional, General };
enum class Evaluation { ClosedForm, Quadrature };

struct StefanBoltzmann {
  double sigma = 0.0;          // W m^-2 K^-4
  double excess_factor = 0.0;  // zeta(3)
};

/// sigma_SB = 2 pi^5 k^4 / (15 c^2 h^3) and the General-model excess zeta(3).
StefanBoltzmann stefan_boltzmann(const PhysicalConstants& constants = {});

/// Integral over x = h nu / kT of x^2 times the per-mode ln Z:
/// 2 zeta(4) (Conventional) or 2 zeta(4) zeta(3) (General).
double log_partition_integral(GasModel model, Evaluation evaluation = Evaluation::ClosedForm);
/// Integral of x^2 N(x): 2 zeta(3) (Conventional) or 2 zeta(3)^2 (General).
double photon_count_integral(GasModel model, Evaluation evaluation = Evaluation::ClosedForm);

/// ln Z = 8 pi V (kT / c h)^3 * log_partition_integral.
double log_partition(const CavitySpec& cavity, const PhysicalConstants& constants, GasModel model,
                     Evaluation evaluation = Evaluation::ClosedForm);
/// F = -kT ln Z (J).
double free_energy(const CavitySpec& cavity, const PhysicalConstants& constants, GasModel model,
                   Evaluation evaluation = Evaluation::ClosedForm);
/// N / V = 8 pi (kT / c h)^3 * photon_count_integral (m^-3).
double photon_density(const CavitySpec& cavity, const PhysicalConstants& constants, GasModel model,
                      Evaluation evaluation = Evaluation::ClosedForm);

/// x = h nu / kT
double mode_variable(double nu, double temperature, const PhysicalConstants& constants);

/// Spectral energy u(nu) = D(nu) E(nu) in J/Hz with D = 8 pi V nu^2 / c^3.
double spectral_energy(double nu, const CavitySpec& cavity, const PhysicalConstants& constants,
                       GasModel model, const PrecisionPolicy& policy = {});

enum class EmissivityModel { Planck, RayleighJeans, General, GeneralLF };

/// Spectral emissivity e_b = (c / 4V) u in W m^-2 Hz^-1. General is summed
/// termwise and refuses x < 1e-6 (use GeneralLF there).
double emissivity(double nu, const CavitySpec& cavity, const PhysicalConstants& constants,
                  EmissivityModel model, const PrecisionPolicy& policy = {});

enum class TransitionModel { Conventional, General, GeneralLF };

/// A/B from detailed balance: 8 pi h / lambda^3 (Conventional),
/// (8 pi nu^2 / c^3) E (e^x - 1) with the divisor-series E (General),
/// 4 pi^3 kT / (3 c lambda^2) (GeneralLF). Units J s m^-3.
double einstein_AB(double nu, const PhysicalConstants& constants, double temperature,
                   TransitionModel model, const PrecisionPolicy& policy = {});

enum class FluctuationModel { EinsteinFull, RJ, GeneralLF };

/// Fractional spectral density S_u / u^2 (s^-1):
/// EinsteinFull (h nu u + c^3 u^2 / (8 pi nu^2 V)) / u^2 with the Planck u,
/// RJ c^3 / (8 pi V nu^2), GeneralLF (3/2) h c^3 / (pi^3 V kT nu).
double fluctuation_spectrum(double nu, const CavitySpec& cavity, const PhysicalConstants& constants,
                            FluctuationModel model);

/// Every spectral quantity at one frequency.
struct SpectralPoint {
  double nu = 0.0;
  double x = 0.0;
  double u_conventional = 0.0;
  double u_general = 0.0;
  double e_b_planck = 0.0;
  double e_b_rayleigh_jeans = 0.0;
  double e_b_general = 0.0;
  double e_b_general_lf = 0.0;
  double frac_noise_einstein = 0.0;
  double frac_noise_rj = 0.0;
  double frac_noise_general_lf = 0.0;
};

SpectralPoint spectral_point(double nu, const CavitySpec& cavity, const PhysicalConstants& constants,
                             const PrecisionPolicy& policy = {});

/// Dimensions of the values returned above.
namespace dims {
inline constexpr Dimension stefan_boltzmann{1, 0, -3, -4};
inline constexpr Dimension photon_density{0, -3, 0, 0};
inline constexpr Dimension log_partition{0, 0, 0, 0};
inline constexpr Dimension energy{1, 2, -2, 0};
inline constexpr Dimension spectral_energy{1, 2, -1, 0};
inline constexpr Dimension emissivity{1, 0, -2, 0};
inline constexpr Dimension einstein_ratio{1, -1, -1, 0};
inline constexpr Dimension fractional_noise{0, 0, -1, 0};
inline constexpr Dimension frequency{0, 0, -1, 0};
}  // namespace dims

}  // namespace eulergas::radiation
