#include "eulergas/radiation/radiation.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "eulergas/arith/special.hpp"
#include "eulergas/config.hpp"
#include "eulergas/errors.hpp"
#include "eulergas/numeric/quadrature.hpp"
#include "eulergas/thermo/thermo.hpp"

namespace eulergas::radiation {

namespace {

constexpr double pi = std::numbers::pi;

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw DomainError(std::string(what) + " must be positive and finite");
}

PhysicalConstants from_entries(const KeyValueFile& file) {
  for (const auto& [key, value] : file.entries())
    if (key != "h" && key != "k" && key != "c")
      throw DomainError(file.origin() + ": unknown constant '" + key + "' (expected h, k, c)");
  const PhysicalConstants codata;
  return PhysicalConstants(file.contains("h") ? file.number("h") : codata.h(),
                           file.contains("k") ? file.number("k") : codata.k(),
                           file.contains("c") ? file.number("c") : codata.c());
}

double zeta3() { return arith::riemann_zeta(3.0); }

double integrate_moment(double (*g)(double)) {
  numeric::QuadratureOptions options;
  options.rel_tol = 1e-13;
  const auto r = numeric::integrate_half_line([g](double x) { return x * x * g(x); }, options);
  if (!r.converged) throw PrecisionError("radiation: quadrature did not reach tolerance", r.evaluations);
  return r.value;
}

double conventional_log_partition(double x) { return -std::log(-std::expm1(-x)); }
double conventional_occupation(double x) { return 1.0 / std::expm1(x); }

// (kT / c h)^3
double thermal_cube(const CavitySpec& cavity, const PhysicalConstants& k) {
  const double r = k.k() * cavity.temperature() / (k.c() * k.h());
  return r * r * r;
}

double general_energy(double x, const PrecisionPolicy& policy, const char* who) {
  try {
    return thermo::internal_energy(x, policy);
  } catch (const PrecisionError& e) {
    throw PrecisionError(std::string(who) + ": " + e.what() + " (GeneralLF is the low-frequency form)",
                         e.attempted_terms());
  }
}

}  // namespace

PhysicalConstants::PhysicalConstants(double h, double k, double c) : h_(h), k_(k), c_(c) {
  require_positive(h, "Planck constant h");
  require_positive(k, "Boltzmann constant k");
  require_positive(c, "speed of light c");
}

PhysicalConstants PhysicalConstants::from_text(const std::string& text, const std::string& origin) {
  return from_entries(KeyValueFile::parse(text, origin));
}

PhysicalConstants PhysicalConstants::from_file(const std::filesystem::path& path) {
  return from_entries(KeyValueFile::load(path));
}

CavitySpec::CavitySpec(double volume, double temperature)
    : volume_(volume), temperature_(temperature) {
  require_positive(volume, "cavity volume");
  require_positive(temperature, "cavity temperature");
}

StefanBoltzmann stefan_boltzmann(const PhysicalConstants& k) {
  const double k4 = std::pow(k.k(), 4);
  const double sigma = 2.0 * std::pow(pi, 5) * k4 / (15.0 * k.c() * k.c() * std::pow(k.h(), 3));
  return {sigma, zeta3()};
}

double log_partition_integral(GasModel model, Evaluation evaluation) {
  if (evaluation == Evaluation::ClosedForm) {
    const double base = 2.0 * std::pow(pi, 4) / 90.0;
    return model == GasModel::Conventional ? base : base * zeta3();
  }
  return integrate_moment(model == GasModel::Conventional ? conventional_log_partition
                                                          : thermo::log_partition_value);
}

double photon_count_integral(GasModel model, Evaluation evaluation) {
  if (evaluation == Evaluation::ClosedForm) {
    const double base = 2.0 * zeta3();
    return model == GasModel::Conventional ? base : base * zeta3();
  }
  return integrate_moment(model == GasModel::Conventional ? conventional_occupation
                                                          : thermo::occupation_value);
}

double log_partition(const CavitySpec& cavity, const PhysicalConstants& constants, GasModel model,
                     Evaluation evaluation) {
  return 8.0 * pi * cavity.volume() * thermal_cube(cavity, constants) *
         log_partition_integral(model, evaluation);
}

double free_energy(const CavitySpec& cavity, const PhysicalConstants& constants, GasModel model,
                   Evaluation evaluation) {
  return -constants.k() * cavity.temperature() * log_partition(cavity, constants, model, evaluation);
}

double photon_density(const CavitySpec& cavity, const PhysicalConstants& constants, GasModel model,
                      Evaluation evaluation) {
  return 8.0 * pi * thermal_cube(cavity, constants) * photon_count_integral(model, evaluation);
}

double mode_variable(double nu, double temperature, const PhysicalConstants& constants) {
  require_positive(nu, "frequency");
  require_positive(temperature, "temperature");
  return constants.h() * nu / (constants.k() * temperature);
}

double spectral_energy(double nu, const CavitySpec& cavity, const PhysicalConstants& k,
                       GasModel model, const PrecisionPolicy& policy) {
  const double x = mode_variable(nu, cavity.temperature(), k);
  const double modes = 8.0 * pi * cavity.volume() * nu * nu / (k.c() * k.c() * k.c());
  if (model == GasModel::Conventional) return modes * k.h() * nu / std::expm1(x);
  return modes * k.k() * cavity.temperature() * general_energy(x, policy, "spectral_energy");
}

double emissivity(double nu, const CavitySpec& cavity, const PhysicalConstants& k,
                  EmissivityModel model, const PrecisionPolicy& policy) {
  const double x = mode_variable(nu, cavity.temperature(), k);
  const double rj = 2.0 * pi * k.k() * nu * nu * cavity.temperature() / (k.c() * k.c());
  switch (model) {
    case EmissivityModel::Planck:
      return 2.0 * pi * k.h() * nu * nu * nu / (k.c() * k.c() * std::expm1(x));
    case EmissivityModel::RayleighJeans:
      return rj;
    case EmissivityModel::General:
      return rj * general_energy(x, policy, "emissivity");
    case EmissivityModel::GeneralLF: {
      const double T = cavity.temperature();
      return std::pow(pi, 3) / 3.0 * k.k() * k.k() / (k.c() * k.c() * k.h()) * nu * T * T;
    }
  }
  throw DomainError("emissivity: unknown model");
}

double einstein_AB(double nu, const PhysicalConstants& k, double temperature, TransitionModel model,
                   const PrecisionPolicy& policy) {
  const double x = mode_variable(nu, temperature, k);
  const double lambda = k.c() / nu;
  switch (model) {
    case TransitionModel::Conventional:
      return 8.0 * pi * k.h() / (lambda * lambda * lambda);
    case TransitionModel::General:
      return 8.0 * pi * nu * nu / (k.c() * k.c() * k.c()) * k.k() * temperature *
             general_energy(x, policy, "einstein_AB") * std::expm1(x);
    case TransitionModel::GeneralLF:
      return 4.0 * std::pow(pi, 3) * k.k() * temperature / (3.0 * k.c() * lambda * lambda);
  }
  throw DomainError("einstein_AB: unknown model");
}

double fluctuation_spectrum(double nu, const CavitySpec& cavity, const PhysicalConstants& k,
                            FluctuationModel model) {
  const double x = mode_variable(nu, cavity.temperature(), k);
  const double c3 = k.c() * k.c() * k.c();
  const double rj = c3 / (8.0 * pi * cavity.volume() * nu * nu);
  switch (model) {
    case FluctuationModel::EinsteinFull: {
      const double u = 8.0 * pi * cavity.volume() * k.h() * nu * nu * nu / (c3 * std::expm1(x));
      return k.h() * nu / u + rj;
    }
    case FluctuationModel::RJ:
      return rj;
    case FluctuationModel::GeneralLF:
      return 1.5 * k.h() * c3 /
             (std::pow(pi, 3) * cavity.volume() * k.k() * cavity.temperature() * nu);
  }
  throw DomainError("fluctuation_spectrum: unknown model");
}

SpectralPoint spectral_point(double nu, const CavitySpec& cavity, const PhysicalConstants& k,
                             const PrecisionPolicy& policy) {
  SpectralPoint p;
  p.nu = nu;
  p.x = mode_variable(nu, cavity.temperature(), k);
  p.u_conventional = spectral_energy(nu, cavity, k, GasModel::Conventional, policy);
  p.u_general = spectral_energy(nu, cavity, k, GasModel::General, policy);
  p.e_b_planck = emissivity(nu, cavity, k, EmissivityModel::Planck, policy);
  p.e_b_rayleigh_jeans = emissivity(nu, cavity, k, EmissivityModel::RayleighJeans, policy);
  p.e_b_general = emissivity(nu, cavity, k, EmissivityModel::General, policy);
  p.e_b_general_lf = emissivity(nu, cavity, k, EmissivityModel::GeneralLF, policy);
  p.frac_noise_einstein = fluctuation_spectrum(nu, cavity, k, FluctuationModel::EinsteinFull);
  p.frac_noise_rj = fluctuation_spectrum(nu, cavity, k, FluctuationModel::RJ);
  p.frac_noise_general_lf = fluctuation_spectrum(nu, cavity, k, FluctuationModel::GeneralLF);
  return p;
}

}  // namespace eulergas::radiation
