#include "eulergas/phonon/phonon.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "eulergas/errors.hpp"
#include "eulergas/numeric/quadrature.hpp"

using namespace eulergas::phonon;
constexpr double pi = std::numbers::pi;
constexpr double zeta3 = 1.2020569031595942;

namespace {

const PhysicalConstants kSI;

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

// integral_0^{x} t^3/(e^t - 1) dt = sum_n [6/n^4 - e^{-n x}(x^3/n + 3x^2/n^2 + 6x/n^3 + 6/n^4)]
double debye_integral_series(double x) {
  long double acc = 0.0L;
  for (int n = 1; n < 200000; ++n) {
    const long double dn = n;
    const long double t = 6.0L / (dn * dn * dn * dn) -
                          std::exp(-dn * x) * (x * x * x / dn + 3.0L * x * x / (dn * dn) +
                                               6.0L * x / (dn * dn * dn) + 6.0L / (dn * dn * dn * dn));
    acc += t;
    if (n > 10 && std::fabs(t) < 1e-21L) break;
  }
  return static_cast<double>(acc);
}

SolidSpec solid_at_ratio(double t_over_theta) {
  const SolidSpec base(6.022e23, 1e-5, 3500.0, 300.0);
  return base.at_temperature(t_over_theta * debye_temperature(base, kSI));
}

}  // namespace

TEST(DebyeVelocity, MeanBounds) {
  EXPECT_NEAR(debye_velocity(4000.0, 4000.0), 4000.0, 1e-9);
  EXPECT_LT(rel(debye_velocity(3000.0, 6000.0), std::cbrt(3.0 / (2.0 / 27e9 + 1.0 / 216e9))), 1e-15);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> v(500.0, 9000.0);
  for (int i = 0; i < 50; ++i) {
    const double a = v(rng), b = v(rng);
    const double c = debye_velocity(a, b);
    EXPECT_GE(c, std::min(a, b) * (1 - 1e-15));
    EXPECT_LE(c, std::max(a, b) * (1 + 1e-15));
  }
  EXPECT_THROW(debye_velocity(0.0, 1.0), eulergas::DomainError);
}

TEST(DebyeFrequency, ScalingAndStateCount) {
  const SolidSpec s(6.022e23, 1e-5, 3500.0, 300.0);
  const double nu_m = debye_frequency(s);
  EXPECT_LT(rel(nu_m, std::cbrt(3 * 6.022e23 * std::pow(3500.0, 3) / (4 * pi * 1e-5))), 1e-15);
  EXPECT_LT(rel(debye_frequency(SolidSpec(2 * 6.022e23, 1e-5, 3500.0, 300.0)), nu_m * std::cbrt(2.0)), 1e-14);
  const auto states = eulergas::numeric::integrate(
      [&](double nu) { return 12 * pi * s.volume() / std::pow(s.c_ph(), 3) * nu * nu; }, 0.0, nu_m);
  EXPECT_LT(rel(states.value, 3 * s.n_atoms()), 1e-9);
  EXPECT_LT(rel(debye_temperature(s, kSI), kSI.h() * nu_m / kSI.k()), 1e-15);
  const SolidSpec v = SolidSpec::from_velocities(1e22, 1e-6, 3000.0, 6000.0, 77.0);
  EXPECT_EQ(v.c_ph(), debye_velocity(3000.0, 6000.0));
}

TEST(DebyeFunction, Limits) {
  for (double x : {1e-3, 1e-2, 0.1}) {
    const double series = 1 - 3 * x / 8 + x * x / 20 - std::pow(x, 4) / 1680;
    EXPECT_NEAR(debye_function(x), series, 1e-10) << x;
  }
  for (double x : {40.0, 80.0, 500.0})
    EXPECT_LT(rel(debye_function(x), std::pow(pi, 4) / (5 * x * x * x)), 1e-12) << x;
  for (double x : {0.5, 1.0, 3.0, 10.0})
    EXPECT_LT(rel(debye_function(x), 3 * debye_integral_series(x) / (x * x * x)), 1e-9) << x;
  EXPECT_THROW(debye_function(0.0), eulergas::DomainError);
}

TEST(DebyeFunction, DecreasingInUnitInterval) {
  double prev = 1.0 + 1e-15;
  for (double x = 1e-4; x < 300.0; x *= 1.3) {
    const double d = debye_function(x);
    EXPECT_GT(d, 0.0);
    EXPECT_LE(d, 1.0);
    EXPECT_LT(d, prev) << x;
    prev = d;
  }
}

TEST(SpecificHeat, ClassicalAndCubicLimits) {
  const auto hot = specific_heat(solid_at_ratio(20.0), kSI, HeatModel::Conventional);
  EXPECT_NEAR(hot.ratio_to_3Nk, 1.0, 5e-3);
  const auto cold = specific_heat(solid_at_ratio(0.01), kSI, HeatModel::Conventional);
  EXPECT_LT(rel(cold.ratio_to_3Nk / 1e-6, 4 * std::pow(pi, 4) / 5), 0.01);
  EXPECT_LT(rel(hot.joules_per_kelvin, 3 * 6.022e23 * kSI.k() * hot.ratio_to_3Nk), 1e-15);
}

TEST(SpecificHeat, GeneralRatioIsZeta3) {
  for (double r : {0.005, 0.1, 1.0, 7.0}) {
    const auto conv = specific_heat(solid_at_ratio(r), kSI, HeatModel::Conventional);
    const auto gen = specific_heat(solid_at_ratio(r), kSI, HeatModel::General);
    EXPECT_NEAR(gen.ratio_to_3Nk / conv.ratio_to_3Nk, zeta3, 1e-12);
  }
}

TEST(SpecificHeat, BoundedContinuousAndMatchesDerivatives) {
  double prev = 0.0;
  for (double r = 1e-3; r < 50.0; r *= 1.1) {
    const SolidSpec s = solid_at_ratio(r);
    const auto c = specific_heat(s, kSI, HeatModel::Conventional);
    EXPECT_GT(c.ratio_to_3Nk, 0.0);
    EXPECT_LE(c.ratio_to_3Nk, 1.0);
    EXPECT_GT(c.ratio_to_3Nk, prev);  // rises monotonically with T
    if (prev > 0.0) EXPECT_LT(c.ratio_to_3Nk / prev, 1.4);
    prev = c.ratio_to_3Nk;
  }
  for (double r : {0.05, 0.3, 2.0}) {
    const SolidSpec s = solid_at_ratio(r);
    const double T = s.temperature();
    const double h = 1e-4 * T;
    auto E = [&](double t) { return internal_energy(s.at_temperature(t), kSI); };
    const double fd = (-E(T + 2 * h) + 8 * E(T + h) - 8 * E(T - h) + E(T - 2 * h)) / (12 * h);
    const auto c = specific_heat(s, kSI, HeatModel::Conventional);
    EXPECT_LT(rel(c.joules_per_kelvin, fd), 1e-7) << r;
    // bracketed form D - x D'
    const double x = c.x_m, dx = 1e-4 * x;
    const double dprime = (debye_function(x + dx) - debye_function(x - dx)) / (2 * dx);
    EXPECT_LT(rel(c.ratio_to_3Nk, debye_function(x) - x * dprime), 1e-7) << r;
  }
}

TEST(EnergyFluctuation, Values) {
  const SolidSpec s(1e23, 1e-5, 3500.0, 300.0);
  const auto f = energy_fluctuation(s, kSI);
  EXPECT_NEAR(f.relative, std::sqrt(2.0 / 3e23), 1e-26);
  EXPECT_GT(f.relative, 1e-12);
  EXPECT_LT(f.relative, 1e-11);
  EXPECT_GT(f.epsilon_sq, 0.0);
  const SolidSpec s4(4e23, 1e-5, 3500.0, 300.0);
  EXPECT_NEAR(energy_fluctuation(s4, kSI).relative / f.relative, 0.5, 1e-15);
  const double cv = specific_heat(s, kSI, HeatModel::Conventional).joules_per_kelvin;
  EXPECT_LT(rel(f.epsilon_sq, kSI.k() * 300.0 * 300.0 * cv), 1e-15);
  // Dulong-Petit regime: model relative fluctuation ~ (3 N0)^{-1/2}, independent of T
  const auto hot1 = energy_fluctuation(solid_at_ratio(50.0), kSI);
  const auto hot2 = energy_fluctuation(solid_at_ratio(200.0), kSI);
  // leading correction: E falls below 3NkT by D(x) ~ 1 - 3x/8
  EXPECT_LT(rel(hot1.relative_model, (1 + 3.0 / (8 * 50.0)) / std::sqrt(3 * 6.022e23)), 1e-4);
  EXPECT_LT(rel(hot2.relative_model, (1 + 3.0 / (8 * 200.0)) / std::sqrt(3 * 6.022e23)), 1e-5);
  EXPECT_LT(rel(hot1.relative_model, hot2.relative_model), 1e-2);
  EXPECT_EQ(hot1.relative, hot2.relative);
}

TEST(Flicker, QuartzWorkedExample) {
  const ResonatorSpec q = resonator_preset("p5-5mhz");
  const FlickerFloor f = flicker_floor(q, kSI);
  EXPECT_LT(rel(f.a_ph, 5e-4), 0.2);
  EXPECT_LT(rel(f.a_ph, 9 * kSI.h() * std::pow(3.5e3, 3) / (4 * std::pow(pi, 3) * kSI.k() * 300.0)), 1e-15);
  EXPECT_GT(f.h_minus_1, 3e-24);
  EXPECT_LT(f.h_minus_1, 12e-24);
  EXPECT_NEAR(f.h_minus_1, 7.78e-24, 0.01e-24);
  EXPECT_LT(rel(frequency_noise(10.0, q, kSI), f.h_minus_1 / 10.0), 1e-15);
  EXPECT_LT(rel(phonon_fractional_noise(10.0, q, kSI), f.a_ph / (1e-6 * 10.0)), 1e-15);
}

TEST(Flicker, PowerLawScaling) {
  const ResonatorSpec q = resonator_preset("p5-5mhz");
  const double h0 = flicker_floor(q, kSI).h_minus_1;
  for (double a : {0.5, 2.0, 3.7}) {
    const ResonatorSpec qq(q.q_factor() * a, q.carrier(), q.active_volume(), q.temperature(), q.c_ph());
    EXPECT_LT(rel(flicker_floor(qq, kSI).h_minus_1, h0 / std::pow(a, 4)), 1e-14);
    const ResonatorSpec vv(q.q_factor(), q.carrier(), q.active_volume() * a, q.temperature(), q.c_ph());
    EXPECT_LT(rel(flicker_floor(vv, kSI).h_minus_1, h0 / a), 1e-14);
    const ResonatorSpec tt(q.q_factor(), q.carrier(), q.active_volume(), q.temperature() * a, q.c_ph());
    EXPECT_LT(rel(flicker_floor(tt, kSI).h_minus_1, h0 / a), 1e-14);
  }
  const ResonatorSpec q2(2 * q.q_factor(), q.carrier(), q.active_volume(), q.temperature(), q.c_ph());
  EXPECT_LT(rel(flicker_floor(q2, kSI).h_minus_1, h0 / 16), 1e-14);
}

TEST(Presets, FileMatchesBuiltin) {
  const auto presets = load_resonator_presets(EULERGAS_DATA_DIR "/quartz_presets.conf");
  ASSERT_EQ(presets.count("p5-5mhz"), 1u);
  const ResonatorSpec& f = presets.at("p5-5mhz");
  const ResonatorSpec b = resonator_preset("p5-5mhz");
  EXPECT_EQ(f.q_factor(), b.q_factor());
  EXPECT_EQ(f.carrier(), b.carrier());
  EXPECT_EQ(f.active_volume(), b.active_volume());
  EXPECT_EQ(f.temperature(), b.temperature());
  EXPECT_EQ(f.c_ph(), b.c_ph());
  EXPECT_THROW(resonator_preset("at-10mhz"), eulergas::DomainError);
  EXPECT_THROW(parse_resonator_presets("[x]\nq_factor = 1\nbogus = 2\n"), eulergas::DomainError);
  EXPECT_THROW(parse_resonator_presets("[x]\nq_factor = 1\n"), eulergas::DomainError);
  EXPECT_THROW(parse_resonator_presets("q_factor = 1\n"), eulergas::DomainError);
}

TEST(PhononUnits, ScaleWithDeclaredDimensions) {
  const double M = 2.5, L = 3.0, S = 0.4, Th = 1.7;
  const PhysicalConstants scaled(kSI.h() * M * L * L / S, kSI.k() * M * L * L / (S * S * Th), kSI.c() * L / S);
  const SolidSpec s(1e23, 2e-6, 3500.0, 120.0);
  const SolidSpec ss(1e23, 2e-6 * L * L * L, 3500.0 * L / S, 120.0 * Th);
  auto check = [&](double a, double b, const eulergas::Dimension& d) {
    EXPECT_LT(rel(b, a * eulergas::unit_scale(d, M, L, S, Th)), 1e-12) << eulergas::to_string(d);
  };
  check(debye_frequency(s), debye_frequency(ss), dims::frequency);
  check(debye_temperature(s, kSI), debye_temperature(ss, scaled), dims::temperature);
  check(specific_heat(s, kSI, HeatModel::General).joules_per_kelvin,
        specific_heat(ss, scaled, HeatModel::General).joules_per_kelvin, dims::heat_capacity);
  check(internal_energy(s, kSI), internal_energy(ss, scaled), dims::energy);
  check(energy_fluctuation(s, kSI).epsilon_sq, energy_fluctuation(ss, scaled).epsilon_sq, dims::energy_sq);
  check(energy_fluctuation(s, kSI).relative_model, energy_fluctuation(ss, scaled).relative_model,
        dims::dimensionless);
  const ResonatorSpec r(2e6, 5e6, 1e-6, 300.0, 3500.0);
  const ResonatorSpec rs(2e6, 5e6 / S, 1e-6 * L * L * L, 300.0 * Th, 3500.0 * L / S);
  check(flicker_floor(r, kSI).a_ph, flicker_floor(rs, scaled).a_ph, dims::a_ph);
  check(flicker_floor(r, kSI).h_minus_1, flicker_floor(rs, scaled).h_minus_1, dims::h_minus_1);
  check(phonon_fractional_noise(10.0, r, kSI), phonon_fractional_noise(10.0 / S, rs, scaled), dims::fractional_noise);
}
