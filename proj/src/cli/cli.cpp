#include "eulergas/cli/cli.hpp"

#include <cmath>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "eulergas/arith/dedekind.hpp"
#include "eulergas/arith/farey.hpp"
#include "eulergas/arith/partition.hpp"
#include "eulergas/cli/output.hpp"
#include "eulergas/errors.hpp"
#include "eulergas/modular/modular.hpp"
#include "eulergas/modular/rademacher.hpp"
#include "eulergas/phonon/phonon.hpp"
#include "eulergas/radiation/radiation.hpp"
#include "eulergas/thermo/thermo.hpp"

namespace eulergas::cli {

namespace {

using radiation::PhysicalConstants;

struct Globals {
  std::string format = "table";
  std::string constants_file;
  double rel_tol = 1e-12;
  unsigned work_bits = 53;
  std::size_t max_terms = 10'000'000;

  PrecisionPolicy policy() const { return PrecisionPolicy(rel_tol, work_bits, max_terms); }
  PhysicalConstants constants() const {
    return constants_file.empty() ? PhysicalConstants{} : PhysicalConstants::from_file(constants_file);
  }
};

Cell exact(const std::string& s) { return Exact{s}; }
Cell integer(std::uint64_t v) { return static_cast<std::int64_t>(v); }
Cell rational(const arith::Rational& r) { return Exact{r.get_str()}; }

arith::Fraction parse_fraction(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return arith::Fraction(std::stoll(text), 1);
    std::size_t used_num = 0, used_den = 0;
    const std::string num = text.substr(0, slash), den = text.substr(slash + 1);
    const long long p = std::stoll(num, &used_num), q = std::stoll(den, &used_den);
    if (used_num != num.size() || used_den != den.size()) throw std::invalid_argument(text);
    return arith::Fraction(p, q);
  } catch (const std::logic_error&) {
    throw DomainError("malformed fraction '" + text + "' (expected p/q)");
  }
}

// Evaluates f, turning module failures into an annotated null cell.
Cell guarded(const std::function<Cell()>& f) {
  try {
    return f();
  } catch (const Error& e) {
    return Null{std::string(e.kind()) + ": " + e.what()};
  }
}

// ---------------------------------------------------------------- partition

struct PartitionArgs {
  std::uint64_t n = 0;
  std::string method = "dp";
  std::string convention = "classical";
  bool oracle_check = false;
};

Table partition_command(const PartitionArgs& a, const Globals& g) {
  Table t;
  t.command = "partition";
  t.meta.emplace_back("method", a.method);
  std::vector<Cell> row{integer(a.n)};
  std::optional<arith::BigCount> value;
  if (a.method == "dp") {
    t.columns = {"n", "value"};
    value = arith::partition_counts(a.n)[a.n];
    row.push_back(exact(value->to_string()));
  } else if (a.method == "rademacher") {
    const auto conv = arith::parse_dedekind_convention(a.convention);
    const auto r = modular::rademacher_p(a.n, conv, g.policy());
    value = r.value;
    t.columns = {"n", "value", "residual", "terms_used", "work_bits", "convention"};
    row.insert(row.end(), {exact(r.value.to_string()), r.residual, integer(r.terms_used),
                           integer(r.work_bits), std::string(arith::to_string(r.convention))});
  } else {
    const double v = a.method == "leading" ? modular::leading_term_p(a.n) : modular::asymptotic_p(a.n);
    t.columns = {"n", "value"};
    row.push_back(v);
  }
  if (a.oracle_check) {
    const arith::BigCount oracle = arith::partition_count_oracle(a.n);
    t.columns.insert(t.columns.end(), {"oracle", "match", "ratio_to_oracle"});
    row.push_back(exact(oracle.to_string()));
    const double approx = value ? value->to_double() : std::get<double>(row[1]);
    row.push_back(value ? Cell(*value == oracle) : Cell(std::lround(approx) == oracle.to_double()));
    row.push_back(approx / oracle.to_double());
  }
  t.rows.push_back(std::move(row));
  return t;
}

// ------------------------------------------------------------ number theory

Table farey_command(std::int64_t order) {
  Table t;
  t.command = "farey";
  t.meta.emplace_back("order", order);
  t.columns = {"index", "fraction", "value"};
  const auto seq = arith::farey_sequence(order);
  t.meta.emplace_back("length", static_cast<std::int64_t>(seq.size()));
  for (std::size_t i = 0; i < seq.size(); ++i)
    t.rows.push_back({integer(i), exact(seq[i].to_string()), seq[i].to_double()});
  return t;
}

struct FordArgs {
  std::string fraction;
  std::string left;
  std::string right;
};

Table ford_command(const FordArgs& a) {
  const arith::Fraction mid = parse_fraction(a.fraction);
  const arith::FordCircle c = arith::ford_circle(mid);
  Table t;
  t.command = "ford";
  t.meta.emplace_back("fraction", exact(mid.to_string()));
  t.meta.emplace_back("radius", rational(c.radius));
  t.columns = {"point", "x", "y", "x_value", "y_value"};
  auto add = [&t](const char* name, const arith::Rational& x, const arith::Rational& y) {
    t.rows.push_back({std::string(name), rational(x), rational(y), x.get_d(), y.get_d()});
  };
  add("center", c.center_x, c.center_y);
  add("real_axis_tangency", c.center_x, arith::Rational(0));
  if (a.left.empty() != a.right.empty()) throw DomainError("ford: --left and --right go together");
  if (!a.left.empty()) {
    const auto tp = arith::ford_tangency(parse_fraction(a.left), mid, parse_fraction(a.right));
    add("left_tangency", tp.left.re, tp.left.im);
    add("right_tangency", tp.right.re, tp.right.im);
  }
  return t;
}

struct DedekindArgs {
  std::int64_t p = 0;
  std::int64_t q = 1;
  std::string convention = "classical";
  std::optional<std::uint64_t> n;
};

Table dedekind_command(const DedekindArgs& a) {
  const auto conv = arith::parse_dedekind_convention(a.convention);
  const auto s = arith::dedekind_sum(a.p, a.q, conv);
  Table t;
  t.command = "dedekind";
  t.columns = {"p", "q", "convention", "s", "s_value"};
  std::vector<Cell> row{a.p, a.q, std::string(arith::to_string(conv)), rational(s.value), s.value.get_d()};
  if (a.n) {
    const auto A = arith::kloosterman_A(a.q, *a.n, conv);
    t.columns.insert(t.columns.end(), {"n", "A_re", "A_im"});
    row.insert(row.end(), {integer(*a.n), A.real(), A.imag()});
  }
  t.rows.push_back(std::move(row));
  return t;
}

Table eta_command(double re, double im, const Globals& g) {
  const modular::HalfPlanePoint tau(re, im);
  const auto policy = g.policy();
  const auto e = modular::eta(tau, policy);
  const auto z = modular::partition_generating(modular::Nome::from_tau(tau), policy);
  const auto g2 = modular::eisenstein_g2(tau, policy);
  Table t;
  t.command = "eta";
  t.columns = {"tau_re", "tau_im", "eta_re", "eta_im", "z_re", "z_im", "g2_re", "g2_im"};
  t.rows.push_back({re, im, e.real(), e.imag(), z.real(), z.imag(), g2.real(), g2.imag()});
  return t;
}

// ------------------------------------------------------------------- thermo

struct ThermoArgs {
  double x = 1.0;
  std::string route = "divisor";
  bool lowfreq = false;
};

Table thermo_command(const ThermoArgs& a, const Globals& g) {
  using namespace thermo;
  const auto policy = g.policy();
  const SeriesRoute route = a.route == "bose" ? SeriesRoute::Bose : SeriesRoute::Divisor;
  const SeriesValue f = free_energy_series(a.x, route, policy);
  const SeriesValue n = occupation_series(a.x, route, policy);
  const SeriesValue e = internal_energy_series(a.x, route, policy);
  Table t;
  t.command = "thermo";
  t.meta.emplace_back("route", a.route);
  t.columns = {"x", "f_over_kT", "n_occ", "e_over_kT", "s_over_k", "terms_used", "tail_bound"};
  std::vector<Cell> row{a.x, f.value, n.value, e.value, e.value - f.value,
                        integer(std::max({f.terms, n.terms, e.terms})),
                        std::max({f.tail_bound, n.tail_bound, e.tail_bound})};
  if (a.lowfreq) {
    t.columns.insert(t.columns.end(), {"f_lowfreq", "n_lowfreq", "e_lowfreq", "s_lowfreq", "planck",
                                       "zeropoint", "fluctuation"});
    row.insert(row.end(), {free_energy_lowfreq(a.x), occupation_lowfreq(a.x), internal_energy_lowfreq(a.x),
                           entropy_lowfreq(a.x), planck_factor(a.x, PlanckVariant::Planck),
                           planck_factor(a.x, PlanckVariant::ZeroPoint),
                           per_mode_energy_fluctuation(a.x, policy)});
  }
  t.rows.push_back(std::move(row));
  return t;
}

thermo::MellinKind parse_mellin_kind(const std::string& s) {
  if (s == "free-energy") return thermo::MellinKind::FreeEnergy;
  if (s == "occupation") return thermo::MellinKind::Occupation;
  if (s == "energy") return thermo::MellinKind::Energy;
  throw DomainError("unknown Mellin kind '" + s + "'");
}

Table mellin_command(double s, const std::string& kind, const Globals& g) {
  const auto m = thermo::mellin_check(s, parse_mellin_kind(kind), g.policy());
  Table t;
  t.command = "mellin-check";
  t.columns = {"s", "kind", "integral", "closed_form", "rel_diff", "error_estimate", "evaluations"};
  t.rows.push_back({s, kind, m.integral, m.closed_form, std::fabs(m.integral - m.closed_form) / std::fabs(m.closed_form),
                    m.quadrature_error, integer(m.evaluations)});
  return t;
}

// ---------------------------------------------------------------- radiation

struct BlackbodyArgs {
  double temperature = 300.0;
  double volume = 1.0;
  std::optional<double> nu;
  std::string evaluation = "closed";
};

Table blackbody_command(const BlackbodyArgs& a, const Globals& g) {
  using namespace radiation;
  const PhysicalConstants k = g.constants();
  const CavitySpec cavity(a.volume, a.temperature);
  Table t;
  t.command = "blackbody";
  t.meta.emplace_back("T", a.temperature);
  t.meta.emplace_back("V", a.volume);
  if (a.nu) {
    const SpectralPoint p = spectral_point(*a.nu, cavity, k, g.policy());
    t.columns = {"nu", "x", "u_conventional", "u_general", "e_b_planck", "e_b_rj", "e_b_general",
                 "e_b_general_lf", "frac_noise_einstein", "frac_noise_rj", "frac_noise_general_lf"};
    t.rows.push_back({p.nu, p.x, p.u_conventional, p.u_general, p.e_b_planck, p.e_b_rayleigh_jeans,
                      p.e_b_general, p.e_b_general_lf, p.frac_noise_einstein, p.frac_noise_rj,
                      p.frac_noise_general_lf});
    return t;
  }
  if (a.evaluation != "closed" && a.evaluation != "quadrature")
    throw DomainError("unknown evaluation '" + a.evaluation + "' (expected closed|quadrature)");
  const Evaluation ev = a.evaluation == "closed" ? Evaluation::ClosedForm : Evaluation::Quadrature;
  const StefanBoltzmann sb = stefan_boltzmann(k);
  t.meta.emplace_back("sigma_sb", sb.sigma);
  t.meta.emplace_back("excess_factor", sb.excess_factor);
  t.meta.emplace_back("evaluation", a.evaluation);
  t.columns = {"model", "log_partition", "free_energy", "photon_density"};
  for (auto [name, model] : {std::pair{"conventional", GasModel::Conventional}, std::pair{"general", GasModel::General}})
    t.rows.push_back({std::string(name), log_partition(cavity, k, model, ev), free_energy(cavity, k, model, ev),
                      photon_density(cavity, k, model, ev)});
  return t;
}

// ------------------------------------------------------------------- phonon

struct PhononArgs {
  double temperature = 300.0;
  double n_atoms = 6.02214076e23;
  double volume = 2.27e-5;
  std::optional<double> c_ph;
  std::optional<double> c_t;
  std::optional<double> c_l;
};

Table phonon_command(const PhononArgs& a, const Globals& g, std::ostream& err) {
  using namespace phonon;
  const PhysicalConstants k = g.constants();
  double c = 3.5e3;
  if (a.c_ph) {
    if (a.c_t || a.c_l) throw DomainError("phonon: give --c-ph or --c-t/--c-l, not both");
    c = *a.c_ph;
  } else if (a.c_t || a.c_l) {
    if (!(a.c_t && a.c_l)) throw DomainError("phonon: --c-t and --c-l go together");
    c = debye_velocity(*a.c_t, *a.c_l);
  }
  const SolidSpec solid(a.n_atoms, a.volume, c, a.temperature);
  const auto policy = g.policy();
  const double theta = debye_temperature(solid, k);
  if (a.temperature < theta / 50.0)
    err << "note: T < theta_D/50; the electronic specific heat (not modeled) dominates the lattice term here\n";
  const EnergyFluctuation fl = energy_fluctuation(solid, k, policy);
  Table t;
  t.command = "phonon";
  t.meta.emplace_back("c_ph", c);
  t.meta.emplace_back("nu_m", debye_frequency(solid));
  t.meta.emplace_back("theta_D", theta);
  t.meta.emplace_back("epsilon_sq", fl.epsilon_sq);
  t.meta.emplace_back("relative_fluctuation", fl.relative);
  t.meta.emplace_back("relative_fluctuation_model", fl.relative_model);
  t.columns = {"model", "x_m", "debye_D", "cv_over_3Nk", "cv"};
  for (auto [name, model] : {std::pair{"conventional", HeatModel::Conventional}, std::pair{"general", HeatModel::General}}) {
    const SpecificHeat c_v = specific_heat(solid, k, model, policy);
    t.rows.push_back({std::string(name), c_v.x_m, debye_function(c_v.x_m, policy), c_v.ratio_to_3Nk,
                      c_v.joules_per_kelvin});
  }
  return t;
}

struct QuartzArgs {
  std::string preset = "p5-5mhz";
  std::string presets_file;
  std::optional<double> q, carrier, volume, temperature, c_ph;
};

Table quartz_command(const QuartzArgs& a, const Globals& g) {
  using namespace phonon;
  ResonatorSpec base = resonator_preset("p5-5mhz");
  if (!a.presets_file.empty()) {
    const auto presets = load_resonator_presets(a.presets_file);
    const auto it = presets.find(a.preset);
    if (it == presets.end()) throw DomainError("preset '" + a.preset + "' not in " + a.presets_file);
    base = it->second;
  } else {
    base = resonator_preset(a.preset);
  }
  const ResonatorSpec r(a.q.value_or(base.q_factor()), a.carrier.value_or(base.carrier()),
                        a.volume.value_or(base.active_volume()), a.temperature.value_or(base.temperature()),
                        a.c_ph.value_or(base.c_ph()));
  const FlickerFloor f = flicker_floor(r, g.constants());
  Table t;
  t.command = "quartz";
  t.meta.emplace_back("preset", a.preset);
  t.meta.emplace_back("q_factor", r.q_factor());
  t.meta.emplace_back("carrier", r.carrier());
  t.meta.emplace_back("active_volume", r.active_volume());
  t.meta.emplace_back("temperature", r.temperature());
  t.meta.emplace_back("c_ph", r.c_ph());
  t.columns = {"quantity", "value", "published", "ratio"};
  t.rows.push_back({std::string("A_ph"), f.a_ph, 5e-4, f.a_ph / 5e-4});
  t.rows.push_back({std::string("h_minus_1"), f.h_minus_1, 6e-24, f.h_minus_1 / 6e-24});
  return t;
}

// -------------------------------------------------------------------- sweep

struct SweepArgs {
  std::string quantity = "energy";
  double from = 1e-3;
  double to = 20.0;
  std::size_t points = 50;
  std::string scale = "log";
  double temperature = 300.0;
  double volume = 1.0;
  std::string convention = "classical";
  unsigned threads = 1;
};

std::vector<double> sweep_grid(const SweepArgs& a) {
  if (!(a.from < a.to)) throw DomainError("sweep: --from must be below --to");
  if (a.points < 2) throw DomainError("sweep: --points must be at least 2");
  if (a.scale != "log" && a.scale != "linear") throw DomainError("sweep: --scale must be linear or log");
  if (a.scale == "log" && !(a.from > 0.0)) throw DomainError("sweep: log scale needs --from > 0");
  std::vector<double> grid(a.points);
  for (std::size_t i = 0; i < a.points; ++i) {
    const double f = static_cast<double>(i) / static_cast<double>(a.points - 1);
    grid[i] = a.scale == "log" ? a.from * std::pow(a.to / a.from, f) : a.from + (a.to - a.from) * f;
  }
  grid.back() = a.to;
  return grid;
}

Table sweep_command(const SweepArgs& a, const Globals& g) {
  const auto grid = sweep_grid(a);
  const auto policy = g.policy();
  const PhysicalConstants k = g.constants();
  Table t;
  t.command = "sweep";
  t.meta.emplace_back("quantity", a.quantity);
  t.meta.emplace_back("scale", a.scale);
  t.meta.emplace_back("points", integer(a.points));

  std::function<std::vector<Cell>(double)> row;
  if (a.quantity == "energy") {
    t.columns = {"x", "exact", "lowfreq", "planck", "zeropoint"};
    row = [&](double x) -> std::vector<Cell> {
      return {x, guarded([&] { return Cell(thermo::internal_energy(x, policy)); }),
              guarded([&] { return Cell(thermo::internal_energy_lowfreq(x)); }),
              guarded([&] { return Cell(thermo::planck_factor(x, thermo::PlanckVariant::Planck)); }),
              guarded([&] { return Cell(thermo::planck_factor(x, thermo::PlanckVariant::ZeroPoint)); })};
    };
  } else if (a.quantity == "free-energy") {
    t.columns = {"x", "exact", "lowfreq", "remainder"};
    row = [&](double x) -> std::vector<Cell> {
      return {x, guarded([&] { return Cell(thermo::free_energy(x, policy)); }),
              guarded([&] { return Cell(thermo::free_energy_lowfreq(x)); }),
              guarded([&] { return Cell(thermo::free_energy_lowfreq_error(x)); })};
    };
  } else if (a.quantity == "occupation") {
    t.columns = {"x", "exact", "lowfreq", "planck"};
    row = [&](double x) -> std::vector<Cell> {
      return {x, guarded([&] { return Cell(thermo::occupation(x, policy)); }),
              guarded([&] { return Cell(thermo::occupation_lowfreq(x)); }),
              guarded([&] { return Cell(1.0 / std::expm1(x)); })};
    };
  } else if (a.quantity == "entropy") {
    t.columns = {"x", "series", "identity", "lowfreq"};
    row = [&](double x) -> std::vector<Cell> {
      std::optional<thermo::EntropyValue> s;
      const Cell series = guarded([&] {
        s = thermo::entropy(x, policy);
        return Cell(s->series);
      });
      return {x, series, s ? Cell(s->identity) : series, guarded([&] { return Cell(thermo::entropy_lowfreq(x)); })};
    };
  } else if (a.quantity == "emissivity") {
    t.columns = {"nu", "planck", "rj", "general", "general_lf"};
    const radiation::CavitySpec cavity(a.volume, a.temperature);
    row = [&, cavity](double nu) -> std::vector<Cell> {
      std::vector<Cell> r{nu};
      for (auto m : {radiation::EmissivityModel::Planck, radiation::EmissivityModel::RayleighJeans,
                     radiation::EmissivityModel::General, radiation::EmissivityModel::GeneralLF})
        r.push_back(guarded([&] { return Cell(radiation::emissivity(nu, cavity, k, m, policy)); }));
      return r;
    };
  } else if (a.quantity == "frac-noise") {
    t.columns = {"nu", "rj", "general_lf", "einstein_full"};
    const radiation::CavitySpec cavity(a.volume, a.temperature);
    row = [&, cavity](double nu) -> std::vector<Cell> {
      std::vector<Cell> r{nu};
      for (auto m : {radiation::FluctuationModel::RJ, radiation::FluctuationModel::GeneralLF,
                     radiation::FluctuationModel::EinsteinFull})
        r.push_back(guarded([&] { return Cell(radiation::fluctuation_spectrum(nu, cavity, k, m)); }));
      return r;
    };
  } else if (a.quantity == "rademacher") {
    const auto conv = arith::parse_dedekind_convention(a.convention);
    t.columns = {"n", "rademacher", "oracle", "mismatch", "residual"};
    const std::uint64_t n_max = static_cast<std::uint64_t>(std::llround(a.to));
    if (a.from < 0 || n_max > 100000) throw DomainError("sweep: rademacher needs 0 <= n <= 100000");
    auto oracle = std::make_shared<std::vector<arith::BigCount>>(arith::partition_counts(n_max));
    row = [&, conv, oracle](double v) -> std::vector<Cell> {
      const auto n = static_cast<std::uint64_t>(std::llround(v));
      const arith::BigCount& o = (*oracle)[n];
      std::vector<Cell> r{integer(n)};
      try {
        const auto res = modular::rademacher_p(n, conv, policy);
        r.insert(r.end(), {exact(res.value.to_string()), exact(o.to_string()),
                           static_cast<std::int64_t>(res.value == o ? 0 : 1), res.residual});
      } catch (const Error& e) {
        const Null null{std::string(e.kind()) + ": " + e.what()};
        r.insert(r.end(), {null, exact(o.to_string()), std::int64_t{1}, null});
      }
      return r;
    };
  } else {
    throw DomainError("sweep: unknown quantity '" + a.quantity + "'");
  }

  t.rows.resize(grid.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(a.threads, static_cast<unsigned>(grid.size())));
  auto work = [&](unsigned id) {
    for (std::size_t i = id; i < grid.size(); i += workers) t.rows[i] = row(grid[i]);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
    for (auto& th : pool) th.join();
  }
  return t;
}

// ------------------------------------------------------------------ errors

void report(std::ostream& err, const Error& e) {
  nlohmann::ordered_json j;
  j["kind"] = e.kind();
  j["message"] = e.what();
  if (const auto* p = dynamic_cast<const PrecisionError*>(&e)) j["attempted_terms"] = p->attempted_terms();
  if (const auto* c = dynamic_cast<const ConvergenceError*>(&e)) {
    j["terms"] = c->terms();
    j["residual"] = c->residual();
    j["convention"] = c->convention();
  }
  err << "error: " << j.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Euler-gas partition, modular and black-body calculator", "eulergas"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json", "table"}));
  app.add_option("--constants", g.constants_file, "key = value file overriding h, k, c");
  app.add_option("--rel-tol", g.rel_tol, "Relative tolerance of series and quadrature");
  app.add_option("--work-bits", g.work_bits, "Minimum working precision in bits");
  app.add_option("--max-terms", g.max_terms, "Term cap for series and products");

  PartitionArgs pa;
  auto* partition = app.add_subcommand("partition", "Partition numbers p(n)");
  partition->add_option("--n", pa.n, "Argument n")->required();
  partition->add_option("--method", pa.method)->check(CLI::IsMember({"dp", "rademacher", "leading", "asymptotic"}));
  partition->add_option("--convention", pa.convention, "Dedekind sum convention")->check(CLI::IsMember({"classical", "uncentered"}));
  partition->add_flag("--oracle-check", pa.oracle_check, "Compare with the exact recurrence");

  std::int64_t order = 1;
  auto* farey = app.add_subcommand("farey", "Farey sequence");
  farey->add_option("--order", order)->required();

  FordArgs fa;
  auto* ford = app.add_subcommand("ford", "Ford circle and tangency points");
  ford->add_option("--fraction", fa.fraction, "p/q")->required();
  ford->add_option("--left", fa.left, "Left Farey neighbour");
  ford->add_option("--right", fa.right, "Right Farey neighbour");

  DedekindArgs da;
  std::uint64_t kl_n = 0;
  auto* dedekind = app.add_subcommand("dedekind", "Dedekind sum s(p, q)");
  dedekind->add_option("--p", da.p)->required();
  dedekind->add_option("--q", da.q)->required();
  dedekind->add_option("--convention", da.convention)->check(CLI::IsMember({"classical", "uncentered"}));
  auto* kl_opt = dedekind->add_option("--n", kl_n, "Also evaluate A_q(n)");

  double tau_re = 0.0, tau_im = 1.0;
  auto* eta = app.add_subcommand("eta", "Dedekind eta, Z(y) and G2 at tau");
  eta->add_option("--re", tau_re);
  eta->add_option("--im", tau_im)->required();

  ThermoArgs ta;
  auto* thermo_cmd = app.add_subcommand("thermo", "Per-mode thermodynamics at x = h nu / kT");
  thermo_cmd->add_option("--x", ta.x)->required();
  thermo_cmd->add_option("--route", ta.route)->check(CLI::IsMember({"divisor", "bose"}));
  thermo_cmd->add_flag("--lowfreq", ta.lowfreq, "Add low-frequency and Planck columns");

  BlackbodyArgs ba;
  auto* blackbody = app.add_subcommand("blackbody", "Cavity radiation in both models");
  blackbody->add_option("--T", ba.temperature)->required();
  blackbody->add_option("--V", ba.volume);
  auto* nu_opt = blackbody->add_option("--nu", "Spectral point at this frequency");
  blackbody->add_option("--evaluation", ba.evaluation)->check(CLI::IsMember({"closed", "quadrature"}));

  PhononArgs pha;
  auto* phonon_cmd = app.add_subcommand("phonon", "Debye solid in both models");
  phonon_cmd->add_option("--T", pha.temperature)->required();
  phonon_cmd->add_option("--n-atoms", pha.n_atoms);
  phonon_cmd->add_option("--volume", pha.volume);
  auto* cph_opt = phonon_cmd->add_option("--c-ph", "Mean sound velocity");
  auto* ct_opt = phonon_cmd->add_option("--c-t", "Transverse velocity");
  auto* cl_opt = phonon_cmd->add_option("--c-l", "Longitudinal velocity");

  QuartzArgs qa;
  auto* quartz = app.add_subcommand("quartz", "Quartz resonator flicker floor");
  quartz->add_option("--preset", qa.preset);
  quartz->add_option("--presets", qa.presets_file, "Preset file");
  auto* q_opt = quartz->add_option("--q", "Quality factor");
  auto* carrier_opt = quartz->add_option("--carrier", "Carrier frequency");
  auto* qv_opt = quartz->add_option("--volume", "Active volume");
  auto* qt_opt = quartz->add_option("--T", "Temperature");
  auto* qc_opt = quartz->add_option("--c-ph", "Sound velocity");

  double mellin_s = 2.0;
  std::string mellin_kind = "free-energy";
  auto* mellin = app.add_subcommand("mellin-check", "Mellin transform vs Gamma-zeta closed form");
  mellin->add_option("--s", mellin_s)->required();
  mellin->add_option("--kind", mellin_kind)->check(CLI::IsMember({"free-energy", "occupation", "energy"}));

  SweepArgs sa;
  auto* sweep = app.add_subcommand("sweep", "Tabulate a quantity over a grid");
  sweep->add_option("--quantity", sa.quantity)
      ->check(CLI::IsMember({"energy", "free-energy", "occupation", "entropy", "emissivity", "frac-noise", "rademacher"}));
  sweep->add_option("--from", sa.from);
  sweep->add_option("--to", sa.to);
  sweep->add_option("--points", sa.points);
  sweep->add_option("--scale", sa.scale)->check(CLI::IsMember({"linear", "log"}));
  sweep->add_option("--T", sa.temperature);
  sweep->add_option("--V", sa.volume);
  sweep->add_option("--convention", sa.convention)->check(CLI::IsMember({"classical", "uncentered"}));
  sweep->add_option("--threads", sa.threads, "Worker threads; output order is fixed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    const Format format = parse_format(g.format);
    Table table;
    if (partition->parsed()) {
      table = partition_command(pa, g);
    } else if (farey->parsed()) {
      table = farey_command(order);
    } else if (ford->parsed()) {
      table = ford_command(fa);
    } else if (dedekind->parsed()) {
      if (kl_opt->count()) da.n = kl_n;
      table = dedekind_command(da);
    } else if (eta->parsed()) {
      table = eta_command(tau_re, tau_im, g);
    } else if (thermo_cmd->parsed()) {
      table = thermo_command(ta, g);
    } else if (blackbody->parsed()) {
      if (nu_opt->count()) ba.nu = nu_opt->as<double>();
      table = blackbody_command(ba, g);
    } else if (phonon_cmd->parsed()) {
      if (cph_opt->count()) pha.c_ph = cph_opt->as<double>();
      if (ct_opt->count()) pha.c_t = ct_opt->as<double>();
      if (cl_opt->count()) pha.c_l = cl_opt->as<double>();
      table = phonon_command(pha, g, err);
    } else if (quartz->parsed()) {
      if (q_opt->count()) qa.q = q_opt->as<double>();
      if (carrier_opt->count()) qa.carrier = carrier_opt->as<double>();
      if (qv_opt->count()) qa.volume = qv_opt->as<double>();
      if (qt_opt->count()) qa.temperature = qt_opt->as<double>();
      if (qc_opt->count()) qa.c_ph = qc_opt->as<double>();
      table = quartz_command(qa, g);
    } else if (mellin->parsed()) {
      table = mellin_command(mellin_s, mellin_kind, g);
    } else if (sweep->parsed()) {
      table = sweep_command(sa, g);
    }
    write(out, table, format);
    return kExitOk;
  } catch (const DomainError& e) {
    report(err, e);
    return kExitUsage;
  } catch (const Error& e) {
    report(err, e);
    return kExitComputation;
  } catch (const std::exception& e) {
    err << "error: {\"kind\":\"internal\",\"message\":" << nlohmann::json(e.what()).dump() << "}\n";
    return kExitComputation;
  }
}

}  // namespace eulergas::cli
