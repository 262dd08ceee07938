#include "ncqm/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>

#include "ncqm/algebra.hpp"
#include "ncqm/error.hpp"
#include "ncqm/lambda_rep.hpp"
#include "ncqm/states.hpp"
#include "ncqm/weyl.hpp"
#include "ncqm/wigner.hpp"

namespace ncqm::cli {

namespace {

constexpr cplx kI{0.0, 1.0};
constexpr const char* kAxisNames[4] = {"x", "y", "px", "py"};
constexpr int kMaxNumericLevels = 12;

double parse_number(const std::string& s, const std::string& context) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ConfigError("cannot read a number from '" + s + "' in " + context);
  }
  if (used != s.size() || !std::isfinite(v)) {
    throw ConfigError("cannot read a number from '" + s + "' in " + context);
  }
  return v;
}

int parse_count(const std::string& s, const std::string& context) {
  const double v = parse_number(s, context);
  if (v != std::floor(v) || v < 1 || v > 100000) {
    throw ConfigError("point count '" + s + "' in " + context + " must be a positive integer");
  }
  return static_cast<int>(v);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

double lattice_value(double lo, double hi, int count, int i) {
  return count == 1 ? lo : lo + (hi - lo) * i / (count - 1);
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string row;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) row += ',';
    row += cells[i];
  }
  row += '\n';
  return row;
}

constexpr const char* kSpectrumHeader = "n1,n2,E_analytic,E_numeric,abs_diff,rel_diff";

/// Spectrum rows without header, one vector of cells per level.
std::vector<std::vector<std::string>> spectrum_rows(const RunConfig& cfg) {
  const OscillatorParams op = cfg.oscillator();
  const OscillatorSolution sol = solve_oscillator(op);
  if (!sol.modes.bounded) {
    throw ConfigError("Omega_minus is not positive: the spectrum is not discrete");
  }
  const std::vector<SpectrumEntry> levels = lowest_levels(sol, cfg.levels);
  std::vector<double> numeric;
  if (!cfg.no_oracle) numeric = numeric_spectrum(op, FockBasis(cfg.cutoff), cfg.levels).energies;
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const SpectrumEntry& e = levels[i];
    std::vector<std::string> cells{std::to_string(e.n1), std::to_string(e.n2),
                                   format_double(e.energy)};
    if (cfg.no_oracle) {
      cells.insert(cells.end(), {"", "", ""});
    } else {
      const double diff = std::abs(numeric[i] - e.energy);
      cells.insert(cells.end(), {format_double(numeric[i]), format_double(diff),
                                 format_double(diff / std::abs(e.energy))});
    }
    rows.push_back(std::move(cells));
  }
  return rows;
}

OperatorMatrix scalar_op(const FockBasis& basis, cplx c) { return OperatorMatrix::identity(basis) * c; }

/// Runs fn, times it, turns exceptions into a failed check with the message as note.
CheckResult timed_check(const std::string& name, double threshold,
                        const std::function<double(std::string&)>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckResult r{name, std::numeric_limits<double>::infinity(), threshold, false, 0.0, ""};
  try {
    r.residual = fn(r.note);
    r.pass = r.residual <= threshold;
  } catch (const std::exception& e) {
    r.note = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

// Check sizes are fixed so that verify stays fast regardless of --cutoff;
// only the spectrum oracle runs at the configured cutoff.
constexpr int kAlgebraCutoff = 20;
constexpr int kStateCutoff = 24;

double algebra_eq1_residual(const NCParameters& nc) {
  const FockBasis basis(kAlgebraCutoff);
  const PhaseOperators ph = build_phase_operators(nc, build_mode_operators(nc, basis));
  const auto zero = OperatorMatrix::zero(basis);
  const cplx ih = kI * nc.hbar();
  const std::tuple<const OperatorMatrix*, const OperatorMatrix*, OperatorMatrix> rel[] = {
      {&ph.x, &ph.y, scalar_op(basis, kI * nc.mu())},
      {&ph.px, &ph.py, scalar_op(basis, kI * nc.nu())},
      {&ph.x, &ph.px, scalar_op(basis, ih)},
      {&ph.y, &ph.py, scalar_op(basis, ih)},
      {&ph.x, &ph.py, zero},
      {&ph.y, &ph.px, zero},
      {&ph.R, &ph.P, zero},
      {&ph.Q, &ph.K, zero},
      {&ph.R, &ph.Q, scalar_op(basis, kI * nc.mu())},
      {&ph.P, &ph.K, scalar_op(basis, -kI * nc.nu())},
  };
  double worst = 0.0;
  for (const auto& [u, v, target] : rel) {
    worst = std::max(worst, projected_residual(commutator(*u, *v), target, 2));
  }
  return worst;
}

double algebra_eq4_residual(const NCParameters& nc) {
  const FockBasis basis(kAlgebraCutoff);
  const ModeOperators m = build_mode_operators(nc, basis);
  const double t = nc.theta();
  double worst = 0.0;
  worst = std::max(worst, projected_residual(commutator(m.a, m.a_dag), scalar_op(basis, 1.0), 1));
  worst = std::max(worst, projected_residual(commutator(m.b, m.b_dag), scalar_op(basis, 1.0), 1));
  worst = std::max(worst, projected_residual(commutator(m.a, m.b), OperatorMatrix::zero(basis), 1));
  worst = std::max(worst, projected_residual(commutator(m.a, m.b_dag), scalar_op(basis, kI * t), 1));
  worst = std::max(worst, projected_residual(commutator(m.b, m.a_dag), scalar_op(basis, -kI * t), 1));
  return worst;
}

double symbolic_residual(WeylPolynomial (*rep)(PhaseComponent, const NCParameters&),
                         const NCParameters& nc) {
  using enum PhaseComponent;
  const auto x = rep(X, nc), y = rep(Y, nc), px = rep(Px, nc), py = rep(Py, nc);
  const cplx ih = kI * nc.hbar();
  const std::tuple<const WeylPolynomial*, const WeylPolynomial*, cplx> rel[] = {
      {&x, &y, kI * nc.mu()}, {&px, &py, kI * nc.nu()}, {&x, &px, ih},
      {&y, &py, ih},          {&x, &py, 0.0},           {&y, &px, 0.0}};
  double worst = 0.0;
  for (const auto& [u, v, c] : rel) {
    worst = std::max(worst, max_coefficient_difference(weyl_commutator(*u, *v),
                                                       WeylPolynomial::constant(c)));
  }
  return worst;
}

double coherent_residual(const NCParameters& nc) {
  const ModeOperators modes = build_mode_operators(nc, FockBasis(kStateCutoff));
  const CoherentLabel labels[] = {{0.5, cplx{0.0, 0.3}},
                                  {cplx{0.2, -0.4}, cplx{-0.1, 0.3}},
                                  {0.6, -0.35}};
  std::vector<StateVector> vs;
  for (const auto& l : labels) vs.push_back(coherent_state_vector(l, modes));
  double worst = 0.0;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < vs.size(); ++j)
      worst = std::max(worst, std::abs(inner(vs[i], vs[j]) -
                                       coherent_overlap(labels[i], labels[j], nc.theta())));
  return worst;
}

double entangled_residual(const NCParameters& nc) {
  const FockBasis basis(kStateCutoff);
  const ModeOperators modes = build_mode_operators(nc, basis);
  const PhaseOperators ph = build_phase_operators(nc, modes);
  const LambdaLabel lam{0.4, 0.2};
  const XiLabel xi{0.3, -0.1};
  const StateVector vl = lambda_state_vector(lam, modes);
  const StateVector vx = xi_state_vector(xi, modes);
  const auto [r, p] = lambda_eigenvalues(lam, nc);
  const auto [q, k] = xi_eigenvalues(xi, nc);
  return std::max({projected_eigen_residual(ph.R, vl, r, 4),
                   projected_eigen_residual(ph.P, vl, p, 4),
                   projected_eigen_residual(ph.Q, vx, q, 4),
                   projected_eigen_residual(ph.K, vx, k, 4)});
}

double pipeline_residual(const OscillatorParams& op) {
  const WeylPolynomial h = hamiltonian_lambda_form(op);
  if (!has_reduced_support(h)) return std::numeric_limits<double>::infinity();
  const ReducedCoefficients s = extract_reduced_coefficients(h);
  const ReducedCoefficients c = reduced_coefficients(op);
  return std::max({std::abs(s.c1 - c.c1), std::abs(s.c2 - c.c2), std::abs(s.d1 - c.d1),
                   std::abs(s.d2 - c.d2), std::abs(s.d3 - c.d3)});
}

double spectrum_residual(const RunConfig& cfg, std::string& note) {
  const OscillatorParams op = cfg.oscillator();
  const OscillatorSolution sol = solve_oscillator(op);
  const int count = std::min(cfg.levels, kMaxNumericLevels);
  const auto levels = lowest_levels(sol, count);
  const NumericSpectrum num = numeric_spectrum(op, FockBasis(cfg.cutoff), count);
  double worst = 0.0;
  for (int i = 0; i < count; ++i) {
    worst = std::max(worst, std::abs(num.energies[i] - levels[i].energy) / std::abs(levels[i].energy));
  }
  note = fmt::format("cutoff {}, {} levels, convergence estimate {:.3g}", cfg.cutoff, count,
                     num.convergence);
  return worst;
}

void write_output(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw ConfigError("cannot open output file '" + cfg.out + "'");
  f << text;
}

bool is_config_error(ErrorCode c) { return c != ErrorCode::NotConverged; }

}  // namespace

GridSpec GridSpec::parse(const std::string& text) {
  GridSpec spec;
  std::array<bool, 4> seen{};
  for (const std::string& item : split(text, ',')) {
    if (item.empty()) throw ConfigError("empty entry in grid spec '" + text + "'");
    const auto eq = item.find('=');
    const auto colon = item.find(':');
    const std::string name = item.substr(0, std::min(eq, colon));
    const auto it = std::find(std::begin(kAxisNames), std::end(kAxisNames), name);
    if (it == std::end(kAxisNames)) {
      throw ConfigError("unknown grid axis '" + name + "' (expected x, y, px or py)");
    }
    const auto axis = static_cast<std::size_t>(it - std::begin(kAxisNames));
    if (seen[axis]) throw ConfigError("grid axis '" + name + "' given twice");
    seen[axis] = true;
    if (eq != std::string::npos && eq < colon) {
      const double v = parse_number(item.substr(eq + 1), "grid spec");
      spec.axes[axis] = {v, v, 1};
      continue;
    }
    const auto parts = split(item, ':');
    if (parts.size() != 4) {
      throw ConfigError("grid axis '" + item + "' must look like name:lo:hi:count or name=value");
    }
    GridAxis a{parse_number(parts[1], "grid spec"), parse_number(parts[2], "grid spec"),
               parse_count(parts[3], "grid spec")};
    if (a.count > 1 && !(a.hi > a.lo)) {
      throw ConfigError("grid axis '" + name + "' needs hi > lo");
    }
    spec.axes[axis] = a;
  }
  return spec;
}

double GridSpec::value(int axis, int i) const {
  const GridAxis& a = axes[static_cast<std::size_t>(axis)];
  return lattice_value(a.lo, a.hi, a.count, i);
}

std::vector<SweepAxis> parse_sweep(const std::string& text) {
  static const char* const allowed[] = {"mu", "nu", "hbar", "mass", "omega", "k", "l"};
  std::vector<SweepAxis> out;
  for (const std::string& item : split(text, ',')) {
    const auto parts = split(item, ':');
    if (parts.size() != 4) throw ConfigError("sweep axis '" + item + "' must look like name:lo:hi:count");
    if (std::find(std::begin(allowed), std::end(allowed), parts[0]) == std::end(allowed)) {
      throw ConfigError("cannot sweep over '" + parts[0] + "'");
    }
    for (const auto& a : out)
      if (a.name == parts[0]) throw ConfigError("sweep axis '" + parts[0] + "' given twice");
    out.push_back({parts[0], parse_number(parts[1], "sweep spec"), parse_number(parts[2], "sweep spec"),
                   parse_count(parts[3], "sweep spec")});
  }
  if (out.empty()) throw ConfigError("empty sweep spec");
  return out;
}

OscillatorParams RunConfig::oscillator() const {
  if (!(mass > 0.0) || !(omega > 0.0)) throw ConfigError("mass and omega must be positive");
  try {
    OscillatorParams op = make_oscillator(NCParameters::make(mu, nu, hbar), mass, omega, k, l);
    solve_oscillator(op);
    return op;
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
}

std::string format_double(double v) { return fmt::format("{:.17g}", v); }

VerifyReport cmd_verify(const RunConfig& cfg) {
  const OscillatorParams op = cfg.oscillator();
  const NCParameters& nc = op.nc;
  VerifyReport rep{{}, true};
  auto add = [&](CheckResult r) {
    rep.pass = rep.pass && r.pass;
    rep.checks.push_back(std::move(r));
  };
  add(timed_check("algebra_phase_space", 1e-9, [&](std::string& note) {
    note = "ten commutators of x, y, px, py, R, P, Q, K; cutoff 20, margin 2";
    return algebra_eq1_residual(nc);
  }));
  add(timed_check("algebra_deformed_boson", 1e-12, [&](std::string& note) {
    note = "five ladder commutators; cutoff 20, margin 1";
    return algebra_eq4_residual(nc);
  }));
  add(timed_check("symbolic_lambda_rep", 1e-12,
                  [&](std::string&) { return symbolic_residual(&lambda_rep_operator, nc); }));
  add(timed_check("symbolic_xi_rep", 1e-12,
                  [&](std::string&) { return symbolic_residual(&xi_rep_operator, nc); }));
  add(timed_check("coherent_overlap", 1e-8, [&](std::string& note) {
    note = "numeric inner products vs closed form; cutoff 24";
    return coherent_residual(nc);
  }));
  add(timed_check("entangled_eigen_residual", 1e-3, [&](std::string& note) {
    note = "R, P on |lambda>, Q, K on |xi>; cutoff 24, margin 4";
    return entangled_residual(nc);
  }));
  add(timed_check("coefficient_pipeline", 1e-12, [&](std::string&) { return pipeline_residual(op); }));
  add(timed_check("normal_mode_frequencies", 1e-9,
                  [&](std::string&) { return normal_modes(op).discrepancy; }));
  add(timed_check("spectrum_oracle", 1e-6,
                  [&](std::string& note) { return spectrum_residual(cfg, note); }));
  const OscillatorSolution sol = solve_oscillator(op);
  add(timed_check("wigner_normalization", 1e-6, [&](std::string&) {
    return std::abs(wigner_moments(sol, 0, 0, 16).norm - 1.0);
  }));
  add(timed_check("wigner_energy_moment", 1e-5, [&](std::string& note) {
    note = "(n1, n2) in {0, 1}^2";
    double worst = 0.0;
    for (int n1 : {0, 1})
      for (int n2 : {0, 1})
        worst = std::max(worst, std::abs(wigner_moments(sol, n1, n2, 16).mean_energy -
                                         energy(sol, n1, n2)));
    return worst;
  }));
  return rep;
}

std::string format_report_text(const VerifyReport& r) {
  std::string s;
  for (const auto& c : r.checks) {
    s += fmt::format("{} {:<26} residual {:<10.3g} threshold {:<8.1g} {:7.3f} s", c.pass ? "PASS" : "FAIL",
                     c.name, c.residual, c.threshold, c.seconds);
    if (!c.note.empty()) s += "  # " + c.note;
    s += '\n';
  }
  s += r.pass ? "verify: all checks passed\n" : "verify: FAILED\n";
  return s;
}

std::string format_report_json(const VerifyReport& r) {
  nlohmann::ordered_json j;
  j["pass"] = r.pass;
  j["checks"] = nlohmann::ordered_json::object();
  for (const auto& c : r.checks) {
    j["checks"][c.name] = {{"residual", c.residual},
                           {"threshold", c.threshold},
                           {"pass", c.pass},
                           {"seconds", c.seconds},
                           {"note", c.note}};
  }
  return j.dump(2) + "\n";
}

std::string cmd_spectrum(const RunConfig& cfg) {
  std::string s = std::string(kSpectrumHeader) + "\n";
  for (const auto& row : spectrum_rows(cfg)) s += csv_row(row);
  return s;
}

std::string cmd_wigner(const RunConfig& cfg) {
  const OscillatorSolution sol = solve_oscillator(cfg.oscillator());
  if (!sol.modes.bounded) throw ConfigError("Omega_minus is not positive");
  const GridSpec g = GridSpec::parse(cfg.grid);
  std::string s = "x,y,px,py,W\n";
  for (int i = 0; i < g.axes[0].count; ++i)
    for (int j = 0; j < g.axes[1].count; ++j)
      for (int k = 0; k < g.axes[2].count; ++k)
        for (int l = 0; l < g.axes[3].count; ++l) {
          const PhasePoint4 pt{g.value(0, i), g.value(1, j), g.value(2, k), g.value(3, l)};
          const double w = wigner_oscillator(sol, cfg.n1, cfg.n2, pt);
          s += csv_row({format_double(pt.x), format_double(pt.y), format_double(pt.px),
                        format_double(pt.py), format_double(w)});
        }
  return s;
}

std::string cmd_sweep(const RunConfig& cfg) {
  const std::vector<SweepAxis> axes = parse_sweep(cfg.sweep);
  std::string s;
  for (const auto& a : axes) s += a.name + ',';
  s += std::string(kSpectrumHeader) + "\n";
  std::vector<int> idx(axes.size(), 0);
  while (true) {
    RunConfig point = cfg;
    std::vector<std::string> prefix;
    for (std::size_t a = 0; a < axes.size(); ++a) {
      const double v = lattice_value(axes[a].lo, axes[a].hi, axes[a].count, idx[a]);
      const std::string& n = axes[a].name;
      double& field = n == "mu"      ? point.mu
                      : n == "nu"    ? point.nu
                      : n == "hbar"  ? point.hbar
                      : n == "mass"  ? point.mass
                      : n == "omega" ? point.omega
                      : n == "k"     ? point.k
                                     : point.l;
      field = v;
      prefix.push_back(format_double(v));
    }
    for (auto row : spectrum_rows(point)) {
      row.insert(row.begin(), prefix.begin(), prefix.end());
      s += csv_row(row);
    }
    // odometer, last axis fastest
    std::size_t a = axes.size();
    while (a > 0) {
      --a;
      if (++idx[a] < axes[a].count) break;
      idx[a] = 0;
      if (a == 0) return s;
    }
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Quantum mechanics on noncommutative phase space: checks, spectra and Wigner grids"};
  app.set_config("--config", "", "key=value file; command-line flags override it");
  app.require_subcommand(1);
  app.add_option("--mu", cfg.mu, "position noncommutativity mu")->capture_default_str();
  app.add_option("--nu", cfg.nu, "momentum noncommutativity nu")->capture_default_str();
  app.add_option("--hbar", cfg.hbar, "Planck constant")->capture_default_str();
  app.add_option("--mass", cfg.mass, "oscillator mass m")->capture_default_str();
  app.add_option("--omega", cfg.omega, "oscillator frequency")->capture_default_str();
  app.add_option("--k", cfg.k, "elastic coupling k x y")->capture_default_str();
  app.add_option("--l", cfg.l, "kinetic coupling l px py")->capture_default_str();
  app.add_option("--cutoff", cfg.cutoff, "Fock cutoff N per mode")->capture_default_str();
  app.add_option("--levels", cfg.levels, "number of levels")->capture_default_str();
  app.add_option("--n1", cfg.n1, "mode-1 quantum number (wigner)")->capture_default_str();
  app.add_option("--n2", cfg.n2, "mode-2 quantum number (wigner)")->capture_default_str();
  app.add_option("--grid", cfg.grid, "axes as name:lo:hi:count or name=value")->capture_default_str();
  app.add_option("--sweep", cfg.sweep, "lattice as name:lo:hi:count,...")->capture_default_str();
  app.add_option("--out", cfg.out, "write output here instead of stdout");
  app.add_flag("--json", cfg.json, "JSON verify report");
  app.add_flag("--no-oracle", cfg.no_oracle, "skip the numeric spectrum columns");
  auto* verify = app.add_subcommand("verify", "run the verification suite")->fallthrough();
  auto* spectrum = app.add_subcommand("spectrum", "analytic vs numeric spectrum CSV")->fallthrough();
  auto* wigner = app.add_subcommand("wigner", "oscillator Wigner function on a grid")->fallthrough();
  auto* sweep = app.add_subcommand("sweep", "spectrum over a parameter lattice")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (cfg.cutoff < 2) throw ConfigError("--cutoff must be at least 2");
    if (cfg.levels < 0) throw ConfigError("--levels must be non-negative");
    if (!cfg.no_oracle && cfg.levels > kMaxNumericLevels && !verify->parsed()) {
      throw ConfigError("--levels above 12 needs --no-oracle");
    }
    if (cfg.n1 < 0 || cfg.n2 < 0) throw ConfigError("--n1 and --n2 must be non-negative");
    cfg.oscillator();
    if (verify->parsed()) {
      const VerifyReport r = cmd_verify(cfg);
      write_output(cfg, cfg.json ? format_report_json(r) : format_report_text(r), out);
      return r.pass ? 0 : 1;
    }
    if (spectrum->parsed()) write_output(cfg, cmd_spectrum(cfg), out);
    if (wigner->parsed()) write_output(cfg, cmd_wigner(cfg), out);
    if (sweep->parsed()) write_output(cfg, cmd_sweep(cfg), out);
    return 0;
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_config_error(e.code()) ? 2 : 1;
  }
}

}  // namespace ncqm::cli
