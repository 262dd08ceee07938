#include "ncqm/oscillator.hpp"

#include <Eigen/Sparse>
#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

#include "ncqm/error.hpp"

namespace ncqm {

namespace {

double checked_sqrt(double x, const char* what) {
  if (x < 0.0) {
    std::ostringstream os;
    os << what << " is negative (" << x << ")";
    throw Error(ErrorCode::ComplexFrequency, os.str());
  }
  return std::sqrt(x);
}

using SparseC = Eigen::SparseMatrix<cplx>;

SparseC sparse_of(const OperatorMatrix& m) { return m.matrix().sparseView(); }

std::vector<double> sorted_lowest(std::vector<double> values, int count) {
  std::sort(values.begin(), values.end());
  values.resize(std::min<std::size_t>(values.size(), static_cast<std::size_t>(count)));
  return values;
}

std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::NotConverged, "dense Hermitian eigensolver failed");
  }
  const auto& ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

}  // namespace

ReducedCoefficients reduced_coefficients(const OscillatorParams& p) {
  p.validate();
  const double mu = p.nc.mu(), nu = p.nc.nu(), hbar = p.nc.hbar(), theta = p.nc.theta();
  const double m = p.m, w = p.omega, k = p.k, l = p.l;
  const double sq_nm = std::sqrt(nu / mu);
  const double sq_mn = std::sqrt(mu / nu);
  const double kk = k / (m * w * w);
  ReducedCoefficients r{};
  r.c1 = hbar / (2.0 * m) * sq_nm * (1.0 - l * m);
  r.c2 = hbar * m * w * w / 2.0 * sq_mn * (1.0 + kk);
  r.d1 = hbar * theta * theta / (2.0 * m) * sq_nm * (1.0 + l * m) +
         hbar * m * w * w / 2.0 * sq_mn * (1.0 - kk);
  r.d2 = hbar / (2.0 * m) * sq_nm * (1.0 + l * m) +
         hbar * theta * theta * m * w * w / 2.0 * sq_mn * (1.0 - kk);
  r.d3 = -nu / m * (1.0 + l * m) - mu * m * w * w * (1.0 - kk);
  return r;
}

ScaledCoefficients scaled_coefficients(const ReducedCoefficients& r) {
  if (!(r.c1 > 0.0) || !(r.c2 > 0.0)) {
    throw Error(ErrorCode::NonPositiveKinetic, "c1 and c2 must be positive");
  }
  return {std::sqrt(r.c1 * r.c2), r.d1 * std::sqrt(r.c1 / r.c2), r.d2 * std::sqrt(r.c2 / r.c1), r.d3};
}

NormalModes normal_modes(const OscillatorParams& p) {
  const ReducedCoefficients r = reduced_coefficients(p);
  const ScaledCoefficients s = scaled_coefficients(r);
  const double mu = p.nc.mu(), nu = p.nc.nu(), hbar = p.nc.hbar();
  const double m = p.m, w = p.omega, k = p.k, l = p.l;

  NormalModes out{};
  out.M = 1.0 / (hbar * w * std::sqrt((1.0 - l * m) * (1.0 + k / (m * w * w))));

  const double kin = 1.0 - l * l * m * m;
  const double pot = 1.0 - k * k / (m * m * w * w * w * w);
  const double root_kin = checked_sqrt(kin, "1 - l^2 m^2");
  const double root_pot = checked_sqrt(pot, "1 - k^2/(m^2 omega^4)");
  const double root_prod = checked_sqrt(kin * pot, "(1 - l^2 m^2)(1 - k^2/(m^2 omega^4))");
  const double base = 1.0 + k * l / (w * w);
  out.A_plus = 0.5 * (base + root_prod);
  out.A_minus = 0.5 * (base - root_prod);
  const double bn = nu * root_kin / (2.0 * m * hbar * w);
  const double bm = mu * m * w / (2.0 * hbar) * root_pot;
  out.B_plus = (bn + bm) * (bn + bm);
  out.B_minus = (bn - bm) * (bn - bm);
  const double big = checked_sqrt(out.A_plus + out.B_minus, "A+ + B-");
  const double small = checked_sqrt(out.A_minus + out.B_plus, "A- + B+");
  out.Omega_plus = hbar * w * (big + small);
  out.Omega_minus = hbar * w * (big - small);

  // Rotation by alpha/2 diagonalizes [[f1, d3/2], [d3/2, f2]].
  out.alpha = std::atan2(s.d3, s.f2 - s.f1);
  const double ch = std::cos(0.5 * out.alpha);
  const double sh = std::sin(0.5 * out.alpha);
  const double h = 0.5 * s.d3;
  const double g11 = ch * ch * s.f1 - 2.0 * ch * sh * h + sh * sh * s.f2;
  const double g22 = sh * sh * s.f1 + 2.0 * ch * sh * h + ch * ch * s.f2;
  const double g12 = ch * sh * (s.f1 - s.f2) + h * (ch * ch - sh * sh);
  out.swapped = g11 < g22;
  out.residual_cross = std::abs(g12);

  const double mean = 0.5 * (s.f1 + s.f2);
  const double half_gap = 0.5 * std::hypot(s.f1 - s.f2, s.d3);
  out.e_plus = mean + half_gap;
  out.e_minus = mean - half_gap;
  out.Omega_plus_check = 2.0 * std::sqrt(s.c * out.e_plus);
  out.Omega_minus_check = out.e_minus >= 0.0 ? 2.0 * std::sqrt(s.c * out.e_minus) : std::nan("");
  out.discrepancy = std::max(std::abs(out.Omega_plus - out.Omega_plus_check),
                             std::abs(out.Omega_minus - out.Omega_minus_check)) /
                    out.Omega_plus;
  out.bounded = out.Omega_minus > 0.0;
  return out;
}

OscillatorSolution solve_oscillator(const OscillatorParams& p) {
  const ReducedCoefficients r = reduced_coefficients(p);
  return {p, r, scaled_coefficients(r), normal_modes(p)};
}

double energy(const OscillatorSolution& sol, int n1, int n2) {
  if (n1 < 0 || n2 < 0) throw Error(ErrorCode::InvalidArgument, "quantum numbers must be >= 0");
  if (!sol.modes.bounded) {
    throw Error(ErrorCode::InvalidRegime, "Omega_minus must be positive for a discrete spectrum");
  }
  return (n1 + 0.5) * sol.modes.Omega_plus + (n2 + 0.5) * sol.modes.Omega_minus;
}

double energy(const OscillatorParams& p, int n1, int n2) { return energy(solve_oscillator(p), n1, n2); }

double commutative_limit_energy(double m, double omega, double hbar, double k, double l, int n1,
                                int n2) {
  if (!(m > 0.0 && omega > 0.0 && hbar > 0.0)) {
    throw Error(ErrorCode::InvalidRegime, "m, omega and hbar must be positive");
  }
  const double kin = 1.0 - l * l * m * m;
  const double pot = 1.0 - k * k / (m * m * omega * omega * omega * omega);
  if (kin < 0.0) throw Error(ErrorCode::InvalidRegime, "1 - l^2 m^2 must be non-negative");
  if (pot < 0.0) throw Error(ErrorCode::InvalidRegime, "1 - k^2/(m^2 omega^4) must be non-negative");
  const double root = std::sqrt(kin * pot);
  const double base = 1.0 + k * l / (omega * omega);
  const double pref = hbar * omega / std::sqrt(2.0);
  return (n1 + n2 + 1) * pref * std::sqrt(std::max(0.0, base + root)) +
         (n1 - n2) * pref * std::sqrt(std::max(0.0, base - root));
}

double uncoupled_energy(const NCParameters& nc, double m, double omega, int n1, int n2) {
  const double mu = nc.mu(), nu = nc.nu(), hbar = nc.hbar();
  const double skew = nu - mu * m * m * omega * omega;
  return (n1 + n2 + 1) * hbar * omega *
             std::sqrt(1.0 + skew * skew / (4.0 * m * m * hbar * hbar * omega * omega)) +
         (n1 - n2) * (nu / (2.0 * m) + mu * m * omega * omega / 2.0);
}

std::vector<SpectrumEntry> lowest_levels(const OscillatorSolution& sol, int count) {
  std::vector<SpectrumEntry> out;
  if (count <= 0) return out;
  // Any of the `count` lowest levels has n1, n2 < count.
  for (int n1 = 0; n1 < count; ++n1)
    for (int n2 = 0; n2 < count; ++n2) out.push_back({n1, n2, energy(sol, n1, n2)});
  std::sort(out.begin(), out.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
    return std::tie(a.energy, a.n1, a.n2) < std::tie(b.energy, b.n1, b.n2);
  });
  out.resize(static_cast<std::size_t>(count));
  return out;
}

OperatorMatrix hamiltonian_matrix(const OscillatorParams& p, const PhaseOperators& ops) {
  p.validate();
  // The phase operators are linear in the ladders (a few nonzeros per column),
  // so products are formed sparsely before densifying.
  const SparseC x = sparse_of(ops.x), y = sparse_of(ops.y);
  const SparseC px = sparse_of(ops.px), py = sparse_of(ops.py);
  const double m = p.m, w = p.omega;
  SparseC xy = x * y;
  SparseC pxpy = px * py;
  SparseC xx = x * x;
  SparseC yy = y * y;
  SparseC pxpx = px * px;
  SparseC pypy = py * py;
  SparseC yx = y * x;
  SparseC pypx = py * px;
  SparseC h = (1.0 / (2.0 * m)) * (pxpx + pypy);
  h += (m * w * w / 2.0) * (xx + yy);
  h += (p.k / 2.0) * (xy + yx);
  h += (p.l / 2.0) * (pxpy + pypx);
  Eigen::MatrixXcd dense = Eigen::MatrixXcd(h);
  Eigen::MatrixXcd sym = 0.5 * (dense + dense.adjoint());
  return {ops.x.basis(), std::move(sym), true};
}

std::vector<double> truncated_eigenvalues(const OscillatorParams& p, const FockBasis& basis,
                                          int count) {
  if (count <= 0) return {};
  const ModeOperators modes = build_mode_operators(p.nc, basis);
  const PhaseOperators ops = build_phase_operators(p.nc, modes);
  const OperatorMatrix h = hamiltonian_matrix(p, ops);
  const Eigen::MatrixXcd& hm = h.matrix();

  // Quadratic Hamiltonians conserve the parity of the total occupation; solve
  // each parity block separately when the coupling between them vanishes.
  std::vector<Eigen::Index> even, odd;
  for (std::size_t i = 0; i < basis.dim(); ++i) {
    (basis.total_occupation(i) % 2 == 0 ? even : odd).push_back(static_cast<Eigen::Index>(i));
  }
  const double scale = hm.cwiseAbs().maxCoeff();
  const double leak = hm(even, odd).cwiseAbs().maxCoeff();
  std::vector<double> all;
  if (leak <= 1e-14 * scale) {
    all = hermitian_eigenvalues(hm(even, even));
    auto odd_values = hermitian_eigenvalues(hm(odd, odd));
    all.insert(all.end(), odd_values.begin(), odd_values.end());
  } else {
    all = hermitian_eigenvalues(hm);
  }
  return sorted_lowest(std::move(all), count);
}

NumericSpectrum numeric_spectrum(const OscillatorParams& p, const FockBasis& basis, int count) {
  if (count < 0 || count > 12) {
    throw Error(ErrorCode::InvalidArgument, "count must lie in [0, 12]");
  }
  if (count == 0) return {{}, 0.0};
  if (basis.cutoff() - 4 < 2) {
    throw Error(ErrorCode::NotConverged,
                "cutoff too small for the N vs N-4 convergence comparison");
  }
  NumericSpectrum out;
  out.energies = truncated_eigenvalues(p, basis, count);
  const auto coarse = truncated_eigenvalues(p, FockBasis(basis.cutoff() - 4), count);
  out.convergence = 0.0;
  bool ok = coarse.size() == out.energies.size();
  for (std::size_t i = 0; i < std::min(coarse.size(), out.energies.size()); ++i) {
    const double diff = std::abs(out.energies[i] - coarse[i]);
    out.convergence = std::max(out.convergence, diff);
    if (diff > 1e-6 * std::abs(out.energies[i])) ok = false;
  }
  if (!ok) {
    std::ostringstream os;
    os << "|E(N) - E(N-4)| = " << out.convergence << " exceeds 1e-6 relative at N = "
       << basis.cutoff();
    throw Error(ErrorCode::NotConverged, os.str());
  }
  return out;
}

}  // namespace ncqm
