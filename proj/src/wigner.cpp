#include "ncqm/wigner.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ncqm/error.hpp"
#include "ncqm/quadrature.hpp"

namespace ncqm {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

/// Linear map (x, y, px, py) -> (lambda1, lambda2, eta1, eta2).
Eigen::Matrix4d entangled_matrix(const NCParameters& nc) {
  const double t = nc.theta();
  const double det = 1.0 - t * t;
  if (!(det > 0.0)) throw Error(ErrorCode::SingularChain, "1 - theta^2 must be positive");
  const double sh = std::sqrt(nc.hbar());
  const double lr = nc.length_ratio();
  const double mr = nc.momentum_ratio();
  // rows: R, P, Q, K in terms of (x, y, px, py)
  Eigen::Matrix4d rpqk;
  rpqk << kInvSqrt2, -kInvSqrt2, 0, 0,
          0, 0, kInvSqrt2, kInvSqrt2,
          kInvSqrt2, kInvSqrt2, 0, 0,
          0, 0, kInvSqrt2, -kInvSqrt2;
  // (r, p) = (R / (sqrt(hbar) lr), P / (sqrt(hbar) mr)) solve
  //   lambda1 - t lambda2 = r,  lambda2 - t lambda1 = p
  Eigen::Matrix4d to_lambda = Eigen::Matrix4d::Zero();
  to_lambda(0, 0) = 1.0 / (sh * lr * det);
  to_lambda(0, 1) = t / (sh * mr * det);
  to_lambda(1, 0) = t / (sh * lr * det);
  to_lambda(1, 1) = 1.0 / (sh * mr * det);
  to_lambda(2, 3) = 1.0 / (sh * mr);   // eta1 = K / (sqrt(hbar) (nu/mu)^{1/4})
  to_lambda(3, 2) = -1.0 / (sh * lr);  // eta2 = -Q / (sqrt(hbar) (mu/nu)^{1/4})
  return to_lambda * rpqk;
}

/// (lambda1, lambda2, eta1, eta2) -> (x1, p1, x2, p2).
Eigen::Matrix4d decoupling_matrix(const OscillatorSolution& sol) {
  const double q = std::sqrt(std::sqrt(sol.reduced.c2 / sol.reduced.c1));
  const double ch = std::cos(0.5 * sol.modes.alpha);
  const double sn = std::sin(0.5 * sol.modes.alpha);
  // scaled: (l1', l2', e1', e2') = (q l1, l2 / q, e1 / q, q e2)
  Eigen::Matrix4d scale = Eigen::Matrix4d::Zero();
  scale(0, 0) = q;
  scale(1, 1) = 1.0 / q;
  scale(2, 2) = 1.0 / q;
  scale(3, 3) = q;
  // x = U l', p = U e', output ordered (x1, p1, x2, p2)
  Eigen::Matrix4d rot = Eigen::Matrix4d::Zero();
  rot(0, 0) = ch;  rot(0, 1) = -sn;
  rot(2, 0) = sn;  rot(2, 1) = ch;
  rot(1, 2) = ch;  rot(1, 3) = -sn;
  rot(3, 2) = sn;  rot(3, 3) = ch;
  if (sol.modes.swapped) {
    Eigen::Matrix4d swap = Eigen::Matrix4d::Zero();
    swap(0, 2) = swap(1, 3) = swap(2, 0) = swap(3, 1) = 1.0;
    rot = swap * rot;
  }
  return rot * scale;
}

Eigen::Matrix4d chain_matrix(const OscillatorSolution& sol) {
  return decoupling_matrix(sol) * entangled_matrix(sol.params.nc);
}

void require_bounded(const OscillatorSolution& sol) {
  if (!sol.modes.bounded) {
    throw Error(ErrorCode::InvalidRegime, "Omega_minus must be positive");
  }
}

}  // namespace

ChainCoordinates ChainCoordinates::from(const PhasePoint4& pt, const NCParameters& params) {
  const double t = params.theta();
  const double denom = std::sqrt(2.0 * params.hbar()) * (1.0 - t * t);
  const double mr = params.momentum_ratio();
  const double lr = params.length_ratio();
  return {mr * (pt.x - pt.y) / denom, lr * (pt.px + pt.py) / denom, mr * (pt.x + pt.y) / denom,
          lr * (pt.px - pt.py) / denom};
}

bool DeltaSupport::contains(const PhasePoint4& pt, double tol) const {
  return std::abs(constraints[0].violation(pt)) <= tol &&
         std::abs(constraints[1].violation(pt)) <= tol;
}

DeltaSupport wigner_entangled_delta(const LambdaLabel& label, const NCParameters& params) {
  const double t = params.theta();
  const auto [r, p] = lambda_eigenvalues(label, params);
  const double s2 = std::sqrt(2.0);
  const double pref = 1.0 / (2.0 * std::numbers::pi * params.hbar() * std::sqrt(1.0 - t * t));
  return {pref, {LinearConstraint{{1.0, -1.0, 0.0, 0.0}, s2 * r},
                 LinearConstraint{{0.0, 0.0, 1.0, 1.0}, s2 * p}}};
}

DeltaSupport wigner_entangled_delta(const XiLabel& label, const NCParameters& params) {
  const double t = params.theta();
  const auto [q, k] = xi_eigenvalues(label, params);
  const double s2 = std::sqrt(2.0);
  const double pref = 1.0 / (2.0 * std::numbers::pi * params.hbar() * std::sqrt(1.0 - t * t));
  return {pref, {LinearConstraint{{1.0, 1.0, 0.0, 0.0}, s2 * q},
                 LinearConstraint{{0.0, 0.0, 1.0, -1.0}, s2 * k}}};
}

ChainResult chain_map(const PhasePoint4& pt, const OscillatorSolution& sol) {
  require_bounded(sol);
  const Eigen::Matrix4d ent = entangled_matrix(sol.params.nc);
  const Eigen::Matrix4d dec = decoupling_matrix(sol);
  const Eigen::Vector4d z(pt.x, pt.y, pt.px, pt.py);
  const Eigen::Vector4d le = ent * z;
  const Eigen::Vector4d d = dec * le;
  const double M = sol.modes.M;
  const double wp = sol.modes.Omega_plus;
  const double wm = sol.modes.Omega_minus;
  DecoupledPoint out{d(0), d(1), d(2), d(3), 0.0, 0.0};
  out.H1 = out.p1 * out.p1 / (2.0 * M) + M * wp * wp * out.x1 * out.x1 / 2.0;
  out.H2 = out.p2 * out.p2 / (2.0 * M) + M * wm * wm * out.x2 * out.x2 / 2.0;
  return {out, le(0), le(1), le(2), le(3), (dec * ent).determinant()};
}

PhasePoint4 inverse_chain_map(double x1, double p1, double x2, double p2,
                              const OscillatorSolution& sol) {
  const Eigen::Vector4d z = chain_matrix(sol).inverse() * Eigen::Vector4d(x1, p1, x2, p2);
  return {z(0), z(1), z(2), z(3)};
}

double classical_hamiltonian(const PhasePoint4& pt, const OscillatorParams& p) {
  return (pt.px * pt.px + pt.py * pt.py) / (2.0 * p.m) +
         p.m * p.omega * p.omega * (pt.x * pt.x + pt.y * pt.y) / 2.0 + p.k * pt.x * pt.y +
         p.l * pt.px * pt.py;
}

double laguerre(int n, double x) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "Laguerre degree must be >= 0");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 - x) * cur - k * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double wigner_oscillator_energies(const OscillatorSolution& sol, int n1, int n2, double H1,
                                  double H2) {
  if (n1 < 0 || n2 < 0) throw Error(ErrorCode::InvalidArgument, "quantum numbers must be >= 0");
  require_bounded(sol);
  const double s1 = H1 / sol.modes.Omega_plus;
  const double s2 = H2 / sol.modes.Omega_minus;
  const double sign = ((n1 + n2) % 2 == 0) ? 1.0 : -1.0;
  return 4.0 * sign * std::exp(-2.0 * s1) * std::exp(-2.0 * s2) * laguerre(n1, 4.0 * s1) *
         laguerre(n2, 4.0 * s2);
}

double wigner_oscillator(const OscillatorSolution& sol, int n1, int n2, const PhasePoint4& pt) {
  const ChainResult c = chain_map(pt, sol);
  return wigner_oscillator_energies(sol, n1, n2, c.point.H1, c.point.H2);
}

WignerMoments wigner_moments(const OscillatorSolution& sol, int n1, int n2, int nodes_per_axis) {
  require_bounded(sol);
  if (nodes_per_axis < 2) {
    throw Error(ErrorCode::QuadratureTooCoarse, "need at least two nodes per axis");
  }
  const GaussRule rule = gauss_hermite(nodes_per_axis);
  const int n = nodes_per_axis;
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) w[i] = rule.weights[i] * std::exp(rule.nodes[i] * rule.nodes[i]);
  // x_i = X / sqrt(M Omega), p_i = P sqrt(M Omega) maps 2H/Omega to X^2 + P^2
  // with unit Jacobian.
  const double g1 = std::sqrt(sol.modes.M * sol.modes.Omega_plus);
  const double g2 = std::sqrt(sol.modes.M * sol.modes.Omega_minus);
  double norm = 0.0;
  double first = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          const PhasePoint4 pt = inverse_chain_map(rule.nodes[a] / g1, rule.nodes[b] * g1,
                                                   rule.nodes[c] / g2, rule.nodes[d] * g2, sol);
          const ChainResult ch = chain_map(pt, sol);
          const double W = wigner_oscillator_energies(sol, n1, n2, ch.point.H1, ch.point.H2);
          const double weight = w[a] * w[b] * w[c] * w[d];
          norm += weight * W;
          first += weight * W * (ch.point.H1 + ch.point.H2);
        }
  const double unit = 2.0 * std::numbers::pi * kWignerActionUnit;
  return {norm / (unit * unit), first / norm};
}

cplx GridFunction::sample(double lambda1, double lambda2) const {
  const double fi = (lambda1 - lambda1_min) / h1;
  const double fj = (lambda2 - lambda2_min) / h2;
  if (fi < 0.0 || fj < 0.0 || fi > n1 - 1 || fj > n2 - 1) return {};
  int i = static_cast<int>(std::floor(fi));
  int j = static_cast<int>(std::floor(fj));
  i = std::min(i, n1 - 2);
  j = std::min(j, n2 - 2);
  const double tx = fi - i;
  const double ty = fj - j;
  return (1.0 - tx) * (1.0 - ty) * at(i, j) + tx * (1.0 - ty) * at(i + 1, j) +
         (1.0 - tx) * ty * at(i, j + 1) + tx * ty * at(i + 1, j + 1);
}

cplx wigner_transform_lambda_complex(const GridFunction& psi, const ChainCoordinates& pt,
                                     const NCParameters& params) {
  constexpr int kMinPoints = 16;
  if (psi.n1 < kMinPoints || psi.n2 < kMinPoints || !(psi.h1 > 0.0) || !(psi.h2 > 0.0) ||
      psi.values.size() != static_cast<std::size_t>(psi.n1) * psi.n2) {
    throw Error(ErrorCode::GridTooCoarse, "grid needs at least 16 points per axis");
  }
  const double t = params.theta();
  const double k = 2.0 * (1.0 - t * t);
  // The kernel e^{i k (gamma1 lambda2 - gamma2 lambda1)} must be resolved.
  if (k * std::abs(pt.gamma2) * psi.h1 > std::numbers::pi / 2.0 ||
      k * std::abs(pt.gamma1) * psi.h2 > std::numbers::pi / 2.0) {
    throw Error(ErrorCode::GridTooCoarse, "grid spacing does not resolve the Wigner kernel");
  }
  double peak = 0.0;
  double edge = 0.0;
  for (int i = 0; i < psi.n1; ++i)
    for (int j = 0; j < psi.n2; ++j) {
      const double a = std::abs(psi.at(i, j));
      peak = std::max(peak, a);
      if (i == 0 || j == 0 || i == psi.n1 - 1 || j == psi.n2 - 1) edge = std::max(edge, a);
    }
  if (edge > 1e-8 * peak) {
    std::ostringstream os;
    os << "boundary amplitude " << edge << " exceeds 1e-8 of the peak " << peak;
    throw Error(ErrorCode::BoundaryLeak, os.str());
  }

  const auto u = pt.center(t);
  cplx sum{};
  for (int a = -(psi.n1 - 1); a <= psi.n1 - 1; ++a) {
    const double l1 = a * psi.h1;
    for (int b = -(psi.n2 - 1); b <= psi.n2 - 1; ++b) {
      const double l2 = b * psi.h2;
      const cplx lo = psi.sample(u[0] - l1, u[1] - l2);
      if (lo == cplx{}) continue;
      const cplx hi = psi.sample(u[0] + l1, u[1] + l2);
      if (hi == cplx{}) continue;
      const double phase = k * (pt.gamma1 * l2 - pt.gamma2 * l1);
      sum += std::conj(lo) * hi * cplx{std::cos(phase), std::sin(phase)};
    }
  }
  const double hbar = params.hbar();
  const double pi3 = std::numbers::pi * std::numbers::pi * std::numbers::pi;
  return sum * (psi.h1 * psi.h2 * std::sqrt(1.0 - t * t) / (pi3 * hbar * hbar));
}

double wigner_transform_lambda(const GridFunction& psi, const ChainCoordinates& pt,
                               const NCParameters& params) {
  const cplx w = wigner_transform_lambda_complex(psi, pt, params);
  if (std::abs(w.imag()) > 1e-8 * std::abs(w) + 1e-12) {
    std::ostringstream os;
    os << "imaginary part " << w.imag() << " of the Wigner transform is not negligible";
    throw Error(ErrorCode::ImaginaryLeak, os.str());
  }
  return w.real();
}

}  // namespace ncqm
