#include "ncqm/algebra.hpp"

#include <cmath>

namespace ncqm {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

OperatorMatrix ladder(const FockBasis& basis, bool mode_a) {
  const auto n = static_cast<Eigen::Index>(basis.dim());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int na = 0; na <= basis.cutoff(); ++na) {
    for (int nb = 0; nb <= basis.cutoff(); ++nb) {
      const int q = mode_a ? na : nb;
      if (q == 0) continue;
      const auto col = static_cast<Eigen::Index>(basis.index(na, nb));
      const auto row = static_cast<Eigen::Index>(mode_a ? basis.index(na - 1, nb)
                                                        : basis.index(na, nb - 1));
      m(row, col) = std::sqrt(static_cast<double>(q));
    }
  }
  return {basis, std::move(m), false};
}

}  // namespace

OperatorMatrix standard_annihilator_A(const FockBasis& basis) { return ladder(basis, true); }
OperatorMatrix standard_annihilator_B(const FockBasis& basis) { return ladder(basis, false); }

double bogoliubov_angle(const NCParameters& params) { return 0.5 * std::asin(params.theta()); }

ModeOperators build_mode_operators(const NCParameters& params, const FockBasis& basis) {
  const double phi = bogoliubov_angle(params);
  const cplx c{std::cos(phi), 0.0};
  const cplx is{0.0, std::sin(phi)};
  OperatorMatrix A = standard_annihilator_A(basis);
  OperatorMatrix B = standard_annihilator_B(basis);
  OperatorMatrix a = c * A + is * B;
  OperatorMatrix b = c * B - is * A;
  OperatorMatrix a_dag = a.adjoint();
  OperatorMatrix b_dag = b.adjoint();
  return {std::move(a), std::move(b), std::move(a_dag), std::move(b_dag),
          std::move(A), std::move(B), phi, params.theta()};
}

PhaseOperators build_phase_operators(const NCParameters& params, const ModeOperators& modes) {
  const double sx = params.position_scale();
  const double sp = params.momentum_scale();
  const cplx minus_i{0.0, -1.0};
  const FockBasis& basis = modes.a.basis();

  // Each matrix is evaluated once and flagged Hermitian at construction; at
  // cutoff 40 every dense temporary costs ~45 MB of memory traffic.
  auto make = [&](auto&& expr) { return OperatorMatrix(basis, Eigen::MatrixXcd(expr), true); };
  const Eigen::MatrixXcd& a = modes.a.matrix();
  const Eigen::MatrixXcd& b = modes.b.matrix();

  OperatorMatrix x = make(sx * (a + a.adjoint()));
  OperatorMatrix y = make(sx * (b + b.adjoint()));
  OperatorMatrix px = make((minus_i * sp) * (a - a.adjoint()));
  OperatorMatrix py = make((minus_i * sp) * (b - b.adjoint()));
  OperatorMatrix R = make(kInvSqrt2 * (x.matrix() - y.matrix()));
  OperatorMatrix P = make(kInvSqrt2 * (px.matrix() + py.matrix()));
  OperatorMatrix Q = make(kInvSqrt2 * (x.matrix() + y.matrix()));
  OperatorMatrix K = make(kInvSqrt2 * (px.matrix() - py.matrix()));
  return {std::move(x), std::move(y), std::move(px), std::move(py),
          std::move(R), std::move(P), std::move(Q), std::move(K)};
}

}  // namespace ncqm
