#include "ncqm/states.hpp"

#include <Eigen/Sparse>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "ncqm/error.hpp"
#include "ncqm/quadrature.hpp"

namespace ncqm {

namespace {

constexpr cplx kI{0.0, 1.0};

/// Creation-only exponent c_a a^dag + c_b b^dag + q_aa a^dag^2 + q_ab a^dag b^dag + q_bb b^dag^2.
struct CreationExponent {
  cplx c_a{};
  cplx c_b{};
  cplx q_aa{};
  cplx q_ab{};
  cplx q_bb{};
};

using SparseC = Eigen::SparseMatrix<cplx>;

/// Precomputed creation monomials for repeated series evaluation.
class CreationSeries {
 public:
  explicit CreationSeries(const ModeOperators& modes)
      : basis_(modes.a.basis()),
        ad_(modes.a_dag.matrix().sparseView()),
        bd_(modes.b_dag.matrix().sparseView()),
        adad_(ad_ * ad_),
        adbd_(ad_ * bd_),
        bdbd_(bd_ * bd_) {}

  /// prefactor * exp(X)|00>. X strictly raises total occupation, so the series
  /// terminates after at most 2N terms, and because creation operators never
  /// map states outside the box back into it, the result is the exact
  /// projection of the untruncated state.
  Eigen::VectorXcd apply(const CreationExponent& e, cplx prefactor) const {
    const SparseC x = e.c_a * ad_ + e.c_b * bd_ + e.q_aa * adad_ + e.q_ab * adbd_ + e.q_bb * bdbd_;
    const auto n = static_cast<Eigen::Index>(basis_.dim());
    Eigen::VectorXcd term = Eigen::VectorXcd::Zero(n);
    term(0) = 1.0;
    Eigen::VectorXcd sum = term;
    const int max_order = 2 * basis_.cutoff();
    for (int k = 1; k <= max_order; ++k) {
      term = (x * term) / static_cast<double>(k);
      sum += term;
    }
    return prefactor * sum;
  }

  const FockBasis& basis() const noexcept { return basis_; }

 private:
  FockBasis basis_;
  SparseC ad_;
  SparseC bd_;
  SparseC adad_;
  SparseC adbd_;
  SparseC bdbd_;
};

/// exp(G) v for anti-Hermitian G: Taylor series on G/s applied s times, with
/// s >= ||G||_1 so every partial series converges within ~20 terms.
Eigen::VectorXcd exp_action(const SparseC& g, Eigen::VectorXcd v) {
  double norm1 = 0.0;
  for (Eigen::Index j = 0; j < g.outerSize(); ++j) {
    double col = 0.0;
    for (SparseC::InnerIterator it(g, j); it; ++it) col += std::abs(it.value());
    norm1 = std::max(norm1, col);
  }
  const int steps = std::max(1, static_cast<int>(std::ceil(norm1)));
  for (int s = 0; s < steps; ++s) {
    Eigen::VectorXcd term = v;
    for (int k = 1; k <= 60; ++k) {
      term = (g * term) / (static_cast<double>(steps) * k);
      v += term;
      if (term.norm() <= 1e-17 * v.norm()) break;
    }
  }
  return v;
}

double theta_of(const ModeOperators& modes) { return modes.theta; }

CreationExponent lambda_exponent(const LambdaLabel& label, double theta) {
  const cplx lam = label.value();
  const double kappa = 1.0 / (1.0 - theta * theta);
  return {lam, -std::conj(lam), -0.5 * kI * theta * kappa, kappa, 0.5 * kI * theta * kappa};
}

cplx lambda_prefactor(const LambdaLabel& label, double theta) {
  return std::exp(-0.5 * std::norm(label.value()) + theta * label.lambda1 * label.lambda2);
}

CreationExponent xi_exponent(const XiLabel& label, double theta) {
  const cplx xi = label.value();
  const double kappa = 1.0 / (1.0 - theta * theta);
  return {xi, std::conj(xi), 0.5 * kI * theta * kappa, -kappa, -0.5 * kI * theta * kappa};
}

cplx xi_prefactor(const XiLabel& label, double theta) {
  return std::exp(-0.5 * std::norm(label.value()) - theta * label.xi1 * label.xi2);
}

cplx coherent_prefactor(const CoherentLabel& l, double theta) {
  const cplx a = l.alpha;
  const cplx b = l.beta;
  return std::exp(-0.5 * (std::norm(a) + std::norm(b)) +
                  0.5 * kI * theta * (a * std::conj(b) - std::conj(a) * b));
}

void require_deformation(double theta) {
  if (!(theta > 0.0 && theta < 1.0)) {
    throw Error(ErrorCode::InvalidDeformation, "entangled states need 0 < theta < 1");
  }
}

double inf_norm(const Eigen::MatrixXcd& m) { return m.cwiseAbs().rowwise().sum().maxCoeff(); }

}  // namespace

StateVector coherent_state_vector(const CoherentLabel& label, const ModeOperators& modes) {
  const FockBasis& basis = modes.a.basis();
  const double load = std::norm(label.alpha) + std::norm(label.beta);
  if (load > basis.cutoff() / 4.0) {
    throw Error(ErrorCode::CutoffTooSmall,
                "|alpha|^2 + |beta|^2 exceeds N/4; increase the cutoff");
  }
  const Eigen::MatrixXcd generator =
      label.alpha * modes.a_dag.matrix() + label.beta * modes.b_dag.matrix() -
      std::conj(label.alpha) * modes.a.matrix() - std::conj(label.beta) * modes.b.matrix();
  Eigen::VectorXcd vacuum = Eigen::VectorXcd::Zero(generator.rows());
  vacuum(0) = 1.0;
  Eigen::VectorXcd v = exp_action(generator.sparseView(), std::move(vacuum));
  return {basis, std::move(v), true};
}

StateVector coherent_state_vector_normal_ordered(const CoherentLabel& label,
                                                 const ModeOperators& modes) {
  const CreationSeries series(modes);
  const CreationExponent e{label.alpha, label.beta, 0.0, 0.0, 0.0};
  return {series.basis(), series.apply(e, coherent_prefactor(label, theta_of(modes))), false};
}

cplx coherent_overlap(const CoherentLabel& l1, const CoherentLabel& l2, double theta) {
  if (!(std::abs(theta) < 1.0)) {
    throw Error(ErrorCode::InvalidDeformation, "coherent overlap needs |theta| < 1");
  }
  const cplx ap = l1.alpha, bp = l1.beta;
  const cplx a = l2.alpha, b = l2.beta;
  const cplx exponent =
      -0.5 * (std::norm(a) + std::norm(b) + std::norm(ap) + std::norm(bp)) + std::conj(ap) * a +
      std::conj(bp) * b +
      0.5 * kI * theta * (std::conj(b) * a - std::conj(a) * b + std::conj(bp) * ap - std::conj(ap) * bp) +
      kI * theta * (std::conj(ap) * b - std::conj(bp) * a);
  return std::exp(exponent);
}

StateVector lambda_state_vector(const LambdaLabel& label, const ModeOperators& modes) {
  const double theta = theta_of(modes);
  require_deformation(theta);
  const CreationSeries series(modes);
  return {series.basis(), series.apply(lambda_exponent(label, theta), lambda_prefactor(label, theta)),
          false};
}

StateVector xi_state_vector(const XiLabel& label, const ModeOperators& modes) {
  const double theta = theta_of(modes);
  require_deformation(theta);
  const CreationSeries series(modes);
  return {series.basis(), series.apply(xi_exponent(label, theta), xi_prefactor(label, theta)), false};
}

cplx lambda_xi_overlap(const LambdaLabel& l, const XiLabel& x, double theta) {
  if (!(std::abs(theta) < 1.0)) {
    throw Error(ErrorCode::InvalidDeformation, "overlap needs |theta| < 1");
  }
  const double phase = (l.lambda1 * x.xi2 - l.lambda2 * x.xi1) +
                       theta * (l.lambda1 * x.xi1 - l.lambda2 * x.xi2);
  return 0.5 * std::exp(kI * phase);
}

std::pair<double, double> lambda_eigenvalues(const LambdaLabel& label, const NCParameters& params) {
  const double sh = std::sqrt(params.hbar());
  const double t = params.theta();
  return {sh * params.length_ratio() * (label.lambda1 - t * label.lambda2),
          sh * params.momentum_ratio() * (label.lambda2 - t * label.lambda1)};
}

std::pair<double, double> xi_eigenvalues(const XiLabel& label, const NCParameters& params) {
  const double sh = std::sqrt(params.hbar());
  const double t = params.theta();
  return {sh * params.length_ratio() * (label.xi1 + t * label.xi2),
          sh * params.momentum_ratio() * (label.xi2 + t * label.xi1)};
}

std::pair<cplx, cplx> lambda_ladder_eigenvalues(const LambdaLabel& label, double theta) {
  const cplx lam = label.value();
  return {lam - kI * theta * std::conj(lam), -(std::conj(lam) + kI * theta * lam)};
}

double identity_resolution_residual(const NCParameters& params, const ModeOperators& modes,
                                    const QuadratureSpec& quad) {
  if (quad.nodes_per_axis < 8) {
    throw Error(ErrorCode::QuadratureTooCoarse, "need at least 8 Gauss-Hermite nodes per axis");
  }
  constexpr int kBlockOccupation = 4;
  if (modes.a.basis().cutoff() < kBlockOccupation) {
    throw Error(ErrorCode::CutoffTooSmall, "identity resolution needs cutoff >= 4");
  }
  // Block amplitudes are exact projections, so a cutoff-4 space reproduces them
  // for any larger cutoff at a fraction of the cost.
  const FockBasis small(kBlockOccupation);
  const ModeOperators small_modes = build_mode_operators(params, small);
  const CreationSeries series(small_modes);
  const double theta = params.theta();

  std::vector<Eigen::Index> block;
  for (std::size_t i = 0; i < small.dim(); ++i) {
    if (small.total_occupation(i) <= kBlockOccupation) block.push_back(static_cast<Eigen::Index>(i));
  }
  const auto bdim = static_cast<Eigen::Index>(block.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(bdim, bdim);

  const GaussRule rule = gauss_hermite(quad.nodes_per_axis);
  const int n = quad.nodes_per_axis;
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) w[i] = rule.weights[i] * std::exp(rule.nodes[i] * rule.nodes[i]);

  auto accumulate = [&](const Eigen::VectorXcd& v, double weight) {
    const Eigen::VectorXcd b = v(block);
    m.noalias() += weight * (b * b.adjoint());
  };

  double norm = 0.0;
  if (quad.kind == ResolutionKind::Coherent) {
    norm = (1.0 - theta * theta) / (std::numbers::pi * std::numbers::pi);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            const CoherentLabel label{{rule.nodes[i], rule.nodes[j]}, {rule.nodes[k], rule.nodes[l]}};
            const CreationExponent e{label.alpha, label.beta, 0.0, 0.0, 0.0};
            accumulate(series.apply(e, coherent_prefactor(label, theta)), w[i] * w[j] * w[k] * w[l]);
          }
  } else {
    norm = std::sqrt(1.0 - theta * theta) / std::numbers::pi;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const double u = rule.nodes[i];
        const double v = rule.nodes[j];
        if (quad.kind == ResolutionKind::Lambda) {
          const LambdaLabel label{u, v};
          accumulate(series.apply(lambda_exponent(label, theta), lambda_prefactor(label, theta)), w[i] * w[j]);
        } else {
          const XiLabel label{u, v};
          accumulate(series.apply(xi_exponent(label, theta), xi_prefactor(label, theta)), w[i] * w[j]);
        }
      }
  }
  m *= norm;
  return inf_norm(m - Eigen::MatrixXcd::Identity(bdim, bdim));
}

}  // namespace ncqm
