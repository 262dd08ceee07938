#include "ncqm/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "ncqm/error.hpp"

namespace ncqm {

GaussRule gauss_hermite(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "Gauss-Hermite rule needs at least one node");
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    jacobi(k - 1, k) = jacobi(k, k - 1) = std::sqrt(0.5 * k);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  // Christoffel numbers from the orthonormal Hermite recurrence; more accurate in
  // the tails than squared eigenvector components.
  const double phi0 = 1.0 / std::sqrt(std::sqrt(std::numbers::pi));
  for (int i = 0; i < n; ++i) {
    const double x = es.eigenvalues()(i);
    double prev = 0.0;
    double cur = phi0;
    double sum = cur * cur;
    for (int k = 0; k + 1 < n; ++k) {
      const double next = x * std::sqrt(2.0 / (k + 1)) * cur - std::sqrt(double(k) / (k + 1)) * prev;
      prev = cur;
      cur = next;
      sum += cur * cur;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 1.0 / sum;
  }
  // Symmetrize: the rule is exactly symmetric about 0.
  for (int i = 0; i < n / 2; ++i) {
    const int j = n - 1 - i;
    const double x = 0.5 * (rule.nodes[j] - rule.nodes[i]);
    const double w = 0.5 * (rule.weights[i] + rule.weights[j]);
    rule.nodes[i] = -x;
    rule.nodes[j] = x;
    rule.weights[i] = rule.weights[j] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

}  // namespace ncqm
