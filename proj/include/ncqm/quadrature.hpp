#pragma once

#include <vector>

namespace ncqm {

/// Nodes and weights of an n-point Gauss rule.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Hermite rule for the weight exp(-x^2) on the real line (Golub-Welsch).
GaussRule gauss_hermite(int n);

}  // namespace ncqm
