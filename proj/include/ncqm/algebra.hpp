#pragma once

#include "ncqm/fock.hpp"
#include "ncqm/params.hpp"

namespace ncqm {

/// Deformed two-mode ladder operators
///   [a, a^dag] = [b, b^dag] = 1,  [a, b] = 0,  [a, b^dag] = -[b, a^dag] = i theta
/// realized on standard modes A, B by the rotation
///   a = cos(phi) A + i sin(phi) B,   b = cos(phi) B - i sin(phi) A,   phi = asin(theta)/2.
/// The standard vacuum is annihilated by both a and b.
struct ModeOperators {
  OperatorMatrix a;
  OperatorMatrix b;
  OperatorMatrix a_dag;
  OperatorMatrix b_dag;
  OperatorMatrix A;
  OperatorMatrix B;
  double phi;
  double theta;
};

/// Noncommutative coordinates/momenta and the EPR-type combinations
/// R = (x - y)/sqrt2, P = (px + py)/sqrt2, Q = (x + y)/sqrt2, K = (px - py)/sqrt2.
struct PhaseOperators {
  OperatorMatrix x;
  OperatorMatrix y;
  OperatorMatrix px;
  OperatorMatrix py;
  OperatorMatrix R;
  OperatorMatrix P;
  OperatorMatrix Q;
  OperatorMatrix K;
};

/// Standard truncated annihilators (A on mode A, B on mode B).
OperatorMatrix standard_annihilator_A(const FockBasis& basis);
OperatorMatrix standard_annihilator_B(const FockBasis& basis);

double bogoliubov_angle(const NCParameters& params);

ModeOperators build_mode_operators(const NCParameters& params, const FockBasis& basis);

PhaseOperators build_phase_operators(const NCParameters& params, const ModeOperators& modes);

}  // namespace ncqm
