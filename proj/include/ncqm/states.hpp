#pragma once

#include <utility>

#include "ncqm/algebra.hpp"
#include "ncqm/fock.hpp"
#include "ncqm/params.hpp"

namespace ncqm {

/// Label of the two-mode coherent state |alpha, beta>, a simultaneous eigenstate
/// of the deformed annihilators a and b.
struct CoherentLabel {
  cplx alpha;
  cplx beta;
};

/// lambda = lambda1 + i lambda2 labels the simultaneous eigenstate of (R, P).
struct LambdaLabel {
  double lambda1;
  double lambda2;
  cplx value() const { return {lambda1, lambda2}; }
};

/// xi = xi1 + i xi2 labels the simultaneous eigenstate of (Q, K).
struct XiLabel {
  double xi1;
  double xi2;
  cplx value() const { return {xi1, xi2}; }
};

/// exp(alpha a^dag + beta b^dag - h.c.)|00> on the truncated space: the
/// exponential's action on the vacuum by a scaled Taylor series (the matrix
/// exponential itself is never formed). Throws CutoffTooSmall when
/// |alpha|^2 + |beta|^2 > N/4.
StateVector coherent_state_vector(const CoherentLabel& label, const ModeOperators& modes);

/// Normal-ordered form of the same state,
///   exp(-(|alpha|^2+|beta|^2)/2 + i theta (alpha beta* - alpha* beta)/2) exp(alpha a^dag + beta b^dag)|00>,
/// evaluated by the terminating creation series. Components are the exact
/// projection of the infinite-dimensional state onto the truncated box.
StateVector coherent_state_vector_normal_ordered(const CoherentLabel& label, const ModeOperators& modes);

/// Closed-form <l1|l2> (l1 primed, l2 unprimed).
cplx coherent_overlap(const CoherentLabel& l1, const CoherentLabel& l2, double theta);

/// Unnormalized truncation of the |lambda> eigenstate of (R, P). Exact
/// projection onto the truncated box; normalized_hint is false.
StateVector lambda_state_vector(const LambdaLabel& label, const ModeOperators& modes);

/// Unnormalized truncation of the |xi> eigenstate of (Q, K).
StateVector xi_state_vector(const XiLabel& label, const ModeOperators& modes);

/// <lambda|xi> = exp(i(l1 x2 - l2 x1) + i theta (l1 x1 - l2 x2)) / 2.
cplx lambda_xi_overlap(const LambdaLabel& l, const XiLabel& x, double theta);

/// Eigenvalues of (R, P) on |lambda>.
std::pair<double, double> lambda_eigenvalues(const LambdaLabel& label, const NCParameters& params);

/// Eigenvalues of (Q, K) on |xi>.
std::pair<double, double> xi_eigenvalues(const XiLabel& label, const NCParameters& params);

/// Eigenvalues of (a - b^dag, b - a^dag) on |lambda>.
std::pair<cplx, cplx> lambda_ladder_eigenvalues(const LambdaLabel& label, double theta);

enum class ResolutionKind { Coherent, Lambda, Xi };

struct QuadratureSpec {
  int nodes_per_axis = 16;
  ResolutionKind kind = ResolutionKind::Coherent;
};

/// || M - 1 || on the block of total occupation <= 4, where M is the
/// Gauss-Hermite discretization of the resolution of the identity
///   Coherent:  (1 - theta^2)/pi^2     int d^2alpha d^2beta |alpha,beta><alpha,beta|
///   Lambda:    sqrt(1 - theta^2)/pi   int d^2lambda        |lambda><lambda|
///   Xi:        sqrt(1 - theta^2)/pi   int d^2xi            |xi><xi|
/// Throws QuadratureTooCoarse below 8 nodes per axis; modes must have N >= 4.
double identity_resolution_residual(const NCParameters& params, const ModeOperators& modes,
                                    const QuadratureSpec& quad);

}  // namespace ncqm
