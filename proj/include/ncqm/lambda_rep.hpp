#pragma once

#include "ncqm/oscillator.hpp"
#include "ncqm/params.hpp"
#include "ncqm/weyl.hpp"

namespace ncqm {

enum class PhaseComponent { X, Y, Px, Py };

/// Coordinate/momentum operators acting on wavefunctions psi(lambda1, lambda2) = <lambda|psi>:
///   x  -> sqrt(hbar/2)(mu/nu)^{1/4} ( lambda1 - theta lambda2 + i d2)
///   y  -> sqrt(hbar/2)(mu/nu)^{1/4} (-lambda1 + theta lambda2 + i d2)
///   px -> sqrt(hbar/2)(nu/mu)^{1/4} ( lambda2 - theta lambda1 - i d1)
///   py -> sqrt(hbar/2)(nu/mu)^{1/4} ( lambda2 - theta lambda1 + i d1)
WeylPolynomial lambda_rep_operator(PhaseComponent which, const NCParameters& params);

/// Same operators on xi-wavefunctions (variables xi1, xi2 stored in the
/// lambda1/lambda2 slots):
///   x  -> sqrt(hbar/2)(mu/nu)^{1/4} ( xi1 + theta xi2 + i d2)
///   y  -> sqrt(hbar/2)(mu/nu)^{1/4} ( xi1 + theta xi2 - i d2)
///   px -> sqrt(hbar/2)(nu/mu)^{1/4} ( xi2 + theta xi1 - i d1)
///   py -> sqrt(hbar/2)(nu/mu)^{1/4} (-xi2 - theta xi1 - i d1)
WeylPolynomial xi_rep_operator(PhaseComponent which, const NCParameters& params);

/// The coupled-oscillator Hamiltonian with lambda_rep_operator substituted,
/// normal ordered.
WeylPolynomial hamiltonian_lambda_form(const OscillatorParams& op);

/// True when every monomial of p is one of d1^2, d2^2, lambda1^2, lambda2^2,
/// lambda1 lambda2.
bool has_reduced_support(const WeylPolynomial& p);

/// Reads (c1, c2, d1, d2, d3) off a Hamiltonian in reduced form
/// (eta^2 = -d^2, so c_i = -coefficient of d_i^2). Coefficients must be real
/// within 1e-12; throws InvalidArgument otherwise or when the support is wrong.
ReducedCoefficients extract_reduced_coefficients(const WeylPolynomial& p);

}  // namespace ncqm
