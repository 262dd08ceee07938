#pragma once

#include <vector>

#include "ncqm/algebra.hpp"
#include "ncqm/fock.hpp"
#include "ncqm/params.hpp"

namespace ncqm {

/// H = c1 eta1^2 + c2 eta2^2 + d1 lambda1^2 + d2 lambda2^2 + d3 lambda1 lambda2
/// in the entangled representation, eta_i = -i d/d lambda_i.
struct ReducedCoefficients {
  double c1;
  double c2;
  double d1;
  double d2;
  double d3;
};

/// After lambda1' = (c2/c1)^{1/4} lambda1, lambda2' = (c1/c2)^{1/4} lambda2:
/// H = c (eta1'^2 + eta2'^2) + f1 lambda1'^2 + f2 lambda2'^2 + d3 lambda1' lambda2'.
struct ScaledCoefficients {
  double c;
  double f1;
  double f2;
  double d3;
};

struct NormalModes {
  double M;
  /// atan2(d3, f2 - f1); the decoupling rotation uses alpha/2.
  double alpha;
  /// Labels of the rotated modes were exchanged so that mode 1 carries Omega_plus.
  bool swapped;
  double A_plus;
  double A_minus;
  double B_plus;
  double B_minus;
  double Omega_plus;
  double Omega_minus;
  /// Eigenvalues of [[f1, d3/2], [d3/2, f2]] and the frequencies 2 sqrt(c e).
  double e_plus;
  double e_minus;
  double Omega_plus_check;
  double Omega_minus_check;
  /// max |Omega(closed form) - Omega(check)| / Omega_plus.
  double discrepancy;
  /// Off-diagonal coefficient left after the rotation.
  double residual_cross;
  /// Omega_minus > 0: bounded, discrete spectrum.
  bool bounded;
};

struct OscillatorSolution {
  OscillatorParams params;
  ReducedCoefficients reduced;
  ScaledCoefficients scaled;
  NormalModes modes;
};

struct SpectrumEntry {
  int n1;
  int n2;
  double energy;
};

/// Throws InvalidRegime.
ReducedCoefficients reduced_coefficients(const OscillatorParams& p);

/// Throws NonPositiveKinetic if c1 or c2 is not positive.
ScaledCoefficients scaled_coefficients(const ReducedCoefficients& r);

/// Throws InvalidRegime, ComplexFrequency.
NormalModes normal_modes(const OscillatorParams& p);

OscillatorSolution solve_oscillator(const OscillatorParams& p);

/// (n1 + 1/2) Omega_plus + (n2 + 1/2) Omega_minus.
double energy(const OscillatorParams& p, int n1, int n2);
double energy(const OscillatorSolution& sol, int n1, int n2);

/// Commutative phase space (mu = nu = 0) closed form.
double commutative_limit_energy(double m, double omega, double hbar, double k, double l, int n1,
                                int n2);

/// Closed form for vanishing couplings (k = l = 0) with mu, nu != 0.
double uncoupled_energy(const NCParameters& nc, double m, double omega, int n1, int n2);

/// The `count` lowest analytic levels, sorted ascending by energy (ties by n1, n2).
std::vector<SpectrumEntry> lowest_levels(const OscillatorSolution& sol, int count);

/// Truncated-Fock matrix of the Hamiltonian, assembled from the phase
/// operators and symmetrized.
OperatorMatrix hamiltonian_matrix(const OscillatorParams& p, const PhaseOperators& ops);

/// Lowest `count` eigenvalues of the truncated Hamiltonian (no convergence check).
std::vector<double> truncated_eigenvalues(const OscillatorParams& p, const FockBasis& basis,
                                          int count);

struct NumericSpectrum {
  std::vector<double> energies;
  /// max_i |E_i(N) - E_i(N-4)|
  double convergence;
};

/// Dense-diagonalization oracle. count <= 12. Throws NotConverged when
/// |E_i(N) - E_i(N-4)| > 1e-6 |E_i| for some level (or N - 4 < 2).
NumericSpectrum numeric_spectrum(const OscillatorParams& p, const FockBasis& basis, int count);

}  // namespace ncqm
