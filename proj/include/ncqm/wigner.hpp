#pragma once

#include <array>
#include <vector>

#include "ncqm/oscillator.hpp"
#include "ncqm/params.hpp"
#include "ncqm/states.hpp"

namespace ncqm {

/// Classical point (x, y, px, py) of the noncommutative phase space.
struct PhasePoint4 {
  double x = 0.0;
  double y = 0.0;
  double px = 0.0;
  double py = 0.0;
};

/// rho/gamma coordinates of the Wigner operator in the lambda representation.
struct ChainCoordinates {
  double rho1;
  double rho2;
  double gamma1;
  double gamma2;

  static ChainCoordinates from(const PhasePoint4& pt, const NCParameters& params);

  /// (rho1 + theta rho2, rho2 + theta rho1): the lambda label consistent with the point.
  std::array<double, 2> center(double theta) const {
    return {rho1 + theta * rho2, rho2 + theta * rho1};
  }
};

/// coeffs . (x, y, px, py) = offset
struct LinearConstraint {
  std::array<double, 4> coeffs;
  double offset;

  double violation(const PhasePoint4& pt) const {
    return coeffs[0] * pt.x + coeffs[1] * pt.y + coeffs[2] * pt.px + coeffs[3] * pt.py - offset;
  }
};

/// prefactor * delta(constraint0) * delta(constraint1)
struct DeltaSupport {
  double prefactor;
  std::array<LinearConstraint, 2> constraints;

  bool contains(const PhasePoint4& pt, double tol) const;
};

/// Wigner function of |lambda>: supported on
///   x - y = sqrt(2 hbar)(mu/nu)^{1/4}(lambda1 - theta lambda2),
///   px + py = sqrt(2 hbar)(nu/mu)^{1/4}(lambda2 - theta lambda1),
/// with prefactor 1/(2 pi hbar sqrt(1 - theta^2)).
DeltaSupport wigner_entangled_delta(const LambdaLabel& label, const NCParameters& params);

/// Wigner function of |xi>: x + y and px - py fixed by the (Q, K) eigenvalues.
DeltaSupport wigner_entangled_delta(const XiLabel& label, const NCParameters& params);

/// Decoupled normal-mode variables and mode energies.
struct DecoupledPoint {
  double x1;
  double p1;
  double x2;
  double p2;
  double H1;
  double H2;
};

/// Result of the classical chain (x, y, px, py) -> (lambda, eta) -> scaled -> rotated.
struct ChainResult {
  DecoupledPoint point;
  /// Intermediate entangled-representation variables.
  double lambda1;
  double lambda2;
  double eta1;
  double eta2;
  /// Determinant of the linear map (x, y, px, py) -> (x1, p1, x2, p2).
  double jacobian;
};

/// Throws SingularChain if 1 - theta^2 <= 0, InvalidRegime if Omega_minus <= 0.
ChainResult chain_map(const PhasePoint4& pt, const OscillatorSolution& sol);

/// Inverse of chain_map's linear part: decoupled (x1, p1, x2, p2) -> phase point.
PhasePoint4 inverse_chain_map(double x1, double p1, double x2, double p2,
                              const OscillatorSolution& sol);

/// Classical value of the coupled-oscillator Hamiltonian.
double classical_hamiltonian(const PhasePoint4& pt, const OscillatorParams& p);

/// Measure for the oscillator Wigner functions: d x1 dp1 dx2 dp2 / (2 pi kWignerActionUnit)^2.
/// The decoupled pairs are canonical with unit commutator, [x_i, p_i] = i, so
/// the unit is 1; the ground-state normalization integral confirms it.
inline constexpr double kWignerActionUnit = 1.0;

/// Standard Laguerre polynomial by the three-term recurrence.
double laguerre(int n, double x);

/// 4 (-1)^(n1+n2) e^{-2H1/Omega+} e^{-2H2/Omega-} L_n1(4H1/Omega+) L_n2(4H2/Omega-)
double wigner_oscillator(const OscillatorSolution& sol, int n1, int n2, const PhasePoint4& pt);

/// Same function of the mode energies directly.
double wigner_oscillator_energies(const OscillatorSolution& sol, int n1, int n2, double H1,
                                  double H2);

struct WignerMoments {
  /// int W dmu with the frozen measure.
  double norm;
  /// int (H1 + H2) W dmu / int W dmu.
  double mean_energy;
};

/// Gauss-Hermite quadrature over decoupled variables; W is evaluated at the
/// phase point obtained by inverting the chain, so the chain map is exercised.
WignerMoments wigner_moments(const OscillatorSolution& sol, int n1, int n2, int nodes_per_axis);

/// Samples of psi(lambda1, lambda2) = <lambda|psi> on a uniform grid;
/// values are stored row-major, index i * n2 + j for (lambda1_min + i h1, lambda2_min + j h2).
struct GridFunction {
  double lambda1_min;
  double lambda2_min;
  double h1;
  double h2;
  int n1;
  int n2;
  std::vector<cplx> values;

  /// Bilinear interpolation; zero outside the grid.
  cplx sample(double lambda1, double lambda2) const;
  cplx at(int i, int j) const { return values[static_cast<std::size_t>(i) * n2 + j]; }
};

/// Wigner function of psi from the lambda-representation Wigner operator:
///   W = sqrt(1-theta^2)/(pi^3 hbar^2) int d^2lambda e^{2i(1-theta^2)(gamma1 lambda2 - gamma2 lambda1)}
///       conj(psi(u - lambda)) psi(u + lambda),   u = (rho1 + theta rho2, rho2 + theta rho1).
/// lambda runs over multiples of the grid spacing; shifted samples use bilinear
/// interpolation. Throws GridTooCoarse, BoundaryLeak.
cplx wigner_transform_lambda_complex(const GridFunction& psi, const ChainCoordinates& pt,
                                     const NCParameters& params);

/// Real part of the above; throws ImaginaryLeak if |Im W| > 1e-8 |W| + 1e-12.
double wigner_transform_lambda(const GridFunction& psi, const ChainCoordinates& pt,
                               const NCParameters& params);

}  // namespace ncqm
