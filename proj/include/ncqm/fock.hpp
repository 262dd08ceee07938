#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <utility>

namespace ncqm {

using cplx = std::complex<double>;

/// Truncated two-mode Fock space with at most `cutoff` quanta per mode.
/// Basis state |nA, nB> sits at index nA * (cutoff + 1) + nB.
class FockBasis {
 public:
  explicit FockBasis(int cutoff);

  int cutoff() const noexcept { return cutoff_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(cutoff_ + 1) * (cutoff_ + 1); }

  std::size_t index(int nA, int nB) const noexcept {
    return static_cast<std::size_t>(nA) * (cutoff_ + 1) + nB;
  }
  std::pair<int, int> occupation(std::size_t i) const noexcept {
    return {static_cast<int>(i / (cutoff_ + 1)), static_cast<int>(i % (cutoff_ + 1))};
  }
  int total_occupation(std::size_t i) const noexcept {
    auto [a, b] = occupation(i);
    return a + b;
  }

  friend bool operator==(const FockBasis&, const FockBasis&) = default;

 private:
  int cutoff_;
};

class StateVector;

/// Dense complex operator on a FockBasis.
class OperatorMatrix {
 public:
  OperatorMatrix(FockBasis basis, Eigen::MatrixXcd entries, bool hermitian_hint = false);

  static OperatorMatrix zero(const FockBasis& basis);
  static OperatorMatrix identity(const FockBasis& basis);

  const FockBasis& basis() const noexcept { return basis_; }
  const Eigen::MatrixXcd& matrix() const noexcept { return entries_; }
  bool hermitian_hint() const noexcept { return hermitian_hint_; }

  OperatorMatrix adjoint() const;

  /// Induced infinity norm of M - M^dag.
  double hermiticity_defect() const;

  OperatorMatrix& operator+=(const OperatorMatrix& rhs);
  OperatorMatrix& operator-=(const OperatorMatrix& rhs);
  OperatorMatrix& operator*=(cplx s);

  friend OperatorMatrix operator+(OperatorMatrix lhs, const OperatorMatrix& rhs) { return lhs += rhs; }
  friend OperatorMatrix operator-(OperatorMatrix lhs, const OperatorMatrix& rhs) { return lhs -= rhs; }
  friend OperatorMatrix operator*(OperatorMatrix lhs, cplx s) { return lhs *= s; }
  friend OperatorMatrix operator*(cplx s, OperatorMatrix rhs) { return rhs *= s; }
  friend OperatorMatrix operator*(const OperatorMatrix& lhs, const OperatorMatrix& rhs);

  StateVector apply(const StateVector& v) const;

 private:
  FockBasis basis_;
  Eigen::MatrixXcd entries_;
  bool hermitian_hint_;
};

class StateVector {
 public:
  StateVector(FockBasis basis, Eigen::VectorXcd amplitudes, bool normalized_hint);

  static StateVector basis_state(const FockBasis& basis, int nA, int nB);

  const FockBasis& basis() const noexcept { return basis_; }
  const Eigen::VectorXcd& amplitudes() const noexcept { return amplitudes_; }
  bool normalized_hint() const noexcept { return normalized_hint_; }
  double norm() const { return amplitudes_.norm(); }

 private:
  FockBasis basis_;
  Eigen::VectorXcd amplitudes_;
  bool normalized_hint_;
};

/// <u|v> (antilinear in the first argument).
cplx inner(const StateVector& u, const StateVector& v);

/// u v - v u. Throws BasisMismatch.
OperatorMatrix commutator(const OperatorMatrix& u, const OperatorMatrix& v);

/// ||P (u - target) P|| / max(1, ||P target P||) with P the projector onto total
/// occupation <= cutoff - margin. Norms are induced infinity norms. Truncation
/// defects of the ladder algebra live in the top shells, which P removes.
double projected_residual(const OperatorMatrix& u, const OperatorMatrix& target, int margin);

/// Relative residual of an eigen-relation op v = value v restricted to total
/// occupation <= cutoff - margin (Euclidean norms).
double projected_eigen_residual(const OperatorMatrix& op, const StateVector& v, cplx value,
                                int margin);

}  // namespace ncqm
