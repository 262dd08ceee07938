#include "ncqm/fock.hpp"

#include <algorithm>
#include <vector>

#include "ncqm/error.hpp"

namespace ncqm {

namespace {

double inf_norm(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().rowwise().sum().maxCoeff();
}

void require_same_basis(const FockBasis& a, const FockBasis& b) {
  if (!(a == b)) throw Error(ErrorCode::BasisMismatch, "operators live on different Fock bases");
}

std::vector<Eigen::Index> interior_indices(const FockBasis& basis, int margin) {
  if (margin < 0) throw Error(ErrorCode::InvalidArgument, "margin must be non-negative");
  const int limit = basis.cutoff() - margin;
  if (limit < 0) throw Error(ErrorCode::MarginTooLarge, "cutoff - margin is negative");
  std::vector<Eigen::Index> idx;
  for (std::size_t i = 0; i < basis.dim(); ++i) {
    if (basis.total_occupation(i) <= limit) idx.push_back(static_cast<Eigen::Index>(i));
  }
  return idx;
}

}  // namespace

FockBasis::FockBasis(int cutoff) : cutoff_(cutoff) {
  if (cutoff < 2) throw Error(ErrorCode::CutoffTooSmall, "cutoff N must be at least 2");
}

OperatorMatrix::OperatorMatrix(FockBasis basis, Eigen::MatrixXcd entries, bool hermitian_hint)
    : basis_(basis), entries_(std::move(entries)), hermitian_hint_(hermitian_hint) {
  const auto n = static_cast<Eigen::Index>(basis_.dim());
  if (entries_.rows() != n || entries_.cols() != n) {
    throw Error(ErrorCode::BasisMismatch, "matrix shape does not match the basis dimension");
  }
  if (hermitian_hint_ && hermiticity_defect() >= 1e-12) {
    throw Error(ErrorCode::InvalidArgument, "matrix flagged Hermitian is not Hermitian");
  }
}

OperatorMatrix OperatorMatrix::zero(const FockBasis& basis) {
  const auto n = static_cast<Eigen::Index>(basis.dim());
  return {basis, Eigen::MatrixXcd::Zero(n, n), true};
}

OperatorMatrix OperatorMatrix::identity(const FockBasis& basis) {
  const auto n = static_cast<Eigen::Index>(basis.dim());
  return {basis, Eigen::MatrixXcd::Identity(n, n), true};
}

OperatorMatrix OperatorMatrix::adjoint() const {
  return {basis_, entries_.adjoint(), hermitian_hint_};
}

double OperatorMatrix::hermiticity_defect() const {
  // Row sums of |M - M^dag| by direct loop; the operators are mostly zeros,
  // and skipping exact zeros keeps this cheap at cutoff 40.
  const Eigen::Index n = entries_.rows();
  std::vector<double> row(static_cast<std::size_t>(n), 0.0);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const cplx d = entries_(i, j) - std::conj(entries_(j, i));
      if (d != cplx{}) row[static_cast<std::size_t>(i)] += std::abs(d);
    }
  }
  return row.empty() ? 0.0 : *std::max_element(row.begin(), row.end());
}

OperatorMatrix& OperatorMatrix::operator+=(const OperatorMatrix& rhs) {
  require_same_basis(basis_, rhs.basis_);
  entries_ += rhs.entries_;
  hermitian_hint_ = hermitian_hint_ && rhs.hermitian_hint_;
  return *this;
}

OperatorMatrix& OperatorMatrix::operator-=(const OperatorMatrix& rhs) {
  require_same_basis(basis_, rhs.basis_);
  entries_ -= rhs.entries_;
  hermitian_hint_ = hermitian_hint_ && rhs.hermitian_hint_;
  return *this;
}

OperatorMatrix& OperatorMatrix::operator*=(cplx s) {
  entries_ *= s;
  hermitian_hint_ = hermitian_hint_ && s.imag() == 0.0;
  return *this;
}

OperatorMatrix operator*(const OperatorMatrix& lhs, const OperatorMatrix& rhs) {
  require_same_basis(lhs.basis_, rhs.basis_);
  return {lhs.basis_, lhs.entries_ * rhs.entries_, false};
}

StateVector OperatorMatrix::apply(const StateVector& v) const {
  require_same_basis(basis_, v.basis());
  return {basis_, entries_ * v.amplitudes(), false};
}

StateVector::StateVector(FockBasis basis, Eigen::VectorXcd amplitudes, bool normalized_hint)
    : basis_(basis), amplitudes_(std::move(amplitudes)), normalized_hint_(normalized_hint) {
  if (amplitudes_.size() != static_cast<Eigen::Index>(basis_.dim())) {
    throw Error(ErrorCode::BasisMismatch, "vector length does not match the basis dimension");
  }
  if (normalized_hint_ && std::abs(amplitudes_.norm() - 1.0) > 1e-10) {
    throw Error(ErrorCode::InvalidArgument, "vector flagged normalized has norm != 1");
  }
}

StateVector StateVector::basis_state(const FockBasis& basis, int nA, int nB) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis.dim()));
  v(static_cast<Eigen::Index>(basis.index(nA, nB))) = 1.0;
  return {basis, std::move(v), true};
}

cplx inner(const StateVector& u, const StateVector& v) {
  require_same_basis(u.basis(), v.basis());
  return u.amplitudes().dot(v.amplitudes());
}

OperatorMatrix commutator(const OperatorMatrix& u, const OperatorMatrix& v) {
  require_same_basis(u.basis(), v.basis());
  Eigen::MatrixXcd c = u.matrix() * v.matrix();
  c.noalias() -= v.matrix() * u.matrix();
  return {u.basis(), std::move(c), false};
}

double projected_residual(const OperatorMatrix& u, const OperatorMatrix& target, int margin) {
  require_same_basis(u.basis(), target.basis());
  if (margin < 1) throw Error(ErrorCode::InvalidArgument, "margin must be at least 1");
  const auto idx = interior_indices(u.basis(), margin);
  const Eigen::MatrixXcd diff = u.matrix()(idx, idx) - target.matrix()(idx, idx);
  const double scale = std::max(1.0, inf_norm(target.matrix()(idx, idx)));
  return inf_norm(diff) / scale;
}

double projected_eigen_residual(const OperatorMatrix& op, const StateVector& v, cplx value,
                                int margin) {
  require_same_basis(op.basis(), v.basis());
  const auto idx = interior_indices(v.basis(), margin);
  const Eigen::VectorXcd applied = op.matrix() * v.amplitudes();
  const Eigen::VectorXcd expected = value * v.amplitudes();
  const double denom = expected(idx).norm();
  const double num = (applied(idx) - expected(idx)).norm();
  return denom > 0.0 ? num / denom : num;
}

}  // namespace ncqm
