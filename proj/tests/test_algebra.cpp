#include "doctest.h"

#include <cmath>

#include "ncqm/algebra.hpp"
#include "ncqm/error.hpp"

using namespace ncqm;

namespace {

OperatorMatrix scalar(const FockBasis& basis, cplx c) { return OperatorMatrix::identity(basis) * c; }

}  // namespace

TEST_CASE("parameters validate the deformation range") {
  auto p = NCParameters::make(0.25, 0.25, 1.0);
  CHECK(p.theta() == doctest::Approx(0.25));
  CHECK_THROWS_AS(NCParameters::make(1.2, 1.2, 1.0), Error);
  try {
    NCParameters::make(1.0, 1.0, 1.0);
    FAIL("theta = 1 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidDeformation);
  }
  CHECK_THROWS_AS(NCParameters::make(-0.1, 0.1, 1.0), Error);
  CHECK_THROWS_AS(NCParameters::make(0.1, 0.1, 0.0), Error);
  CHECK_THROWS_AS(NCParameters::make(std::nan(""), 0.1, 1.0), Error);
}

TEST_CASE("Fock basis layout") {
  CHECK_THROWS_AS(FockBasis(1), Error);
  FockBasis b(3);
  CHECK(b.dim() == 16);
  CHECK(b.index(2, 1) == 9);
  CHECK(b.occupation(9) == std::pair{2, 1});
  CHECK(b.total_occupation(15) == 6);
}

TEST_CASE("standard ladders") {
  FockBasis basis(6);
  auto A = standard_annihilator_A(basis);
  auto Ad = A.adjoint();
  CHECK(projected_residual(commutator(A, Ad), OperatorMatrix::identity(basis), 1) < 1e-14);
  auto v = A.apply(StateVector::basis_state(basis, 3, 2));
  CHECK(std::abs(v.amplitudes()(basis.index(2, 2)) - std::sqrt(3.0)) < 1e-15);
  CHECK_THROWS_AS(projected_residual(A, A, 13), Error);
  CHECK(projected_residual(A, A, 1) == 0.0);
}

TEST_CASE("basis mismatch is rejected") {
  auto A4 = standard_annihilator_A(FockBasis(4));
  auto A5 = standard_annihilator_A(FockBasis(5));
  try {
    commutator(A4, A5);
    FAIL("mismatched bases accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BasisMismatch);
  }
}

TEST_CASE("deformed boson algebra on the truncated space") {
  auto p = NCParameters::make(0.6, 0.6, 1.0);
  FockBasis basis(10);
  auto m = build_mode_operators(p, basis);
  CHECK(m.phi == doctest::Approx(0.5 * std::asin(0.6)));
  const cplx i{0.0, 1.0};
  CHECK(projected_residual(commutator(m.a, m.b_dag), scalar(basis, 0.6 * i), 2) < 1e-12);
  CHECK(projected_residual(commutator(m.b, m.a_dag), scalar(basis, -0.6 * i), 1) < 1e-12);
  CHECK(projected_residual(commutator(m.a, m.a_dag), scalar(basis, 1.0), 1) < 1e-12);
  CHECK(projected_residual(commutator(m.b, m.b_dag), scalar(basis, 1.0), 1) < 1e-12);
  CHECK(projected_residual(commutator(m.a, m.b), OperatorMatrix::zero(basis), 1) < 1e-12);
  CHECK((m.a.adjoint().matrix() - m.a_dag.matrix()).norm() == 0.0);
}

TEST_CASE("tiny theta passes the standard ladders through") {
  auto p = NCParameters::make(1e-9, 1e-9, 1.0);
  FockBasis basis(4);
  auto m = build_mode_operators(p, basis);
  CHECK((m.a.matrix() - m.A.matrix()).norm() < 1e-8);
  CHECK((m.b.matrix() - m.B.matrix()).norm() < 1e-8);
}

TEST_CASE("phase operator scales") {
  FockBasis basis(5);
  {
    auto p = NCParameters::make(0.25, 0.25, 1.0);
    auto m = build_mode_operators(p, basis);
    auto ph = build_phase_operators(p, m);
    auto expect = (m.a + m.a_dag) * cplx{1.0 / std::sqrt(2.0)};
    CHECK((ph.x.matrix() - expect.matrix()).norm() < 1e-14);
  }
  {
    auto p = NCParameters::make(0.4, 0.1, 1.0);
    CHECK(p.theta() == doctest::Approx(0.2));
    auto m = build_mode_operators(p, basis);
    auto ph = build_phase_operators(p, m);
    CHECK((ph.x.matrix() - (m.a + m.a_dag).matrix()).norm() < 1e-14);
    auto expect = (m.a - m.a_dag) * cplx{0.0, -0.5};
    CHECK((ph.px.matrix() - expect.matrix()).norm() < 1e-14);
  }
}

TEST_CASE("noncommutative phase space relations") {
  auto p = NCParameters::make(0.3, 0.2, 1.1);
  FockBasis basis(20);
  auto m = build_mode_operators(p, basis);
  auto ph = build_phase_operators(p, m);
  const cplx i{0.0, 1.0};
  const auto zero = OperatorMatrix::zero(basis);
  CHECK(projected_residual(commutator(ph.x, ph.px), scalar(basis, i * 1.1), 2) < 1e-10);
  CHECK(projected_residual(commutator(ph.y, ph.py), scalar(basis, i * 1.1), 2) < 1e-10);
  CHECK(projected_residual(commutator(ph.x, ph.y), scalar(basis, i * 0.3), 2) < 1e-10);
  CHECK(projected_residual(commutator(ph.px, ph.py), scalar(basis, i * 0.2), 2) < 1e-10);
  CHECK(projected_residual(commutator(ph.x, ph.py), zero, 2) < 1e-10);
  CHECK(projected_residual(commutator(ph.y, ph.px), zero, 2) < 1e-10);
  CHECK(projected_residual(commutator(ph.R, ph.P), zero, 2) < 1e-10);
  CHECK(projected_residual(commutator(ph.Q, ph.K), zero, 2) < 1e-10);
  CHECK(projected_residual(commutator(ph.R, ph.Q), scalar(basis, i * 0.3), 2) < 1e-10);
  for (const auto* op : {&ph.x, &ph.y, &ph.px, &ph.py, &ph.R, &ph.P, &ph.Q, &ph.K}) {
    CHECK(op->hermiticity_defect() <= 1e-12);
  }
  auto R = (ph.x - ph.y) * cplx{1.0 / std::sqrt(2.0)};
  CHECK((R.matrix() - ph.R.matrix()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("construction is deterministic") {
  auto p = NCParameters::make(0.1, 0.2, 1.0);
  FockBasis basis(6);
  auto p1 = build_phase_operators(p, build_mode_operators(p, basis));
  auto p2 = build_phase_operators(p, build_mode_operators(p, basis));
  CHECK(p1.K.matrix() == p2.K.matrix());
}

TEST_CASE("hermitian hint is enforced") {
  FockBasis basis(2);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(9, 9);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(OperatorMatrix(basis, m, true), Error);
  CHECK_NOTHROW(OperatorMatrix(basis, m, false));
}
