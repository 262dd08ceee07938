#include "ncqm/lambda_rep.hpp"

#include <cmath>

#include "ncqm/error.hpp"

namespace ncqm {

namespace {

constexpr cplx kI{0.0, 1.0};

using W = WeylPolynomial;

}  // namespace

WeylPolynomial lambda_rep_operator(PhaseComponent which, const NCParameters& params) {
  const double t = params.theta();
  const double sx = params.position_scale();
  const double sp = params.momentum_scale();
  const W u = W::lambda1() - t * W::lambda2();  // lambda1 - theta lambda2
  const W v = W::lambda2() - t * W::lambda1();  // lambda2 - theta lambda1
  switch (which) {
    case PhaseComponent::X: return sx * (u + kI * W::d2());
    case PhaseComponent::Y: return sx * (kI * W::d2() - u);
    case PhaseComponent::Px: return sp * (v - kI * W::d1());
    case PhaseComponent::Py: return sp * (v + kI * W::d1());
  }
  throw Error(ErrorCode::InvalidArgument, "unknown phase component");
}

WeylPolynomial xi_rep_operator(PhaseComponent which, const NCParameters& params) {
  const double t = params.theta();
  const double sx = params.position_scale();
  const double sp = params.momentum_scale();
  const W q = W::lambda1() + t * W::lambda2();  // xi1 + theta xi2
  const W k = W::lambda2() + t * W::lambda1();  // xi2 + theta xi1
  switch (which) {
    case PhaseComponent::X: return sx * (q + kI * W::d2());
    case PhaseComponent::Y: return sx * (q - kI * W::d2());
    case PhaseComponent::Px: return sp * (k - kI * W::d1());
    case PhaseComponent::Py: return sp * (W::constant(0.0) - k - kI * W::d1());
  }
  throw Error(ErrorCode::InvalidArgument, "unknown phase component");
}

WeylPolynomial hamiltonian_lambda_form(const OscillatorParams& op) {
  op.validate();
  const W x = lambda_rep_operator(PhaseComponent::X, op.nc);
  const W y = lambda_rep_operator(PhaseComponent::Y, op.nc);
  const W px = lambda_rep_operator(PhaseComponent::Px, op.nc);
  const W py = lambda_rep_operator(PhaseComponent::Py, op.nc);
  const double m = op.m, w = op.omega;
  W h = (1.0 / (2.0 * m)) * (px * px + py * py);
  h += (m * w * w / 2.0) * (x * x + y * y);
  h += (op.k / 2.0) * (x * y + y * x);
  h += (op.l / 2.0) * (px * py + py * px);
  return h;
}

bool has_reduced_support(const WeylPolynomial& p) {
  for (const auto& [m, c] : p.terms()) {
    const bool allowed = m == WeylMonomial{0, 0, 2, 0} || m == WeylMonomial{0, 0, 0, 2} ||
                         m == WeylMonomial{2, 0, 0, 0} || m == WeylMonomial{0, 2, 0, 0} ||
                         m == WeylMonomial{1, 1, 0, 0};
    if (!allowed) return false;
  }
  return true;
}

ReducedCoefficients extract_reduced_coefficients(const WeylPolynomial& p) {
  if (!has_reduced_support(p)) {
    throw Error(ErrorCode::InvalidArgument, "operator is not of the reduced quadratic form");
  }
  auto real_of = [](cplx c) {
    if (std::abs(c.imag()) > 1e-12) {
      throw Error(ErrorCode::InvalidArgument, "reduced coefficient has an imaginary part");
    }
    return c.real();
  };
  return {-real_of(p.coefficient({0, 0, 2, 0})), -real_of(p.coefficient({0, 0, 0, 2})),
          real_of(p.coefficient({2, 0, 0, 0})), real_of(p.coefficient({0, 2, 0, 0})),
          real_of(p.coefficient({1, 1, 0, 0}))};
}

}  // namespace ncqm
