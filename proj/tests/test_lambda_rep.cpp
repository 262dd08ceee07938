#include "doctest.h"

#include <cmath>
#include <random>

#include "ncqm/algebra.hpp"
#include "ncqm/error.hpp"
#include "ncqm/lambda_rep.hpp"
#include "ncqm/oscillator.hpp"
#include "ncqm/weyl.hpp"

using namespace ncqm;

namespace {

constexpr cplx kI{0.0, 1.0};
using W = WeylPolynomial;

W random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, 3);
  std::uniform_int_distribution<int> coef(-3, 3);
  W p;
  for (int t = 0; t < 4; ++t) {
    WeylMonomial m{deg(rng), deg(rng), deg(rng), deg(rng)};
    if (m.degree() > 3) continue;
    p += W::monomial(m, cplx(coef(rng), coef(rng)));
  }
  return p;
}

void check_eq1(WeylPolynomial (*rep)(PhaseComponent, const NCParameters&),
               const NCParameters& p) {
  using enum PhaseComponent;
  const auto x = rep(X, p), y = rep(Y, p), px = rep(Px, p), py = rep(Py, p);
  const cplx ih = kI * p.hbar();
  CHECK(max_coefficient_difference(weyl_commutator(x, y), W::constant(kI * p.mu())) < 1e-12);
  CHECK(max_coefficient_difference(weyl_commutator(px, py), W::constant(kI * p.nu())) < 1e-12);
  CHECK(max_coefficient_difference(weyl_commutator(x, px), W::constant(ih)) < 1e-12);
  CHECK(max_coefficient_difference(weyl_commutator(y, py), W::constant(ih)) < 1e-12);
  CHECK(weyl_commutator(x, py).is_zero());
  CHECK(weyl_commutator(y, px).is_zero());
}

}  // namespace

TEST_CASE("normal ordering rules") {
  const auto l1 = W::lambda1(), l2 = W::lambda2(), d1 = W::d1(), d2 = W::d2();
  CHECK(d1 * l1 == W::monomial({1, 0, 1, 0}) + W::constant(1.0));
  CHECK(weyl_commutator(d1, l1 * l1) == 2.0 * l1);
  CHECK((l1 * d2) * (l2 * d1) == W::monomial({1, 1, 1, 1}) + W::monomial({1, 0, 1, 0}));
  CHECK(weyl_commutator(d2, l1).is_zero());
  CHECK(W::constant(2.0).is_scalar());
  CHECK_FALSE(l1.is_scalar());
}

TEST_CASE("multiplication is associative") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const W p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    CHECK(max_coefficient_difference((p * q) * r, p * (q * r)) == 0.0);
  }
}

TEST_CASE("operator action on polynomials") {
  const auto f = PolynomialFunction::monomial(3, 0);
  CHECK(apply_weyl(W::d1(), f) == PolynomialFunction::monomial(2, 0, 3.0));
  const auto g = PolynomialFunction::monomial(2, 1) + PolynomialFunction::monomial(0, 0, 2.0);
  CHECK(apply_weyl(W::constant(1.0), g) == g);

  auto p = NCParameters::make(0.3, 0.2, 1.0);
  using enum PhaseComponent;
  const auto c = weyl_commutator(lambda_rep_operator(X, p), lambda_rep_operator(Y, p));
  const auto out = apply_weyl(c, g);
  CHECK(std::abs(out.coefficient(2, 1) - kI * 0.3) < 1e-14);
  CHECK(std::abs(out.coefficient(0, 0) - kI * 0.6) < 1e-14);

  // (l1 d2)(l2 d1) applied to l1^2 l2 two ways
  const auto f3 = PolynomialFunction::monomial(2, 1);
  const auto lhs = apply_weyl(W::lambda1() * W::d2(), apply_weyl(W::lambda2() * W::d1(), f3));
  CHECK(lhs == apply_weyl((W::lambda1() * W::d2()) * (W::lambda2() * W::d1()), f3));
  CHECK(lhs == PolynomialFunction::monomial(2, 1, 4.0));
}

TEST_CASE("both entangled representations reproduce the commutation relations") {
  for (auto [mu, nu, hbar] : {std::tuple{0.3, 0.2, 1.0}, {0.02, 0.5, 0.7}, {0.25, 0.25, 1.0}}) {
    const auto p = NCParameters::make(mu, nu, hbar);
    check_eq1(&lambda_rep_operator, p);
    check_eq1(&xi_rep_operator, p);
  }
}

TEST_CASE("xi representation collapses to the EPR pair as theta vanishes") {
  const auto p = NCParameters::make(1e-20, 1e-20, 1.0);
  using enum PhaseComponent;
  const auto x = xi_rep_operator(X, p);
  const double s = std::sqrt(0.5);
  CHECK(std::abs(x.coefficient({1, 0, 0, 0}) - s) < 1e-15);
  CHECK(std::abs(x.coefficient({0, 0, 0, 1}) - kI * s) < 1e-15);
  CHECK(std::abs(x.coefficient({0, 1, 0, 0})) < 1e-15);
}

TEST_CASE("symbolic and matrix commutators agree") {
  const auto p = NCParameters::make(0.3, 0.2, 1.0);
  FockBasis basis(14);
  const auto ph = build_phase_operators(p, build_mode_operators(p, basis));
  using enum PhaseComponent;
  const std::pair<PhaseComponent, const OperatorMatrix*> ops[] = {
      {X, &ph.x}, {Y, &ph.y}, {Px, &ph.px}, {Py, &ph.py}};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      const auto sym = weyl_commutator(lambda_rep_operator(ops[i].first, p),
                                       lambda_rep_operator(ops[j].first, p));
      const cplx value = sym.coefficient({0, 0, 0, 0});
      const auto target = OperatorMatrix::identity(basis) * value;
      CHECK(projected_residual(commutator(*ops[i].second, *ops[j].second), target, 2) < 1e-9);
    }
}

TEST_CASE("lambda-form Hamiltonian has the reduced support") {
  const auto check_point = [](double mu, double k, double l, std::array<double, 5> expect) {
    const auto op = make_oscillator(NCParameters::make(mu, mu, 1.0), 1.0, 1.0, k, l);
    const auto h = hamiltonian_lambda_form(op);
    CHECK(has_reduced_support(h));
    CHECK(h.coefficient({1, 0, 1, 0}) == cplx{});
    const auto c = extract_reduced_coefficients(h);
    const double got[] = {c.c1, c.c2, c.d1, c.d2, c.d3};
    for (int i = 0; i < 5; ++i) CHECK(std::abs(got[i] - expect[i]) < 1e-12);
  };
  check_point(0.25, 0.0, 0.0, {0.5, 0.5, 0.53125, 0.53125, -0.5});
  check_point(0.1, 0.2, 0.1, {0.45, 0.6, 0.4055, 0.554, -0.19});
}

TEST_CASE("coefficient pipeline identity on random draws") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int draw = 0; draw < 100; ++draw) {
    const double hbar = 0.5 + u(rng);
    const double theta = 0.01 + 0.6 * u(rng);
    const double ratio = std::exp(2.0 * u(rng) - 1.0);
    const double mu = theta * hbar * ratio;
    const double nu = theta * hbar / ratio;
    const double m = 0.5 + u(rng), omega = 0.5 + u(rng);
    const double k = (1.6 * u(rng) - 0.8) * m * omega * omega;
    const double l = (1.6 * u(rng) - 0.8) / m;
    const auto op = make_oscillator(NCParameters::make(mu, nu, hbar), m, omega, k, l);
    const auto h = hamiltonian_lambda_form(op);
    REQUIRE(has_reduced_support(h));
    const auto sym = extract_reduced_coefficients(h);
    const auto ref = reduced_coefficients(op);
    CHECK(std::abs(sym.c1 - ref.c1) < 1e-12);
    CHECK(std::abs(sym.c2 - ref.c2) < 1e-12);
    CHECK(std::abs(sym.d1 - ref.d1) < 1e-12);
    CHECK(std::abs(sym.d2 - ref.d2) < 1e-12);
    CHECK(std::abs(sym.d3 - ref.d3) < 1e-12);
  }
}

TEST_CASE("extraction rejects polynomials outside the reduced form") {
  CHECK_THROWS_AS(extract_reduced_coefficients(W::lambda1()), Error);
  CHECK_THROWS_AS(extract_reduced_coefficients(W::monomial({2, 0, 0, 0}, cplx{0.0, 1.0})), Error);
}
