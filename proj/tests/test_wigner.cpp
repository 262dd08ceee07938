#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "corpus.hpp"
#include "ncqm/error.hpp"
#include "ncqm/states.hpp"
#include "ncqm/wigner.hpp"

using namespace ncqm;

namespace {

constexpr double kPi = std::numbers::pi;

OscillatorParams reference() {
  return make_oscillator(NCParameters::make(0.1, 0.1, 1.0), 1.0, 1.0, 0.2, 0.1);
}

template <class F>
GridFunction sample_grid(F&& f, double lo, double h, int n) {
  GridFunction g{lo, lo, h, h, n, n, {}};
  g.values.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.values[static_cast<std::size_t>(i) * n + j] = f(lo + i * h, lo + j * h);
  return g;
}

// lambda-form Hamiltonian c1 eta1^2 + ... evaluated classically
double reduced_energy(const ReducedCoefficients& r, const ChainResult& c) {
  return r.c1 * c.eta1 * c.eta1 + r.c2 * c.eta2 * c.eta2 + r.d1 * c.lambda1 * c.lambda1 +
         r.d2 * c.lambda2 * c.lambda2 + r.d3 * c.lambda1 * c.lambda2;
}

}  // namespace

TEST_CASE("Laguerre polynomials") {
  CHECK(laguerre(0, 3.7) == 1.0);
  CHECK(laguerre(1, 3.7) == doctest::Approx(1.0 - 3.7));
  CHECK(laguerre(2, 2.0) == doctest::Approx(-1.0));
  for (int n = 0; n < 12; ++n)
    for (double x : {0.0, 0.3, 1.7, 5.0, 11.0})
      CHECK(laguerre(n, x) == doctest::Approx(std::laguerre(n, x)).epsilon(1e-12));
  CHECK_THROWS_AS(laguerre(-1, 0.0), Error);
}

TEST_CASE("delta supports of the entangled states") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> r(-2.0, 2.0);
  const auto p = NCParameters::make(0.2, 0.05, 0.9);
  const double pref = 1.0 / (2.0 * kPi * 0.9 * std::sqrt(1.0 - p.theta() * p.theta()));
  for (int i = 0; i < 100; ++i) {
    const LambdaLabel l{r(rng), r(rng)};
    const auto dl = wigner_entangled_delta(l, p);
    const auto [rv, pv] = lambda_eigenvalues(l, p);
    CHECK(dl.constraints[0].offset == std::sqrt(2.0) * rv);
    CHECK(dl.constraints[1].offset == std::sqrt(2.0) * pv);
    CHECK(dl.prefactor == doctest::Approx(pref));
    const XiLabel x{r(rng), r(rng)};
    const auto dx = wigner_entangled_delta(x, p);
    const auto [qv, kv] = xi_eigenvalues(x, p);
    CHECK(dx.constraints[0].offset == std::sqrt(2.0) * qv);
    CHECK(dx.constraints[1].offset == std::sqrt(2.0) * kv);
  }
  // theta -> 0, lambda = 0: EPR plane x = y, px = -py
  const auto d0 = wigner_entangled_delta(LambdaLabel{0, 0}, NCParameters::make(1e-12, 1e-12, 1.0));
  CHECK(d0.contains({0.7, 0.7, 0.3, -0.3}, 1e-12));
  CHECK_FALSE(d0.contains({0.7, 0.6, 0.3, -0.3}, 1e-12));
  // xi = (0.3, -0.1) at theta = 0.25 by hand
  const auto q = NCParameters::make(0.0625, 1.0, 1.0);
  const auto dx = wigner_entangled_delta(XiLabel{0.3, -0.1}, q);
  const double lr = std::pow(0.0625, 0.25);
  CHECK(dx.constraints[0].offset == doctest::Approx(std::sqrt(2.0) * lr * (0.3 - 0.025)));
  CHECK(dx.constraints[1].offset == doctest::Approx(std::sqrt(2.0) / lr * (-0.1 + 0.075)));
}

TEST_CASE("chain map") {
  const auto sol = solve_oscillator(reference());
  const auto zero = chain_map({0, 0, 0, 0}, sol);
  CHECK(zero.point.x1 == 0.0);
  CHECK(zero.point.p2 == 0.0);
  CHECK(zero.point.H1 == 0.0);
  CHECK(zero.point.H2 == 0.0);
  const double t = sol.params.nc.theta();
  CHECK(std::abs(zero.jacobian) == doctest::Approx(1.0 / (1.0 - t * t)));

  const auto inv = inverse_chain_map(0.3, -0.2, 0.5, 0.1, sol);
  const auto back = chain_map(inv, sol);
  CHECK(back.point.x1 == doctest::Approx(0.3));
  CHECK(back.point.p1 == doctest::Approx(-0.2));
  CHECK(back.point.x2 == doctest::Approx(0.5));
  CHECK(back.point.p2 == doctest::Approx(0.1));
}

TEST_CASE("classical Hamiltonian is preserved along the chain") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> r(-2.0, 2.0);
  auto corpus = testing::oscillator_corpus(10);
  corpus.push_back(reference());
  for (const auto& op : corpus) {
    const auto sol = solve_oscillator(op);
    for (int i = 0; i < 50; ++i) {
      const PhasePoint4 pt{r(rng), r(rng), r(rng), r(rng)};
      const auto c = chain_map(pt, sol);
      const double hc = classical_hamiltonian(pt, op);
      CHECK(std::abs(reduced_energy(sol.reduced, c) - hc) <= 1e-10 * hc);
      CHECK(std::abs(c.point.H1 + c.point.H2 - hc) <= 1e-10 * hc);
    }
  }
}

TEST_CASE("decoupled limit") {
  const auto op = make_oscillator(NCParameters::make(1e-10, 1e-10, 1.0), 1.0, 1.0, 0.0, 0.0);
  const auto sol = solve_oscillator(op);
  const PhasePoint4 pt{0.4, -0.3, 0.2, 0.9};
  const auto c = chain_map(pt, sol);
  CHECK(c.point.H1 + c.point.H2 == doctest::Approx(classical_hamiltonian(pt, op)).epsilon(1e-9));
  CHECK(classical_hamiltonian(pt, op) ==
        doctest::Approx(0.5 * (0.04 + 0.81) + 0.5 * (0.16 + 0.09)));
}

TEST_CASE("oscillator Wigner functions") {
  const auto sol = solve_oscillator(reference());
  CHECK(wigner_oscillator(sol, 0, 0, {0, 0, 0, 0}) == 4.0);
  CHECK(wigner_oscillator(sol, 1, 0, {0, 0, 0, 0}) == -4.0);
  CHECK(wigner_oscillator(sol, 0, 1, {0, 0, 0, 0}) == -4.0);
  CHECK(wigner_oscillator(sol, 1, 1, {0, 0, 0, 0}) == 4.0);
  CHECK_THROWS_AS(wigner_oscillator(sol, -1, 0, {}), Error);

  // depends on the decoupled point only through H1, H2
  const double g1 = std::sqrt(sol.modes.M * sol.modes.Omega_plus);
  for (double angle : {0.0, 0.7, 2.1, 4.0}) {
    const double X = 0.8 * std::cos(angle), P = 0.8 * std::sin(angle);
    const auto pt = inverse_chain_map(X / g1, P * g1, 0.2, -0.1, sol);
    CHECK(wigner_oscillator(sol, 2, 1, pt) ==
          doctest::Approx(wigner_oscillator(sol, 2, 1, inverse_chain_map(0.8 / g1, 0.0, 0.2, -0.1, sol))));
  }
}

TEST_CASE("normalization and energy moments") {
  const auto sol = solve_oscillator(reference());
  const auto ground = wigner_moments(sol, 0, 0, 16);
  CHECK(std::abs(ground.norm - 1.0) < 1e-6);
  for (int n1 : {0, 1})
    for (int n2 : {0, 1}) {
      const auto mom = wigner_moments(sol, n1, n2, 16);
      CHECK(std::abs(mom.norm - 1.0) < 1e-6);
      CHECK(std::abs(mom.mean_energy - energy(sol, n1, n2)) < 1e-5);
    }
}

TEST_CASE("Wigner transform of a Gaussian") {
  const auto p = NCParameters::make(0.25, 0.25, 1.0);
  const double t = p.theta();
  const double u0[] = {0.5, -0.3};
  const auto psi = sample_grid(
      [&](double a, double b) {
        return cplx{std::exp(-0.5 * ((a - u0[0]) * (a - u0[0]) + (b - u0[1]) * (b - u0[1])))};
      },
      -8.0, 0.1, 161);
  const auto oracle = [&](const ChainCoordinates& c) {
    const auto u = c.center(t);
    const double du = (u[0] - u0[0]) * (u[0] - u0[0]) + (u[1] - u0[1]) * (u[1] - u0[1]);
    const double g2 = c.gamma1 * c.gamma1 + c.gamma2 * c.gamma2;
    const double s = 1.0 - t * t;
    return std::sqrt(s) / (kPi * kPi * kPi) * kPi * std::exp(-du - s * s * g2);
  };
  // u on the grid: shifted samples need no interpolation
  for (auto [u1, u2, g1, g2] : {std::tuple{0.5, -0.3, 0.0, 0.0}, {0.2, 0.4, 0.3, -0.5}, {-0.7, 0.1, 1.1, 0.2}}) {
    const double rho1 = (u1 - t * u2) / (1.0 - t * t);
    const double rho2 = (u2 - t * u1) / (1.0 - t * t);
    const ChainCoordinates c{rho1, rho2, g1, g2};
    const double w = wigner_transform_lambda(psi, c, p);
    CHECK(w > 0.0);
    CHECK(std::abs(w - oracle(c)) <= 1e-10 * oracle(c) + 1e-14);
  }
  // off-grid centre goes through bilinear interpolation
  const ChainCoordinates off{0.137, -0.211, 0.25, 0.4};
  CHECK(std::abs(wigner_transform_lambda(psi, off, p) - oracle(off)) <= 1e-2 * oracle(off));
  // peak at the label centre
  const double rho1 = (u0[0] - t * u0[1]) / (1.0 - t * t);
  const double rho2 = (u0[1] - t * u0[0]) / (1.0 - t * t);
  const double peak = wigner_transform_lambda(psi, {rho1, rho2, 0, 0}, p);
  CHECK(peak > wigner_transform_lambda(psi, {rho1 + 0.1, rho2, 0, 0}, p));
  CHECK(peak > wigner_transform_lambda(psi, {rho1, rho2, 0.1, 0}, p));
}

TEST_CASE("Wigner transform is real for complex Gaussians") {
  const auto p = NCParameters::make(0.2, 0.3, 1.0);
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> r(-0.5, 0.5);
  for (int trial = 0; trial < 5; ++trial) {
    const double a = 1.25 + r(rng), b = 1.25 + r(rng), c = 0.3 * r(rng);
    const double c1 = r(rng), c2 = r(rng), k1 = 2 * r(rng), k2 = 2 * r(rng);
    const auto psi = sample_grid(
        [&](double x, double y) {
          const double dx = x - c1, dy = y - c2;
          return std::exp(cplx{-0.5 * (a * dx * dx + b * dy * dy + 2 * c * dx * dy), k1 * x + k2 * y + c * x * y});
        },
        -9.0, 0.15, 121);
    const ChainCoordinates pt{r(rng), r(rng), r(rng), r(rng)};
    const cplx w = wigner_transform_lambda_complex(psi, pt, p);
    CHECK(std::abs(w.imag()) <= 1e-8 * std::abs(w) + 1e-12);
    CHECK_NOTHROW(wigner_transform_lambda(psi, pt, p));
  }
}

TEST_CASE("gamma marginal of the Wigner transform") {
  const auto p = NCParameters::make(0.25, 0.25, 1.0);
  const double t = p.theta(), s = 1.0 - t * t;
  const auto psi_fn = [](double x, double y) {
    const double dx = x - 0.3, dy = y + 0.2;
    return std::exp(cplx{-0.5 * (1.3 * dx * dx + 0.8 * dy * dy + 0.4 * dx * dy), 0.7 * x - 0.4 * y});
  };
  const auto psi = sample_grid(psi_fn, -8.0, 0.1, 161);
  const double constant = std::sqrt(s) / (kPi * s * s);
  for (auto [u1, u2] : {std::pair{0.3, -0.2}, {0.8, 0.4}}) {
    const double rho1 = (u1 - t * u2) / s, rho2 = (u2 - t * u1) / s;
    const int n = 49;
    const double L = 6.0, h = 2 * L / (n - 1);
    double total = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        total += wigner_transform_lambda(psi, {rho1, rho2, -L + i * h, -L + j * h}, p);
    total *= h * h;
    const double expect = constant * std::norm(psi_fn(u1, u2));
    CHECK(std::abs(total - expect) <= 1e-4 * expect);
  }
}

TEST_CASE("Wigner transform guards") {
  const auto p = NCParameters::make(0.25, 0.25, 1.0);
  const auto coarse = sample_grid([](double, double) { return cplx{}; }, -1.0, 0.2, 10);
  CHECK_THROWS_AS(wigner_transform_lambda(coarse, {0, 0, 0, 0}, p), Error);
  const auto wide = sample_grid([](double a, double b) { return cplx{std::exp(-0.05 * (a * a + b * b))}; },
                                -3.0, 0.1, 61);
  try {
    wigner_transform_lambda(wide, {0, 0, 0, 0}, p);
    FAIL("leaky grid accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BoundaryLeak);
  }
  const auto ok = sample_grid([](double a, double b) { return cplx{std::exp(-(a * a + b * b))}; }, -6.0, 0.5, 25);
  try {
    wigner_transform_lambda(ok, {0, 0, 5.0, 0}, p);
    FAIL("unresolved kernel accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GridTooCoarse);
  }
}
