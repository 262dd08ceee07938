#pragma once

#include <array>
#include <compare>
#include <complex>
#include <map>
#include <string>
#include <utility>

namespace ncqm {

using cplx = std::complex<double>;

/// lambda1^j1 lambda2^j2 d1^k1 d2^k2 in normal order (multiplications left of
/// derivatives), d_i = d/d lambda_i.
struct WeylMonomial {
  int j1 = 0;
  int j2 = 0;
  int k1 = 0;
  int k2 = 0;

  auto operator<=>(const WeylMonomial&) const = default;
  int degree() const noexcept { return j1 + j2 + k1 + k2; }
};

/// Polynomial differential operator in two variables, kept in canonical
/// normal-ordered form. Coefficients with |c| <= 1e-15 are dropped.
class WeylPolynomial {
 public:
  static constexpr double kPurge = 1e-15;

  WeylPolynomial() = default;

  static WeylPolynomial constant(cplx c);
  static WeylPolynomial monomial(WeylMonomial m, cplx c = 1.0);
  static WeylPolynomial lambda1() { return monomial({1, 0, 0, 0}); }
  static WeylPolynomial lambda2() { return monomial({0, 1, 0, 0}); }
  static WeylPolynomial d1() { return monomial({0, 0, 1, 0}); }
  static WeylPolynomial d2() { return monomial({0, 0, 0, 1}); }

  const std::map<WeylMonomial, cplx>& terms() const noexcept { return terms_; }
  cplx coefficient(const WeylMonomial& m) const;
  bool is_zero() const noexcept { return terms_.empty(); }
  /// True when the only surviving term is the identity.
  bool is_scalar() const noexcept;

  WeylPolynomial& operator+=(const WeylPolynomial& rhs);
  WeylPolynomial& operator-=(const WeylPolynomial& rhs);
  WeylPolynomial& operator*=(cplx s);

  friend WeylPolynomial operator+(WeylPolynomial a, const WeylPolynomial& b) { return a += b; }
  friend WeylPolynomial operator-(WeylPolynomial a, const WeylPolynomial& b) { return a -= b; }
  friend WeylPolynomial operator*(WeylPolynomial a, cplx s) { return a *= s; }
  friend WeylPolynomial operator*(cplx s, WeylPolynomial a) { return a *= s; }
  friend WeylPolynomial operator*(const WeylPolynomial& a, const WeylPolynomial& b);

  /// Exact equality of canonical forms.
  friend bool operator==(const WeylPolynomial&, const WeylPolynomial&) = default;

  std::string to_string() const;

 private:
  void add_term(const WeylMonomial& m, cplx c);
  void purge();

  std::map<WeylMonomial, cplx> terms_;
};

/// Normal-ordered product using [d_i, lambda_j] = delta_ij.
WeylPolynomial weyl_multiply(const WeylPolynomial& p, const WeylPolynomial& q);

WeylPolynomial weyl_commutator(const WeylPolynomial& p, const WeylPolynomial& q);

/// Largest coefficient difference over the union of supports.
double max_coefficient_difference(const WeylPolynomial& p, const WeylPolynomial& q);

/// Polynomial in (lambda1, lambda2): exponent pair -> coefficient.
class PolynomialFunction {
 public:
  PolynomialFunction() = default;
  static PolynomialFunction monomial(int a, int b, cplx c = 1.0);

  const std::map<std::pair<int, int>, cplx>& terms() const noexcept { return terms_; }
  cplx coefficient(int a, int b) const;
  cplx evaluate(double lambda1, double lambda2) const;

  PolynomialFunction& add(int a, int b, cplx c);
  PolynomialFunction& operator+=(const PolynomialFunction& rhs);
  friend PolynomialFunction operator+(PolynomialFunction a, const PolynomialFunction& b) { return a += b; }
  friend PolynomialFunction operator*(cplx s, const PolynomialFunction& f);

  friend bool operator==(const PolynomialFunction&, const PolynomialFunction&) = default;

 private:
  std::map<std::pair<int, int>, cplx> terms_;
};

/// Action of a differential operator on a polynomial.
PolynomialFunction apply_weyl(const WeylPolynomial& p, const PolynomialFunction& f);

}  // namespace ncqm
