#include "ncqm/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ncqm {

namespace {

// n (n-1) ... (n-r+1)
double falling(int n, int r) {
  double out = 1.0;
  for (int i = 0; i < r; ++i) out *= (n - i);
  return out;
}

double binomial(int n, int r) {
  double out = 1.0;
  for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

}  // namespace

WeylPolynomial WeylPolynomial::constant(cplx c) { return monomial({}, c); }

WeylPolynomial WeylPolynomial::monomial(WeylMonomial m, cplx c) {
  WeylPolynomial p;
  p.add_term(m, c);
  p.purge();
  return p;
}

cplx WeylPolynomial::coefficient(const WeylMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? cplx{} : it->second;
}

bool WeylPolynomial::is_scalar() const noexcept {
  return terms_.size() == 1 && terms_.begin()->first == WeylMonomial{};
}

void WeylPolynomial::add_term(const WeylMonomial& m, cplx c) { terms_[m] += c; }

void WeylPolynomial::purge() {
  std::erase_if(terms_, [](const auto& kv) { return std::abs(kv.second) <= kPurge; });
}

WeylPolynomial& WeylPolynomial::operator+=(const WeylPolynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  purge();
  return *this;
}

WeylPolynomial& WeylPolynomial::operator-=(const WeylPolynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  purge();
  return *this;
}

WeylPolynomial& WeylPolynomial::operator*=(cplx s) {
  for (auto& kv : terms_) kv.second *= s;
  purge();
  return *this;
}

WeylPolynomial operator*(const WeylPolynomial& a, const WeylPolynomial& b) {
  WeylPolynomial out;
  for (const auto& [m, c] : a.terms_) {
    for (const auto& [n, d] : b.terms_) {
      // d1^k1 past lambda1^j1' and d2^k2 past lambda2^j2' independently:
      //   d^k lambda^j = sum_r C(k,r) j!/(j-r)! lambda^(j-r) d^(k-r)
      for (int r = 0; r <= std::min(m.k1, n.j1); ++r) {
        const double f1 = binomial(m.k1, r) * falling(n.j1, r);
        for (int s = 0; s <= std::min(m.k2, n.j2); ++s) {
          const double f2 = binomial(m.k2, s) * falling(n.j2, s);
          const WeylMonomial prod{m.j1 + n.j1 - r, m.j2 + n.j2 - s, m.k1 - r + n.k1,
                                  m.k2 - s + n.k2};
          out.add_term(prod, c * d * (f1 * f2));
        }
      }
    }
  }
  out.purge();
  return out;
}

std::string WeylPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
    auto factor = [&](const char* name, int p) {
      if (p == 0) return;
      os << "*" << name;
      if (p > 1) os << "^" << p;
    };
    factor("l1", m.j1);
    factor("l2", m.j2);
    factor("d1", m.k1);
    factor("d2", m.k2);
  }
  return os.str();
}

WeylPolynomial weyl_multiply(const WeylPolynomial& p, const WeylPolynomial& q) { return p * q; }

WeylPolynomial weyl_commutator(const WeylPolynomial& p, const WeylPolynomial& q) {
  return p * q - q * p;
}

double max_coefficient_difference(const WeylPolynomial& p, const WeylPolynomial& q) {
  double worst = 0.0;
  for (const auto& [m, c] : p.terms()) worst = std::max(worst, std::abs(c - q.coefficient(m)));
  for (const auto& [m, c] : q.terms()) worst = std::max(worst, std::abs(c - p.coefficient(m)));
  return worst;
}

PolynomialFunction PolynomialFunction::monomial(int a, int b, cplx c) {
  PolynomialFunction f;
  f.add(a, b, c);
  return f;
}

cplx PolynomialFunction::coefficient(int a, int b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? cplx{} : it->second;
}

cplx PolynomialFunction::evaluate(double lambda1, double lambda2) const {
  cplx sum{};
  for (const auto& [e, c] : terms_) sum += c * std::pow(lambda1, e.first) * std::pow(lambda2, e.second);
  return sum;
}

PolynomialFunction& PolynomialFunction::add(int a, int b, cplx c) {
  auto& slot = terms_[{a, b}];
  slot += c;
  if (std::abs(slot) <= WeylPolynomial::kPurge) terms_.erase({a, b});
  return *this;
}

PolynomialFunction& PolynomialFunction::operator+=(const PolynomialFunction& rhs) {
  for (const auto& [e, c] : rhs.terms_) add(e.first, e.second, c);
  return *this;
}

PolynomialFunction operator*(cplx s, const PolynomialFunction& f) {
  PolynomialFunction out;
  for (const auto& [e, c] : f.terms_) out.add(e.first, e.second, s * c);
  return out;
}

PolynomialFunction apply_weyl(const WeylPolynomial& p, const PolynomialFunction& f) {
  PolynomialFunction out;
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [e, d] : f.terms()) {
      const auto [a, b] = e;
      if (m.k1 > a || m.k2 > b) continue;
      const double f1 = falling(a, m.k1) * falling(b, m.k2);
      out.add(a - m.k1 + m.j1, b - m.k2 + m.j2, c * d * f1);
    }
  }
  return out;
}

}  // namespace ncqm
