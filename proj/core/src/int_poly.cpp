#include "qconnect/int_poly.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qconnect {

namespace {

// Dense univariate polynomial in s, index = exponent.
using Dense = std::vector<mpz_class>;
// Polynomial in Λ with coefficients in Z[s], index = Λ exponent.
using Recursive = std::vector<Dense>;

void trim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void trim(Recursive& a) {
  while (!a.empty() && a.back().empty()) a.pop_back();
}

int degree(const Dense& a) { return static_cast<int>(a.size()) - 1; }
int degree(const Recursive& a) { return static_cast<int>(a.size()) - 1; }

Dense sub(const Dense& a, const Dense& b) {
  Dense r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

Dense mul(const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  Dense r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Dense scale(const Dense& a, const mpz_class& c) {
  if (c == 0) return {};
  Dense r(a);
  for (auto& x : r) x *= c;
  return r;
}

mpz_class content(const Dense& a) {
  mpz_class g = 0;
  for (const auto& x : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Dense divide_integer(const Dense& a, const mpz_class& c) {
  Dense r(a);
  for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return r;
}

Dense primitive_part(const Dense& a) {
  if (a.empty()) return a;
  mpz_class c = content(a);
  if (a.back() < 0) c = -c;
  return c == 1 ? a : divide_integer(a, c);
}

// Exact long division in Z[s]; returns false when b does not divide a.
bool try_divide(const Dense& a, const Dense& b, Dense& quotient) {
  if (b.empty()) throw std::logic_error("division by zero polynomial");
  quotient.clear();
  if (a.empty()) return true;
  if (degree(a) < degree(b)) return false;
  Dense r(a);
  quotient.assign(a.size() - b.size() + 1, 0);
  const mpz_class& lb = b.back();
  for (int i = degree(r) - degree(b); i >= 0; --i) {
    mpz_class& top = r[i + b.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return false;
    mpz_class f;
    mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    quotient[i] = f;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] -= f * b[j];
  }
  trim(r);
  trim(quotient);
  return r.empty();
}

Dense divide_exact(const Dense& a, const Dense& b) {
  Dense q;
  if (!try_divide(a, b, q)) throw std::logic_error("inexact polynomial division in Z[s]");
  return q;
}

Dense pseudo_remainder(Dense a, const Dense& b) {
  const mpz_class& lb = b.back();
  while (!a.empty() && degree(a) >= degree(b)) {
    const int shift = degree(a) - degree(b);
    const mpz_class la = a.back();
    for (auto& x : a) x *= lb;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= la * b[j];
    trim(a);
  }
  return a;
}

Dense gcd(const Dense& a, const Dense& b) {
  if (a.empty()) return b.empty() || b.back() > 0 ? b : scale(b, -1);
  if (b.empty()) return a.back() < 0 ? scale(a, -1) : a;
  const mpz_class ca = content(a);
  const mpz_class cb = content(b);
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (degree(a) == 0 || degree(b) == 0) return Dense{g};
  Dense x = primitive_part(a);
  Dense y = primitive_part(b);
  if (degree(x) < degree(y)) std::swap(x, y);
  while (!y.empty()) {
    if (degree(y) == 0) return Dense{g};
    Dense r = primitive_part(pseudo_remainder(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  return scale(primitive_part(x), g);
}

Recursive to_recursive(const IntPoly& p) {
  Recursive r(p.is_zero() ? 0 : p.degree_lambda() + 1);
  for (const auto& [m, c] : p.terms()) {
    Dense& d = r[m.lambda_exp];
    if (d.size() <= static_cast<std::size_t>(m.s_exp)) d.resize(m.s_exp + 1);
    d[m.s_exp] = c;
  }
  return r;
}

IntPoly from_recursive(const Recursive& r) {
  IntPoly p;
  for (std::size_t l = 0; l < r.size(); ++l)
    for (std::size_t e = 0; e < r[l].size(); ++e)
      if (r[l][e] != 0) p += IntPoly::term(r[l][e], static_cast<int>(e), static_cast<int>(l));
  return p;
}

Dense content(const Recursive& a) {
  Dense g;
  for (const auto& c : a) {
    if (c.empty()) continue;
    g = gcd(g, c);
    if (degree(g) == 0 && g[0] == 1) break;
  }
  return g;
}

Recursive divide_coefficients(const Recursive& a, const Dense& d) {
  Recursive r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = divide_exact(a[i], d);
  return r;
}

Recursive primitive_part(const Recursive& a) {
  if (a.empty()) return a;
  Dense c = content(a);
  const Dense& lead = a.back();
  if (lead.back() < 0) c = scale(c, -1);
  if (degree(c) == 0 && c[0] == 1) return a;
  return divide_coefficients(a, c);
}

Recursive pseudo_remainder(Recursive a, const Recursive& b) {
  const Dense& lb = b.back();
  while (!a.empty() && degree(a) >= degree(b)) {
    const int shift = degree(a) - degree(b);
    const Dense la = a.back();
    for (auto& x : a) x = mul(x, lb);
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = sub(a[shift + j], mul(la, b[j]));
    trim(a);
  }
  return a;
}

Recursive gcd(const Recursive& a, const Recursive& b) {
  const Dense g = gcd(content(a), content(b));
  Recursive x = primitive_part(a);
  Recursive y = primitive_part(b);
  if (degree(x) < degree(y)) std::swap(x, y);
  while (!y.empty()) {
    if (degree(y) == 0) {
      x = Recursive{Dense{1}};
      break;
    }
    Recursive r = primitive_part(pseudo_remainder(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  Recursive result = primitive_part(x);
  for (auto& c : result) c = mul(c, g);
  trim(result);
  return result;
}

Recursive divide_exact(const Recursive& a, const Recursive& b) {
  if (a.empty()) return {};
  if (degree(a) < degree(b)) throw std::logic_error("inexact polynomial division in Z[s, L]");
  Recursive r(a);
  Recursive q(a.size() - b.size() + 1);
  const Dense& lb = b.back();
  for (int i = degree(r) - degree(b); i >= 0; --i) {
    const Dense& top = r[i + b.size() - 1];
    if (top.empty()) continue;
    Dense f = divide_exact(top, lb);
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = sub(r[i + j], mul(f, b[j]));
    q[i] = std::move(f);
  }
  trim(r);
  if (!r.empty()) throw std::logic_error("inexact polynomial division in Z[s, L]");
  trim(q);
  return q;
}

Dense to_dense(const IntPoly& p) {
  Dense d(p.is_zero() ? 0 : p.degree_s() + 1);
  for (const auto& [m, c] : p.terms()) d[m.s_exp] = c;
  return d;
}

IntPoly from_dense(const Dense& d) {
  IntPoly p;
  for (std::size_t e = 0; e < d.size(); ++e)
    if (d[e] != 0) p += IntPoly::term(d[e], static_cast<int>(e), 0);
  return p;
}

}  // namespace

IntPoly::IntPoly(long constant) {
  if (constant != 0) terms_.emplace(Monomial{}, mpz_class(constant));
}

IntPoly::IntPoly(const mpz_class& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

IntPoly IntPoly::term(const mpz_class& coeff, int s_exp, int lambda_exp) {
  if (s_exp < 0 || lambda_exp < 0) throw std::invalid_argument("negative exponent in IntPoly");
  IntPoly p;
  if (coeff != 0) p.terms_.emplace(Monomial{s_exp, lambda_exp}, coeff);
  return p;
}

bool IntPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

bool IntPoly::has_lambda() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.lambda_exp > 0; });
}

int IntPoly::degree_s() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.s_exp);
  return d;
}

int IntPoly::degree_lambda() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.lambda_exp);
  return d;
}

int IntPoly::min_s_exp() const {
  if (terms_.empty()) return 0;
  int d = terms_.begin()->first.s_exp;
  for (const auto& [m, c] : terms_) d = std::min(d, m.s_exp);
  return d;
}

mpz_class IntPoly::leading_coefficient() const {
  return terms_.empty() ? mpz_class(0) : terms_.rbegin()->second;
}

mpz_class IntPoly::coefficient(int s_exp, int lambda_exp) const {
  auto it = terms_.find(Monomial{s_exp, lambda_exp});
  return it == terms_.end() ? mpz_class(0) : it->second;
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& [m, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

void IntPoly::add_term(const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

IntPoly IntPoly::operator-() const {
  IntPoly r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

IntPoly& IntPoly::operator*=(const mpz_class& factor) {
  if (factor == 0) {
    terms_.clear();
  } else {
    for (auto& [m, c] : terms_) c *= factor;
  }
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  if (!a.has_lambda() && !b.has_lambda()) return from_dense(mul(to_dense(a), to_dense(b)));
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      r.add_term(Monomial{ma.s_exp + mb.s_exp, ma.lambda_exp + mb.lambda_exp}, ca * cb);
  return r;
}

IntPoly IntPoly::pow(unsigned exponent) const {
  IntPoly result(1L);
  IntPoly base(*this);
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

IntPoly IntPoly::divide_exact(const mpz_class& divisor) const {
  IntPoly r(*this);
  for (auto& [m, c] : r.terms_) {
    if (!mpz_divisible_p(c.get_mpz_t(), divisor.get_mpz_t()))
      throw std::logic_error("inexact integer division of IntPoly");
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
  }
  return r;
}

IntPoly IntPoly::shift_s_down(int k) const {
  IntPoly r;
  for (const auto& [m, c] : terms_) {
    if (m.s_exp < k) throw std::logic_error("shift_s_down below zero");
    r.terms_.emplace(Monomial{m.s_exp - k, m.lambda_exp}, c);
  }
  return r;
}

mpz_class IntPoly::value_at_s_one() const {
  mpz_class v = 0;
  for (const auto& [m, c] : terms_) v += c;
  return v;
}

std::complex<double> IntPoly::evaluate(std::complex<double> s, std::complex<double> lambda) const {
  std::complex<double> v = 0.0;
  for (const auto& [m, c] : terms_)
    v += c.get_d() * std::pow(s, m.s_exp) * std::pow(lambda, m.lambda_exp);
  return v;
}

std::size_t IntPoly::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& [m, c] : terms_) {
    h ^= std::hash<int>{}(m.s_exp * 131 + m.lambda_exp) + (h << 6) + (h >> 2);
    h ^= std::hash<std::string>{}(c.get_str(16)) + (h << 6) + (h >> 2);
  }
  return h;
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() && b.is_zero()) return IntPoly();
  if (a.is_zero()) return b.leading_coefficient() < 0 ? -b : b;
  if (b.is_zero()) return a.leading_coefficient() < 0 ? -a : a;

  // Common power of s, pulled out before the dense work.
  const int shift = std::min(a.min_s_exp(), b.min_s_exp());
  const IntPoly x = a.shift_s_down(a.min_s_exp());
  const IntPoly y = b.shift_s_down(b.min_s_exp());

  IntPoly g;
  if (!x.has_lambda() && !y.has_lambda()) {
    g = from_dense(gcd(to_dense(x), to_dense(y)));
  } else if (!x.has_lambda() || !y.has_lambda()) {
    // A Λ-free side forces the gcd into Z[s]: fold it against every Λ-coefficient.
    const IntPoly& free = x.has_lambda() ? y : x;
    const IntPoly& bound = x.has_lambda() ? x : y;
    Dense d = to_dense(free);
    for (const auto& c : to_recursive(bound)) {
      if (c.empty()) continue;
      d = gcd(d, c);
      if (degree(d) == 0 && d[0] == 1) break;
    }
    g = from_dense(d);
  } else {
    g = from_recursive(gcd(to_recursive(x), to_recursive(y)));
  }
  if (g.leading_coefficient() < 0) g = -g;
  return shift == 0 ? g : g * IntPoly::s_power(shift);
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::logic_error("division by zero polynomial");
  if (a.is_zero()) return a;
  if (b.is_constant()) return a.divide_exact(b.leading_coefficient());
  const int shift = b.min_s_exp();
  if (a.min_s_exp() < shift) throw std::logic_error("inexact polynomial division");
  const IntPoly x = a.shift_s_down(shift);
  const IntPoly y = b.shift_s_down(shift);
  if (!x.has_lambda() && !y.has_lambda()) return from_dense(divide_exact(to_dense(x), to_dense(y)));
  return from_recursive(divide_exact(to_recursive(x), to_recursive(y)));
}

IntPoly divide_by_s_minus_one(const IntPoly& a) {
  if (a.has_lambda()) throw std::logic_error("divide_by_s_minus_one on Λ-bearing polynomial");
  Dense d = to_dense(a);
  if (d.empty()) return a;
  // Synthetic division by (s - 1), highest degree first.
  Dense q(d.size() - 1);
  mpz_class carry = 0;
  for (int i = degree(d); i >= 1; --i) {
    carry += d[i];
    q[i - 1] = carry;
  }
  if (carry + d[0] != 0) throw std::logic_error("polynomial does not vanish at s = 1");
  trim(q);
  return from_dense(q);
}

}  // namespace qconnect
