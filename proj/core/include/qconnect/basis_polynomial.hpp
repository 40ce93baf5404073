#pragma once

#include <complex>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>

#include "qconnect/rational_function.hpp"

namespace qconnect {

enum class Basis {
  monomial_z,  ///< z^d
  cosine,      ///< cos(m θ), m >= 0
};

/// Finite linear combination over Q(s, Λ) in one of the two bases.
/// Cosine products fold by cos a cos b = (cos(a+b) + cos|a-b|) / 2.
template <Basis B>
class BasisPolynomial {
 public:
  using Terms = std::map<int, RationalFunction>;

  BasisPolynomial() = default;
  BasisPolynomial(long constant) { set(0, RationalFunction(constant)); }  // NOLINT(google-explicit-constructor)
  explicit BasisPolynomial(const ExactRational& constant) { set(0, RationalFunction(constant)); }
  explicit BasisPolynomial(const RationalFunction& constant) { set(0, constant); }

  /// coeff * z^index or coeff * cos(index θ).
  static BasisPolynomial basis_element(int index, RationalFunction coeff = RationalFunction(1)) {
    BasisPolynomial p;
    p.set(index, std::move(coeff));
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
  RationalFunction coefficient(int index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? RationalFunction() : it->second;
  }

  BasisPolynomial operator-() const {
    BasisPolynomial r(*this);
    for (auto& [i, c] : r.terms_) c = -c;
    return r;
  }
  BasisPolynomial& operator+=(const BasisPolynomial& b) {
    for (const auto& [i, c] : b.terms_) add(i, c);
    return *this;
  }
  BasisPolynomial& operator-=(const BasisPolynomial& b) {
    for (const auto& [i, c] : b.terms_) add(i, -c);
    return *this;
  }
  friend BasisPolynomial operator+(BasisPolynomial a, const BasisPolynomial& b) { return a += b; }
  friend BasisPolynomial operator-(BasisPolynomial a, const BasisPolynomial& b) { return a -= b; }

  friend BasisPolynomial operator*(const BasisPolynomial& a, const BasisPolynomial& b) {
    BasisPolynomial r;
    if (a.is_zero() || b.is_zero()) return r;
    if (a.is_scalar()) return b.scaled(a.terms_.begin()->second);
    if (b.is_scalar()) return a.scaled(b.terms_.begin()->second);
    for (const auto& [i, ci] : a.terms_) {
      for (const auto& [j, cj] : b.terms_) {
        const RationalFunction c = ci * cj;
        if constexpr (B == Basis::monomial_z) {
          r.add(i + j, c);
        } else {
          const RationalFunction half = c * RationalFunction(ExactRational(1, 2));
          r.add(i + j, half);
          r.add(std::abs(i - j), half);
        }
      }
    }
    return r;
  }

  friend bool operator==(const BasisPolynomial& a, const BasisPolynomial& b) { return a.terms_ == b.terms_; }

  BasisPolynomial scaled(const RationalFunction& factor) const {
    BasisPolynomial r;
    if (factor.is_zero()) return r;
    for (const auto& [i, c] : terms_) r.terms_.emplace(i, c * factor);
    return r;
  }

  BasisPolynomial pow(int exponent) const {
    BasisPolynomial r(1L);
    for (int i = 0; i < exponent; ++i) r = r * *this;
    return r;
  }

  /// Applies f to every coefficient, dropping results that vanish.
  template <class F>
  BasisPolynomial map_coefficients(F&& f) const {
    BasisPolynomial r;
    for (const auto& [i, c] : terms_) r.set(i, f(c));
    return r;
  }

  /// Numeric value at z (monomial basis) or at θ (cosine basis).
  std::complex<double> evaluate(std::complex<double> x, std::complex<double> s,
                                std::complex<double> lambda) const {
    std::complex<double> v = 0.0;
    for (const auto& [i, c] : terms_) {
      const std::complex<double> basis =
          B == Basis::monomial_z ? std::pow(x, i) : std::cos(static_cast<double>(i) * x);
      v += eval_numeric(c, s, lambda) * basis;
    }
    return v;
  }

 private:
  bool is_scalar() const { return terms_.size() == 1 && terms_.begin()->first == 0; }

  void set(int index, RationalFunction c) {
    if (!c.is_zero()) terms_[index] = std::move(c);
  }

  void add(int index, const RationalFunction& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(index, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Terms terms_;
};

using ZPolynomial = BasisPolynomial<Basis::monomial_z>;
using CosPolynomial = BasisPolynomial<Basis::cosine>;

/// Only nonzero constants are units.
template <Basis B>
std::optional<BasisPolynomial<B>> unit_inverse(const BasisPolynomial<B>& a) {
  if (a.terms().size() != 1 || a.terms().begin()->first != 0) return std::nullopt;
  return BasisPolynomial<B>(a.terms().begin()->second.inverse());
}

/// The variable z.
inline ZPolynomial z_variable() { return ZPolynomial::basis_element(1); }

/// Substitutes a polynomial for z: p(argument).
ZPolynomial compose(const ZPolynomial& p, const ZPolynomial& argument);

/// Re-expands a cosine-basis polynomial in powers of x = cos θ.
ZPolynomial cosine_to_monomial(const CosPolynomial& p);

}  // namespace qconnect
