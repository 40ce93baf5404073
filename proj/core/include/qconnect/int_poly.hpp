#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <map>
#include <string>

namespace qconnect {

/// Exponent pair of a monomial s^s_exp * Λ^lambda_exp, where q = s² and Λ = q^λ.
struct Monomial {
  int s_exp = 0;
  int lambda_exp = 0;

  int total_degree() const { return s_exp + lambda_exp; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order on (s_exp, lambda_exp).
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return a.s_exp < b.s_exp;
  }
};

/// Sparse polynomial in Z[s, Λ]. Zero coefficients are never stored.
class IntPoly {
 public:
  using Terms = std::map<Monomial, mpz_class, GradedLex>;

  IntPoly() = default;
  IntPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit IntPoly(const mpz_class& constant);

  static IntPoly term(const mpz_class& coeff, int s_exp, int lambda_exp);
  static IntPoly s_power(int exponent) { return term(1, exponent, 0); }
  static IntPoly lambda_power(int exponent) { return term(1, 0, exponent); }
  /// q^k = s^{2k}; k must be nonnegative.
  static IntPoly q_power(int k) { return term(1, 2 * k, 0); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool has_lambda() const;
  int degree_s() const;
  int degree_lambda() const;
  /// Smallest power of s dividing every term.
  int min_s_exp() const;

  /// Coefficient of the largest monomial under GradedLex; zero for the zero polynomial.
  mpz_class leading_coefficient() const;
  const Monomial& leading_monomial() const { return terms_.rbegin()->first; }
  mpz_class coefficient(int s_exp, int lambda_exp) const;
  /// Nonnegative gcd of all coefficients.
  mpz_class content() const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const mpz_class& factor);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.terms_ == b.terms_; }

  IntPoly pow(unsigned exponent) const;
  /// Divides every coefficient by an integer that must divide them exactly.
  IntPoly divide_exact(const mpz_class& divisor) const;
  /// Removes a factor s^k; every term must carry at least that power.
  IntPoly shift_s_down(int k) const;
  /// Evaluates at s = 1 when Λ does not occur.
  mpz_class value_at_s_one() const;

  std::complex<double> evaluate(std::complex<double> s, std::complex<double> lambda) const;

  std::size_t hash() const;

 private:
  void add_term(const Monomial& m, const mpz_class& c);
  Terms terms_;
};

/// Greatest common divisor in Z[s, Λ], with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Exact quotient a / b; throws std::logic_error when b does not divide a.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);

/// Divides by (s - 1) by synthetic division; requires Λ-free input vanishing at s = 1.
IntPoly divide_by_s_minus_one(const IntPoly& a);

}  // namespace qconnect
