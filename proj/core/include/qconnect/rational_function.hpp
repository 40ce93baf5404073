#pragma once

#include <gmpxx.h>

#include <complex>
#include <functional>
#include <optional>

#include "qconnect/int_poly.hpp"

namespace qconnect {

/// Reduced rational number; results of q -> 1 limits, factorials and binomials.
using ExactRational = mpq_class;

/// Element of Q(s, Λ) with q = s² and Λ = q^λ.
///
/// Always held in canonical form: numerator and denominator coprime in Z[s, Λ],
/// denominator with positive leading coefficient, zero stored as 0/1. Negative
/// powers of s live in the denominator.
class RationalFunction {
 public:
  RationalFunction() : den_(1L) {}
  RationalFunction(long value) : num_(value), den_(1L) {}  // NOLINT(google-explicit-constructor)
  explicit RationalFunction(const ExactRational& value);
  explicit RationalFunction(IntPoly numerator) : num_(std::move(numerator)), den_(1L) {}
  /// Canonicalizes; throws DivisionByZero for a zero denominator.
  RationalFunction(const IntPoly& numerator, const IntPoly& denominator);

  /// s^k for any integer k (q^{k/2}).
  static RationalFunction s_power(int k);
  /// q^k for any integer k.
  static RationalFunction q_power(int k) { return s_power(2 * k); }
  static RationalFunction q() { return s_power(2); }
  static RationalFunction lambda() { return RationalFunction(IntPoly::lambda_power(1)); }

  const IntPoly& numerator() const { return num_; }
  const IntPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool has_lambda() const { return num_.has_lambda() || den_.has_lambda(); }
  /// Value as a rational number; only meaningful when is_constant().
  ExactRational constant_value() const;

  RationalFunction operator-() const;
  RationalFunction inverse() const;
  RationalFunction pow(int exponent) const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
  RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
  RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }
  RationalFunction& operator/=(const RationalFunction& b) { return *this = *this / b; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::size_t hash() const { return num_.hash() * 31 + den_.hash(); }

 private:
  struct Reduced {};
  RationalFunction(IntPoly numerator, IntPoly denominator, Reduced)
      : num_(std::move(numerator)), den_(std::move(denominator)) {}
  void canonicalize();

  IntPoly num_;
  IntPoly den_;
};

/// Multiplicative inverse when one exists in the ring.
inline std::optional<ExactRational> unit_inverse(const ExactRational& a) {
  if (a == 0) return std::nullopt;
  return ExactRational(1) / a;
}

inline std::optional<RationalFunction> unit_inverse(const RationalFunction& a) {
  if (a.is_zero()) return std::nullopt;
  return a.inverse();
}

/// Exact value at s = 1 after cancelling common (s - 1) factors.
/// Throws LambdaPresent if Λ occurs, PoleAtOne if the denominator still vanishes.
ExactRational limit_q_to_1(const RationalFunction& f);

/// Double-precision complex evaluation; throws NumericPole when |denominator| < 1e-12.
std::complex<double> eval_numeric(const RationalFunction& f, std::complex<double> s,
                                  std::complex<double> lambda);

/// Evaluates at q = q_value (s = sqrt(q)) and Λ = q^lambda_exponent.
std::complex<double> eval_at_q(const RationalFunction& f, double q_value, double lambda_exponent = 1.0);

}  // namespace qconnect

template <>
struct std::hash<qconnect::RationalFunction> {
  std::size_t operator()(const qconnect::RationalFunction& f) const { return f.hash(); }
};
