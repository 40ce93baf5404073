#pragma once

#include "qconnect/rational_function.hpp"
#include "qconnect/truncated_series.hpp"

namespace qconnect {

/// Base of a q-calculus object: q, q^{-2}, q^{-4}, ... as an element of Q(s). Never 1.
class QBase {
 public:
  explicit QBase(RationalFunction base);
  /// q^k; k must be nonzero.
  static QBase q_power(int k) { return QBase(RationalFunction::q_power(k)); }
  static QBase q() { return q_power(1); }

  const RationalFunction& value() const { return base_; }
  /// base^k for any integer k.
  RationalFunction power(int k) const { return base_.pow(k); }

 private:
  RationalFunction base_;
};

/// [n]_b = (1 - b^n) / (1 - b); [0]_b = 0.
RationalFunction q_number(int n, const QBase& base);
/// [n]_b! with [0]_b! = 1.
RationalFunction q_factorial(int n, const QBase& base);
/// Gaussian binomial [n choose l]_b; throws IndexOutOfRange unless 0 <= l <= n.
RationalFunction q_binomial(int n, int l, const QBase& base);
/// (a; b)_n = prod_{k=0}^{n-1} (1 - a b^k).
RationalFunction q_pochhammer(const RationalFunction& a, const QBase& base, int n);
/// c_k(b) = (1 - b)^{k-1} / (k [k]_b), k >= 1.
RationalFunction quesne_c(int k, const QBase& base);
/// [λ]_{q^k} = (1 - Λ^k) / (1 - q^k), k >= 1.
RationalFunction lambda_bracket(int k);

enum class QExpKind { little_e, big_E };

/// Ring that admits RationalFunction scalars.
template <class T>
concept QCoefficientRing = CoefficientRing<T> && requires(const RationalFunction& f) { T(f); };

/// Jackson q-exponential by its defining sum, composed with a series argument.
template <QCoefficientRing T>
TruncatedSeries<T> q_exp_sum(QExpKind kind, const TruncatedSeries<T>& argument, const QBase& base) {
  if (!(argument[0] == T(0))) throw NonzeroConstantTerm("q-exponential argument must vanish at t = 0");
  const int order = argument.order();
  TruncatedSeries<T> result = TruncatedSeries<T>::constant(order, T(1));
  TruncatedSeries<T> power = result;
  RationalFunction pochhammer(1);
  for (int n = 1; n <= order; ++n) {
    power = power * argument;
    pochhammer *= RationalFunction(1) - base.power(n);
    RationalFunction weight = pochhammer.inverse();
    if (kind == QExpKind::big_E) weight *= base.power(n * (n - 1) / 2);
    result += T(weight) * power;
  }
  return result;
}

/// Jackson q-exponential as exp of the Quesne log-series:
/// e_b(z) = exp(sum z^k / (k (1 - b^k))), E_b(z) = exp(sum (-1)^{k+1} z^k / (k (1 - b^k))).
template <QCoefficientRing T>
TruncatedSeries<T> q_exp_product_form(QExpKind kind, const TruncatedSeries<T>& argument, const QBase& base) {
  if (!(argument[0] == T(0))) throw NonzeroConstantTerm("q-exponential argument must vanish at t = 0");
  const int order = argument.order();
  TruncatedSeries<T> exponent(order);
  TruncatedSeries<T> power = TruncatedSeries<T>::constant(order, T(1));
  for (int k = 1; k <= order; ++k) {
    power = power * argument;
    RationalFunction weight = (RationalFunction(k) * (RationalFunction(1) - base.power(k))).inverse();
    if (kind == QExpKind::big_E && k % 2 == 0) weight = -weight;
    exponent += T(weight) * power;
  }
  return series_exp(exponent);
}

/// exp_b(z) = sum z^n / [n]_b! by its defining sum.
template <QCoefficientRing T>
TruncatedSeries<T> q_exp_physics_sum(const TruncatedSeries<T>& argument, const QBase& base) {
  if (!(argument[0] == T(0))) throw NonzeroConstantTerm("q-exponential argument must vanish at t = 0");
  const int order = argument.order();
  TruncatedSeries<T> result = TruncatedSeries<T>::constant(order, T(1));
  TruncatedSeries<T> power = result;
  for (int n = 1; n <= order; ++n) {
    power = power * argument;
    result += T(q_factorial(n, base).inverse()) * power;
  }
  return result;
}

/// exp_b(z) = exp(sum_k c_k(b) z^k).
template <QCoefficientRing T>
TruncatedSeries<T> q_exp_quesne(const TruncatedSeries<T>& argument, const QBase& base) {
  if (!(argument[0] == T(0))) throw NonzeroConstantTerm("q-exponential argument must vanish at t = 0");
  const int order = argument.order();
  TruncatedSeries<T> exponent(order);
  TruncatedSeries<T> power = TruncatedSeries<T>::constant(order, T(1));
  for (int k = 1; k <= order; ++k) {
    power = power * argument;
    exponent += T(quesne_c(k, base)) * power;
  }
  return series_exp(exponent);
}

}  // namespace qconnect
