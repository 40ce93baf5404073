#pragma once

#include <concepts>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qconnect/error.hpp"
#include "qconnect/rational_function.hpp"

namespace qconnect {

/// Commutative ring containing Q, as needed by the series engine.
template <class T>
concept CoefficientRing = requires(const T& a, const T& b, const ExactRational& r) {
  T(0);
  T(1);
  T(r);
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { a == b } -> std::convertible_to<bool>;
};

/// Power series in t over T, truncated after t^order.
template <CoefficientRing T>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order) : coeffs_(checked_size(order), T(0)) {}

  TruncatedSeries(int order, std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    const std::size_t size = checked_size(order);
    if (coeffs_.size() > size) throw OrderExceeded("more coefficients than order + 1");
    coeffs_.resize(size, T(0));
  }

  static TruncatedSeries constant(int order, T value) {
    TruncatedSeries r(order);
    r.coeffs_[0] = std::move(value);
    return r;
  }

  /// value * t^power, or zero when power exceeds the order.
  static TruncatedSeries monomial(int order, T value, int power) {
    TruncatedSeries r(order);
    if (power < 0) throw IndexOutOfRange("negative power");
    if (power <= order) r.coeffs_[power] = std::move(value);
    return r;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<T>& coefficients() const { return coeffs_; }

  const T& coeff_at(int n) const {
    if (n < 0 || n > order())
      throw OrderExceeded("coefficient t^" + std::to_string(n) + " beyond order " + std::to_string(order()));
    return coeffs_[n];
  }
  const T& operator[](int n) const { return coeff_at(n); }

  TruncatedSeries& operator+=(const TruncatedSeries& b) {
    require_same_order(b);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + b.coeffs_[i];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& b) {
    require_same_order(b);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - b.coeffs_[i];
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  TruncatedSeries operator-() const {
    TruncatedSeries r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.require_same_order(b);
    const int n = a.order();
    TruncatedSeries r(n);
    for (int i = 0; i <= n; ++i) {
      if (a.coeffs_[i] == T(0)) continue;
      for (int j = 0; i + j <= n; ++j) {
        if (b.coeffs_[j] == T(0)) continue;
        r.coeffs_[i + j] = r.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return r;
  }

  /// Scalar multiplication.
  friend TruncatedSeries operator*(const T& c, TruncatedSeries a) {
    for (auto& x : a.coeffs_) x = c * x;
    return a;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Substitution t -> c * t^k.
  TruncatedSeries substitute_power(const T& c, int k) const {
    if (k < 1) throw IndexOutOfRange("substitution power must be positive");
    TruncatedSeries r(order());
    T factor(1);
    for (int i = 0; i * k <= order(); ++i) {
      r.coeffs_[i * k] = factor * coeffs_[i];
      factor = factor * c;
    }
    return r;
  }

  /// Same coefficients at a different truncation order.
  TruncatedSeries with_order(int new_order) const {
    TruncatedSeries r(new_order);
    for (int i = 0; i <= std::min(order(), new_order); ++i) r.coeffs_[i] = coeffs_[i];
    return r;
  }

 private:
  static std::size_t checked_size(int order) {
    if (order < 0) throw OrderExceeded("negative truncation order");
    return static_cast<std::size_t>(order) + 1;
  }

  void require_same_order(const TruncatedSeries& b) const {
    if (order() != b.order())
      throw OrderMismatch("orders " + std::to_string(order()) + " and " + std::to_string(b.order()));
  }

  std::vector<T> coeffs_;
};

template <CoefficientRing T>
const T& coeff_at(const TruncatedSeries<T>& a, int n) {
  return a.coeff_at(n);
}

/// exp(a) via b_0 = 1, n b_n = sum_{j=1..n} j a_j b_{n-j}.
template <CoefficientRing T>
TruncatedSeries<T> series_exp(const TruncatedSeries<T>& a) {
  if (!(a[0] == T(0))) throw NonzeroConstantTerm("series_exp needs a zero constant term");
  const int n = a.order();
  std::vector<T> b(n + 1, T(0));
  b[0] = T(1);
  for (int m = 1; m <= n; ++m) {
    T acc(0);
    for (int j = 1; j <= m; ++j) {
      if (a[j] == T(0) || b[m - j] == T(0)) continue;
      acc = acc + T(ExactRational(j)) * a[j] * b[m - j];
    }
    b[m] = T(ExactRational(1, m)) * acc;
  }
  return TruncatedSeries<T>(n, std::move(b));
}

/// log(a) for a with constant term 1, from a' = a (log a)'.
template <CoefficientRing T>
TruncatedSeries<T> series_log(const TruncatedSeries<T>& a) {
  if (!(a[0] == T(1))) throw ConstantTermNotOne("series_log needs constant term 1");
  const int n = a.order();
  std::vector<T> b(n + 1, T(0));
  for (int m = 1; m <= n; ++m) {
    T acc = T(ExactRational(m)) * a[m];
    for (int j = 1; j < m; ++j) {
      if (b[j] == T(0) || a[m - j] == T(0)) continue;
      acc = acc - T(ExactRational(j)) * b[j] * a[m - j];
    }
    b[m] = T(ExactRational(1, m)) * acc;
  }
  return TruncatedSeries<T>(n, std::move(b));
}

/// 1/a by the direct recurrence b_0 = a_0^{-1}, b_n = -a_0^{-1} sum_{j=1..n} a_j b_{n-j}.
template <CoefficientRing T>
TruncatedSeries<T> series_reciprocal(const TruncatedSeries<T>& a) {
  const std::optional<T> inv = unit_inverse(a[0]);
  if (!inv) throw NonInvertibleConstant("constant term is not a unit");
  const int n = a.order();
  std::vector<T> b(n + 1, T(0));
  b[0] = *inv;
  for (int m = 1; m <= n; ++m) {
    T acc(0);
    for (int j = 1; j <= m; ++j) {
      if (a[j] == T(0) || b[m - j] == T(0)) continue;
      acc = acc + a[j] * b[m - j];
    }
    b[m] = -(*inv * acc);
  }
  return TruncatedSeries<T>(n, std::move(b));
}

template <CoefficientRing T>
TruncatedSeries<T> series_int_pow(const TruncatedSeries<T>& a, int exponent) {
  if (exponent < 0) return series_int_pow(series_reciprocal(a), -exponent);
  TruncatedSeries<T> result = TruncatedSeries<T>::constant(a.order(), T(1));
  TruncatedSeries<T> base = a;
  auto e = static_cast<unsigned>(exponent);
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

}  // namespace qconnect
