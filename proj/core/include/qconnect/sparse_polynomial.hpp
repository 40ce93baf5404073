#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "qconnect/rational_function.hpp"

namespace qconnect {

/// Exponents of generators x_1, x_2, ...; entry i holds the power of x_{i+1}.
/// Read as a partition: generator k with exponent e contributes e parts of size k.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<int> exponents) : e_(std::move(exponents)) { trim(); }

  static ExponentVector generator(int k, int power = 1) {
    std::vector<int> e(static_cast<std::size_t>(k), 0);
    e[k - 1] = power;
    return ExponentVector(std::move(e));
  }

  /// Exponent of x_k (k >= 1).
  int exponent(int k) const { return k <= static_cast<int>(e_.size()) ? e_[k - 1] : 0; }
  int max_generator() const { return static_cast<int>(e_.size()); }
  bool is_one() const { return e_.empty(); }
  int total_degree() const {
    int d = 0;
    for (int x : e_) d += x;
    return d;
  }
  /// sum k * e_k, the size of the partition.
  int weight() const {
    int w = 0;
    for (std::size_t i = 0; i < e_.size(); ++i) w += static_cast<int>(i + 1) * e_[i];
    return w;
  }
  /// Parts in descending order.
  std::vector<int> descending_parts() const {
    std::vector<int> parts;
    for (int k = max_generator(); k >= 1; --k)
      for (int j = 0; j < exponent(k); ++j) parts.push_back(k);
    return parts;
  }

  friend ExponentVector operator*(const ExponentVector& a, const ExponentVector& b) {
    std::vector<int> e(std::max(a.e_.size(), b.e_.size()), 0);
    for (std::size_t i = 0; i < a.e_.size(); ++i) e[i] += a.e_[i];
    for (std::size_t i = 0; i < b.e_.size(); ++i) e[i] += b.e_[i];
    return ExponentVector(std::move(e));
  }
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  void trim() {
    while (!e_.empty() && e_.back() == 0) e_.pop_back();
  }
  std::vector<int> e_;
};

/// Orders monomials as partitions: descending part lists compared lexicographically,
/// larger first, so x_5 precedes x_1 x_4 precedes x_2 x_3 ...
struct PartitionOrder {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    const auto pa = a.descending_parts();
    const auto pb = b.descending_parts();
    return std::lexicographical_compare(pb.begin(), pb.end(), pa.begin(), pa.end());
  }
};

/// Sparse commutative polynomial in x_1, x_2, ... over a coefficient ring.
template <class Coeff>
class SparsePolynomial {
 public:
  using Terms = std::map<ExponentVector, Coeff, PartitionOrder>;

  SparsePolynomial() = default;
  SparsePolynomial(long constant) { add(ExponentVector(), Coeff(constant)); }  // NOLINT(google-explicit-constructor)
  explicit SparsePolynomial(const ExactRational& constant) { add(ExponentVector(), Coeff(constant)); }

  static SparsePolynomial monomial(const ExponentVector& m, Coeff c = Coeff(1)) {
    SparsePolynomial p;
    p.add(m, c);
    return p;
  }
  static SparsePolynomial generator(int k) { return monomial(ExponentVector::generator(k)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coeff coefficient(const ExponentVector& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff(0) : it->second;
  }
  int max_generator() const {
    int g = 0;
    for (const auto& [m, c] : terms_) g = std::max(g, m.max_generator());
    return g;
  }

  SparsePolynomial operator-() const {
    SparsePolynomial r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  SparsePolynomial& operator+=(const SparsePolynomial& b) {
    for (const auto& [m, c] : b.terms_) add(m, c);
    return *this;
  }
  SparsePolynomial& operator-=(const SparsePolynomial& b) {
    for (const auto& [m, c] : b.terms_) add(m, -c);
    return *this;
  }
  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    SparsePolynomial r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add(ma * mb, ca * cb);
    return r;
  }
  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) { return a.terms_ == b.terms_; }

  SparsePolynomial pow(int exponent) const {
    SparsePolynomial r(1L);
    for (int i = 0; i < exponent; ++i) r = r * *this;
    return r;
  }

  /// Ring homomorphism x_k -> image(k), coefficients mapped by coeff_map.
  template <class Target, class GeneratorImage, class CoeffMap>
  Target evaluate(GeneratorImage&& image, CoeffMap&& coeff_map) const {
    std::vector<std::optional<Target>> images(static_cast<std::size_t>(max_generator()) + 1);
    auto image_of = [&](int k) -> const Target& {
      if (!images[k]) images[k] = image(k);
      return *images[k];
    };
    Target result(0);
    for (const auto& [m, c] : terms_) {
      Target term = coeff_map(c);
      for (int k = 1; k <= m.max_generator(); ++k)
        for (int j = 0; j < m.exponent(k); ++j) term = term * image_of(k);
      result = result + term;
    }
    return result;
  }

 private:
  void add(const ExponentVector& m, const Coeff& c) {
    if (c == Coeff(0)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second == Coeff(0)) terms_.erase(it);
    }
  }

  Terms terms_;
};

template <class Coeff>
std::optional<SparsePolynomial<Coeff>> unit_inverse(const SparsePolynomial<Coeff>& a) {
  if (a.terms().size() != 1 || !a.terms().begin()->first.is_one()) return std::nullopt;
  const auto inv = unit_inverse(a.terms().begin()->second);
  if (!inv) return std::nullopt;
  return SparsePolynomial<Coeff>::monomial(ExponentVector(), *inv);
}

/// Polynomial in β_1, β_2, ... over Q; β_k stands for [λ]_{q^k}.
using AbstractCoefficient = SparsePolynomial<ExactRational>;
/// Polynomial in the single symbol λ over Q (generator x_1 = λ).
using LambdaPolynomial = SparsePolynomial<ExactRational>;
/// Polynomial in classical C_1, C_2, ... with β-coefficients.
using ClassicalProductPolynomial = SparsePolynomial<AbstractCoefficient>;

}  // namespace qconnect
