#pragma once

#include <map>
#include <variant>
#include <vector>

#include "qconnect/basis_polynomial.hpp"
#include "qconnect/partitions.hpp"
#include "qconnect/rational_function.hpp"
#include "qconnect/sparse_polynomial.hpp"

namespace qconnect {

/// A classical polynomial appearing as a factor of a connection term.
struct ClassicalFactor {
  enum class Family { hermite, laguerre, gegenbauer };

  Family family = Family::hermite;
  int degree = 0;
  /// Hermite: k of the (ζ_k, τ_k) pair. Laguerre: j of the argument c_j(q) z^j.
  int slot = 0;
  /// Laguerre superscript n_j - k_j.
  int alpha = 0;
  int multiplicity = 1;

  friend bool operator==(const ClassicalFactor&, const ClassicalFactor&) = default;
};

template <class Solution, class Coefficient, class Value>
struct ConnectionTerm {
  Solution solution;
  Coefficient coefficient;
  std::vector<ClassicalFactor> factors;
  /// Contribution of this term to `total`.
  Value value;
};

/// Terms of a connection formula and their exact sum.
///
/// `total` is the generating-function coefficient the formula produces;
/// `total` scaled by `normalization` is the deformed polynomial itself.
template <class Solution, class Coefficient, class Value>
struct ConnectionExpansion {
  using Term = ConnectionTerm<Solution, Coefficient, Value>;

  int n = 0;
  int k = 0;
  std::vector<Term> terms;
  Value total;
  RationalFunction normalization{1};

  Value polynomial() const { return total.scaled(normalization); }
  Value contribution(std::size_t i) const { return terms.at(i).value.scaled(normalization); }
};

using HermiteConnection = ConnectionExpansion<PartitionSolution, RationalFunction, ZPolynomial>;
using LaguerreConnection = ConnectionExpansion<LaguerrePartitionSolution, RationalFunction, ZPolynomial>;
/// Solutions are C-monomials: exponent of generator m is the power of C_m.
using GegenbauerConnection = ConnectionExpansion<ExponentVector, AbstractCoefficient, CosPolynomial>;

// ---------------------------------------------------------------------------
// q-Hermite

/// 2 ζ_k τ_k / (z t)^k = (-1)^{k+1} 2^k c_k(q^{-2}).
RationalFunction hermite_pair_linear(int k);
/// τ_k² / t^{2k} = (-1)^{k+1} (2 / (q [2]_{q^{-2}}))^k c_k(q^{-4}).
RationalFunction hermite_pair_quadratic(int k);
/// H_m(ζ_k) τ_k^m at t = 1, a polynomial in z over Q(s).
ZPolynomial hermite_rationalized_factor(int k, int m);

/// Connection of H_n(z; q) to products of classical Hermite polynomials, one term per
/// partition {n_k} of n. polynomial() equals q_hermite(n).
HermiteConnection hermite_connection(int n);

// ---------------------------------------------------------------------------
// q-Laguerre

/// Auxiliary integers n_j; unassigned j default to 0.
using AuxiliaryIntegers = std::map<int, long>;

/// Rising factorial (α)_l; (α)_0 = 1.
ExactRational pochhammer(const ExactRational& alpha, int l);

/// Connection of L_k^{(n-k)}(z; q) to products of classical Laguerre polynomials at
/// arguments c_j(q) z^j. polynomial() equals q_laguerre(n, k) for every aux.
LaguerreConnection laguerre_connection(int n, int k, const AuxiliaryIntegers& aux = {});

// ---------------------------------------------------------------------------
// q-Gegenbauer

/// ℐ_l: t^l coefficient of log(1 + sum_m C_m t^m) in the symbols C_m.
ClassicalProductPolynomial log_coefficient_in_classical(int l);

/// C_n^{(λ)}(cos θ; q) as a polynomial in classical C_m = C_m^{(1)} with coefficients
/// in β_k = [λ]_{q^k}.
GegenbauerConnection gegenbauer_connection(int n);

/// Same expansion with every β_k collapsed to one symbol λ, computed directly from
/// exp(λ sum_k ℐ_k t^k).
SparsePolynomial<LambdaPolynomial> classical_lambda_connection(int n);

enum class BetaMode { q_lambda, classical_lambda };

/// β_k -> (1 - Λ^k) / (1 - q^k).
RationalFunction substitute_beta_q_lambda(const AbstractCoefficient& c);
/// β_k -> λ.
LambdaPolynomial substitute_beta_classical_lambda(const AbstractCoefficient& c);
std::variant<RationalFunction, LambdaPolynomial> substitute_beta(const AbstractCoefficient& c, BetaMode mode);

/// Evaluates a polynomial in C_m with β-coefficients, using classical C_m and q-lambda β.
CosPolynomial evaluate_classical_products(const ClassicalProductPolynomial& p);

struct SumRule {
  int ell = 0;
  /// t^l coefficient of log sum_n C_n^{(λ)}(cos θ; q) t^n.
  CosPolynomial lhs;
  /// [λ]_{q^l} times the t^l coefficient of log sum_n C_n(cos θ) t^n.
  CosPolynomial rhs;
  bool holds() const { return lhs == rhs; }
};

SumRule gegenbauer_sum_rule(int ell);

}  // namespace qconnect
