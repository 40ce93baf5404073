#include "qconnect/connection.hpp"

#include "qconnect/families.hpp"
#include "qconnect/qkernel.hpp"
#include "qconnect/truncated_series.hpp"

namespace qconnect {

namespace {

ExactRational factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return ExactRational(f);
}

RationalFunction sign(int exponent) { return RationalFunction(exponent % 2 == 0 ? 1 : -1); }

}  // namespace

RationalFunction hermite_pair_linear(int k) {
  return sign(k + 1) * RationalFunction(2).pow(k) * quesne_c(k, QBase::q_power(-2));
}

RationalFunction hermite_pair_quadratic(int k) {
  const RationalFunction ratio =
      RationalFunction(2) / (RationalFunction::q() * q_number(2, QBase::q_power(-2)));
  return sign(k + 1) * ratio.pow(k) * quesne_c(k, QBase::q_power(-4));
}

ZPolynomial hermite_rationalized_factor(int k, int m) {
  // H_m(ζ) τ^m = m! sum_l (-1)^l (2ζτ)^{m-2l} (τ²)^l / (l! (m-2l)!)
  const RationalFunction u = hermite_pair_linear(k);
  const RationalFunction v = hermite_pair_quadratic(k);
  ZPolynomial p;
  for (int l = 0; 2 * l <= m; ++l) {
    const RationalFunction c = sign(l) * RationalFunction(factorial(m) / (factorial(l) * factorial(m - 2 * l))) *
                               u.pow(m - 2 * l) * v.pow(l);
    p += ZPolynomial::basis_element(k * (m - 2 * l), c);
  }
  return p;
}

HermiteConnection hermite_connection(int n) {
  if (n < 0) throw IndexOutOfRange("hermite_connection needs n >= 0");
  HermiteConnection expansion;
  expansion.n = n;
  expansion.normalization = q_factorial(n, QBase::q_power(-2)) * RationalFunction::s_power(-n);
  for (const PartitionSolution& partition : partitions_of(n)) {
    HermiteConnection::Term term;
    term.solution = partition;
    ExactRational denominator(1);
    ZPolynomial value(1L);
    for (const auto& [k, multiplicity] : partition.parts) {
      denominator *= factorial(multiplicity);
      term.factors.push_back({ClassicalFactor::Family::hermite, multiplicity, k, 0, 1});
      value = value * hermite_rationalized_factor(k, multiplicity);
    }
    term.coefficient = RationalFunction(ExactRational(1) / denominator);
    term.value = value.scaled(term.coefficient);
    expansion.total += term.value;
    expansion.terms.push_back(std::move(term));
  }
  return expansion;
}

ExactRational pochhammer(const ExactRational& alpha, int l) {
  if (l < 0) throw IndexOutOfRange("pochhammer needs l >= 0");
  ExactRational r(1);
  for (int j = 0; j < l; ++j) r *= alpha + j;
  return r;
}

LaguerreConnection laguerre_connection(int n, int k, const AuxiliaryIntegers& aux) {
  if (n < 0 || k < 0) throw IndexOutOfRange("laguerre_connection needs n, k >= 0");
  auto aux_of = [&](int j) -> long {
    auto it = aux.find(j);
    return it == aux.end() ? 0 : it->second;
  };
  const QBase q = QBase::q();
  LaguerreConnection expansion;
  expansion.n = n;
  expansion.k = k;
  expansion.normalization = RationalFunction::q_power(-(n - k) * (n - k + 1) / 2);
  for (const LaguerrePartitionSolution& solution : laguerre_partitions(n, k)) {
    LaguerreConnection::Term term;
    term.solution = solution;
    const int ell = solution.ell;
    // q-binomial tail of (-q/t; q)_n t^n.
    RationalFunction coefficient = RationalFunction::q_power((n - ell) * (n - ell + 1) / 2) * q_binomial(n, ell, q);
    // (1 + t^j)^{-n_j} contributions.
    ExactRational scalar(1);
    for (const auto& [j, lj] : solution.ellparts) {
      scalar *= pochhammer(ExactRational(aux_of(j)), lj) / factorial(lj);
      if (lj % 2 == 1) scalar = -scalar;
    }
    coefficient *= RationalFunction(scalar);
    ZPolynomial value = ZPolynomial(coefficient);
    for (const auto& [j, kj] : solution.kparts) {
      const long nj = aux_of(j);
      const int alpha = static_cast<int>(nj - kj);
      term.factors.push_back({ClassicalFactor::Family::laguerre, kj, j, alpha, 1});
      const ZPolynomial argument = ZPolynomial::basis_element(j, quesne_c(j, q));
      value = value * laguerre_classical({kj, alpha}, argument);
    }
    term.coefficient = coefficient;
    term.value = std::move(value);
    expansion.total += term.value;
    expansion.terms.push_back(std::move(term));
  }
  return expansion;
}

ClassicalProductPolynomial log_coefficient_in_classical(int l) {
  if (l < 1) throw IndexOutOfRange("log_coefficient_in_classical needs l >= 1");
  using Series = TruncatedSeries<ClassicalProductPolynomial>;
  Series s = Series::constant(l, ClassicalProductPolynomial(1L));
  for (int m = 1; m <= l; ++m) s += Series::monomial(l, ClassicalProductPolynomial::generator(m), m);
  return series_log(s)[l];
}

namespace {

// exp(sum_k weight(k) ℐ_k t^k) at t^n over polynomials in C_m with coefficients Coeff.
template <class Coeff, class Weight>
SparsePolynomial<Coeff> exponentiate_log_coefficients(int n, Weight&& weight) {
  using Poly = SparsePolynomial<Coeff>;
  using Series = TruncatedSeries<Poly>;
  if (n == 0) return Poly(1L);
  // ℐ_k in C-symbols with rational coefficients, lifted into Coeff.
  TruncatedSeries<ClassicalProductPolynomial> classical =
      TruncatedSeries<ClassicalProductPolynomial>::constant(n, ClassicalProductPolynomial(1L));
  for (int m = 1; m <= n; ++m)
    classical += TruncatedSeries<ClassicalProductPolynomial>::monomial(n, ClassicalProductPolynomial::generator(m), m);
  const auto logs = series_log(classical);
  Series exponent(n);
  for (int k = 1; k <= n; ++k) {
    Poly lifted;
    for (const auto& [monomial, c] : logs[k].terms()) {
      // Each coefficient of ℐ_k is a rational constant.
      const ExactRational value = c.coefficient(ExponentVector());
      lifted += Poly::monomial(monomial, weight(k) * Coeff(value));
    }
    exponent += Series::monomial(n, lifted, k);
  }
  return series_exp(exponent)[n];
}

}  // namespace

RationalFunction substitute_beta_q_lambda(const AbstractCoefficient& c) {
  return c.evaluate<RationalFunction>([](int k) { return lambda_bracket(k); },
                                      [](const ExactRational& r) { return RationalFunction(r); });
}

LambdaPolynomial substitute_beta_classical_lambda(const AbstractCoefficient& c) {
  return c.evaluate<LambdaPolynomial>([](int) { return LambdaPolynomial::generator(1); },
                                      [](const ExactRational& r) { return LambdaPolynomial(r); });
}

std::variant<RationalFunction, LambdaPolynomial> substitute_beta(const AbstractCoefficient& c, BetaMode mode) {
  if (mode == BetaMode::q_lambda) return substitute_beta_q_lambda(c);
  return substitute_beta_classical_lambda(c);
}

CosPolynomial evaluate_classical_products(const ClassicalProductPolynomial& p) {
  return p.evaluate<CosPolynomial>([](int m) { return gegenbauer_classical(m); },
                                   [](const AbstractCoefficient& c) { return CosPolynomial(substitute_beta_q_lambda(c)); });
}

GegenbauerConnection gegenbauer_connection(int n) {
  if (n < 0) throw IndexOutOfRange("gegenbauer_connection needs n >= 0");
  const ClassicalProductPolynomial expansion_poly = exponentiate_log_coefficients<AbstractCoefficient>(
      n, [](int k) { return AbstractCoefficient::generator(k); });
  GegenbauerConnection expansion;
  expansion.n = n;
  for (const auto& [monomial, coefficient] : expansion_poly.terms()) {
    GegenbauerConnection::Term term;
    term.solution = monomial;
    term.coefficient = coefficient;
    CosPolynomial value(substitute_beta_q_lambda(coefficient));
    for (int m = monomial.max_generator(); m >= 1; --m) {
      const int power = monomial.exponent(m);
      if (power == 0) continue;
      term.factors.push_back({ClassicalFactor::Family::gegenbauer, m, 0, 0, power});
      value = value * gegenbauer_classical(m).pow(power);
    }
    term.value = std::move(value);
    expansion.total += term.value;
    expansion.terms.push_back(std::move(term));
  }
  return expansion;
}

SparsePolynomial<LambdaPolynomial> classical_lambda_connection(int n) {
  if (n < 0) throw IndexOutOfRange("classical_lambda_connection needs n >= 0");
  return exponentiate_log_coefficients<LambdaPolynomial>(n, [](int) { return LambdaPolynomial::generator(1); });
}

SumRule gegenbauer_sum_rule(int ell) {
  if (ell < 1) throw IndexOutOfRange("gegenbauer_sum_rule needs l >= 1");
  using Series = TruncatedSeries<CosPolynomial>;
  Series deformed(ell);
  Series classical(ell);
  for (int n = 0; n <= ell; ++n) {
    deformed += Series::monomial(ell, q_gegenbauer_direct(n), n);
    classical += Series::monomial(ell, gegenbauer_classical(n), n);
  }
  SumRule rule;
  rule.ell = ell;
  rule.lhs = series_log(deformed)[ell];
  rule.rhs = series_log(classical)[ell].scaled(lambda_bracket(ell));
  return rule;
}

}  // namespace qconnect
