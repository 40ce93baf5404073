#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "qconnect/connection.hpp"
#include "qconnect/families.hpp"
#include "qconnect/qkernel.hpp"

namespace qconnect {
namespace {

const RationalFunction kOne(1);
const QBase kBaseQ = QBase::q();

AbstractCoefficient beta(int k) { return AbstractCoefficient::generator(k); }
AbstractCoefficient rational(long p, long q) {
  ExactRational r(p, q);
  r.canonicalize();
  return AbstractCoefficient(r);
}

TEST(Pochhammer, Examples) {
  EXPECT_EQ(pochhammer(ExactRational(7, 3), 0), 1);
  for (int l = 1; l <= 4; ++l) EXPECT_EQ(pochhammer(0, l), 0);
  EXPECT_EQ(pochhammer(3, 2), 12);
  EXPECT_EQ(pochhammer(-2, 3), 0);
  EXPECT_EQ(pochhammer(-3, 2), 6);
}

TEST(HermitePairs, RationalCombinations) {
  const QBase b2 = QBase::q_power(-2);
  const QBase b4 = QBase::q_power(-4);
  for (int k = 1; k <= 5; ++k) {
    const RationalFunction sign(k % 2 == 1 ? 1 : -1);
    EXPECT_EQ(hermite_pair_linear(k), sign * RationalFunction(2).pow(k) * quesne_c(k, b2));
    EXPECT_EQ(hermite_pair_quadratic(k),
              sign * (RationalFunction(2) / (RationalFunction::q() * q_number(2, b2))).pow(k) * quesne_c(k, b4));
  }
}

TEST(HermiteConnection, TotalsMatchQHermite) {
  for (int n = 0; n <= 8; ++n) {
    const HermiteConnection c = hermite_connection(n);
    EXPECT_EQ(c.polynomial(), q_hermite(n)) << n;
    EXPECT_EQ(c.terms.size(), partitions_of(n).size());
  }
  EXPECT_EQ(hermite_connection(0).polynomial(), ZPolynomial(1L));
}

TEST(HermiteConnection, TotalIsSumOfTerms) {
  const HermiteConnection c = hermite_connection(6);
  ZPolynomial sum;
  for (const auto& t : c.terms) sum += t.value;
  EXPECT_EQ(sum, c.total);
  EXPECT_EQ(c.normalization, q_factorial(6, QBase::q_power(-2)) * RationalFunction::s_power(-6));
}

TEST(HermiteConnection, SumIndependentOfOrder) {
  const HermiteConnection c = hermite_connection(7);
  std::vector<std::size_t> order(c.terms.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::mt19937 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(order.begin(), order.end(), rng);
    ZPolynomial sum;
    for (std::size_t i : order) sum += c.contribution(i);
    EXPECT_EQ(sum, c.polynomial());
  }
}

TEST(HermiteConnection, FactorsDescribePartition) {
  for (const auto& term : hermite_connection(5).terms) {
    int weight = 0;
    for (const auto& f : term.factors) {
      EXPECT_EQ(f.family, ClassicalFactor::Family::hermite);
      EXPECT_EQ(term.solution.parts.at(f.slot), f.degree);
      weight += f.slot * f.degree;
    }
    EXPECT_EQ(weight, 5);
  }
}

TEST(LaguerreConnection, TotalsMatchForSeveralAux) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> value(-3, 3);
  for (int n = 0; n <= 5; ++n) {
    for (int k = 0; k <= 5; ++k) {
      const ZPolynomial want = q_laguerre(n, k);
      std::vector<AuxiliaryIntegers> sets = {{}};
      for (int i = 0; i < 3; ++i) {
        AuxiliaryIntegers aux;
        for (int j = 1; j <= std::max(k, 1); ++j) aux[j] = value(rng);
        sets.push_back(aux);
      }
      for (const auto& aux : sets) ASSERT_EQ(laguerre_connection(n, k, aux).polynomial(), want) << n << "," << k;
    }
  }
}

TEST(LaguerreConnection, KZero) {
  for (int n = 0; n <= 4; ++n) {
    const LaguerreConnection c = laguerre_connection(n, 0);
    ASSERT_EQ(c.terms.size(), 1u);
    EXPECT_EQ(c.total, ZPolynomial(RationalFunction::q_power(n * (n + 1) / 2)));
  }
}

TEST(LaguerreConnection, AuxIndependence) {
  const auto a = laguerre_connection(3, 3, {{1, 2}, {2, 1}, {3, 3}});
  const auto b = laguerre_connection(3, 3, {});
  EXPECT_EQ(a.total, b.total);
}

// The contribution table for L_3^{(0)}, written out as functions of the auxiliary integers.
TEST(LaguerreConnection, ContributionTableRows) {
  const long n1 = 2, n2 = -1, n3 = 3;
  const AuxiliaryIntegers aux = {{1, n1}, {2, n2}, {3, n3}};
  const LaguerreConnection c = laguerre_connection(3, 3, aux);
  ASSERT_EQ(c.terms.size(), 18u);

  const RationalFunction q = RationalFunction::q();
  const RationalFunction q3 = q.pow(3) * q_number(3, kBaseQ);
  const RationalFunction q1 = q * q_number(3, kBaseQ);
  const RationalFunction q6 = q.pow(6);
  const ZPolynomial z = z_variable();
  const ZPolynomial z2 = ZPolynomial::basis_element(2, quesne_c(2, kBaseQ));
  const ZPolynomial z3 = ZPolynomial::basis_element(3, quesne_c(3, kBaseQ));
  auto L = [](int k, long alpha, const ZPolynomial& arg) { return laguerre_classical({k, static_cast<int>(alpha)}, arg); };
  auto poch = [](long a, int l) { return RationalFunction(pochhammer(a, l)); };
  auto num = [](long v) { return RationalFunction(v); };

  struct Row {
    LaguerrePartitionSolution solution;
    ZPolynomial value;
  };
  auto sol = [](int ell, std::map<int, int> kp, std::map<int, int> lp) { return LaguerrePartitionSolution{3, ell, kp, lp}; };
  const std::vector<Row> rows = {
      {sol(0, {{1, 3}}, {}), L(3, n1 - 3, z).scaled(q6)},
      {sol(0, {}, {{1, 3}}), ZPolynomial(-q6 * poch(n1, 3) / num(6))},
      {sol(3, {}, {}), ZPolynomial(1L)},
      {sol(0, {{3, 1}}, {}), L(1, n3 - 1, z3).scaled(q6)},
      {sol(0, {}, {{3, 1}}), ZPolynomial(-q6 * num(n3))},
      {sol(0, {{1, 1}, {2, 1}}, {}), (L(1, n1 - 1, z) * L(1, n2 - 1, z2)).scaled(q6)},
      {sol(0, {}, {{1, 1}, {2, 1}}), ZPolynomial(q6 * num(n1 * n2))},
      {sol(0, {{1, 2}}, {{1, 1}}), L(2, n1 - 2, z).scaled(-q6 * num(n1))},
      {sol(0, {{1, 1}}, {{1, 2}}), L(1, n1 - 1, z).scaled(q6 * poch(n1, 2) / num(2))},
      {sol(1, {{1, 2}}, {}), L(2, n1 - 2, z).scaled(q3)},
      {sol(2, {{1, 1}}, {}), L(1, n1 - 1, z).scaled(q1)},
      {sol(1, {}, {{1, 2}}), ZPolynomial(q3 * poch(n1, 2) / num(2))},
      {sol(2, {}, {{1, 1}}), ZPolynomial(-q1 * num(n1))},
      {sol(0, {{2, 1}}, {{1, 1}}), L(1, n2 - 1, z2).scaled(-q6 * num(n1))},
      {sol(1, {{2, 1}}, {}), L(1, n2 - 1, z2).scaled(q3)},
      {sol(1, {}, {{2, 1}}), ZPolynomial(-q3 * num(n2))},
      {sol(0, {{1, 1}}, {{2, 1}}), L(1, n1 - 1, z).scaled(-q6 * num(n2))},
      {sol(1, {{1, 1}}, {{1, 1}}), L(1, n1 - 1, z).scaled(-q3 * num(n1))},
  };
  for (const auto& row : rows) {
    const auto it = std::find_if(c.terms.begin(), c.terms.end(),
                                 [&](const auto& t) { return t.solution == row.solution; });
    ASSERT_NE(it, c.terms.end());
    EXPECT_EQ(it->value, row.value) << "ell=" << row.solution.ell;
  }
}

TEST(GegenbauerConnection, LowOrders) {
  const GegenbauerConnection c1 = gegenbauer_connection(1);
  ASSERT_EQ(c1.terms.size(), 1u);
  EXPECT_EQ(c1.terms[0].solution, ExponentVector::generator(1));
  EXPECT_EQ(c1.terms[0].coefficient, beta(1));

  const GegenbauerConnection c2 = gegenbauer_connection(2);
  ASSERT_EQ(c2.terms.size(), 2u);
  EXPECT_EQ(c2.terms[0].solution, ExponentVector::generator(2));
  EXPECT_EQ(c2.terms[0].coefficient, beta(2));
  EXPECT_EQ(c2.terms[1].solution, ExponentVector::generator(1, 2));
  EXPECT_EQ(c2.terms[1].coefficient, rational(-1, 2) * (beta(2) - beta(1) * beta(1)));
}

TEST(GegenbauerConnection, FifthOrderExtremes) {
  const GegenbauerConnection c = gegenbauer_connection(5);
  EXPECT_EQ(c.terms.front().solution, ExponentVector::generator(5));
  EXPECT_EQ(c.terms.front().coefficient, beta(5));
  const AbstractCoefficient expected =
      rational(1, 120) * (AbstractCoefficient(24L) * beta(5) - AbstractCoefficient(30L) * beta(1) * beta(4) -
                          AbstractCoefficient(20L) * beta(2) * beta(3) + AbstractCoefficient(20L) * beta(1).pow(2) * beta(3) +
                          AbstractCoefficient(15L) * beta(1) * beta(2).pow(2) -
                          AbstractCoefficient(10L) * beta(1).pow(3) * beta(2) + beta(1).pow(5));
  EXPECT_EQ(c.terms.back().solution, ExponentVector::generator(1, 5));
  EXPECT_EQ(c.terms.back().coefficient, expected);
}

TEST(GegenbauerConnection, SubstitutionReproducesDirect) {
  for (int n = 0; n <= 8; ++n) {
    const GegenbauerConnection c = gegenbauer_connection(n);
    EXPECT_EQ(c.polynomial(), q_gegenbauer_direct(n)) << n;
    CosPolynomial rebuilt;
    for (const auto& t : c.terms) {
      CosPolynomial product(substitute_beta_q_lambda(t.coefficient));
      for (int m = 1; m <= t.solution.max_generator(); ++m)
        product = product * gegenbauer_classical(m).pow(t.solution.exponent(m));
      rebuilt += product;
    }
    EXPECT_EQ(rebuilt, q_gegenbauer_direct(n)) << n;
  }
}

TEST(GegenbauerConnection, ClassicalLambda) {
  for (int n = 0; n <= 5; ++n) {
    SparsePolynomial<LambdaPolynomial> collapsed;
    for (const auto& t : gegenbauer_connection(n).terms)
      collapsed += SparsePolynomial<LambdaPolynomial>::monomial(t.solution, substitute_beta_classical_lambda(t.coefficient));
    EXPECT_EQ(collapsed, classical_lambda_connection(n)) << n;
  }
}

TEST(SubstituteBeta, Examples) {
  const RationalFunction lambda = RationalFunction::lambda();
  EXPECT_EQ(substitute_beta_q_lambda(beta(1)), (kOne - lambda) / (kOne - RationalFunction::q()));
  const LambdaPolynomial l = LambdaPolynomial::generator(1);
  EXPECT_EQ(substitute_beta_classical_lambda(beta(2) - beta(1) * beta(1)), l - l * l);
  const auto variant = substitute_beta(beta(3), BetaMode::q_lambda);
  ASSERT_TRUE(std::holds_alternative<RationalFunction>(variant));
  EXPECT_EQ(std::get<RationalFunction>(variant), lambda_bracket(3));
  EXPECT_TRUE(std::holds_alternative<LambdaPolynomial>(substitute_beta(beta(3), BetaMode::classical_lambda)));
}

TEST(SubstituteBeta, LambdaOneCollapsesToLeadingTerm) {
  // At Λ = q every β_k is 1: C_n^{(1)}(z;q) = C_n(z).
  for (int n = 1; n <= 5; ++n) {
    for (const auto& t : gegenbauer_connection(n).terms) {
      ExactRational value = 0;
      for (const auto& [m, r] : t.coefficient.terms()) value += r;
      EXPECT_EQ(value, t.solution == ExponentVector::generator(n) ? 1 : 0) << n;
    }
  }
}

TEST(LogCoefficients, LowOrders) {
  using P = ClassicalProductPolynomial;
  const P c1 = P::generator(1), c2 = P::generator(2), c3 = P::generator(3);
  auto r = [](long p, long q) {
    ExactRational v(p, q);
    v.canonicalize();
    return P::monomial(ExponentVector(), AbstractCoefficient(v));
  };
  EXPECT_EQ(log_coefficient_in_classical(1), c1);
  EXPECT_EQ(log_coefficient_in_classical(2), c2 - r(1, 2) * c1 * c1);
  EXPECT_EQ(log_coefficient_in_classical(3), c3 - c1 * c2 + r(1, 3) * c1 * c1 * c1);
}

TEST(SumRules, HoldThroughEight) {
  for (int ell = 1; ell <= 8; ++ell) EXPECT_TRUE(gegenbauer_sum_rule(ell).holds()) << ell;
}

TEST(SumRules, Examples) {
  const SumRule one = gegenbauer_sum_rule(1);
  EXPECT_EQ(one.lhs, q_gegenbauer_direct(1));
  EXPECT_EQ(one.rhs, CosPolynomial::basis_element(1, RationalFunction(2) * lambda_bracket(1)));
  const SumRule two = gegenbauer_sum_rule(2);
  EXPECT_EQ(two.lhs, CosPolynomial::basis_element(2, lambda_bracket(2)));
  EXPECT_EQ(two.rhs, two.lhs);
}

}  // namespace
}  // namespace qconnect
