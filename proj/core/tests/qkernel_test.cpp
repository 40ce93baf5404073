#include <gtest/gtest.h>

#include "qconnect/error.hpp"
#include "qconnect/qkernel.hpp"

namespace qconnect {
namespace {

const RationalFunction kOne(1);
const RationalFunction kQ = RationalFunction::q();
const QBase kBaseQ = QBase::q();

using Series = TruncatedSeries<RationalFunction>;

Series z(int order) { return Series::monomial(order, kOne, 1); }

TEST(QBase, RejectsOne) {
  EXPECT_THROW(QBase(RationalFunction(1)), Error);
  EXPECT_NO_THROW(QBase::q_power(-4));
}

TEST(QNumber, Examples) {
  EXPECT_TRUE(q_number(0, kBaseQ).is_zero());
  EXPECT_EQ(q_number(3, kBaseQ), kOne + kQ + kQ * kQ);
  EXPECT_EQ(q_number(2, QBase::q_power(-2)), kOne + RationalFunction::q_power(-2));
}

TEST(QFactorial, Examples) {
  EXPECT_EQ(q_factorial(0, kBaseQ), kOne);
  EXPECT_EQ(q_factorial(3, kBaseQ), q_number(3, kBaseQ) * q_number(2, kBaseQ));
}

TEST(QBinomial, Examples) {
  EXPECT_EQ(q_binomial(3, 1, kBaseQ), kOne + kQ + kQ * kQ);
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(q_binomial(n, 0, kBaseQ), kOne);
  EXPECT_THROW(q_binomial(3, 4, kBaseQ), IndexOutOfRange);
  EXPECT_THROW(q_binomial(3, -1, kBaseQ), IndexOutOfRange);
}

TEST(QBinomial, SymmetricAndPolynomial) {
  for (int n = 0; n <= 8; ++n) {
    for (int l = 0; l <= n; ++l) {
      const RationalFunction b = q_binomial(n, l, kBaseQ);
      EXPECT_EQ(b, q_binomial(n, n - l, kBaseQ));
      EXPECT_EQ(b.denominator(), IntPoly(1L));
    }
  }
}

TEST(QPochhammer, Examples) {
  EXPECT_EQ(q_pochhammer(RationalFunction::lambda(), kBaseQ, 0), kOne);
  EXPECT_EQ(q_pochhammer(RationalFunction::lambda(), kBaseQ, 1), kOne - RationalFunction::lambda());
  EXPECT_EQ(q_pochhammer(kQ, kBaseQ, 2), (kOne - kQ) * (kOne - kQ * kQ));
}

TEST(QuesneC, Examples) {
  EXPECT_EQ(quesne_c(1, kBaseQ), kOne);
  EXPECT_EQ(quesne_c(2, kBaseQ), (kOne - kQ) / (RationalFunction(2) * (kOne + kQ)));
  EXPECT_EQ(quesne_c(3, kBaseQ), (kOne - kQ).pow(2) / (RationalFunction(3) * (kOne + kQ + kQ * kQ)));
}

TEST(QuesneC, ClassicalLimit) {
  EXPECT_EQ(limit_q_to_1(quesne_c(1, kBaseQ)), 1);
  for (int k = 2; k <= 8; ++k) EXPECT_EQ(limit_q_to_1(quesne_c(k, kBaseQ)), 0) << k;
}

TEST(QExpSum, Coefficients) {
  const Series e = q_exp_sum(QExpKind::little_e, z(3), kBaseQ);
  EXPECT_EQ(e[1], kOne / (kOne - kQ));
  const Series big = q_exp_sum(QExpKind::big_E, z(3), kBaseQ);
  EXPECT_EQ(big[2], kQ / ((kOne - kQ) * (kOne - kQ * kQ)));
  EXPECT_EQ(q_exp_sum(QExpKind::little_e, Series(4), kBaseQ), Series::constant(4, kOne));
  EXPECT_EQ(q_exp_sum(QExpKind::big_E, Series(4), kBaseQ), Series::constant(4, kOne));
  EXPECT_THROW(q_exp_sum(QExpKind::little_e, Series::constant(3, kOne), kBaseQ), NonzeroConstantTerm);
  EXPECT_THROW(q_exp_product_form(QExpKind::big_E, Series::constant(3, kOne), kBaseQ), NonzeroConstantTerm);
}

class QuesneIdentity : public ::testing::TestWithParam<int> {};

TEST_P(QuesneIdentity, SumEqualsProductForm) {
  const QBase base = QBase::q_power(GetParam());
  for (QExpKind kind : {QExpKind::little_e, QExpKind::big_E})
    EXPECT_EQ(q_exp_sum(kind, z(12), base), q_exp_product_form(kind, z(12), base));
}

TEST_P(QuesneIdentity, InverseIdentity) {
  const QBase base = QBase::q_power(GetParam());
  const Series product = q_exp_sum(QExpKind::little_e, z(12), base) * q_exp_sum(QExpKind::big_E, -z(12), base);
  EXPECT_EQ(product, Series::constant(12, kOne));
}

TEST_P(QuesneIdentity, PhysicsExponential) {
  const QBase base = QBase::q_power(GetParam());
  const Series rescaled = (kOne - base.value()) * z(10);
  EXPECT_EQ(q_exp_physics_sum(z(10), base), q_exp_sum(QExpKind::little_e, rescaled, base));
  EXPECT_EQ(q_exp_physics_sum(z(10), base), q_exp_quesne(z(10), base));
}

INSTANTIATE_TEST_SUITE_P(Bases, QuesneIdentity, ::testing::Values(1, -2, -4, 2));

TEST(QExp, ClassicalLimitIsExp) {
  const Series e = q_exp_physics_sum(z(6), kBaseQ);
  ExactRational factorial = 1;
  for (int n = 0; n <= 6; ++n) {
    if (n > 0) factorial *= n;
    EXPECT_EQ(limit_q_to_1(e[n]), 1 / factorial);
  }
}

TEST(LambdaBracket, Definition) {
  const RationalFunction lambda = RationalFunction::lambda();
  EXPECT_EQ(lambda_bracket(1), (kOne - lambda) / (kOne - kQ));
  EXPECT_EQ(lambda_bracket(3), (kOne - lambda.pow(3)) / (kOne - kQ.pow(3)));
}

}  // namespace
}  // namespace qconnect
