#include <gtest/gtest.h>

#include "qconnect/error.hpp"
#include "qconnect/families.hpp"
#include "qconnect/qkernel.hpp"

namespace qconnect {
namespace {

const RationalFunction kOne(1);
const QBase kBaseQ = QBase::q();

ZPolynomial zpoly(std::initializer_list<std::pair<int, long>> terms) {
  ZPolynomial p;
  for (auto [d, c] : terms) p += ZPolynomial::basis_element(d, RationalFunction(c));
  return p;
}

ExactRational frac(long p, long q) {
  ExactRational r(p, q);
  r.canonicalize();
  return r;
}

TEST(GeneralizedBinomial, Values) {
  EXPECT_EQ(generalized_binomial(5, 2), 10);
  EXPECT_EQ(generalized_binomial(0, 1), 0);
  EXPECT_EQ(generalized_binomial(0, 0), 1);
  EXPECT_EQ(generalized_binomial(-2, 3), -4);
  EXPECT_EQ(generalized_binomial(3, 5), 0);
}

TEST(HermiteClassical, Examples) {
  EXPECT_EQ(hermite_classical(0), ZPolynomial(1L));
  EXPECT_EQ(hermite_classical(1), zpoly({{1, 2}}));
  EXPECT_EQ(hermite_classical(5), zpoly({{5, 32}, {3, -160}, {1, 120}}));
}

TEST(LaguerreClassical, Examples) {
  for (int n = 0; n <= 4; ++n) EXPECT_EQ(laguerre_classical({1, n - 1}), zpoly({{0, n}, {1, -1}})) << n;
  EXPECT_EQ(laguerre_classical({1, -1}), zpoly({{1, -1}}));
  for (int alpha = -3; alpha <= 3; ++alpha) EXPECT_EQ(laguerre_classical({0, alpha}), ZPolynomial(1L));
}

TEST(LaguerreClassical, ComposedArgument) {
  const ZPolynomial arg = ZPolynomial::basis_element(2, RationalFunction(3));
  EXPECT_EQ(laguerre_classical({1, 1}, arg), zpoly({{0, 2}, {2, -3}}));
}

TEST(GegenbauerClassical, Examples) {
  EXPECT_EQ(gegenbauer_classical(0), CosPolynomial(1L));
  EXPECT_EQ(gegenbauer_classical(1), CosPolynomial::basis_element(1, 2));
  EXPECT_EQ(gegenbauer_classical(2), CosPolynomial::basis_element(2, 2) + CosPolynomial(1L));
}

TEST(GegenbauerClassical, ChebyshevRecurrence) {
  const CosPolynomial two_cos = CosPolynomial::basis_element(1, 2);
  CosPolynomial previous(1L);
  CosPolynomial current = two_cos;
  for (int n = 2; n <= 10; ++n) {
    const CosPolynomial next = two_cos * current - previous;
    EXPECT_EQ(gegenbauer_classical(n), next) << n;
    previous = current;
    current = next;
  }
}

TEST(GegenbauerClassical, SineRatio) {
  // U_2(cos θ) = sin 3θ / sin θ, sampled numerically.
  for (double theta : {0.3, 1.1, 2.0}) {
    const double value = gegenbauer_classical(2).evaluate(theta, 1.0, 1.0).real();
    EXPECT_NEAR(value, std::sin(3 * theta) / std::sin(theta), 1e-12);
  }
}

TEST(ClassicalFamilies, ClosedFormEqualsGeneratingFunction) {
  for (int n = 0; n <= 8; ++n) {
    EXPECT_EQ(hermite_classical(n), hermite_classical_genfun(n)) << n;
    EXPECT_EQ(gegenbauer_classical(n), gegenbauer_classical_genfun(n)) << n;
    for (int k = 0; k <= 8; ++k) EXPECT_EQ(laguerre_classical({k, n - k}), laguerre_classical_genfun(n, k)) << n << k;
  }
}

TEST(QHermite, Examples) {
  EXPECT_EQ(q_hermite(0), ZPolynomial(1L));
  EXPECT_EQ(q_hermite(1), ZPolynomial::basis_element(1, RationalFunction(2) * RationalFunction::s_power(-1)));
  EXPECT_THROW(q_hermite(13), OrderExceeded);
  EXPECT_THROW(q_hermite(4, 3), OrderExceeded);
  EXPECT_NO_THROW(q_hermite(4, 4));
}

TEST(QHermite, Parity) {
  for (int n = 0; n <= 8; ++n) {
    const ZPolynomial h = q_hermite(n);
    for (const auto& [d, c] : h.terms()) EXPECT_EQ((n - d) % 2, 0) << n << " " << d;
  }
}

TEST(QHermite, ClassicalLimit) {
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(limit_q_to_1(q_hermite(n)), hermite_classical(n)) << n;
}

TEST(QLaguerre, Examples) {
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(q_laguerre(n, 0), ZPolynomial(1L));
  EXPECT_THROW(q_laguerre(3, 13), OrderExceeded);
  EXPECT_EQ(limit_q_to_1(q_laguerre(3, 3)),
            ZPolynomial(1L) + zpoly({{1, -3}}) + ZPolynomial::basis_element(2, RationalFunction(frac(3, 2))) +
                ZPolynomial::basis_element(3, RationalFunction(frac(-1, 6))));
}

TEST(QLaguerre, ClassicalLimit) {
  for (int n = 0; n <= 6; ++n)
    for (int k = 0; k <= 6; ++k) EXPECT_EQ(limit_q_to_1(q_laguerre(n, k)), laguerre_classical({k, n - k})) << n << k;
}

TEST(QGegenbauer, Examples) {
  EXPECT_EQ(q_gegenbauer_direct(0), CosPolynomial(1L));
  const RationalFunction lambda = RationalFunction::lambda();
  const RationalFunction expected = RationalFunction(2) * (kOne - lambda) / (kOne - RationalFunction::q());
  EXPECT_EQ(q_gegenbauer_direct(1), CosPolynomial::basis_element(1, expected));
  EXPECT_EQ(q_gegenbauer_genfun(1), CosPolynomial::basis_element(1, expected));
  EXPECT_THROW(q_gegenbauer_genfun(13), OrderExceeded);
}

TEST(QGegenbauer, DirectEqualsGeneratingFunction) {
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(q_gegenbauer_direct(n), q_gegenbauer_genfun(n)) << n;
}

TEST(QGegenbauer, LambdaOneIsClassical) {
  // Λ = q gives [1]_{q^k} = 1, so the deformed polynomial reduces to U_n.
  for (int n = 0; n <= 6; ++n) {
    const CosPolynomial p = q_gegenbauer_direct(n).map_coefficients([](const RationalFunction& c) {
      auto substitute = [](const IntPoly& poly) {
        IntPoly r;
        for (const auto& [m, coeff] : poly.terms()) r += IntPoly::term(coeff, m.s_exp + 2 * m.lambda_exp, 0);
        return r;
      };
      return RationalFunction(substitute(c.numerator()), substitute(c.denominator()));
    });
    EXPECT_EQ(p, gegenbauer_classical(n)) << n;
  }
}

TEST(CosineToMonomial, Chebyshev) {
  // cos 3θ = 4x³ - 3x
  EXPECT_EQ(cosine_to_monomial(CosPolynomial::basis_element(3)), zpoly({{3, 4}, {1, -3}}));
  EXPECT_EQ(cosine_to_monomial(gegenbauer_classical(2)), zpoly({{2, 4}, {0, -1}}));
}

}  // namespace
}  // namespace qconnect
