#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <random>

#include "qconnect/error.hpp"
#include "qconnect/families.hpp"
#include "qconnect/json_io.hpp"
#include "random_values.hpp"

namespace qconnect {
namespace {

TEST(ParseIntPoly, Examples) {
  EXPECT_EQ(parse_int_poly("0"), IntPoly());
  EXPECT_EQ(parse_int_poly("-7"), IntPoly(-7));
  EXPECT_EQ(parse_int_poly("q^{1/2}"), IntPoly::s_power(1));
  EXPECT_EQ(parse_int_poly("q"), IntPoly::s_power(2));
  EXPECT_EQ(parse_int_poly("q^3"), IntPoly::s_power(6));
  EXPECT_EQ(parse_int_poly("1 - 2*q*q^{λ} + q^{2λ}"),
            IntPoly(1) - IntPoly::term(2, 2, 1) + IntPoly::lambda_power(2));
  EXPECT_EQ(parse_int_poly("lambda"), IntPoly::lambda_power(1));
}

TEST(ParseIntPoly, Rejects) {
  for (const char* bad : {"", "q^{-1}", "x", "1 +", "q^{1/3}", "2**q", "q^{"})
    EXPECT_THROW(parse_int_poly(bad), ParseError) << bad;
}

TEST(PolynomialDocument, HermiteOne) {
  const auto doc = make_document("hermite", 1, std::nullopt, q_hermite(1), true);
  const auto j = nlohmann::json::parse(render_json(doc));
  EXPECT_EQ(j["family"], "hermite");
  EXPECT_EQ(j["n"], 1);
  EXPECT_FALSE(j.contains("k"));
  ASSERT_EQ(j["coefficients"].size(), 1u);
  EXPECT_EQ(j["coefficients"][0]["basis"], "z");
  EXPECT_EQ(j["coefficients"][0]["degree_or_m"], 1);
  EXPECT_EQ(j["coefficients"][0]["num"], "2");
  EXPECT_EQ(j["coefficients"][0]["den"], "q^{1/2}");
  EXPECT_EQ(j["total_check"], "pass");
}

TEST(PolynomialDocument, FamiliesRoundTrip) {
  for (int n = 0; n <= 6; ++n) {
    const auto h = make_document("hermite", n, std::nullopt, q_hermite(n), true);
    EXPECT_EQ(parse_json(render_json(h)), h);
    EXPECT_EQ(to_z_polynomial(parse_json(render_json(h))), q_hermite(n));
    const auto g = make_document("gegenbauer", n, std::nullopt, q_gegenbauer_direct(n), false);
    EXPECT_EQ(parse_json(render_json(g)), g);
    EXPECT_EQ(to_cos_polynomial(parse_json(render_json(g))), q_gegenbauer_direct(n));
    const auto l = make_document("laguerre", n, 2, q_laguerre(n, 2), true);
    EXPECT_EQ(parse_json(render_json(l)), l);
  }
}

TEST(PolynomialDocument, RandomRoundTrip) {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 200; ++trial) {
    ZPolynomial p;
    for (int d = 0; d < 4; ++d) p += ZPolynomial::basis_element(d, testing::random_rational_function(rng, 2));
    const auto doc = make_document("hermite", 3, std::nullopt, p, trial % 2 == 0);
    const std::string text = render_json(doc);
    EXPECT_EQ(parse_json(text), doc);
    EXPECT_EQ(render_json(parse_json(text)), text);
  }
}

TEST(PolynomialDocument, ParseErrors) {
  EXPECT_THROW(parse_json("not json"), ParseError);
  EXPECT_THROW(parse_json("{}"), ParseError);
  EXPECT_THROW(parse_json(R"({"family":"hermite","n":1,"coefficients":[{"basis":"z","degree_or_m":1,"num":"2","den":"0"}],"total_check":"pass"})"),
               ParseError);
  EXPECT_THROW(parse_json(R"({"family":"hermite","n":1,"coefficients":[],"total_check":"maybe"})"), ParseError);
}

TEST(ConnectionJson, Terms) {
  const auto h = nlohmann::json::parse(render_json(hermite_connection(5), true));
  EXPECT_EQ(h["terms"].size(), 7u);
  const auto l = nlohmann::json::parse(render_json(laguerre_connection(3, 3), {}, true));
  EXPECT_EQ(l["terms"].size(), 18u);
  EXPECT_EQ(l["k"], 3);
  const auto g = nlohmann::json::parse(render_json(gegenbauer_connection(2), true));
  EXPECT_EQ(g["formula"], "β₂·C₂ − ½(β₂−β₁²)·C₁²");
}

}  // namespace
}  // namespace qconnect
