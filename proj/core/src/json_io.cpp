#include "qconnect/json_io.hpp"

#include <cctype>

#include <nlohmann/json.hpp>

#include "qconnect/error.hpp"
#include "qconnect/render.hpp"

namespace qconnect {

namespace {

using nlohmann::ordered_json;

class PolyParser {
 public:
  explicit PolyParser(const std::string& text) : text_(text) {}

  IntPoly parse() {
    skip();
    if (at_end()) fail("empty polynomial");
    IntPoly result;
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = take() == '-' ? -1 : 1;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      IntPoly t = term();
      result = sign < 0 ? result - t : result + t;
      first = false;
      skip();
    }
    return result;
  }

 private:
  IntPoly term() {
    IntPoly t = factor();
    skip();
    while (!at_end() && peek() == '*') {
      ++pos_;
      skip();
      t = t * factor();
      skip();
    }
    return t;
  }

  IntPoly factor() {
    if (at_end()) fail("unexpected end");
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      return IntPoly(mpz_class(text_.substr(start, pos_ - start)));
    }
    for (const std::string lam : {"λ", "lambda"}) {
      if (text_.compare(pos_, lam.size(), lam) == 0) {
        pos_ += lam.size();
        return IntPoly::lambda_power(1);
      }
    }
    if (peek() != 'q') fail("expected integer or q");
    ++pos_;
    if (at_end() || peek() != '^') return IntPoly::q_power(1);
    ++pos_;
    std::string exponent;
    if (!at_end() && peek() == '{') {
      const std::size_t close = text_.find('}', pos_);
      if (close == std::string::npos) fail("unterminated exponent");
      exponent = text_.substr(pos_ + 1, close - pos_ - 1);
      pos_ = close + 1;
    } else {
      const std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      exponent = text_.substr(start, pos_ - start);
    }
    return power_of_q(exponent);
  }

  IntPoly power_of_q(std::string e) {
    for (const std::string lam : {"λ", "lambda"}) {
      const std::size_t at = e.find(lam);
      if (at == std::string::npos) continue;
      if (at + lam.size() != e.size()) fail("bad exponent '" + e + "'");
      const std::string multiplier = e.substr(0, at);
      const long b = multiplier.empty() ? 1 : to_long(multiplier);
      if (b <= 0) fail("bad exponent '" + e + "'");
      return IntPoly::lambda_power(static_cast<int>(b));
    }
    long s_exp = 0;
    const std::size_t slash = e.find('/');
    if (slash == std::string::npos) {
      s_exp = 2 * to_long(e);
    } else {
      if (e.substr(slash + 1) != "2") fail("bad exponent '" + e + "'");
      s_exp = to_long(e.substr(0, slash));
    }
    if (s_exp < 0) fail("negative exponent in polynomial");
    return IntPoly::s_power(static_cast<int>(s_exp));
  }

  long to_long(const std::string& digits) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(digits, &used);
    } catch (const std::exception&) {
      fail("bad integer '" + digits + "'");
    }
    if (used != digits.size()) fail("bad integer '" + digits + "'");
    return v;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + text_ + "'");
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char take() { return text_[pos_++]; }

  const std::string& text_;
  std::size_t pos_ = 0;
};

ordered_json coefficient_json(const CoefficientEntry& e) {
  return ordered_json{{"basis", e.basis},
                      {"degree_or_m", e.index},
                      {"num", render(e.value.numerator())},
                      {"den", render(e.value.denominator())}};
}

ordered_json document_json(const PolynomialDocument& doc) {
  ordered_json j;
  j["family"] = doc.family;
  j["n"] = doc.n;
  if (doc.k) j["k"] = *doc.k;
  j["coefficients"] = ordered_json::array();
  for (const auto& e : doc.coefficients) j["coefficients"].push_back(coefficient_json(e));
  j["total_check"] = doc.total_check ? "pass" : "fail";
  return j;
}

ordered_json rational_json(const RationalFunction& f) {
  return ordered_json{{"num", render(f.numerator())}, {"den", render(f.denominator())}};
}

ordered_json factors_json(const std::vector<ClassicalFactor>& factors) {
  ordered_json out = ordered_json::array();
  for (const auto& f : factors) out.push_back(render(f));
  return out;
}

template <class Map>
ordered_json map_json(const Map& m) {
  ordered_json out = ordered_json::object();
  for (const auto& [key, value] : m) out[std::to_string(key)] = value;
  return out;
}

}  // namespace

IntPoly parse_int_poly(const std::string& text) { return PolyParser(text).parse(); }

PolynomialDocument make_document(const std::string& family, int n, std::optional<int> k, const ZPolynomial& p,
                                 bool total_check, const std::string& basis) {
  PolynomialDocument doc{family, n, k, {}, total_check};
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) doc.coefficients.push_back({basis, it->first, it->second});
  return doc;
}

PolynomialDocument make_document(const std::string& family, int n, std::optional<int> k, const CosPolynomial& p,
                                 bool total_check) {
  PolynomialDocument doc{family, n, k, {}, total_check};
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) doc.coefficients.push_back({"cos", it->first, it->second});
  return doc;
}

std::string render_json(const PolynomialDocument& doc) { return document_json(doc).dump(2) + "\n"; }

PolynomialDocument parse_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
  try {
    PolynomialDocument doc;
    doc.family = j.at("family").get<std::string>();
    doc.n = j.at("n").get<int>();
    if (j.contains("k")) doc.k = j.at("k").get<int>();
    for (const auto& e : j.at("coefficients")) {
      const std::string basis = e.at("basis").get<std::string>();
      if (basis != "z" && basis != "cos" && basis != "x") throw ParseError("unknown basis '" + basis + "'");
      doc.coefficients.push_back({basis, e.at("degree_or_m").get<int>(),
                                  RationalFunction(parse_int_poly(e.at("num").get<std::string>()),
                                                   parse_int_poly(e.at("den").get<std::string>()))});
    }
    const std::string check = j.at("total_check").get<std::string>();
    if (check != "pass" && check != "fail") throw ParseError("total_check must be pass or fail");
    doc.total_check = check == "pass";
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  } catch (const DivisionByZero& e) {
    throw ParseError(e.what());
  }
}

ZPolynomial to_z_polynomial(const PolynomialDocument& doc) {
  ZPolynomial p;
  for (const auto& e : doc.coefficients) {
    if (e.basis == "cos") throw ParseError("cosine coefficient in monomial document");
    p += ZPolynomial::basis_element(e.index, e.value);
  }
  return p;
}

CosPolynomial to_cos_polynomial(const PolynomialDocument& doc) {
  CosPolynomial p;
  for (const auto& e : doc.coefficients) {
    if (e.basis != "cos") throw ParseError("monomial coefficient in cosine document");
    p += CosPolynomial::basis_element(e.index, e.value);
  }
  return p;
}

std::string render_json(const HermiteConnection& c, bool total_check) {
  ordered_json j = document_json(make_document("hermite", c.n, std::nullopt, c.polynomial(), total_check));
  j["terms"] = ordered_json::array();
  for (std::size_t i = 0; i < c.terms.size(); ++i) {
    const auto& t = c.terms[i];
    j["terms"].push_back(ordered_json{{"solution", map_json(t.solution.parts)},
                                      {"coefficient", rational_json(t.coefficient)},
                                      {"factors", factors_json(t.factors)},
                                      {"contribution", render(c.contribution(i))}});
  }
  return j.dump(2) + "\n";
}

std::string render_json(const LaguerreConnection& c, const AuxiliaryIntegers& aux, bool total_check) {
  ordered_json j = document_json(make_document("laguerre", c.n, c.k, c.polynomial(), total_check));
  j["aux"] = map_json(aux);
  j["terms"] = ordered_json::array();
  for (const auto& t : c.terms) {
    j["terms"].push_back(ordered_json{{"solution",
                                       ordered_json{{"ell", t.solution.ell},
                                                    {"k_parts", map_json(t.solution.kparts)},
                                                    {"ell_parts", map_json(t.solution.ellparts)}}},
                                      {"coefficient", rational_json(t.coefficient)},
                                      {"factors", factors_json(t.factors)},
                                      {"contribution", render(t.value)}});
  }
  return j.dump(2) + "\n";
}

std::string render_json(const GegenbauerConnection& c, bool total_check) {
  ordered_json j = document_json(make_document("gegenbauer", c.n, std::nullopt, c.polynomial(), total_check));
  j["formula"] = render_formula(c);
  j["terms"] = ordered_json::array();
  for (const auto& t : c.terms) {
    ordered_json powers = ordered_json::object();
    for (int m = 1; m <= t.solution.max_generator(); ++m)
      if (t.solution.exponent(m) > 0) powers[std::to_string(m)] = t.solution.exponent(m);
    j["terms"].push_back(ordered_json{{"classical_powers", powers},
                                      {"coefficient", render(t.coefficient)},
                                      {"coefficient_latex", render(t.coefficient, Style::latex)}});
  }
  return j.dump(2) + "\n";
}

}  // namespace qconnect
