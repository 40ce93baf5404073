#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qconnect/basis_polynomial.hpp"
#include "qconnect/connection.hpp"

namespace qconnect {

/// Parses the text form produced by render(IntPoly): integers, q, q^{a/2}, q^{λ},
/// q^{bλ} joined by '*' and signed sums. "lambda" is accepted for λ.
/// Throws ParseError.
IntPoly parse_int_poly(const std::string& text);

struct CoefficientEntry {
  std::string basis;  // "z", "cos" or "x"
  int index = 0;      // degree or m
  RationalFunction value;
  friend bool operator==(const CoefficientEntry&, const CoefficientEntry&) = default;
};

/// The serialized polynomial document.
struct PolynomialDocument {
  std::string family;
  int n = 0;
  std::optional<int> k;
  std::vector<CoefficientEntry> coefficients;
  /// Whether an independent route produced the same polynomial.
  bool total_check = true;
  friend bool operator==(const PolynomialDocument&, const PolynomialDocument&) = default;
};

PolynomialDocument make_document(const std::string& family, int n, std::optional<int> k, const ZPolynomial& p,
                                 bool total_check, const std::string& basis = "z");
PolynomialDocument make_document(const std::string& family, int n, std::optional<int> k, const CosPolynomial& p,
                                 bool total_check);

/// Indented JSON; key order is fixed so output is byte-stable.
std::string render_json(const PolynomialDocument& doc);
/// Throws ParseError on malformed input.
PolynomialDocument parse_json(const std::string& text);

ZPolynomial to_z_polynomial(const PolynomialDocument& doc);
CosPolynomial to_cos_polynomial(const PolynomialDocument& doc);

/// Document plus a "terms" array describing each connection term.
std::string render_json(const HermiteConnection& c, bool total_check);
std::string render_json(const LaguerreConnection& c, const AuxiliaryIntegers& aux, bool total_check);
std::string render_json(const GegenbauerConnection& c, bool total_check);

}  // namespace qconnect
