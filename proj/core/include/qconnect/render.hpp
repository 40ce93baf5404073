#pragma once

#include <string>

#include "qconnect/basis_polynomial.hpp"
#include "qconnect/connection.hpp"
#include "qconnect/int_poly.hpp"
#include "qconnect/rational_function.hpp"
#include "qconnect/sparse_polynomial.hpp"

namespace qconnect {

enum class Style { text, latex };

/// Polynomial in q, q^{1/2} and q^λ; s never appears in output.
std::string render(const IntPoly& p, Style style = Style::text);
/// Negative powers of q^{1/2} are written as such when the denominator is a bare power.
std::string render(const RationalFunction& f, Style style = Style::text);
std::string render(const ExactRational& r, Style style = Style::text);
std::string render(const ZPolynomial& p, Style style = Style::text, const std::string& variable = "z");
std::string render(const CosPolynomial& p, Style style = Style::text);

/// β_k monomials: "β₁²" in text, "[\lambda]_{q}^{2}" in LaTeX.
std::string render(const AbstractCoefficient& c, Style style = Style::text);
/// Single-symbol λ polynomial.
std::string render_lambda(const LambdaPolynomial& p, Style style = Style::text);

std::string render(const ClassicalFactor& f, Style style = Style::text);
std::string render(const PartitionSolution& s, Style style = Style::text);
std::string render(const LaguerrePartitionSolution& s, Style style = Style::text);
/// "C₁²·C₃"
std::string render_classical_monomial(const ExponentVector& m, Style style = Style::text);

/// β₂·C₂ − ½(β₂−β₁²)·C₁²
std::string render_formula(const GegenbauerConnection& c, Style style = Style::text);

/// Laguerre coefficients in q-binomial form when they match
/// (−1)^l q^{l(l+α)} [n choose k−l]_q / [l]_q!; expanded form otherwise.
/// H_n(z;q) as sum_l (-1)^l 2^{n-l} q^{e/2} [a choose l]_{q^{-4}} prod_{odd m} [m]_{q^{-2}} z^{n-2l};
/// falls back to render(p) when p is not of that shape.
std::string render_q_hermite(int n, const ZPolynomial& p, Style style = Style::text);
std::string render_q_laguerre(int n, int k, const ZPolynomial& p, Style style = Style::text);

/// Per-term tables plus total, mirroring the connection tables.
std::string render_table(const HermiteConnection& c, Style style = Style::text);
std::string render_table(const LaguerreConnection& c, Style style = Style::text);
std::string render_table(const GegenbauerConnection& c, Style style = Style::text);

}  // namespace qconnect
