#pragma once

#include "qconnect/basis_polynomial.hpp"
#include "qconnect/rational_function.hpp"

namespace qconnect {

/// Index pair of L_k^{(alpha)}; alpha = n - k may be negative.
struct LaguerreIndex {
  int k = 0;
  int alpha = 0;
};

/// Generalized binomial n(n-1)...(n-m+1)/m! for any integer n, m >= 0.
ExactRational generalized_binomial(long n, int m);

// Classical families, explicit closed forms.

/// H_n(z) = sum_l (-1)^l n! (2z)^{n-2l} / (l! (n-2l)!).
ZPolynomial hermite_classical(int n);
/// L_k^{(n-k)}(x) = sum_l (-1)^l C(n, k-l) x^l / l!, evaluated at x = argument.
ZPolynomial laguerre_classical(LaguerreIndex index, const ZPolynomial& argument = z_variable());
/// C_n^{(1)}(cos θ) = sum_l cos((n - 2l) θ), i.e. U_n(cos θ).
CosPolynomial gegenbauer_classical(int n);
/// C_n^{(λ)}(cos θ) with λ carried by the Λ generator as a plain indeterminate.
CosPolynomial gegenbauer_classical_symbolic_lambda(int n);

// Classical families by generating-function extraction.

/// t^n coefficient of exp(2zt - t²), times n!.
ZPolynomial hermite_classical_genfun(int n);
/// t^k coefficient of exp(-zt) (1 + t)^n.
ZPolynomial laguerre_classical_genfun(int n, int k);
/// t^n coefficient of (1 - 2 cos θ t + t²)^{-1}.
CosPolynomial gegenbauer_classical_genfun(int n);

// Deformed families.

/// H_n(z; q) from the generating function E_{q^{-2}}(2(1-q^{-2}) z t) e_{q^{-4}}(-2(1-q^{-4}) t² / (q(1+q^{-2}))).
/// Throws OrderExceeded when n > order.
ZPolynomial q_hermite(int n, int order = 12);
/// L_k^{(n-k)}(z; q) from E_q(-(1-q) z t) (-q/t; q)_n t^n. Throws OrderExceeded when k > order.
ZPolynomial q_laguerre(int n, int k, int order = 12);
/// C_n^{(λ)}(cos θ; q) = sum_l (Λ;q)_l (Λ;q)_{n-l} / ((q;q)_l (q;q)_{n-l}) cos((n-2l) θ).
CosPolynomial q_gegenbauer_direct(int n);
/// t^n coefficient of exp(2 sum_k [λ]_{q^k} cos(k θ) t^k / k). Throws OrderExceeded when n > order.
CosPolynomial q_gegenbauer_genfun(int n, int order = 12);

/// Applies limit_q_to_1 to every coefficient.
template <Basis B>
BasisPolynomial<B> limit_q_to_1(const BasisPolynomial<B>& p) {
  return p.map_coefficients([](const RationalFunction& c) { return RationalFunction(limit_q_to_1(c)); });
}

}  // namespace qconnect
