#include "qconnect/basis_polynomial.hpp"

#include <vector>

namespace qconnect {

ZPolynomial compose(const ZPolynomial& p, const ZPolynomial& argument) {
  ZPolynomial result;
  if (p.is_zero()) return result;
  // Horner from the top degree down.
  for (int d = p.degree(); d >= 0; --d) {
    result = result * argument;
    result += ZPolynomial(p.coefficient(d));
  }
  return result;
}

ZPolynomial cosine_to_monomial(const CosPolynomial& p) {
  // Chebyshev T_m(x) = cos(m θ): T_0 = 1, T_1 = x, T_m = 2x T_{m-1} - T_{m-2}.
  std::vector<ZPolynomial> chebyshev{ZPolynomial(1L), z_variable()};
  const ZPolynomial two_x = ZPolynomial::basis_element(1, RationalFunction(2));
  while (static_cast<int>(chebyshev.size()) <= p.degree())
    chebyshev.push_back(two_x * chebyshev.back() - chebyshev[chebyshev.size() - 2]);
  ZPolynomial result;
  for (const auto& [m, c] : p.terms()) result += chebyshev[m].scaled(c);
  return result;
}

}  // namespace qconnect
