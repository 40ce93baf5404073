#include "qconnect/families.hpp"

#include <string>

#include "qconnect/qkernel.hpp"
#include "qconnect/truncated_series.hpp"

namespace qconnect {

namespace {

ExactRational factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return ExactRational(f);
}

void require_within_order(int n, int order) {
  if (n > order)
    throw OrderExceeded("index " + std::to_string(n) + " exceeds truncation order " + std::to_string(order));
}

}  // namespace

ExactRational generalized_binomial(long n, int m) {
  if (m < 0) return 0;
  ExactRational r(1);
  for (int j = 0; j < m; ++j) {
    ExactRational step(n - j, j + 1);
    step.canonicalize();
    r *= step;
  }
  return r;
}

ZPolynomial hermite_classical(int n) {
  if (n < 0) throw IndexOutOfRange("hermite_classical needs n >= 0");
  ZPolynomial p;
  for (int l = 0; 2 * l <= n; ++l) {
    ExactRational c = factorial(n) / (factorial(l) * factorial(n - 2 * l));
    mpz_class two_power;
    mpz_ui_pow_ui(two_power.get_mpz_t(), 2, static_cast<unsigned long>(n - 2 * l));
    c *= two_power;
    if (l % 2 == 1) c = -c;
    p += ZPolynomial::basis_element(n - 2 * l, RationalFunction(c));
  }
  return p;
}

ZPolynomial laguerre_classical(LaguerreIndex index, const ZPolynomial& argument) {
  if (index.k < 0) throw IndexOutOfRange("laguerre_classical needs k >= 0");
  const long n = static_cast<long>(index.alpha) + index.k;
  ZPolynomial in_x;
  for (int l = 0; l <= index.k; ++l) {
    ExactRational c = generalized_binomial(n, index.k - l) / factorial(l);
    if (l % 2 == 1) c = -c;
    in_x += ZPolynomial::basis_element(l, RationalFunction(c));
  }
  return compose(in_x, argument);
}

CosPolynomial gegenbauer_classical(int n) {
  if (n < 0) throw IndexOutOfRange("gegenbauer_classical needs n >= 0");
  CosPolynomial p;
  for (int l = 0; l <= n; ++l) p += CosPolynomial::basis_element(std::abs(n - 2 * l));
  return p;
}

CosPolynomial gegenbauer_classical_symbolic_lambda(int n) {
  if (n < 0) throw IndexOutOfRange("gegenbauer_classical_symbolic_lambda needs n >= 0");
  // Rising factorial (λ)_m as a polynomial in the indeterminate.
  auto rising = [](int m) {
    RationalFunction r(1);
    for (int j = 0; j < m; ++j) r *= RationalFunction::lambda() + RationalFunction(j);
    return r;
  };
  CosPolynomial p;
  for (int l = 0; l <= n; ++l) {
    const RationalFunction c = rising(l) * rising(n - l) / RationalFunction(factorial(l) * factorial(n - l));
    p += CosPolynomial::basis_element(std::abs(n - 2 * l), c);
  }
  return p;
}

ZPolynomial hermite_classical_genfun(int n) {
  if (n < 0) throw IndexOutOfRange("hermite_classical_genfun needs n >= 0");
  TruncatedSeries<ZPolynomial> exponent(n);
  exponent += TruncatedSeries<ZPolynomial>::monomial(n, ZPolynomial::basis_element(1, RationalFunction(2)), 1);
  exponent -= TruncatedSeries<ZPolynomial>::monomial(n, ZPolynomial(1L), 2);
  return series_exp(exponent)[n].scaled(RationalFunction(factorial(n)));
}

ZPolynomial laguerre_classical_genfun(int n, int k) {
  if (k < 0) throw IndexOutOfRange("laguerre_classical_genfun needs k >= 0");
  using Series = TruncatedSeries<ZPolynomial>;
  const Series e = series_exp(Series::monomial(k, -z_variable(), 1));
  const Series one_plus_t = Series::constant(k, ZPolynomial(1L)) + Series::monomial(k, ZPolynomial(1L), 1);
  return (e * series_int_pow(one_plus_t, n))[k];
}

CosPolynomial gegenbauer_classical_genfun(int n) {
  if (n < 0) throw IndexOutOfRange("gegenbauer_classical_genfun needs n >= 0");
  using Series = TruncatedSeries<CosPolynomial>;
  Series base = Series::constant(n, CosPolynomial(1L));
  base -= Series::monomial(n, CosPolynomial::basis_element(1, RationalFunction(2)), 1);
  base += Series::monomial(n, CosPolynomial(1L), 2);
  return series_int_pow(base, -1)[n];
}

ZPolynomial q_hermite(int n, int order) {
  if (n < 0) throw IndexOutOfRange("q_hermite needs n >= 0");
  require_within_order(n, order);
  using Series = TruncatedSeries<ZPolynomial>;
  const QBase base2 = QBase::q_power(-2);
  const QBase base4 = QBase::q_power(-4);
  const RationalFunction one(1);
  // Only coefficients up to t^n matter, so truncate there.
  const Series linear = Series::monomial(
      n, ZPolynomial::basis_element(1, RationalFunction(2) * (one - RationalFunction::q_power(-2))), 1);
  const RationalFunction quad_coeff = -RationalFunction(2) * (one - RationalFunction::q_power(-4)) /
                                      (RationalFunction::q() * (one + RationalFunction::q_power(-2)));
  const Series quadratic = Series::monomial(n, ZPolynomial(quad_coeff), 2);
  const Series g = q_exp_sum(QExpKind::big_E, linear, base2) * q_exp_sum(QExpKind::little_e, quadratic, base4);
  return g[n].scaled(q_factorial(n, base2) * RationalFunction::s_power(-n));
}

ZPolynomial q_laguerre(int n, int k, int order) {
  if (n < 0 || k < 0) throw IndexOutOfRange("q_laguerre needs n, k >= 0");
  require_within_order(k, order);
  using Series = TruncatedSeries<ZPolynomial>;
  const RationalFunction one(1);
  const Series argument =
      Series::monomial(k, ZPolynomial::basis_element(1, -(one - RationalFunction::q())), 1);
  const Series e = q_exp_sum(QExpKind::big_E, argument, QBase::q());
  // (-q/t; q)_n t^n = prod_{j=1..n} (t + q^j).
  Series product = Series::constant(k, ZPolynomial(1L));
  for (int j = 1; j <= n; ++j) {
    const Series factor =
        Series::constant(k, ZPolynomial(RationalFunction::q_power(j))) + Series::monomial(k, ZPolynomial(1L), 1);
    product = product * factor;
  }
  const int shift = (n - k) * (n - k + 1) / 2;
  return (e * product)[k].scaled(RationalFunction::q_power(-shift));
}

CosPolynomial q_gegenbauer_direct(int n) {
  if (n < 0) throw IndexOutOfRange("q_gegenbauer_direct needs n >= 0");
  const QBase q = QBase::q();
  const RationalFunction lambda = RationalFunction::lambda();
  CosPolynomial p;
  for (int l = 0; l <= n; ++l) {
    const RationalFunction c = q_pochhammer(lambda, q, l) * q_pochhammer(lambda, q, n - l) /
                               (q_pochhammer(RationalFunction::q(), q, l) * q_pochhammer(RationalFunction::q(), q, n - l));
    p += CosPolynomial::basis_element(std::abs(n - 2 * l), c);
  }
  return p;
}

CosPolynomial q_gegenbauer_genfun(int n, int order) {
  if (n < 0) throw IndexOutOfRange("q_gegenbauer_genfun needs n >= 0");
  require_within_order(n, order);
  using Series = TruncatedSeries<CosPolynomial>;
  Series exponent(n);
  for (int k = 1; k <= n; ++k) {
    const RationalFunction c = RationalFunction(ExactRational(2, k)) * lambda_bracket(k);
    exponent += Series::monomial(n, CosPolynomial::basis_element(k, c), k);
  }
  return series_exp(exponent)[n];
}

}  // namespace qconnect
