#include "qconnect/qkernel.hpp"

#include <string>

namespace qconnect {

QBase::QBase(RationalFunction base) : base_(std::move(base)) {
  if (base_.is_one()) throw IndexOutOfRange("q-base must differ from 1");
}

RationalFunction q_number(int n, const QBase& base) {
  if (n < 0) throw IndexOutOfRange("q_number needs n >= 0");
  RationalFunction sum(0);
  for (int k = 0; k < n; ++k) sum += base.power(k);
  return sum;
}

RationalFunction q_factorial(int n, const QBase& base) {
  if (n < 0) throw IndexOutOfRange("q_factorial needs n >= 0");
  RationalFunction r(1);
  for (int k = 2; k <= n; ++k) r *= q_number(k, base);
  return r;
}

RationalFunction q_binomial(int n, int l, const QBase& base) {
  if (l < 0 || l > n) throw IndexOutOfRange("q_binomial needs 0 <= l <= n, got n=" + std::to_string(n) +
                                           ", l=" + std::to_string(l));
  return q_factorial(n, base) / (q_factorial(l, base) * q_factorial(n - l, base));
}

RationalFunction q_pochhammer(const RationalFunction& a, const QBase& base, int n) {
  if (n < 0) throw IndexOutOfRange("q_pochhammer needs n >= 0");
  RationalFunction r(1);
  for (int k = 0; k < n; ++k) r *= RationalFunction(1) - a * base.power(k);
  return r;
}

RationalFunction quesne_c(int k, const QBase& base) {
  if (k < 1) throw IndexOutOfRange("quesne_c needs k >= 1");
  return (RationalFunction(1) - base.value()).pow(k - 1) / (RationalFunction(k) * q_number(k, base));
}

RationalFunction lambda_bracket(int k) {
  if (k < 1) throw IndexOutOfRange("lambda_bracket needs k >= 1");
  return RationalFunction(IntPoly(1L) - IntPoly::lambda_power(k), IntPoly(1L) - IntPoly::q_power(k));
}

}  // namespace qconnect
