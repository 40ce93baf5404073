#include "qconnect/rational_function.hpp"

#include <cmath>

#include "qconnect/error.hpp"

namespace qconnect {

RationalFunction::RationalFunction(const ExactRational& value) {
  ExactRational r(value);
  r.canonicalize();
  num_ = IntPoly(r.get_num());
  den_ = IntPoly(r.get_den());
}

RationalFunction::RationalFunction(const IntPoly& numerator, const IntPoly& denominator)
    : num_(numerator), den_(denominator) {
  if (den_.is_zero()) throw DivisionByZero("zero denominator");
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = IntPoly(1L);
    return;
  }
  const IntPoly g = gcd(num_, den_);
  if (!(g == IntPoly(1L))) {
    num_ = divide_exact(num_, g);
    den_ = divide_exact(den_, g);
  }
  if (den_.leading_coefficient() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFunction RationalFunction::s_power(int k) {
  if (k >= 0) return RationalFunction(IntPoly::s_power(k));
  return RationalFunction(IntPoly(1L), IntPoly::s_power(-k), Reduced{});
}

ExactRational RationalFunction::constant_value() const {
  ExactRational r(num_.leading_coefficient(), den_.leading_coefficient());
  r.canonicalize();
  return r;
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, Reduced{}); }

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  RationalFunction r(den_, num_, Reduced{});
  if (r.den_.leading_coefficient() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

RationalFunction RationalFunction::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  const auto e = static_cast<unsigned>(exponent);
  return RationalFunction(num_.pow(e), den_.pow(e), Reduced{});
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  const IntPoly g = gcd(a.den_, b.den_);
  if (g.is_constant()) return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  // a/(g·x) + b/(g·y) = (a·y + b·x) / (g·x·y)
  const IntPoly x = divide_exact(a.den_, g);
  const IntPoly y = divide_exact(b.den_, g);
  return RationalFunction(a.num_ * y + b.num_ * x, a.den_ * y);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction();
  // Cross-cancel so the product stays reduced without a full gcd of the products.
  const IntPoly g1 = gcd(a.num_, b.den_);
  const IntPoly g2 = gcd(b.num_, a.den_);
  IntPoly num = divide_exact(a.num_, g1) * divide_exact(b.num_, g2);
  IntPoly den = divide_exact(a.den_, g2) * divide_exact(b.den_, g1);
  if (den.leading_coefficient() < 0) {
    num = -num;
    den = -den;
  }
  return RationalFunction(std::move(num), std::move(den), RationalFunction::Reduced{});
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw DivisionByZero("division by the zero element");
  return a * b.inverse();
}

ExactRational limit_q_to_1(const RationalFunction& f) {
  if (f.has_lambda()) throw LambdaPresent("limit_q_to_1 requires a Λ-free element");
  IntPoly num = f.numerator();
  IntPoly den = f.denominator();
  while (!num.is_zero() && num.value_at_s_one() == 0 && den.value_at_s_one() == 0) {
    num = divide_by_s_minus_one(num);
    den = divide_by_s_minus_one(den);
  }
  const mpz_class d = den.value_at_s_one();
  if (d == 0) throw PoleAtOne("denominator vanishes at q = 1");
  ExactRational r(num.value_at_s_one(), d);
  r.canonicalize();
  return r;
}

std::complex<double> eval_numeric(const RationalFunction& f, std::complex<double> s,
                                  std::complex<double> lambda) {
  const std::complex<double> d = f.denominator().evaluate(s, lambda);
  if (std::abs(d) < 1e-12) throw NumericPole("denominator magnitude below 1e-12");
  return f.numerator().evaluate(s, lambda) / d;
}

std::complex<double> eval_at_q(const RationalFunction& f, double q_value, double lambda_exponent) {
  const std::complex<double> s = std::sqrt(std::complex<double>(q_value));
  const std::complex<double> lambda = std::pow(std::complex<double>(q_value), lambda_exponent);
  return eval_numeric(f, s, lambda);
}

}  // namespace qconnect
