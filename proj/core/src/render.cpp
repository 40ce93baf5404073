#include "qconnect/render.hpp"

#include <optional>
#include <sstream>
#include <vector>

#include "qconnect/families.hpp"
#include "qconnect/qkernel.hpp"

namespace qconnect {

namespace {

const char* const kSubscripts[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
const char* const kSuperscripts[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};

std::string digits(long value, const char* const* table, const char* minus) {
  std::string out;
  if (value < 0) out += minus;
  for (char c : std::to_string(value < 0 ? -value : value)) out += table[c - '0'];
  return out;
}

std::string sub(long v) { return digits(v, kSubscripts, "₋"); }
std::string sup(long v) { return digits(v, kSuperscripts, "⁻"); }

// Exponent of q for s^a: "1/2", "-45/2", "3".
std::string q_exponent(int s_exp) {
  if (s_exp % 2 == 0) return std::to_string(s_exp / 2);
  return std::to_string(s_exp) + "/2";
}

std::vector<std::string> monomial_factors(int s_exp, int lambda_exp, Style style) {
  std::vector<std::string> f;
  if (s_exp == 2) {
    f.emplace_back("q");
  } else if (s_exp != 0) {
    f.push_back("q^{" + q_exponent(s_exp) + "}");
  }
  if (lambda_exp > 0) {
    const std::string lam = style == Style::latex ? "\\lambda" : "λ";
    f.push_back("q^{" + (lambda_exp == 1 ? lam : std::to_string(lambda_exp) + lam) + "}");
  }
  return f;
}

struct RenderedTerm {
  bool negative = false;
  std::string body;  // without sign
};

std::string join_terms(const std::vector<RenderedTerm>& terms, const std::string& plus = " + ",
                       const std::string& minus = " - ", const std::string& leading_minus = "-") {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i == 0) {
      if (terms[i].negative) out += leading_minus;
    } else {
      out += terms[i].negative ? minus : plus;
    }
    out += terms[i].body;
  }
  return out;
}

RenderedTerm integer_term(const mpz_class& c, int s_exp, int lambda_exp, Style style) {
  RenderedTerm t;
  t.negative = c < 0;
  const mpz_class magnitude = abs(c);
  std::vector<std::string> factors = monomial_factors(s_exp, lambda_exp, style);
  if (magnitude != 1 || factors.empty()) factors.insert(factors.begin(), magnitude.get_str());
  const std::string sep = style == Style::latex ? " " : "*";
  for (std::size_t i = 0; i < factors.size(); ++i) t.body += (i ? sep : "") + factors[i];
  return t;
}

// Terms of f when it renders as a sum of signed monomials (denominator 1 or a bare s^a).
bool as_monomial_sum(const RationalFunction& f, Style style, std::vector<RenderedTerm>& out) {
  const IntPoly& den = f.denominator();
  int shift = 0;
  if (!den.is_constant() || den.leading_coefficient() != 1) {
    if (!den.is_monomial() || den.leading_coefficient() != 1 || den.has_lambda()) return false;
    shift = den.leading_monomial().s_exp;
  }
  for (const auto& [m, c] : f.numerator().terms())
    out.push_back(integer_term(c, m.s_exp - shift, m.lambda_exp, style));
  return true;
}

bool is_compound(const std::string& s) {
  return s.find(' ') != std::string::npos || s.find('*') != std::string::npos;
}

// Coefficient placed before a basis element; reports whether the sign was pulled out.
RenderedTerm coefficient_term(const RationalFunction& c, const std::string& basis, Style style) {
  std::vector<RenderedTerm> parts;
  RenderedTerm t;
  if (as_monomial_sum(c, style, parts) && parts.size() == 1) {
    t = parts.front();
    if (!basis.empty()) {
      if (t.body == "1") {
        t.body = basis;
      } else {
        t.body += (style == Style::latex ? " " : "*") + basis;
      }
    }
    return t;
  }
  std::string body = render(c, style);
  if (basis.empty()) {
    t.body = body;
    return t;
  }
  parts.clear();
  const bool sum_form = as_monomial_sum(c, style, parts);
  if (style == Style::latex) {
    t.body = (sum_form ? "\\left(" + body + "\\right)" : body) + " " + basis;
  } else {
    t.body = (sum_form ? "(" + body + ")" : body) + "*" + basis;
  }
  return t;
}

std::string vulgar_fraction(const ExactRational& r) {
  static const std::map<std::string, std::string> table = {
      {"1/2", "½"}, {"1/3", "⅓"}, {"1/4", "¼"}, {"1/5", "⅕"}, {"1/6", "⅙"}, {"1/8", "⅛"}};
  const auto it = table.find(r.get_str());
  if (it != table.end()) return it->second;
  if (r.get_den() == 1) return r.get_str();
  return "(" + r.get_str() + ")";
}

std::string beta_monomial(const ExponentVector& m, Style style) {
  std::string out;
  for (int k = 1; k <= m.max_generator(); ++k) {
    const int e = m.exponent(k);
    if (e == 0) continue;
    if (style == Style::latex) {
      if (!out.empty()) out += " ";
      out += k == 1 ? "[\\lambda]_{q}" : "[\\lambda]_{q^{" + std::to_string(k) + "}}";
      if (e > 1) out += "^{" + std::to_string(e) + "}";
    } else {
      out += "β" + sub(k);
      if (e > 1) out += sup(e);
    }
  }
  return out;
}

// Rational content with the sign of the leading β-monomial.
ExactRational signed_content(const AbstractCoefficient& c) {
  mpz_class num = 0;
  mpz_class den = 1;
  for (const auto& [m, r] : c.terms()) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), r.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), r.get_den_mpz_t());
  }
  ExactRational content(num, den);
  content.canonicalize();
  if (!c.terms().empty() && c.terms().begin()->second < 0) content = -content;
  return content;
}

}  // namespace

std::string render(const IntPoly& p, Style style) {
  std::vector<RenderedTerm> terms;
  for (const auto& [m, c] : p.terms()) terms.push_back(integer_term(c, m.s_exp, m.lambda_exp, style));
  return join_terms(terms);
}

std::string render(const ExactRational& r, Style style) {
  if (r.get_den() == 1) return r.get_num().get_str();
  if (style == Style::latex) {
    const std::string sign = r < 0 ? "-" : "";
    return sign + "\\frac{" + mpz_class(abs(r.get_num())).get_str() + "}{" + r.get_den().get_str() + "}";
  }
  return r.get_str();
}

std::string render(const RationalFunction& f, Style style) {
  std::vector<RenderedTerm> terms;
  if (as_monomial_sum(f, style, terms)) return join_terms(terms);
  // Display with the lowest-order denominator term positive: 1/(1 - q), not -1/(-1 + q).
  const bool flip = f.denominator().terms().begin()->second < 0;
  const IntPoly& top = f.numerator();
  const IntPoly& bottom = f.denominator();
  const std::string num = render(flip ? -top : top, style);
  const std::string den = render(flip ? -bottom : bottom, style);
  if (style == Style::latex) return "\\frac{" + num + "}{" + den + "}";
  const std::string n = top.is_monomial() && !is_compound(num) ? num : "(" + num + ")";
  const std::string d = bottom.is_monomial() && !is_compound(den) ? den : "(" + den + ")";
  return n + "/" + d;
}

std::string render(const ZPolynomial& p, Style style, const std::string& variable) {
  std::vector<RenderedTerm> terms;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const int d = it->first;
    const std::string basis = d == 0 ? "" : d == 1 ? variable : variable + "^{" + std::to_string(d) + "}";
    terms.push_back(coefficient_term(it->second, basis, style));
  }
  return join_terms(terms);
}

std::string render(const CosPolynomial& p, Style style) {
  std::vector<RenderedTerm> terms;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const int m = it->first;
    std::string basis;
    if (m == 1) basis = style == Style::latex ? "\\cos\\theta" : "cos(θ)";
    if (m > 1) basis = style == Style::latex ? "\\cos " + std::to_string(m) + "\\theta" : "cos(" + std::to_string(m) + "θ)";
    terms.push_back(coefficient_term(it->second, basis, style));
  }
  return join_terms(terms);
}

std::string render(const AbstractCoefficient& c, Style style) {
  std::vector<RenderedTerm> terms;
  for (const auto& [m, r] : c.terms()) {
    RenderedTerm t;
    t.negative = r < 0;
    const ExactRational magnitude = abs(r);
    const std::string mono = beta_monomial(m, style);
    std::string coeff;
    if (magnitude != 1 || mono.empty()) coeff = style == Style::latex ? render(magnitude, style) : vulgar_fraction(magnitude);
    t.body = coeff + (coeff.empty() || mono.empty() ? "" : style == Style::latex ? " " : "") + mono;
    terms.push_back(t);
  }
  if (style == Style::latex) return join_terms(terms);
  return join_terms(terms, "+", "−", "−");
}

std::string render_lambda(const LambdaPolynomial& p, Style style) {
  std::vector<RenderedTerm> terms;
  // Ascending powers of λ.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    RenderedTerm t;
    t.negative = it->second < 0;
    const ExactRational magnitude = abs(it->second);
    const int e = it->first.exponent(1);
    const std::string lam = style == Style::latex ? "\\lambda" : "λ";
    std::string mono = e == 0 ? "" : e == 1 ? lam : lam + "^{" + std::to_string(e) + "}";
    std::string coeff = magnitude != 1 || mono.empty() ? render(magnitude, style) : "";
    t.body = coeff + (!coeff.empty() && !mono.empty() ? (style == Style::latex ? " " : "*") : "") + mono;
    terms.push_back(t);
  }
  return join_terms(terms);
}

std::string render(const ClassicalFactor& f, Style style) {
  const bool latex = style == Style::latex;
  switch (f.family) {
    case ClassicalFactor::Family::hermite:
      if (latex)
        return "H_{" + std::to_string(f.degree) + "}(\\zeta_{" + std::to_string(f.slot) + "})\\,\\tau_{" +
               std::to_string(f.slot) + "}^{" + std::to_string(f.degree) + "}";
      return "H" + sub(f.degree) + "(ζ" + sub(f.slot) + ")·τ" + sub(f.slot) + (f.degree == 1 ? "" : sup(f.degree));
    case ClassicalFactor::Family::laguerre: {
      const std::string arg_power = f.slot == 1 ? "" : (latex ? "^{" + std::to_string(f.slot) + "}" : sup(f.slot));
      if (latex)
        return "L_{" + std::to_string(f.degree) + "}^{(" + std::to_string(f.alpha) + ")}(c_{" + std::to_string(f.slot) +
               "}(q)\\, z" + arg_power + ")";
      return "L" + sub(f.degree) + "⁽" + sup(f.alpha) + "⁾(c" + sub(f.slot) + "(q)·z" + arg_power + ")";
    }
    case ClassicalFactor::Family::gegenbauer: {
      if (latex) {
        std::string out = "C_{" + std::to_string(f.degree) + "}";
        if (f.multiplicity > 1) out += "^{" + std::to_string(f.multiplicity) + "}";
        return out + "(z)";
      }
      return "C" + sub(f.degree) + (f.multiplicity > 1 ? sup(f.multiplicity) : "");
    }
  }
  return {};
}

std::string render(const PartitionSolution& s, Style style) {
  if (s.parts.empty()) return "∅";
  std::string out;
  for (const auto& [k, m] : s.parts) {
    if (!out.empty()) out += ", ";
    out += style == Style::latex ? "n_{" + std::to_string(k) + "} = " + std::to_string(m)
                                 : "n" + sub(k) + "=" + std::to_string(m);
  }
  return out;
}

std::string render(const LaguerrePartitionSolution& s, Style style) {
  const bool latex = style == Style::latex;
  std::vector<std::string> parts;
  for (const auto& [j, kj] : s.kparts)
    parts.push_back(latex ? "k_{" + std::to_string(j) + "} = " + std::to_string(kj) : "k" + sub(j) + "=" + std::to_string(kj));
  if (s.ell > 0) parts.push_back(latex ? "\\ell = " + std::to_string(s.ell) : "ℓ=" + std::to_string(s.ell));
  for (const auto& [j, lj] : s.ellparts)
    parts.push_back(latex ? "\\ell_{" + std::to_string(j) + "} = " + std::to_string(lj)
                          : "ℓ" + sub(j) + "=" + std::to_string(lj));
  if (parts.empty()) return "∅";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
  return out;
}

std::string render_classical_monomial(const ExponentVector& m, Style style) {
  std::string out;
  for (int k = 1; k <= m.max_generator(); ++k) {
    const int e = m.exponent(k);
    if (e == 0) continue;
    const ClassicalFactor f{ClassicalFactor::Family::gegenbauer, k, 0, 0, e};
    if (!out.empty()) out += style == Style::latex ? "\\," : "·";
    out += render(f, style);
  }
  return out.empty() ? "1" : out;
}

std::string render_formula(const GegenbauerConnection& c, Style style) {
  std::vector<RenderedTerm> terms;
  const bool latex = style == Style::latex;
  for (const auto& term : c.terms) {
    RenderedTerm t;
    const ExactRational content = signed_content(term.coefficient);
    t.negative = content < 0;
    const ExactRational magnitude = abs(content);
    AbstractCoefficient reduced;
    for (const auto& [m, r] : term.coefficient.terms())
      reduced += AbstractCoefficient::monomial(m, r / content);
    std::string coeff;
    if (reduced.terms().size() == 1) {
      const auto& [m, r] = *reduced.terms().begin();
      coeff = magnitude == 1 ? beta_monomial(m, style)
                             : (latex ? render(magnitude, style) + " " : vulgar_fraction(magnitude)) + beta_monomial(m, style);
      if (m.is_one()) coeff = render(magnitude, style);
    } else {
      const std::string inner = render(reduced, style);
      const std::string wrapped = latex ? "\\left(" + inner + "\\right)" : "(" + inner + ")";
      coeff = magnitude == 1 ? wrapped : (latex ? render(magnitude, style) + " " : vulgar_fraction(magnitude)) + wrapped;
    }
    const std::string factors = term.solution.is_one() ? "" : render_classical_monomial(term.solution, style);
    if (factors.empty()) {
      t.body = coeff;
    } else if (coeff == "1") {
      t.body = factors;
    } else {
      t.body = coeff + (latex ? "\\, " : "·") + factors;
    }
    terms.push_back(t);
  }
  if (latex) return join_terms(terms);
  return join_terms(terms, " + ", " − ", "−");
}

std::string render_q_laguerre(int n, int k, const ZPolynomial& p, Style style) {
  const int alpha = n - k;
  if (alpha < 0) return render(p, style);
  const QBase q = QBase::q();
  std::vector<RenderedTerm> terms;
  for (int l = 0; l <= k; ++l) {
    RationalFunction expected = RationalFunction::q_power(l * (l + alpha)) * q_binomial(n, k - l, q) / q_factorial(l, q);
    if (l % 2 == 1) expected = -expected;
    if (!(p.coefficient(l) == expected)) return render(p, style);
  }
  for (int l = 0; l <= k; ++l) {
    RenderedTerm t;
    t.negative = l % 2 == 1;
    const bool latex = style == Style::latex;
    const int qexp = l * (l + alpha);
    const int bottom = l + alpha;
    std::string body;
    if (qexp == 1) body = "q";
    if (qexp > 1) body = "q^{" + std::to_string(qexp) + "}";
    if (l >= 2) {
      if (latex) {
        body += (body.empty() ? "" : " ") + std::string("\\frac{1}{[") + std::to_string(l) + "]_{q}!}";
      } else {
        body += (body.empty() ? "1" : "") + std::string("/[") + std::to_string(l) + "]_q!";
      }
    }
    if (bottom != 0 && bottom != n) {
      const std::string binom =
          latex ? "\\Big[\\begin{array}{c}" + std::to_string(n) + "\\\\" + std::to_string(bottom) + "\\end{array}\\Big]_{q}"
                : "[" + std::to_string(n) + " choose " + std::to_string(bottom) + "]_q";
      body += (body.empty() ? "" : latex ? " " : "*") + binom;
    }
    const std::string sep = latex ? " " : "*";
    const std::string zpow = l == 0 ? "" : l == 1 ? "z" : "z^{" + std::to_string(l) + "}";
    if (body.empty()) {
      body = zpow.empty() ? "1" : zpow;
    } else if (!zpow.empty()) {
      body += sep + zpow;
    }
    terms.push_back(t);
    terms.back().body = body;
  }
  return join_terms(terms);
}

namespace {

// [n]_{q^{-2}}! / ([2]^l [l]_{q^{-4}}! [n-2l]_{q^{-2}}!) folds into a q^{-4}-binomial over
// the even factors times the odd [m]_{q^{-2}}.
struct HermiteShape {
  int top = 0;  // q^{-4}-binomial [top choose l]
  std::vector<int> odd;
};

HermiteShape hermite_shape(int n, int l) {
  HermiteShape h;
  int first_even = 0;
  for (int m = n - 2 * l + 1; m <= n; ++m) {
    if (m % 2 == 1) {
      h.odd.push_back(m);
    } else if (first_even == 0) {
      first_even = m / 2;
    }
  }
  h.top = l == 0 ? 0 : first_even + l - 1;
  return h;
}

std::optional<int> as_half_power(const RationalFunction& r) {
  const IntPoly& num = r.numerator();
  const IntPoly& den = r.denominator();
  if (!num.is_monomial() || !den.is_monomial() || num.has_lambda() || den.has_lambda()) return std::nullopt;
  if (num.leading_coefficient() != 1 || den.leading_coefficient() != 1) return std::nullopt;
  return num.leading_monomial().s_exp - den.leading_monomial().s_exp;
}

}  // namespace

std::string render_q_hermite(int n, const ZPolynomial& p, Style style) {
  const QBase b2 = QBase::q_power(-2);
  const QBase b4 = QBase::q_power(-4);
  const bool latex = style == Style::latex;
  std::vector<RenderedTerm> terms;
  for (int l = 0; 2 * l <= n; ++l) {
    const HermiteShape h = hermite_shape(n, l);
    RationalFunction shape = RationalFunction(2).pow(n - l) * q_binomial(h.top, l, b4);
    for (int m : h.odd) shape *= q_number(m, b2);
    if (l % 2 == 1) shape = -shape;
    const auto power = as_half_power(p.coefficient(n - 2 * l) / shape);
    if (!power) return render(p, style);

    const std::string sep = latex ? " " : "*";
    std::string body = std::to_string(1L << (n - l));
    if (*power != 0) body += sep + render(RationalFunction::s_power(*power), style);
    if (h.top > l && l > 0) {
      if (l == 1) {
        body += sep + "[" + std::to_string(h.top) + "]_{q^{-4}}";
      } else if (latex) {
        body += sep + "\\Big[\\begin{array}{c}" + std::to_string(h.top) + "\\\\" + std::to_string(l) +
                "\\end{array}\\Big]_{q^{-4}}";
      } else {
        body += sep + "[" + std::to_string(h.top) + " choose " + std::to_string(l) + "]_{q^{-4}}";
      }
    }
    for (int m : h.odd)
      if (m > 1) body += sep + "[" + std::to_string(m) + "]_{q^{-2}}";
    const int d = n - 2 * l;
    if (d > 0) body += sep + (d == 1 ? std::string("z") : "z^{" + std::to_string(d) + "}");
    RenderedTerm t;
    t.negative = l % 2 == 1;
    t.body = body;
    terms.push_back(t);
  }
  return join_terms(terms);
}

std::string render_table(const HermiteConnection& c, Style style) {
  std::ostringstream out;
  const bool latex = style == Style::latex;
  if (latex) {
    out << "\\begin{tabular}{c||c}\n\\hline solution & contribution to $H_{" << c.n << "}(z;q)$ \\\\ \\hline\n";
    for (std::size_t i = 0; i < c.terms.size(); ++i)
      out << "$" << render(c.terms[i].solution, style) << "$ & $" << render(c.contribution(i), style)
          << "$ \\\\ \\hline\n";
    out << "\\end{tabular}\n";
    out << "H_{" << c.n << "}(z;q) = " << render_q_hermite(c.n, c.polynomial(), style) << "\n";
    return out.str();
  }
  out << "H_" << c.n << "(z;q): " << c.terms.size() << " partition terms\n";
  for (std::size_t i = 0; i < c.terms.size(); ++i) {
    const auto& term = c.terms[i];
    std::string factors;
    for (const auto& f : term.factors) factors += (factors.empty() ? "" : " ") + render(f, style);
    if (factors.empty()) factors = "1";
    out << "  [" << i + 1 << "] " << render(term.solution, style) << " | " << render(term.coefficient, style)
        << " · " << factors << " | " << render(c.contribution(i), style) << "\n";
  }
  out << "total: H_" << c.n << "(z;q) = " << render_q_hermite(c.n, c.polynomial(), style) << "\n";
  return out.str();
}

std::string render_table(const LaguerreConnection& c, Style style) {
  std::ostringstream out;
  const bool latex = style == Style::latex;
  const std::string label = "L_" + std::to_string(c.k) + "^(" + std::to_string(c.n - c.k) + ")(z;q)";
  if (latex) {
    out << "\\begin{tabular}{c||c}\n\\hline solution & contribution \\\\ \\hline\n";
    for (const auto& term : c.terms) out << "$" << render(term.solution, style) << "$ & $" << render(term.value, style) << "$ \\\\ \\hline\n";
    out << "\\end{tabular}\n";
    out << "L_{" << c.k << "}^{(" << c.n - c.k << ")}(z;q) = " << render_q_laguerre(c.n, c.k, c.polynomial(), style) << "\n";
    return out.str();
  }
  out << label << ": " << c.terms.size() << " partition terms\n";
  for (std::size_t i = 0; i < c.terms.size(); ++i) {
    const auto& term = c.terms[i];
    std::string factors;
    for (const auto& f : term.factors) factors += (factors.empty() ? "" : " ") + render(f, style);
    if (factors.empty()) factors = "1";
    out << "  [" << i + 1 << "] " << render(term.solution, style) << " | " << render(term.coefficient, style) << " · "
        << factors << " | " << render(term.value, style) << "\n";
  }
  const int shift = (c.n - c.k) * (c.n - c.k + 1) / 2;
  const std::string prefix = shift == 0 ? "" : render(RationalFunction::q_power(shift), style) + " ";
  out << "total: " << prefix << label << " = " << render(c.total, style) << "\n";
  out << label << " = " << render_q_laguerre(c.n, c.k, c.polynomial(), style) << "\n";
  return out.str();
}

std::string render_table(const GegenbauerConnection& c, Style style) {
  std::ostringstream out;
  if (style == Style::latex) {
    out << "C_{" << c.n << "}^{(\\lambda)}(z;q) = " << render_formula(c, style) << "\n";
    return out.str();
  }
  out << "C_" << c.n << "^(λ)(z;q): " << c.terms.size() << " classical products\n";
  for (std::size_t i = 0; i < c.terms.size(); ++i) {
    const auto& term = c.terms[i];
    out << "  [" << i + 1 << "] " << render_classical_monomial(term.solution, style) << " | "
        << render(term.coefficient, style) << "\n";
  }
  out << "C_" << c.n << "^(λ)(z;q) = " << render_formula(c, style) << "\n";
  return out.str();
}

}  // namespace qconnect
