#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qconnect/connection.hpp"
#include "qconnect/error.hpp"
#include "qconnect/families.hpp"
#include "qconnect/json_io.hpp"
#include "qconnect/qkernel.hpp"
#include "qconnect/render.hpp"
#include "qconnect/verify.hpp"

namespace qconnect::cli {

namespace {

constexpr int kDefaultOrder = 12;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string family;
  int n = 0;
  std::optional<int> k;
  int order = kDefaultOrder;
  std::string format = "text";
  std::string basis = "cos";
  std::string q_sample;
  std::vector<long> aux;
  std::string suite = "all";
  int max_n = 8;
  std::string report;
  bool json = false;
  std::string kind = "e";
  int base_power = 1;
  std::string form = "sum";
};

int default_order() {
  const char* env = std::getenv("QPOLY_ORDER");
  if (env == nullptr || *env == '\0') return kDefaultOrder;
  try {
    std::size_t used = 0;
    const int v = std::stoi(env, &used);
    if (used == std::string(env).size() && v >= 0) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(std::string("QPOLY_ORDER must be a non-negative integer, got '") + env + "'");
}

/// "7/10" or "0.7".
std::optional<double> parse_sample(const std::string& text) {
  if (text.empty()) return std::nullopt;
  double value = 0.0;
  try {
    if (text.find('/') != std::string::npos) {
      ExactRational r(text);
      if (r.get_den() == 0) throw std::invalid_argument("zero denominator");
      r.canonicalize();
      value = r.get_d();
    } else {
      std::size_t used = 0;
      value = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument("trailing characters");
    }
  } catch (const std::exception&) {
    throw UsageError("--q-sample expects a rational such as 7/10 or 0.7, got '" + text + "'");
  }
  if (!(value > 0.0 && value < 1.0)) throw UsageError("--q-sample must lie in (0, 1)");
  return value;
}

AuxiliaryIntegers parse_aux(const std::vector<long>& values) {
  AuxiliaryIntegers aux;
  for (std::size_t j = 0; j < values.size(); ++j) aux[static_cast<int>(j) + 1] = values[j];
  return aux;
}

Style style_of(const std::string& format) { return format == "latex" ? Style::latex : Style::text; }

template <Basis B>
void print_samples(std::ostream& out, const BasisPolynomial<B>& p, double q, const std::string& label) {
  out << "at q = " << std::setprecision(12) << q << ":\n";
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const std::complex<double> v = eval_at_q(it->second, q, 1.0);
    out << "  " << label << it->first << ": " << v.real();
    if (v.imag() != 0.0) out << (v.imag() < 0 ? " - " : " + ") << std::abs(v.imag()) << "i";
    out << "\n";
  }
}

void require_k(const Options& o, bool wanted) {
  if (wanted && !o.k) throw UsageError("family '" + o.family + "' needs --k");
  if (!wanted && o.k) throw UsageError("--k only applies to laguerre families");
}

template <Basis B>
void emit(std::ostream& out, const Options& o, const BasisPolynomial<B>& p, bool check, const std::string& rendered) {
  if (o.format == "json") {
    if constexpr (B == Basis::monomial_z) {
      out << render_json(make_document(o.family, o.n, o.k, p, check));
    } else {
      out << render_json(make_document(o.family, o.n, o.k, p, check));
    }
    return;
  }
  out << rendered << "\n";
  if (const auto q = parse_sample(o.q_sample)) print_samples(out, p, *q, B == Basis::monomial_z ? "z^" : "cos m*theta, m=");
}

void emit_cosine(std::ostream& out, const Options& o, const CosPolynomial& p, bool check) {
  if (o.basis == "x") {
    const ZPolynomial x = cosine_to_monomial(p);
    if (o.format == "json") {
      out << render_json(make_document(o.family, o.n, o.k, x, check, "x"));
      return;
    }
    emit(out, o, x, check, render(x, style_of(o.format), "x"));
    return;
  }
  emit(out, o, p, check, render(p, style_of(o.format)));
}

int cmd_eval(const Options& o, std::ostream& out) {
  const Style style = style_of(o.format);
  const std::string& f = o.family;
  require_k(o, f == "laguerre" || f == "classical-laguerre");
  if (f == "hermite") {
    const ZPolynomial p = q_hermite(o.n, o.order);
    emit(out, o, p, p == hermite_connection(o.n).polynomial(), render_q_hermite(o.n, p, style));
  } else if (f == "laguerre") {
    const ZPolynomial p = q_laguerre(o.n, *o.k, o.order);
    emit(out, o, p, p == laguerre_connection(o.n, *o.k).polynomial(), render_q_laguerre(o.n, *o.k, p, style));
  } else if (f == "gegenbauer") {
    const CosPolynomial p = q_gegenbauer_direct(o.n);
    emit_cosine(out, o, p, p == q_gegenbauer_genfun(o.n, o.order));
  } else if (f == "classical-hermite") {
    const ZPolynomial p = hermite_classical(o.n);
    emit(out, o, p, p == hermite_classical_genfun(o.n), render(p, style));
  } else if (f == "classical-laguerre") {
    const ZPolynomial p = laguerre_classical({*o.k, o.n - *o.k});
    emit(out, o, p, p == laguerre_classical_genfun(o.n, *o.k), render(p, style));
  } else {
    const CosPolynomial p = gegenbauer_classical(o.n);
    emit_cosine(out, o, p, p == gegenbauer_classical_genfun(o.n));
  }
  return success;
}

int cmd_connect(const Options& o, std::ostream& out) {
  const Style style = style_of(o.format);
  require_k(o, o.family == "laguerre");
  if (!o.aux.empty() && o.family != "laguerre") throw UsageError("--aux only applies to laguerre");
  if (o.family == "hermite") {
    const HermiteConnection c = hermite_connection(o.n);
    if (o.format == "json") {
      out << render_json(c, c.polynomial() == q_hermite(o.n, o.n));
    } else {
      out << render_table(c, style);
    }
  } else if (o.family == "laguerre") {
    const AuxiliaryIntegers aux = parse_aux(o.aux);
    const LaguerreConnection c = laguerre_connection(o.n, *o.k, aux);
    if (o.format == "json") {
      out << render_json(c, aux, c.polynomial() == q_laguerre(o.n, *o.k, *o.k));
    } else {
      out << render_table(c, style);
    }
  } else {
    const GegenbauerConnection c = gegenbauer_connection(o.n);
    if (o.format == "json") {
      out << render_json(c, c.polynomial() == q_gegenbauer_direct(o.n));
    } else {
      out << render_formula(c, style) << "\n";
    }
  }
  return success;
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerificationReport report;
  try {
    report = run_verification(o.suite, o.max_n, parse_sample(o.q_sample));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  out << (o.json ? report.to_json() : report.to_text());
  if (!o.report.empty()) {
    std::ofstream file(o.report);
    if (!file) throw UsageError("cannot write report to '" + o.report + "'");
    file << report.to_json();
  }
  return report.passed() ? success : check_failed;
}

int cmd_qexp(const Options& o, std::ostream& out) {
  using Series = TruncatedSeries<RationalFunction>;
  if (o.base_power == 0) throw UsageError("--base-power must be nonzero");
  if (o.kind == "exp" && o.form == "product") throw UsageError("exp has no product form; use --form quesne");
  const QBase base = QBase::q_power(o.base_power);
  const Series z = o.order >= 1 ? Series::monomial(o.order, RationalFunction(1), 1) : Series(o.order);
  Series s(o.order);
  if (o.kind == "exp") {
    s = o.form == "sum" ? q_exp_physics_sum(z, base) : q_exp_quesne(z, base);
  } else {
    if (o.form == "quesne") throw UsageError("--form quesne applies to exp; use product for e and E");
    const QExpKind kind = o.kind == "e" ? QExpKind::little_e : QExpKind::big_E;
    s = o.form == "sum" ? q_exp_sum(kind, z, base) : q_exp_product_form(kind, z, base);
  }
  ZPolynomial p;
  for (int i = 0; i <= o.order; ++i) p += ZPolynomial::basis_element(i, s[i]);
  if (o.format == "json") {
    out << render_json(make_document("qexp-" + o.kind, o.order, std::nullopt, p, true));
    return success;
  }
  out << render(p, style_of(o.format)) << (o.format == "latex" ? "" : " + O(z^{" + std::to_string(o.order + 1) + "})")
      << "\n";
  return success;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact q-Hermite, q-Laguerre and q-Gegenbauer polynomials and their connection formulae", "qconnect"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "qconnect 0.1.0");

  const std::vector<std::string> formats = {"text", "latex", "json"};
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Degree n")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("--k", o.k, "Laguerre index k")->check(CLI::NonNegativeNumber);
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
  };

  CLI::App* eval = app.add_subcommand("eval", "Render a polynomial");
  eval->add_option("family", o.family, "Family")
      ->required()
      ->check(CLI::IsMember({"hermite", "laguerre", "gegenbauer", "classical-hermite", "classical-laguerre",
                             "classical-gegenbauer"}));
  add_common(eval);
  eval->add_option("--order", o.order, "Series truncation order (env QPOLY_ORDER)")->check(CLI::NonNegativeNumber);
  eval->add_option("--basis", o.basis, "Gegenbauer basis: cos(m theta) or powers of x = cos theta")
      ->check(CLI::IsMember({"cos", "x"}));
  eval->add_option("--q-sample", o.q_sample, "Also print coefficients at this q in (0, 1)");

  CLI::App* connect = app.add_subcommand("connect", "Expand in classical polynomials");
  connect->add_option("family", o.family, "Family")->required()->check(CLI::IsMember({"hermite", "laguerre", "gegenbauer"}));
  add_common(connect);
  connect->add_option("--aux", o.aux, "Laguerre auxiliary integers n_1,n_2,...")->delimiter(',');

  CLI::App* verify = app.add_subcommand("verify", "Run invariant suites");
  verify->add_option("--suite", o.suite, "Suite")->check(CLI::IsMember(verification_suites()));
  verify->add_option("--max-n", o.max_n, "Largest index checked")->check(CLI::NonNegativeNumber);
  verify->add_option("--q-sample", o.q_sample, "Add floating-point cross-checks at this q in (0, 1)");
  verify->add_option("--report", o.report, "Write a JSON report to this path");
  verify->add_flag("--json", o.json, "Print the report as JSON");

  CLI::App* qexp = app.add_subcommand("qexp", "Truncated q-exponential series");
  qexp->add_option("--kind", o.kind, "e, E or exp")->check(CLI::IsMember({"e", "E", "exp"}));
  qexp->add_option("--base-power", o.base_power, "Base q^p");
  qexp->add_option("--order", o.order, "Truncation order (env QPOLY_ORDER)")->check(CLI::NonNegativeNumber);
  qexp->add_option("--form", o.form, "sum, product (e, E) or quesne (exp)")
      ->check(CLI::IsMember({"sum", "product", "quesne"}));
  qexp->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));

  try {
    o.order = default_order();
    app.parse(argc, argv);
    if (eval->parsed()) return cmd_eval(o, out);
    if (connect->parsed()) return cmd_connect(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    return cmd_qexp(o, out);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? success : usage_error;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  }
}

}  // namespace qconnect::cli
