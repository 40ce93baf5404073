#include "qconnect/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "qconnect/connection.hpp"
#include "qconnect/families.hpp"
#include "qconnect/partitions.hpp"
#include "qconnect/qkernel.hpp"
#include "qconnect/render.hpp"

namespace qconnect {

namespace {

using Check = std::function<std::string()>;
using Complex = std::complex<double>;

constexpr double kFloatTolerance = 1e-9;
constexpr double kLambdaExponent = 0.37;
constexpr double kTheta = 0.9;

void run_check(VerificationReport& report, std::string id, std::string anchor, const Check& check) {
  CheckResult r{std::move(id), std::move(anchor), false, 0.0, {}};
  const auto start = std::chrono::steady_clock::now();
  try {
    r.detail = check();
    r.passed = r.detail.empty();
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  report.checks.push_back(std::move(r));
}

template <class T>
std::string expect_equal(const T& got, const T& want) {
  if (got == want) return {};
  return "got " + render(got) + "; expected " + render(want);
}

std::string nk(int n, int k) { return "n=" + std::to_string(n) + ",k=" + std::to_string(k); }

// Relative comparison of coefficient lists against the largest magnitude.
std::string compare_floats(const std::vector<Complex>& got, const std::vector<Complex>& want) {
  double scale = 0.0;
  for (const auto& w : want) scale = std::max(scale, std::abs(w));
  if (scale == 0.0) scale = 1.0;
  for (std::size_t i = 0; i < std::max(got.size(), want.size()); ++i) {
    const Complex g = i < got.size() ? got[i] : 0.0;
    const Complex w = i < want.size() ? want[i] : 0.0;
    if (std::abs(g - w) > kFloatTolerance * scale) {
      std::ostringstream out;
      out << "index " << i << ": got " << g << ", expected " << w;
      return out.str();
    }
  }
  return {};
}

template <Basis B>
std::vector<Complex> sampled_coefficients(const BasisPolynomial<B>& p, int size, double q, double lambda_exponent = 1.0) {
  std::vector<Complex> out(static_cast<std::size_t>(size) + 1, 0.0);
  for (const auto& [i, c] : p.terms()) out.at(i) = eval_at_q(c, q, lambda_exponent);
  return out;
}

// (a; b)_n in doubles.
double pochhammer_f(double a, double b, int n) {
  double r = 1.0;
  for (int k = 0; k < n; ++k) r *= 1.0 - a * std::pow(b, k);
  return r;
}

// Coefficients of H_n(z; q) from the two q-exponential sums, in doubles.
std::vector<Complex> hermite_float(int n, double q) {
  const double b = 1.0 / (q * q);
  const double b2 = b * b;
  const double a = 2.0 * (1.0 - b);
  const double c = -2.0 * (1.0 - b2) / (q * (1.0 + b));
  double factorial = 1.0;
  for (int j = 1; j <= n; ++j) factorial *= (1.0 - std::pow(b, j)) / (1.0 - b);
  std::vector<Complex> out(static_cast<std::size_t>(n) + 1, 0.0);
  for (int l = 0; 2 * l <= n; ++l) {
    const int j = n - 2 * l;
    const double big_e = std::pow(b, j * (j - 1) / 2.0) * std::pow(a, j) / pochhammer_f(b, b, j);
    const double small_e = std::pow(c, l) / pochhammer_f(b2, b2, l);
    out[j] = big_e * small_e * factorial * std::pow(q, -n / 2.0);
  }
  return out;
}

// Coefficients of L_k^{(n-k)}(z; q): (-1)^l q^{l(l+α)} [n choose k-l]_q (1-q)^l / (q;q)_l.
std::vector<Complex> laguerre_float(int n, int k, double q) {
  const int alpha = n - k;
  std::vector<Complex> out(static_cast<std::size_t>(k) + 1, 0.0);
  for (int l = 0; l <= k; ++l) {
    const int m = k - l;
    // Integer exponents keep the vanishing factor 1 - q^0 exact.
    double binom = 1.0 / pochhammer_f(q, q, m);
    for (int j = 0; j < m; ++j) binom *= 1.0 - std::pow(q, n - m + 1 + j);
    const double sign = l % 2 == 0 ? 1.0 : -1.0;
    out[l] = sign * std::pow(q, l * (l + alpha)) * binom * std::pow(1.0 - q, l) / pochhammer_f(q, q, l);
  }
  return out;
}

// Cosine coefficients of the q-Gegenbauer polynomial from its direct sum, in doubles.
std::vector<Complex> gegenbauer_float(int n, double q, double lambda_exponent) {
  const double lambda = std::pow(q, lambda_exponent);
  std::vector<Complex> out(static_cast<std::size_t>(n) + 1, 0.0);
  for (int l = 0; l <= n; ++l) {
    out[std::abs(n - 2 * l)] += pochhammer_f(lambda, q, l) * pochhammer_f(lambda, q, n - l) /
                                (pochhammer_f(q, q, l) * pochhammer_f(q, q, n - l));
  }
  return out;
}

void suite_qexp(VerificationReport& report, int max_n) {
  using Series = TruncatedSeries<RationalFunction>;
  const int order = max_n;
  const Series z = order >= 1 ? Series::monomial(order, RationalFunction(1), 1) : Series(order);
  for (int power : {1, -2, -4}) {
    const QBase base = QBase::q_power(power);
    const std::string b = "q^" + std::to_string(power);
    for (QExpKind kind : {QExpKind::little_e, QExpKind::big_E}) {
      const std::string name = kind == QExpKind::little_e ? "e" : "E";
      run_check(report, "qexp.quesne." + name + "." + b, "quesne-identity", [&] {
        return q_exp_sum(kind, z, base) == q_exp_product_form(kind, z, base) ? "" : "sum and product form differ";
      });
    }
    run_check(report, "qexp.inverse." + b, "e(z)E(-z)=1", [&] {
      const Series product = q_exp_sum(QExpKind::little_e, z, base) * q_exp_sum(QExpKind::big_E, -z, base);
      return product == Series::constant(order, RationalFunction(1)) ? "" : "e_b(z) E_b(-z) != 1";
    });
    run_check(report, "qexp.physics." + b, "quesne-c-expansion", [&] {
      return q_exp_physics_sum(z, base) == q_exp_quesne(z, base) ? "" : "defining sum and c_k expansion differ";
    });
    run_check(report, "qexp.rescaled." + b, "exp_b(z)=e_b((1-b)z)", [&] {
      const Series scaled = (RationalFunction(1) - base.value()) * z;
      return q_exp_physics_sum(z, base) == q_exp_sum(QExpKind::little_e, scaled, base) ? "" : "rescaled e_b differs";
    });
  }
}

void suite_hermite(VerificationReport& report, int max_n, std::optional<double> q_sample) {
  for (int n = 0; n <= max_n; ++n) {
    const std::string tag = "n=" + std::to_string(n);
    run_check(report, "hermite.connection." + tag, "hermite-connection", [&] {
      const HermiteConnection c = hermite_connection(n);
      if (c.terms.size() != partitions_of(n).size()) return std::string("term count differs from partition count");
      return expect_equal(c.polynomial(), q_hermite(n, n));
    });
    if (q_sample) {
      run_check(report, "hermite.float." + tag, "hermite-generating-function", [&] {
        return compare_floats(sampled_coefficients(hermite_connection(n).polynomial(), n, *q_sample),
                              hermite_float(n, *q_sample));
      });
    }
  }
}

void suite_laguerre(VerificationReport& report, int max_n, std::optional<double> q_sample) {
  const std::vector<AuxiliaryIntegers> aux_sets = {{}, {{1, 2}, {2, -3}, {3, 1}, {4, -1}}};
  for (int n = 0; n <= max_n; ++n) {
    for (int k = 0; k <= max_n; ++k) {
      run_check(report, "laguerre.connection." + nk(n, k), "laguerre-connection", [&] {
        const ZPolynomial want = q_laguerre(n, k, k);
        for (const auto& aux : aux_sets) {
          const std::string detail = expect_equal(laguerre_connection(n, k, aux).polynomial(), want);
          if (!detail.empty()) return detail;
        }
        return std::string();
      });
      if (q_sample) {
        run_check(report, "laguerre.float." + nk(n, k), "laguerre-closed-form", [&] {
          return compare_floats(sampled_coefficients(q_laguerre(n, k, k), k, *q_sample), laguerre_float(n, k, *q_sample));
        });
      }
    }
  }
}

void suite_gegenbauer(VerificationReport& report, int max_n, std::optional<double> q_sample) {
  for (int n = 0; n <= max_n; ++n) {
    const std::string tag = "n=" + std::to_string(n);
    run_check(report, "gegenbauer.genfun." + tag, "gegenbauer-generating-function",
              [&] { return expect_equal(q_gegenbauer_genfun(n, n), q_gegenbauer_direct(n)); });
    run_check(report, "gegenbauer.connection." + tag, "gegenbauer-connection",
              [&] { return expect_equal(gegenbauer_connection(n).polynomial(), q_gegenbauer_direct(n)); });
    if (q_sample) {
      run_check(report, "gegenbauer.float." + tag, "gegenbauer-direct-sum", [&] {
        return compare_floats(sampled_coefficients(gegenbauer_connection(n).polynomial(), n, *q_sample, kLambdaExponent),
                              gegenbauer_float(n, *q_sample, kLambdaExponent));
      });
    }
  }
}

void suite_sumrules(VerificationReport& report, int max_n) {
  for (int ell = 1; ell <= max_n; ++ell) {
    run_check(report, "sumrules.ell=" + std::to_string(ell), "log-generating-function-sum-rule", [&] {
      const SumRule rule = gegenbauer_sum_rule(ell);
      return rule.holds() ? std::string() : "lhs " + render(rule.lhs) + " != rhs " + render(rule.rhs);
    });
  }
}

CosPolynomial evaluate_classical_lambda(const SparsePolynomial<LambdaPolynomial>& p) {
  return p.evaluate<CosPolynomial>([](int m) { return gegenbauer_classical(m); },
                                   [](const LambdaPolynomial& c) {
                                     return c.evaluate<CosPolynomial>(
                                         [](int) { return CosPolynomial(RationalFunction::lambda()); },
                                         [](const ExactRational& r) { return CosPolynomial(r); });
                                   });
}

void suite_limits(VerificationReport& report, int max_n) {
  for (int n = 0; n <= max_n; ++n) {
    const std::string tag = "n=" + std::to_string(n);
    run_check(report, "limits.hermite." + tag, "hermite-classical-limit",
              [&] { return expect_equal(limit_q_to_1(q_hermite(n, n)), hermite_classical(n)); });
    for (int k = 0; k <= max_n; ++k) {
      run_check(report, "limits.laguerre." + nk(n, k), "laguerre-classical-limit", [&] {
        return expect_equal(limit_q_to_1(q_laguerre(n, k, k)), laguerre_classical({k, n - k}));
      });
    }
    run_check(report, "limits.gegenbauer." + tag, "gegenbauer-classical-lambda", [&] {
      const GegenbauerConnection c = gegenbauer_connection(n);
      SparsePolynomial<LambdaPolynomial> collapsed;
      for (const auto& term : c.terms)
        collapsed += SparsePolynomial<LambdaPolynomial>::monomial(term.solution, substitute_beta_classical_lambda(term.coefficient));
      const SparsePolynomial<LambdaPolynomial> direct = classical_lambda_connection(n);
      if (!(collapsed == direct)) return std::string("β_k -> λ differs from the classical-λ expansion");
      return expect_equal(evaluate_classical_lambda(direct), gegenbauer_classical_symbolic_lambda(n));
    });
  }
}

}  // namespace

bool VerificationReport::passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  std::size_t count = 0;
  for (const auto& c : checks) count += c.passed ? 0 : 1;
  return count;
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(2);
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.id << " [" << c.anchor << "] " << c.elapsed_ms << " ms\n";
    if (!c.passed) out << "     " << c.detail << "\n";
  }
  out << "suite " << suite << " max-n " << max_n << ": " << checks.size() - failures() << "/" << checks.size()
      << " passed, " << (passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["max_n"] = max_n;
  j["status"] = passed() ? "pass" : "fail";
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    j["checks"].push_back(nlohmann::ordered_json{{"id", c.id},
                                                 {"anchor", c.anchor},
                                                 {"status", c.passed ? "pass" : "fail"},
                                                 {"elapsed_ms", c.elapsed_ms},
                                                 {"detail", c.detail}});
  }
  return j.dump(2) + "\n";
}

const std::vector<std::string>& verification_suites() {
  static const std::vector<std::string> suites = {"all", "qexp", "hermite", "laguerre", "gegenbauer", "sumrules", "limits"};
  return suites;
}

VerificationReport run_verification(const std::string& suite, int max_n, std::optional<double> q_sample) {
  if (max_n < 0) throw std::invalid_argument("max-n must be non-negative");
  if (q_sample && !(*q_sample > 0.0 && *q_sample < 1.0)) throw std::invalid_argument("q sample must lie in (0, 1)");
  const auto& names = verification_suites();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw std::invalid_argument("unknown suite '" + suite + "'");
  VerificationReport report{suite, max_n, {}};
  const bool all = suite == "all";
  if (all || suite == "qexp") suite_qexp(report, max_n);
  if (all || suite == "hermite") suite_hermite(report, max_n, q_sample);
  if (all || suite == "laguerre") suite_laguerre(report, max_n, q_sample);
  if (all || suite == "gegenbauer") suite_gegenbauer(report, max_n, q_sample);
  if (all || suite == "sumrules") suite_sumrules(report, max_n);
  if (all || suite == "limits") suite_limits(report, max_n);
  return report;
}

}  // namespace qconnect
