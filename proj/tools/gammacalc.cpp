// Command-line front end: parse a group expression, run the functor
// computations and verification suites, and report in human or JSON form.

#include "gammacalc/parse.hpp"
#include "gammacalc/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>

namespace gc = gammacalc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

struct Options {
  bool json = false;
  bool quiet = false;
  bool oracle = false;
  std::uint64_t max_enum = gc::kDefaultEnumCap;
};

std::uint64_t default_cap_from_env() {
  if (const char* env = std::getenv("GAMMACALC_MAX_ENUM")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return gc::kDefaultEnumCap;
}

void emit(const Options& opt, const std::string& command,
          const gc::GroupExpression* expr, const gc::FgAbGroup* group,
          gc::Json results, bool ok, double millis) {
  if (opt.json) {
    gc::Json doc;
    doc["tool"] = gc::kToolName;
    doc["version"] = gc::kToolVersion;
    doc["command"] = command;
    if (expr && group) {
      gc::Json g;
      g["input"] = expr->str();
      g["invariants"] = gc::json_invariants(group->invariants());
      doc["group"] = std::move(g);
    }
    doc["results"] = std::move(results);
    doc["ok"] = ok;
    doc["timing_ms"] = millis;
    std::cout << doc.dump(2) << "\n";
  }
}

std::string inv_str(const std::vector<gc::Int>& inv) {
  std::string s = "[";
  for (std::size_t i = 0; i < inv.size(); ++i) {
    if (i) s += ", ";
    s += inv[i].str();
  }
  return s + "]";
}

int run_verify(const std::string& text, const Options& opt) {
  auto start = std::chrono::steady_clock::now();
  gc::GroupExpression expr = gc::parse_group(text);
  gc::FgAbGroup a = expr.evaluate();
  gc::TheoremH4Report h4 = gc::theorem_h4_suite(a, opt.oracle, opt.max_enum);
  gc::CorollaryReport cor = gc::corollary_suite(a);
  gc::Exact1Report e1 = gc::exact1_suite(gc::gamma_structural(a));
  bool ok = h4.ok() && cor.ok() && e1.ok();
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  if (!opt.quiet && !opt.json) {
    std::cout << "group:     " << a.str() << "\n"
              << "Gamma(A):  " << inv_str(h4.gamma_invariants) << "\n"
              << "A (x) A:   " << inv_str(h4.tensor_invariants) << "\n"
              << "H2(A):     " << inv_str(h4.h2_invariants) << "\n"
              << "ker(Psi):  " << inv_str(h4.kernel_invariants) << "\n"
              << "H1 term:   " << inv_str(h4.h1_term_invariants) << "\n"
              << "exact:     " << (h4.tail.overall ? "yes" : "NO") << "\n"
              << "kernel iso:" << (h4.kernel_isomorphic ? "yes" : "NO") << "\n"
              << "corollary: " << (cor.ok() ? "yes" : "NO") << "\n"
              << "exact1:    " << (e1.ok() ? "yes" : "NO") << "\n";
    if (h4.oracle_checked)
      std::cout << "oracle:    " << (h4.oracle_ok ? "yes" : "NO") << "\n";
    std::cout << (ok ? "PASS" : "FAIL") << "\n";
  }
  emit(opt, "verify", &expr, &a, gc::json_verify(h4, cor, e1), ok, ms);
  return ok ? kExitOk : kExitCheckFailed;
}

int run_gamma(const std::string& text, const Options& opt) {
  auto start = std::chrono::steady_clock::now();
  gc::GroupExpression expr = gc::parse_group(text);
  gc::FgAbGroup a = expr.evaluate();
  gc::GammaValue g = gc::gamma_structural(a);
  bool ok = true;
  gc::Json results;
  results["gamma"] = gc::json_invariants(g.group.invariants());
  results["psi_matrix"] = gc::json_matrix(g.psi.matrix());
  results["oracle_checked"] = opt.oracle;
  if (opt.oracle) {
    gc::GammaValue p = gc::gamma_presentation(a, opt.max_enum);
    ok = gc::compare_gamma(p, g, opt.max_enum).ok();
    results["oracle_ok"] = ok;
  }
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  if (!opt.quiet && !opt.json)
    std::cout << "Gamma(" << a.str() << ") = "
              << g.group.str() << "  invariants "
              << inv_str(g.group.invariants())
              << (opt.oracle ? (ok ? "  (oracle ok)" : "  (ORACLE MISMATCH)") : "")
              << "\n";
  emit(opt, "gamma", &expr, &a, std::move(results), ok, ms);
  return ok ? kExitOk : kExitCheckFailed;
}

int run_tor(const std::string& text, const Options& opt) {
  auto start = std::chrono::steady_clock::now();
  gc::GroupExpression expr = gc::parse_group(text);
  gc::FgAbGroup a = expr.evaluate();
  gc::TorValue t = gc::tor(a, a);
  gc::GroupHom se = gc::tor_swap(t);
  gc::Json results;
  results["tor"] = gc::json_invariants(t.group.invariants());
  results["sigma_eps"] = gc::json_matrix(se.matrix());
  results["sigma_eps_is_identity"] = se == gc::GroupHom::identity(t.group);
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  if (!opt.quiet && !opt.json)
    std::cout << "Tor(" << a.str() << ", same) = " << t.group.str()
              << "  invariants " << inv_str(t.group.invariants()) << "\n";
  emit(opt, "tor", &expr, &a, std::move(results), true, ms);
  return kExitOk;
}

int run_homology(const std::string& text, const Options& opt) {
  auto start = std::chrono::steady_clock::now();
  gc::GroupExpression expr = gc::parse_group(text);
  gc::FgAbGroup a = expr.evaluate();
  gc::GradedHomology h = gc::kunneth_homology(a);
  gc::Json results;
  gc::Json degrees = gc::Json::array();
  for (const auto& g : h.h) degrees.push_back(gc::json_invariants(g.invariants()));
  results["h"] = std::move(degrees);
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  if (!opt.quiet && !opt.json)
    for (std::size_t n = 0; n < 4; ++n)
      std::cout << "H_" << n << "(" << a.str() << ") = " << h.h[n].str() << "\n";
  emit(opt, "homology", &expr, &a, std::move(results), true, ms);
  return kExitOk;
}

int run_sweep(std::uint64_t max_order, const Options& opt) {
  auto start = std::chrono::steady_clock::now();
  gc::BatchReport rep = gc::batch_verify(max_order, opt.max_enum);
  std::size_t passes = 0;
  gc::Json groups = gc::Json::array();
  for (const auto& v : rep.results) {
    if (v.pass()) ++passes;
    gc::Json g;
    g["group"] = v.group.str();
    g["invariants"] = gc::json_invariants(v.group.invariants());
    g["pass"] = v.pass();
    if (!v.pass()) {
      g["h4_ok"] = v.h4.ok();
      g["corollary_ok"] = v.corollary.ok();
      g["exact1_ok"] = v.exact1.ok();
      g["h3a_ok"] = v.h3a;
      g["h2_kunneth_ok"] = v.h2_matches_kunneth;
    }
    groups.push_back(std::move(g));
    if (!opt.quiet && !opt.json)
      std::cout << (v.pass() ? "pass  " : "FAIL  ") << v.group.str() << "\n";
  }
  gc::Json results;
  results["max_order"] = max_order;
  results["classes"] = rep.results.size();
  results["passes"] = passes;
  results["groups"] = std::move(groups);
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  if (!opt.quiet && !opt.json)
    std::cout << passes << "/" << rep.results.size() << " classes pass\n";
  emit(opt, "sweep", nullptr, nullptr, std::move(results), rep.all_pass, ms);
  return rep.all_pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Whitehead quadratic functor calculator and theorem verifier"};
  app.require_subcommand(1);

  Options opt;
  opt.max_enum = default_cap_from_env();
  app.add_flag("--json", opt.json, "emit a machine-readable report on stdout");
  app.add_flag("--quiet", opt.quiet, "suppress human-readable output");
  app.add_flag("--oracle", opt.oracle,
               "cross-check Gamma against the presentation construction");
  app.add_option("--max-enum", opt.max_enum,
                 "enumeration cap for presentation-based computations");

  std::string expr_text;
  std::uint64_t max_order = 16;

  CLI::App* verify = app.add_subcommand("verify", "verify the exact sequences for one group");
  verify->add_option("expr", expr_text, "group expression, e.g. \"Z/4 + Z\"")->required();
  CLI::App* gamma = app.add_subcommand("gamma", "compute Gamma(A)");
  gamma->add_option("expr", expr_text)->required();
  CLI::App* torc = app.add_subcommand("tor", "compute Tor(A, A) with its involution");
  torc->add_option("expr", expr_text)->required();
  CLI::App* hom = app.add_subcommand("homology", "integral homology of A in degrees 0..3");
  hom->add_option("expr", expr_text)->required();
  CLI::App* sweep = app.add_subcommand("sweep", "verify all groups of bounded order");
  sweep->add_option("--max-order", max_order, "largest group order to test");

  // global flags may be given after the subcommand
  for (CLI::App* sub : {verify, gamma, torc, hom, sweep}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitInputError : kExitOk;
  }

  try {
    if (verify->parsed()) return run_verify(expr_text, opt);
    if (gamma->parsed()) return run_gamma(expr_text, opt);
    if (torc->parsed()) return run_tor(expr_text, opt);
    if (hom->parsed()) return run_homology(expr_text, opt);
    if (sweep->parsed()) return run_sweep(max_order, opt);
  } catch (const gc::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const gc::SizeCapError& e) {
    std::cerr << "error: " << e.what()
              << " (raise it with --max-enum or GAMMACALC_MAX_ENUM)\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
