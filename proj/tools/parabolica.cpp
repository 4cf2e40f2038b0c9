// Command-line front end: text or JSON reports for every computation.
// Exit codes: 0 ok, 1 check failed, 2 usage, 3 budget exceeded.
#include <atomic>
#include <cstdlib>
#include <functional>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "parabolica/checks.hpp"
#include "parabolica/pathways.hpp"

using namespace parabolica;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kBudget = 3 };

struct RunConfig {
  std::string descriptor;
  std::uint64_t budget = 10'000'000;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string output;
  int jobs = 1;
  int xi = 1;
  int m = 0, t = 0;
  int max_n = 6;
};

struct UsageError : Error {
  using Error::Error;
};

json weight_json(const std::vector<Rational> &w) {
  json a = json::array();
  for (auto &x : w) a.push_back(rational_to_string(x));
  return a;
}

std::string weight_text(const std::vector<Rational> &w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + rational_to_string(w[i]);
  return s + ")";
}

std::string set_text(const std::vector<int> &v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

json report_json(const SuiteReport &r) {
  json ids = json::array(), certs = json::array();
  for (auto &i : r.identities)
    ids.push_back({{"name", i.name}, {"lhs", i.lhs}, {"rhs", i.rhs}, {"equal", i.equal}});
  for (auto &c : r.certificates)
    certs.push_back({{"name", c.name}, {"ok", c.verdict.ok}, {"reason", c.verdict.reason}});
  return {{"suite", r.suite}, {"identities", ids}, {"certificates", certs}, {"notes", r.notes}};
}

std::string report_text(const SuiteReport &r) {
  std::ostringstream os;
  os << "suite " << r.suite << ": " << (r.ok() ? "ok" : "FAILED") << "\n";
  for (auto &i : r.identities) {
    os << "  [" << (i.equal ? "ok" : "FAIL") << "] " << i.name << "\n";
    if (!i.equal) os << "      lhs = " << i.lhs << "\n      rhs = " << i.rhs << "\n";
  }
  for (auto &c : r.certificates) {
    os << "  [" << (c.verdict.ok ? "ok" : "FAIL") << "] " << c.name;
    if (!c.verdict.reason.empty()) os << ": " << c.verdict.reason;
    os << "\n";
  }
  for (auto &n : r.notes) os << "  note: " << n << "\n";
  return os.str();
}

// parses the descriptor; sp blocks become the symmetric gl_n contraction
std::pair<Descriptor, ParabolicContraction> load(const RunConfig &cfg) {
  Descriptor d = parse_descriptor(cfg.descriptor);
  return {d, ParabolicContraction(d.blocks)};
}

struct Output {
  json j;
  std::string text;
  bool ok = true;
};

Output cmd_describe(const RunConfig &cfg) {
  auto [d, C] = load(cfg);
  Output o;
  long n = C.n(), sp = C.s() - C.p();
  std::vector<int> m1, m2;
  for (int m = 1; m <= n; ++m)
    if (C.in_M1(m)) m1.push_back(m);
  m2 = C.M(2);
  json levels = json::array();
  std::ostringstream os;
  os << "kind " << kind_name(d.kind) << ", n = " << n << ", s = " << C.s() << ", blocks ("
     << blocks_string(C.blocks()) << ")\n";
  for (int k = 1; k <= C.s(); ++k) os << "I_" << k << " = " << set_text(C.interval(k)) << "\n";
  os << "i  m_i  rho_i  kappa_i\n";
  for (int i = 0; i <= C.imax(); ++i) {
    os << i << "  " << C.m_of(i) << "  " << C.rho(i) << "  " << set_text(C.kappa(i)) << "\n";
    levels.push_back({{"i", i}, {"m_i", C.m_of(i)}, {"rho_i", C.rho(i)}, {"kappa_i", C.kappa(i)}});
  }
  std::vector<int> r;
  for (int m = 1; m <= n; ++m) r.push_back(C.r(m));
  os << "I = " << set_text(C.Iset()) << ", p = " << C.p() << "\n";
  os << "M_1 = " << set_text(m1) << "\n";
  os << "M_2 = " << set_text(m2) << "\n";
  os << "r_m (m = 1.." << n << ") = (" << blocks_string(r) << ")\n";
  os << "dim q = n^2 = " << n * n << ", index q = n = " << n << "\n";
  os << "dim q_Lambda = n^2 - (s - p) = " << n * n - sp << ", index q_Lambda = n + s - p = "
     << n + sp << "\n";
  json intervals = json::array();
  for (int k = 1; k <= C.s(); ++k) intervals.push_back(C.interval(k));
  o.j = {{"kind", kind_name(d.kind)},
         {"n", n},
         {"blocks", C.blocks()},
         {"intervals", intervals},
         {"levels", levels},
         {"I", C.Iset()},
         {"p", C.p()},
         {"M1", m1},
         {"M2", m2},
         {"r", r},
         {"dim_q", n * n},
         {"index_q", n},
         {"dim_q_lambda", n * n - sp},
         {"index_q_lambda", n + sp}};
  if (d.kind == Kind::SP) {
    long half = n / 2, sprime = C.s() / 2;
    os << "dim q^C = n(n+1)/2 = " << n * (n + 1) / 2 << ", index q^C = n' = " << half << "\n";
    os << "dim (q^C)' = n(n+1)/2 - s' = " << n * (n + 1) / 2 - sprime
       << ", index (q^C)' = n' + s' = " << half + sprime << "\n";
    o.j["dim_qC"] = n * (n + 1) / 2;
    o.j["index_qC"] = half;
    o.j["dim_qC_prime"] = n * (n + 1) / 2 - sprime;
    o.j["index_qC_prime"] = half + sprime;
  }
  o.text = os.str();
  return o;
}

json certificate_json(const FactorizationCertificate &cert, const ParabolicContraction &C) {
  json fs = json::array();
  for (auto &f : cert.factors) {
    bool only = f.poly.filter([&](const Monomial &mo) {
                        for (auto &x : mo.factors())
                          if (!C.in_nminus(x.gen)) return true;
                        return false;
                      }).is_zero();
    fs.push_back(
        {{"t", f.t}, {"weight", weight_json(f.weight)}, {"n_minus_only", only}, {"poly", f.poly.str()}});
  }
  return {{"m", cert.m},
          {"c_m", rational_to_string(cert.c_m)},
          {"factors", fs},
          {"verified", cert.verified}};
}

Output cmd_factor(const RunConfig &cfg) {
  auto [d, C] = load(cfg);
  if (cfg.m < 1 || cfg.m > C.n()) throw UsageError("m must lie in [1, n]");
  Budget b{cfg.budget};
  auto cert = factor_components(C, cfg.m, b, true);
  Output o;
  o.ok = cert.verified;
  o.j = certificate_json(cert, C);
  std::ostringstream os;
  os << "F_" << cfg.m << "^bullet = " << rational_to_string(cert.c_m) << " * prod of "
     << cert.factors.size() << " factor(s): " << (cert.verified ? "verified" : "FAILED")
     << (cert.failure.empty() ? "" : " (" + cert.failure + ")") << "\n";
  for (auto &f : cert.factors)
    os << "  F_{" << cfg.m << "," << f.t << "}  weight " << weight_text(f.weight) << "  degree "
       << f.poly.total_degree() << "\n    " << poly_summary(f.poly) << "\n";
  o.text = os.str();
  return o;
}

Output cmd_weights(const RunConfig &cfg) {
  auto [d, C] = load(cfg);
  Output o;
  std::ostringstream os;
  json rows = json::array();
  if (d.kind == Kind::SP) {
    Budget b{cfg.budget};
    auto fam = typeC_family(C, b, false, cfg.seed);
    for (auto &mem : fam.members) {
      os << "f_{" << mem.mp << "," << mem.t << "}  weight " << weight_text(mem.weight)
         << "  multiplicity " << mem.multiplicity << "\n";
      rows.push_back({{"m", mem.mp},
                      {"t", mem.t},
                      {"weight", weight_json(mem.weight)},
                      {"multiplicity", mem.multiplicity}});
    }
    o.ok = fam.report.ok();
    os << report_text(fam.report);
    o.j = {{"kind", "sp"}, {"weights", rows}, {"report", report_json(fam.report)}};
  } else {
    std::vector<WeightFamily> families;
    for (int m = 1; m <= C.n(); ++m) {
      WeightFamily fam;
      for (int t = 1; t <= C.r(m); ++t) {
        auto w = weight_formula(C, m, t);
        os << "F_{" << m << "," << t << "}  weight " << weight_text(w) << "\n";
        rows.push_back({{"m", m}, {"t", t}, {"weight", weight_json(w)}});
        fam.push_back({w, 1});
      }
      if (C.in_M1(m)) families.push_back(fam);
    }
    auto v = independence_certificate(families);
    o.ok = v.ok;
    os << "independence: " << (v.ok ? "ok" : "FAILED " + v.reason) << "\n";
    o.j = {{"kind", kind_name(d.kind)},
           {"weights", rows},
           {"independence", {{"ok", v.ok}, {"reason", v.reason}}}};
  }
  o.text = os.str();
  return o;
}

Output cmd_kw(const RunConfig &cfg) {
  auto [d, C] = load(cfg);
  if (cfg.xi < 1 || cfg.xi > C.s()) throw UsageError("xi must lie in [1, s]");
  Budget b{cfg.budget};
  auto r = verify_hypothesis_I(C, cfg.xi, b, C.n() <= 5);
  Output o;
  o.ok = r.verdict.ok;
  std::ostringstream os;
  os << "v = (" << blocks_string(r.v) << ")\n";
  json cs = json::array();
  for (std::size_t m = 0; m < r.constants.size(); ++m) {
    os << "F_" << m + 1 << "^bullet(q) = " << rational_to_string(r.constants[m]) << "*X_" << m + 1
       << "\n";
    cs.push_back(rational_to_string(r.constants[m]));
  }
  os << "hypothesis (I'): " << (r.verdict.ok ? "ok" : "FAILED " + r.verdict.reason) << "\n";
  o.text = os.str();
  o.j = {{"xi", cfg.xi}, {"v", r.v}, {"constants", cs}, {"ok", r.verdict.ok}, {"reason", r.verdict.reason}};
  return o;
}

Output cmd_separate(const RunConfig &cfg) {
  auto [d, C] = load(cfg);
  if (cfg.m < 1 || cfg.m > C.n() || cfg.t < 1 || cfg.t > C.r(cfg.m))
    throw UsageError("need 1 <= m <= n and 1 <= t <= r_m");
  Budget b{cfg.budget};
  Output o;
  std::ostringstream os;
  json q = json::array();
  try {
    auto sf = separating_q_gl(C, cfg.m, cfg.t, b);
    os << "xi = " << sf.xi << ", F_{" << cfg.m << "," << cfg.t
       << "}(q) = " << rational_to_string(sf.c) << "*X\nq =";
    for (auto &[g, v] : sf.q) {
      os << " " << gen_to_string(g) << "->" << v.str() << ";";
      q.push_back({{"gen", gen_to_string(g)}, {"value", v.str()}});
    }
    os << "\n";
    o.j = {{"m", cfg.m}, {"t", cfg.t}, {"xi", sf.xi}, {"c", rational_to_string(sf.c)}, {"q", q}};
  } catch (const VerificationFailed &e) {
    o.ok = false;
    os << "FAILED " << e.what() << "\n";
    o.j = {{"m", cfg.m}, {"t", cfg.t}, {"error", e.what()}};
  }
  o.text = os.str();
  return o;
}

Output cmd_index(const RunConfig &cfg) {
  auto [d, C] = load(cfg);
  Output o;
  if (d.kind == Kind::SP) {
    Budget b{cfg.budget};
    auto fam = typeC_family(C, b, true, cfg.seed);
    std::ostringstream os;
    os << "dim q^C = " << fam.dim_qc << ", index q^C = " << fam.index_qc << "\n";
    os << "dim (q^C)' = " << fam.dim_qc_prime << ", index (q^C)' = " << fam.index_qc_prime << "\n";
    long half = C.n() / 2, sprime = C.s() / 2;
    o.ok = fam.index_qc == half && fam.index_qc_prime == half + sprime &&
           fam.dim_qc_prime == fam.dim_qc - sprime;
    o.text = os.str();
    o.j = {{"dim_qC", fam.dim_qc},
           {"index_qC", fam.index_qc},
           {"dim_qC_prime", fam.dim_qc_prime},
           {"index_qC_prime", fam.index_qc_prime},
           {"ok", o.ok}};
    return o;
  }
  BracketFn br = [&](const Poly &x, const Poly &y) { return bracket_linear(C, x, y); };
  auto full = full_basis(C);
  auto lam = q_lambda_basis(C);
  auto iq = index_estimate(full, br, 5, cfg.seed);
  auto il = index_estimate(lam, br, 5, cfg.seed);
  long n = C.n(), sp = C.s() - C.p();
  o.ok = iq.index == n && il.index == n + sp && long(lam.size()) == n * n - sp;
  bool balance = long(full.size()) + iq.index == long(lam.size()) + il.index;
  o.ok = o.ok && balance;
  std::ostringstream os;
  os << "dim q = " << full.size() << ", index q = " << iq.index << " (expected " << n << ")\n";
  os << "dim q_Lambda = " << lam.size() << ", index q_Lambda = " << il.index << " (expected "
     << n + sp << ")\n";
  os << "dim q + index q = dim q_Lambda + index q_Lambda: " << (balance ? "yes" : "NO") << "\n";
  o.text = os.str();
  o.j = {{"dim_q", full.size()},         {"index_q", iq.index},      {"dim_q_lambda", lam.size()},
         {"index_q_lambda", il.index}, {"trials_q", iq.trials},    {"trials_q_lambda", il.trials},
         {"balance", balance},         {"ok", o.ok}};
  return o;
}

Output suite_output(const SuiteReport &r) {
  return {report_json(r), report_text(r), r.ok()};
}

Output cmd_counterexample(const RunConfig &cfg) {
  Budget b{cfg.budget};
  return suite_output(counterexample_sp8(b));
}

Output cmd_d6(const RunConfig &cfg) {
  Budget b{cfg.budget};
  return suite_output(d6_suite(b, cfg.seed));
}

Output cmd_verify_suite(const RunConfig &cfg, bool &budget_hit) {
  using Job = std::function<SuiteReport()>;
  std::vector<std::pair<std::string, Job>> jobs;
  for (int n = 2; n <= cfg.max_n; ++n)
    for (auto &bl : compositions(n))
      jobs.push_back({"gl:" + blocks_string(bl), [bl, &cfg] {
                        return gl_instance_report(ParabolicContraction(bl), cfg.budget, cfg.seed);
                      }});
  jobs.push_back({"gl:4,1,4,2,1", [&cfg] { return running_example_report(cfg.budget); }});
  jobs.push_back({"gl:2,2 (central root)", [&cfg] { return central_root_report(cfg.budget, cfg.seed); }});
  jobs.push_back({"sp8", [&cfg] {
                    Budget b{cfg.budget};
                    return counterexample_sp8(b);
                  }});
  jobs.push_back({"D6", [&cfg] {
                    Budget b{cfg.budget};
                    return d6_suite(b, cfg.seed);
                  }});

  std::vector<SuiteReport> out(jobs.size());
  std::vector<char> hit(jobs.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < jobs.size();) {
      try {
        out[k] = jobs[k].second();
      } catch (const BudgetExceeded &e) {
        out[k].suite = jobs[k].first;
        out[k].certify("budget", {false, e.what()});
        hit[k] = 1;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int j = 0; j < std::max(1, cfg.jobs); ++j) pool.emplace_back(worker);
  for (auto &th : pool) th.join();

  Output o;
  std::ostringstream os;
  json reports = json::array();
  int passed = 0;
  for (std::size_t k = 0; k < out.size(); ++k) {
    budget_hit = budget_hit || hit[k];
    bool ok = out[k].ok();
    passed += ok;
    o.ok = o.ok && ok;
    reports.push_back(report_json(out[k]));
    if (ok)
      os << "[ok]   " << out[k].suite << "\n";
    else
      os << report_text(out[k]);
  }
  os << passed << "/" << out.size() << " instances passed\n";
  o.text = os.str();
  o.j = {{"instances", reports}, {"passed", passed}, {"total", out.size()}};
  return o;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Semi-invariants of parabolic contractions: exact computations and certificates"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  RunConfig cfg;
  if (const char *env = std::getenv("PARABOLICA_BUDGET")) {
    try {
      cfg.budget = std::stoull(env);
    } catch (...) {
      std::cerr << "PARABOLICA_BUDGET is not a number\n";
      return kUsage;
    }
  }
  app.add_option("--budget", cfg.budget, "term budget (default 10^7, env PARABOLICA_BUDGET)")
      ->check(CLI::Range(std::uint64_t(10'000), std::numeric_limits<std::uint64_t>::max()));
  app.add_option("--seed", cfg.seed, "seed for randomised steps");
  app.add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("-o,--output", cfg.output, "write the report to a file");
  app.add_option("--jobs", cfg.jobs, "parallel instances in verify-suite")->check(CLI::PositiveNumber);
  app.add_option("--xi", cfg.xi, "block index for kw");

  auto desc = [&](CLI::App *sub) {
    sub->add_option("descriptor", cfg.descriptor, "e.g. gl:4,1,4,2,1 or sp:1,2,2,1")->required();
  };
  auto *describe = app.add_subcommand("describe", "block combinatorics, M_1, M_2, dimensions");
  desc(describe);
  auto *factor = app.add_subcommand("factor", "factorisation certificate for F_m^bullet");
  desc(factor);
  factor->add_option("m", cfg.m)->required();
  auto *weights = app.add_subcommand("weights", "weights of all factors and independence");
  desc(weights);
  auto *kw = app.add_subcommand("kw", "hypothesis (I') on the companion form for --xi");
  desc(kw);
  auto *separate = app.add_subcommand("separate", "separating linear form for F_{m,t}");
  desc(separate);
  separate->add_option("m", cfg.m)->required();
  separate->add_option("t", cfg.t)->required();
  auto *index = app.add_subcommand("index", "index and dimension of q and q_Lambda");
  desc(index);
  auto *suite = app.add_subcommand("verify-suite", "every check on the default instances");
  suite->add_option("--max-n", cfg.max_n, "largest n for the composition sweep")
      ->check(CLI::Range(2, 7));
  auto *cex = app.add_subcommand("counterexample", "the sp_8 example with an extra relation");
  auto *d6 = app.add_subcommand("d6", "the D_6 probe");
  (void)cex;
  (void)d6;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  bool budget_hit = false;
  Output o;
  try {
    auto *sub = app.get_subcommands().front();
    std::string name = sub->get_name();
    if (name == "describe")
      o = cmd_describe(cfg);
    else if (name == "factor")
      o = cmd_factor(cfg);
    else if (name == "weights")
      o = cmd_weights(cfg);
    else if (name == "kw")
      o = cmd_kw(cfg);
    else if (name == "separate")
      o = cmd_separate(cfg);
    else if (name == "index")
      o = cmd_index(cfg);
    else if (name == "verify-suite")
      o = cmd_verify_suite(cfg, budget_hit);
    else if (name == "counterexample")
      o = cmd_counterexample(cfg);
    else
      o = cmd_d6(cfg);
  } catch (const BudgetExceeded &e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const ParseError &e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError &e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }

  std::string body = cfg.format == "json" ? o.j.dump(2) + "\n" : o.text;
  if (cfg.output.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(cfg.output);
    if (!f) {
      std::cerr << "cannot write " << cfg.output << "\n";
      return kUsage;
    }
    f << body;
  }
  if (budget_hit) return kBudget;
  return o.ok ? kOk : kFailed;
}
