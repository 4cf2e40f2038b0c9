// Acceptance run: one PASS/FAIL line per criterion. All checks are exact;
// the only pinned tolerances are the wall-clock limits below.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "parabolica/checks.hpp"
#include "parabolica/pathways.hpp"

using namespace parabolica;

namespace {

// wall-clock limits in seconds
constexpr double kLimitFactorisation = 300;
constexpr double kLimitTypeC = 600;
constexpr double kLimitSp8 = 120;
constexpr double kLimitD6 = 300;
constexpr int kPropertyCases = 1000;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string &why) {
    if (ok) detail = why;  // keep the first failure
    ok = false;
  }
};

int failures = 0;

void criterion(int k, const std::string &title, double limit, const std::function<Outcome()> &fn) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = fn();
  } catch (const std::exception &e) {
    o.fail(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit > 0 && secs > limit) o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(limit) + " s");
  failures += !o.ok;
  std::ostringstream os;
  os.precision(3);
  os << "CRITERION " << k << " " << (o.ok ? "PASS" : "FAIL") << " " << title << " [" << std::fixed
     << secs << " s]";
  if (!o.detail.empty()) os << " : " << o.detail;
  std::cout << os.str() << std::endl;
}

// runs check on every composition of n <= 6
Outcome sweep(const std::function<Verdict(const ParabolicContraction &)> &check) {
  Outcome o;
  int count = 0;
  for (int n = 2; n <= 6; ++n)
    for (auto &bl : compositions(n)) {
      ParabolicContraction C(bl);
      auto v = check(C);
      ++count;
      if (!v.ok) o.fail("gl:" + blocks_string(bl) + ": " + v.reason);
    }
  if (o.ok) o.detail = std::to_string(count) + " compositions";
  return o;
}

void require_report(Outcome &o, const SuiteReport &r) {
  for (auto &i : r.identities)
    if (!i.equal) o.fail(r.suite + ": " + i.name);
  for (auto &c : r.certificates)
    if (!c.verdict.ok) o.fail(r.suite + ": " + c.name + " " + c.verdict.reason);
}

// a passing identity or certificate of that name
bool has_certificate(const SuiteReport &r, const std::string &name) {
  for (auto &i : r.identities)
    if (i.name == name) return i.equal;
  for (auto &c : r.certificates)
    if (c.name == name) return c.verdict.ok;
  return false;
}

// random polynomial in e[1..n,1..n] and X1, X2
Poly random_poly(std::mt19937_64 &rng, int n, bool aux_allowed) {
  std::uniform_int_distribution<int> nterms(0, 4), deg(0, 3), idx(1, n), cf(-5, 5), kind(0, 4);
  Poly f;
  int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    Poly mono(Rational(cf(rng), 1 + idx(rng) % 2));
    int d = deg(rng);
    for (int i = 0; i < d; ++i)
      mono *= Poly::gen(aux_allowed && kind(rng) == 0 ? aux(1 + idx(rng) % 2)
                                                      : entry(idx(rng), idx(rng)));
    f += mono;
  }
  return f;
}

Poly aux_only(std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> nterms(0, 2), deg(0, 2), which(1, 2), cf(-3, 3);
  Poly f;
  for (int t = nterms(rng); t > 0; --t) {
    Poly mono(cf(rng));
    for (int d = deg(rng); d > 0; --d) mono *= Poly::X(which(rng));
    f += mono;
  }
  return f;
}

const ParabolicContraction &random_contraction(std::mt19937_64 &rng, int nmin, int nmax) {
  static std::vector<ParabolicContraction> all = [] {
    std::vector<ParabolicContraction> v;
    for (int n = 2; n <= 6; ++n)
      for (auto &b : compositions(n)) v.emplace_back(b);
    return v;
  }();
  for (;;) {
    auto &C = all[rng() % all.size()];
    if (C.n() >= nmin && C.n() <= nmax) return C;
  }
}

}  // namespace

int main() {
  std::cout << "acceptance run, exact arithmetic throughout" << std::endl;

  criterion(1, "F_m^bullet = c_m prod_t F_{m,t}, all compositions n <= 6", kLimitFactorisation, [] {
    return sweep([](const ParabolicContraction &C) {
      Budget b;
      return check_factorisation(C, b);
    });
  });

  criterion(2, "degree law by brute force, n <= 6; deg F_6 = 4 for (4,1,4,2,1)", 0, [] {
    Outcome o = sweep([](const ParabolicContraction &C) {
      Budget b;
      return check_degree_law(C, b);
    });
    ParabolicContraction R({4, 1, 4, 2, 1});
    Budget b;
    auto d = partial_degree(bullet_F(R, 6, b), R.nminus());
    if (deg_nminus_F(R, 6) != 4 || !d || *d != 4) o.fail("running example: deg F_6 != 4");
    return o;
  });

  criterion(3, "index q = n, index q_Lambda = n+s-p, |q_Lambda| = n^2-(s-p), balance; 5 trials", 0,
            [] { return sweep([](const ParabolicContraction &C) { return check_index(C, 5, 1); }); });

  criterion(4, "hypothesis (I') for n <= 6 and every xi; v-sequence for (4,1,4,2,1), xi = 4", 0, [] {
    Outcome o = sweep([](const ParabolicContraction &C) {
      Budget b;
      return check_kw(C, b, C.n() <= 5);
    });
    ParabolicContraction R({4, 1, 4, 2, 1});
    Budget b;
    auto kw = verify_hypothesis_I(R, 4, b);
    if (kw.v != std::vector<int>{10, 12, 1, 5, 6, 11, 2, 7, 3, 8, 4, 9})
      o.fail("v = (" + blocks_string(kw.v) + ")");
    if (!kw.verdict.ok) o.fail("running example: " + kw.verdict.reason);
    if (kw.constants.size() != 12) o.fail("running example: missing constants");
    for (auto &c : kw.constants)
      if (c == 0) o.fail("running example: F_m^bullet(q) = 0");
    return o;
  });

  criterion(5, "hypothesis (II) witnesses and separating forms, n <= 6", 0, [] {
    return sweep([](const ParabolicContraction &C) {
      Budget b;
      return check_separation(C, b);
    });
  });

  criterion(6, "type A: pr commutes with bullet, family weights and independence, n <= 6", 0, [] {
    return sweep([](const ParabolicContraction &C) {
      Budget b;
      return check_typeA(C, b);
    });
  });

  criterion(7, "type C: symmetric blocks with s even, n in {4,6,8}, and (1,2,2,1,1,2,2,1)",
            kLimitTypeC, [] {
              Outcome o;
              std::vector<std::vector<int>> cases;
              for (int n : {4, 6, 8})
                for (auto &b : symmetric_even(n)) cases.push_back(b);
              cases.push_back({1, 2, 2, 1, 1, 2, 2, 1});
              for (auto &bl : cases) {
                auto r = typeC_report(ParabolicContraction(bl), Budget{}.limit, true, 1);
                require_report(o, r);
                for (const char *name : {"family size n'+s'", "antidiagonal witnesses", "dim (q^C)'",
                                         "index (q^C)'", "independence"})
                  if (!has_certificate(r, name)) o.fail(r.suite + ": missing " + name);
              }
              if (o.ok) o.detail = std::to_string(cases.size()) + " block sequences";
              return o;
            });

  criterion(8, "sp_8 example: relation, weights, independence", kLimitSp8, [] {
    Outcome o;
    Budget b;
    auto r = counterexample_sp8(b);
    require_report(o, r);
    for (const char *name : {"pr(F_{5,2}) = e[1,8]", "pr(F_5^bullet) = 0",
                             "f_{5,1} f_{5,2} + 1/4 f_2^2 = f_{4,1}^2 f_{4,2}", "weights",
                             "independence"})
      if (!has_certificate(r, name)) o.fail("missing " + std::string(name));
    return o;
  });

  criterion(9, "D_6 probe: the two stated identities, pr(F_6^bullet) = 0, degrees", kLimitD6, [] {
    Outcome o;
    Budget b;
    auto r = d6_suite(b, 1);
    require_report(o, r);
    if (!o.ok)
      for (auto &n : r.notes) o.detail += "; found " + n;
    return o;
  });

  criterion(10, "property suites, 1000 seeded cases each", 0, [] {
    Outcome o;
    std::mt19937_64 rng(20261015);
    auto check = [&](bool ok, const std::string &what, int c) {
      if (!ok) o.fail(what + " (case " + std::to_string(c) + ")");
    };
    for (int c = 0; c < kPropertyCases; ++c) {
      Poly f = random_poly(rng, 3, true), g = random_poly(rng, 3, true), h = random_poly(rng, 3, true);
      check((f + g) + h == f + (g + h) && f * (g + h) == f * g + f * h && f * g == g * f &&
                (f * g) * h == f * (g * h),
            "ring axioms", c);
      if (!g.is_zero()) {
        auto q = exact_divide(f * g, g);
        check(q && *q == f, "exact division", c);
      }
      LinearForm q;
      for (int p = 1; p <= 3; ++p)
        for (int s = 1; s <= 3; ++s) q[entry(p, s)] = aux_only(rng);
      check(evaluate(f * g, q) == evaluate(f, q) * evaluate(g, q) &&
                evaluate(f + g, q) == evaluate(f, q) + evaluate(g, q),
            "evaluation homomorphism", c);
    }
    for (int c = 0; c < kPropertyCases; ++c) {
      auto &C = random_contraction(rng, 2, 6);
      int n = C.n();
      auto gen = [&] { return entry(1 + rng() % n, 1 + rng() % n); };
      Poly x = Poly::gen(gen()), y = Poly::gen(gen()), z = Poly::gen(gen());
      auto br = [&](const Poly &a, const Poly &b) { return bracket_linear(C, a, b); };
      check((br(x, br(y, z)) + br(y, br(z, x)) + br(z, br(x, y))).is_zero(), "Jacobi", c);
      Poly f = random_poly(rng, n, false), h = random_poly(rng, n, false);
      Gen a = gen();
      check(act(C, a, f * h) == act(C, a, f) * h + f * act(C, a, h), "derivation law", c);
    }
    for (int c = 0; c < kPropertyCases; ++c) {
      auto &C = random_contraction(rng, 2, 6);
      int n = C.n();
      // products of generators with a fixed number of n^- entries
      auto bihom = [&](int deg, int dn) {
        Poly f;
        for (int k = 0; k < 3; ++k) {
          Poly mono(1 + long(rng() % 3));
          int placed = 0;
          for (int d = 0; d < deg; ++d) {
            bool want = placed < dn;
            for (int tries = 0; tries < 50; ++tries) {
              Gen g = entry(1 + rng() % n, 1 + rng() % n);
              if (C.in_nminus(g) == want) {
                mono *= Poly::gen(g);
                placed += want;
                break;
              }
            }
          }
          f += mono;
        }
        return f;
      };
      Poly f = bihom(3, 1), g = bihom(2, 1);
      check(bullet(C, f * g) == bullet(C, f) * bullet(C, g), "bullet multiplicativity", c);
    }
    for (int c = 0; c < kPropertyCases; ++c) {
      int n = 2 * (1 + int(rng() % 4));
      Poly f = random_poly(rng, n, false);
      check(gamma_transpose(gamma_transpose(f, n), n) == f, "gamma involutive", c);
      for (ProjKind k : {ProjKind::A, ProjKind::C, ProjKind::D}) {
        Poly p = project(k, n, f);
        check(project(k, n, p) == p, "pr idempotent", c);
      }
    }
    if (o.ok) o.detail = "ring axioms, division, evaluation, Jacobi, derivation, bullet, gamma, pr";
    return o;
  });

  std::cout << (10 - failures) << "/10 criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
