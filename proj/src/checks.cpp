#include "parabolica/checks.hpp"

#include <sstream>

#include "parabolica/pathways.hpp"

namespace parabolica {

std::vector<std::vector<int>> compositions(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> b{1};
    for (int x = 0; x < n - 1; ++x) {
      if (mask >> x & 1)
        b.push_back(1);
      else
        ++b.back();
    }
    if (b.size() >= 2) out.push_back(b);
  }
  return out;
}

std::vector<std::vector<int>> symmetric_even(int n) {
  std::vector<std::vector<int>> out;
  for (auto &b : compositions(n)) {
    if (b.size() % 2) continue;
    bool pal = true;
    for (std::size_t i = 0; i < b.size(); ++i) pal = pal && b[i] == b[b.size() - 1 - i];
    if (pal) out.push_back(b);
  }
  return out;
}

std::string blocks_string(const std::vector<int> &blocks) {
  std::string s;
  for (std::size_t i = 0; i < blocks.size(); ++i) s += (i ? "," : "") + std::to_string(blocks[i]);
  return s;
}

namespace {

Verdict pass() { return {true, ""}; }
Verdict fail(const std::string &why) { return {false, why}; }

// runs fn, turning verification errors into a failed verdict
template <class Fn>
Verdict guarded(Fn fn) {
  try {
    return fn();
  } catch (const BudgetExceeded &) {
    throw;
  } catch (const Error &e) {
    return fail(e.what());
  }
}

}  // namespace

Verdict check_factorisation(const ParabolicContraction &C, Budget &budget) {
  return guarded([&] {
    WeightVector total(C.n());
    for (int m = 1; m <= C.n(); ++m) {
      auto cert = factor_components(C, m, budget, true);
      if (!cert.verified) return fail("m=" + std::to_string(m) + ": " + cert.failure);
      if (int(cert.factors.size()) != C.r(m))
        return fail("m=" + std::to_string(m) + ": wrong number of factors");
      if (cert.c_m != 1 && cert.c_m != -1)
        return fail("m=" + std::to_string(m) + ": c_m = " + rational_to_string(cert.c_m));
      WeightVector sum(C.n());
      for (auto &f : cert.factors) {
        if (f.t < C.r(m) && !f.poly.filter([&](const Monomial &mo) {
                                for (auto &x : mo.factors())
                                  if (!C.in_nminus(x.gen)) return true;
                                return false;
                              }).is_zero())
          return fail("m=" + std::to_string(m) + ": factor t=" + std::to_string(f.t) +
                      " leaves n^-");
        sum = sum + f.weight;
      }
      if (!is_zero(sum)) return fail("m=" + std::to_string(m) + ": factor weights do not sum to 0");
    }
    return pass();
  });
}

Verdict check_degree_law(const ParabolicContraction &C, Budget &budget) {
  return guarded([&] {
    for (int m = 1; m <= C.n(); ++m) {
      auto d = partial_degree(F(C, m, budget), C.nminus());
      if (!d || int(*d) != deg_nminus_F(C, m))
        return fail("m=" + std::to_string(m) + ": brute force " +
                    (d ? std::to_string(*d) : std::string("-inf")) + ", formula " +
                    std::to_string(deg_nminus_F(C, m)));
    }
    return pass();
  });
}

Verdict check_index(const ParabolicContraction &C, int trials, std::uint64_t seed) {
  return guarded([&] {
    BracketFn br = [&](const Poly &x, const Poly &y) { return bracket_linear(C, x, y); };
    long n = C.n(), sp = C.s() - C.p();
    auto full = full_basis(C);
    auto lam = q_lambda_basis(C);
    long iq = index_estimate(full, br, trials, seed).index;
    long il = index_estimate(lam, br, trials, seed).index;
    std::ostringstream os;
    os << "index q = " << iq << ", index q_Lambda = " << il << ", |q_Lambda| = " << lam.size();
    if (iq != n) return fail(os.str() + "; expected index q = " + std::to_string(n));
    if (il != n + sp) return fail(os.str() + "; expected index q_Lambda = " + std::to_string(n + sp));
    if (long(lam.size()) != n * n - sp)
      return fail(os.str() + "; expected |q_Lambda| = " + std::to_string(n * n - sp));
    if (long(full.size()) + iq != long(lam.size()) + il) return fail(os.str() + "; unbalanced");
    return Verdict{true, os.str()};
  });
}

Verdict check_kw(const ParabolicContraction &C, Budget &budget, bool direct) {
  return guarded([&] {
    for (int xi = 1; xi <= C.s(); ++xi) {
      auto r = verify_hypothesis_I(C, xi, budget, direct);
      if (!r.verdict.ok) return fail("xi=" + std::to_string(xi) + ": " + r.verdict.reason);
    }
    return pass();
  });
}

Verdict check_separation(const ParabolicContraction &C, Budget &budget) {
  return guarded([&] {
    for (int m = 1; m <= C.n(); ++m)
      for (auto &f : factor_polys(C, m, budget))
        if (!verify_hypothesis_II(f))
          return fail("m=" + std::to_string(m) + ": no degree-1 generator");
    for (int m : C.M(2))
      for (int t = 1; t <= C.r(m); ++t) {
        auto sf = separating_q_gl(C, m, t, budget);
        if (sf.c == 0) return fail("(m,t)=(" + std::to_string(m) + "," + std::to_string(t) + ")");
      }
    return pass();
  });
}

Verdict check_typeA(const ParabolicContraction &C, Budget &budget) {
  return guarded([&] {
    for (int m = 1; m <= C.n(); ++m) {
      auto v = bullet_commutes(ProjKind::A, C, m, budget);
      if (!v.ok) return fail("m=" + std::to_string(m) + ": " + v.reason);
    }
    auto fam = typeA_family(C, budget);
    if (!fam.weights.ok) return fail("weights: " + fam.weights.reason);
    if (!fam.independence.ok) return fail("independence: " + fam.independence.reason);
    return pass();
  });
}

SuiteReport gl_instance_report(const ParabolicContraction &C, std::uint64_t budget_limit,
                               std::uint64_t seed) {
  SuiteReport r;
  r.suite = "gl:" + blocks_string(C.blocks());
  auto run = [&](const std::string &name, auto fn) {
    Budget b{budget_limit};
    r.certify(name, fn(b));
  };
  run("factorisation", [&](Budget &b) { return check_factorisation(C, b); });
  run("degree law", [&](Budget &b) { return check_degree_law(C, b); });
  run("index", [&](Budget &) { return check_index(C, 5, seed); });
  run("hypothesis (I')", [&](Budget &b) { return check_kw(C, b, C.n() <= 5); });
  run("hypotheses (II), (III')", [&](Budget &b) { return check_separation(C, b); });
  run("type A", [&](Budget &b) { return check_typeA(C, b); });
  return r;
}

SuiteReport running_example_report(std::uint64_t budget_limit) {
  ParabolicContraction C({4, 1, 4, 2, 1});
  SuiteReport r;
  r.suite = "gl:4,1,4,2,1";
  std::vector<int> m1;
  for (int m = 1; m <= C.n(); ++m)
    if (C.in_M1(m)) m1.push_back(m);
  r.certify("M_1 = {5,8,12}", m1 == std::vector<int>{5, 8, 12}
                                  ? pass()
                                  : fail("M_1 = {" + blocks_string(m1) + "}"));
  {
    Budget b{budget_limit};
    int formula = deg_nminus_F(C, 6);
    auto d = partial_degree(bullet_F(C, 6, b), C.nminus());
    r.certify("deg F_6 = 4", formula == 4 && d && *d == 4
                                 ? pass()
                                 : fail("formula " + std::to_string(formula) + ", bullet_F " +
                                        (d ? std::to_string(*d) : std::string("-inf"))));
  }
  {
    Budget b{budget_limit};
    auto kw = verify_hypothesis_I(C, 4, b);
    bool seq = kw.v == std::vector<int>{10, 12, 1, 5, 6, 11, 2, 7, 3, 8, 4, 9};
    r.certify("v-sequence for xi = 4", seq ? pass() : fail("got (" + blocks_string(kw.v) + ")"));
    r.certify("hypothesis (I'), xi = 4", kw.verdict);
    std::string cs;
    for (std::size_t m = 0; m < kw.constants.size(); ++m)
      cs += (m ? ", " : "") + rational_to_string(kw.constants[m]);
    r.notes.push_back("F_m^bullet(q) = c_m X_m with c = (" + cs + ")");
  }
  {
    Budget b{budget_limit};
    r.certify("separating forms for M_2", guarded([&] {
                for (int m : C.M(2))
                  for (int t = 1; t <= C.r(m); ++t)
                    if (separating_q_gl(C, m, t, b).c == 0) return fail("zero constant");
                return pass();
              }));
  }
  return r;
}

SuiteReport central_root_report(std::uint64_t budget_limit, std::uint64_t seed) {
  ParabolicContraction C({2, 2});
  SuiteReport r = gl_instance_report(C, budget_limit, seed);
  Budget b{budget_limit};
  Poly top = bullet_F(C, 4, b);
  auto c = proportional(top, minor({1, 2}, {3, 4}) * minor({3, 4}, {1, 2}));
  r.certify("F_4^bullet = c Delta_{12,34} Delta_{34,12}",
            c ? pass() : fail("not proportional: " + poly_summary(top)));
  return r;
}

SuiteReport typeC_report(const ParabolicContraction &C, std::uint64_t budget_limit,
                         bool with_index, std::uint64_t seed) {
  Budget b{budget_limit};
  auto fam = typeC_family(C, b, with_index, seed);
  SuiteReport r = fam.report;
  r.suite = "sp:" + blocks_string(C.blocks());
  return r;
}

}  // namespace parabolica
