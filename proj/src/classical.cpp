#include "parabolica/classical.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>

#include "parabolica/pathways.hpp"

namespace parabolica {

// ---- projections -----------------------------------------------------------

Gen gamma_gen(Gen g, int n) {
  if (!is_entry(g)) return g;
  return entry(n + 1 - col(g), n + 1 - row(g));
}

Poly gamma_transpose(const Poly &f, int n) {
  return f.substitute([n](Gen g) { return Poly::gen(gamma_gen(g, n)); });
}

int epsilon_C(int u, int v, int n) {
  int h = n / 2;
  return ((u <= h) == (v <= h)) ? -1 : 1;
}

Poly project_gen(ProjKind kind, int n, Gen g) {
  if (!is_entry(g)) return Poly::gen(g);
  int u = row(g), v = col(g);
  if (u < 1 || v < 1 || u > n || v > n)
    throw IndexOutOfRange("generator " + gen_to_string(g) + " outside gl_" + std::to_string(n));
  Rational half(1, 2);
  Gen t = gamma_gen(g, n);
  switch (kind) {
    case ProjKind::A: {
      if (u != v) return Poly::gen(g);
      Poly p = Poly::gen(g);
      for (int j = 1; j <= n; ++j) p -= Rational(1, n) * Poly::e(j, j);
      return p;
    }
    case ProjKind::C:
      if (n % 2) throw Error("sp_n needs n even");
      return half * (Poly::gen(g) + Rational(epsilon_C(u, v, n)) * Poly::gen(t));
    case ProjKind::D:
      return half * (Poly::gen(g) - Poly::gen(t));
  }
  return Poly();
}

Poly project(ProjKind kind, int n, const Poly &f) {
  return f.substitute([kind, n](Gen g) { return project_gen(kind, n, g); });
}

std::vector<Poly> cartan_C(int n) {
  std::vector<Poly> h;
  for (int j = 1; j <= n / 2; ++j) h.push_back(Poly::e(j, j) - Poly::e(n + 1 - j, n + 1 - j));
  return h;
}

std::vector<Poly> root_basis(ProjKind kind, int n) {
  std::vector<Poly> out;
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v) {
      if (u == v) continue;
      Gen g = entry(u, v), t = gamma_gen(g, n);
      if (kind != ProjKind::A && t < g) continue;  // same line as pr(t)
      Poly p = project_gen(kind, n, g);
      if (!p.is_zero()) out.push_back(p);
    }
  return out;
}

WeightC restrict_C(const WeightVector &w) {
  int n = int(w.size());
  WeightC r(n / 2);
  for (int j = 1; j <= n / 2; ++j) r[j - 1] = w[j - 1] - w[n - j];
  return r;
}

WeightC varpi_C(int nprime, int l) {
  WeightC w(nprime);
  for (int j = 1; j <= l && j <= nprime; ++j) w[j - 1] = 1;
  return w;
}

WeightC w_block_C(const ParabolicContraction &C, int k) {
  int h = C.n() / 2;
  return varpi_C(h, C.iota(k - 1)) - varpi_C(h, C.iota(k));
}

std::vector<Poly> lie_generators(const std::vector<Poly> &candidates, const BracketFn &br) {
  std::vector<Poly> gens, span;
  RowSpace sub;
  for (auto &c : candidates) {
    if (sub.contains(linear_coords(c))) continue;
    gens.push_back(c);
    std::vector<Poly> todo{c};
    while (!todo.empty()) {
      Poly x = todo.back();
      todo.pop_back();
      if (!sub.add(linear_coords(x))) continue;
      for (auto &y : span) {
        Poly b = br(x, y);
        if (!b.is_zero() && !sub.contains(linear_coords(b))) todo.push_back(b);
      }
      span.push_back(x);
    }
  }
  return gens;
}

namespace {

// root vectors generating the contraction of sp_n together with its Cartan
const std::vector<Poly> &sp_generators(const ParabolicContraction &C) {
  static std::map<std::vector<int>, std::vector<Poly>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(C.blocks());
  if (it != cache.end()) return it->second;
  std::vector<Poly> cand = cartan_C(C.n()), roots = root_basis(ProjKind::C, C.n());
  // short roots first, so simple root vectors are tried before the rest
  std::stable_sort(roots.begin(), roots.end(), [](const Poly &a, const Poly &b) {
    auto h = [](const Poly &p) {
      Gen g = p.terms().back().mono.factors()[0].gen;
      return std::abs(row(g) - col(g));
    };
    return h(a) < h(b);
  });
  cand.insert(cand.end(), roots.begin(), roots.end());
  BracketFn br = [&C](const Poly &x, const Poly &y) { return bracket_linear(C, x, y); };
  // the Cartan part comes first and is checked separately
  auto gens = lie_generators(cand, br);
  gens.erase(gens.begin(), gens.begin() + C.n() / 2);
  return cache.emplace(C.blocks(), gens).first->second;
}

}  // namespace

namespace {

// h^C_j acts on a monomial by a scalar read off its factors
std::optional<WeightC> cartan_weight_C(int n, const Poly &f) {
  int np = n / 2;
  auto mono_weight = [&](const Monomial &m) {
    WeightC w(np);
    for (auto &fac : m.factors()) {
      if (!is_entry(fac.gen)) continue;
      auto side = [&](int x, int sign) {
        if (x <= np) w[x - 1] += sign * long(fac.exp);
        else w[n - x] -= sign * long(fac.exp);
      };
      side(row(fac.gen), 1);
      side(col(fac.gen), -1);
    }
    return w;
  };
  WeightC w = mono_weight(f.leading().mono);
  for (auto &t : f.terms())
    if (mono_weight(t.mono) != w) return std::nullopt;
  return w;
}

}  // namespace

std::optional<WeightC> weight_of_C(const ParabolicContraction &C, const Poly &f) {
  if (f.is_zero()) throw Error("weight of the zero polynomial");
  auto w = cartan_weight_C(C.n(), f);
  if (!w) return w;
  // elements acting on f by a scalar form a subalgebra, and a root vector
  // can only act by zero, so Lie generators are enough
  for (auto &x : sp_generators(C))
    if (!act_linear(C, x, f).is_zero()) return std::nullopt;
  return w;
}

std::optional<WeightC> weight_of_C_lifted(const ParabolicContraction &C, const Poly &F,
                                          const Poly &prF) {
  if (prF.is_zero()) throw Error("weight of the zero polynomial");
  auto w = cartan_weight_C(C.n(), prF);
  if (!w) return w;
  for (auto &x : sp_generators(C))
    if (!project(ProjKind::C, C.n(), act_linear(C, x, F)).is_zero()) return std::nullopt;
  return w;
}

// ---- reports ---------------------------------------------------------------

std::string poly_summary(const Poly &f, std::size_t max_terms) {
  if (f.size() <= max_terms) return f.str();
  return "<" + std::to_string(f.size()) + " terms, degree " + std::to_string(f.total_degree()) +
         ">";
}

bool SuiteReport::ok() const {
  for (auto &i : identities)
    if (!i.equal) return false;
  for (auto &c : certificates)
    if (!c.verdict.ok) return false;
  return true;
}

void SuiteReport::identity(const std::string &name, const Poly &lhs, const Poly &rhs) {
  identities.push_back({name, poly_summary(lhs), poly_summary(rhs), lhs == rhs});
}

void SuiteReport::certify(const std::string &name, Verdict v) {
  certificates.push_back({name, std::move(v)});
}

namespace {

// beyond this many terms the sp action is applied to the gl preimage
constexpr std::size_t kDirectActionLimit = 200000;

Verdict pass() { return {true, ""}; }
Verdict fail(std::string why) { return {false, std::move(why)}; }

std::string weight_str(const std::vector<Rational> &w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + rational_to_string(w[i]);
  return s + ")";
}

long total_degree(const Poly &f) { return f.is_zero() ? 0 : long(f.total_degree()); }

// antidiagonal generator of degree exactly 1, else any generator of degree 1
std::optional<Gen> antidiagonal_witness(const Poly &f, int n) {
  for (Gen g : f.support()) {
    if (!is_entry(g) || row(g) + col(g) != n + 1) continue;
    auto d = partial_degree(f, [g](Gen x) { return x == g; });
    if (d && *d == 1) return g;
  }
  return std::nullopt;
}

}  // namespace

// ---- type A ----------------------------------------------------------------

Verdict bullet_commutes(ProjKind kind, const ParabolicContraction &C, int m, Budget &budget) {
  int n = C.n();
  Poly f = F(C, m, budget);
  Poly pf = project(kind, n, f);
  Poly pb = project(kind, n, bullet_F(C, m, budget));
  if (kind == ProjKind::C && m % 2) {
    if (!pf.is_zero()) return fail("pr(F_" + std::to_string(m) + ") != 0");
    if (!pb.is_zero()) return fail("pr(F_" + std::to_string(m) + "^bullet) != 0");
    return pass();
  }
  Poly lhs = pf.is_zero() ? Poly() : bullet(C, pf);
  if (lhs != pb) return fail("pr(F_" + std::to_string(m) + ")^bullet != pr(F_m^bullet)");
  return pass();
}

TypeAFamily typeA_family(const ParabolicContraction &C, Budget &budget) {
  TypeAFamily out;
  int n = C.n();
  std::vector<WeightFamily> fams;
  out.weights = pass();
  for (int m = 1; m <= n; ++m) {
    auto fs = factor_polys(C, m, budget);
    WeightFamily fam;
    for (int t = 1; t <= int(fs.size()); ++t) {
      if (m == 1) continue;  // pr(F_1) = 0
      Poly p = project(ProjKind::A, n, fs[t - 1]);
      WeightVector lam = weight_formula(C, m, t);
      if (p.is_zero()) {
        out.weights = fail("pr(F_{" + std::to_string(m) + "," + std::to_string(t) + "}) = 0");
        continue;
      }
      auto w = weight_of(C, p);
      if (!w || *w != lam)
        out.weights = fail("weight of pr(F_{" + std::to_string(m) + "," + std::to_string(t) +
                           "}) is " + (w ? weight_str(*w) : "undefined") + ", expected " +
                           weight_str(lam));
      out.members.push_back({p, lam, m, t});
      fam.push_back({lam, 1});
    }
    if (!fam.empty()) fams.push_back(fam);
  }
  out.independence = independence_certificate(fams);
  return out;
}

// ---- type C ----------------------------------------------------------------

bool counterexample_detector(const ParabolicContraction &C) {
  auto M2 = C.M(2);
  std::set<int> S(M2.begin(), M2.end());
  for (int m : M2)
    if (m % 2 && S.count(2 * m - 2)) return true;
  return false;
}

TypeCFamily typeC_family(const ParabolicContraction &C, Budget &budget, bool with_index,
                         std::uint64_t seed) {
  if (!C.is_symmetric() || C.s() % 2)
    throw Error("type C family needs symmetric blocks and s even");
  TypeCFamily out;
  SuiteReport &rep = out.report;
  rep.suite = "typeC";
  int n = C.n(), np = n / 2, sp = C.s() / 2;
  auto pr = [n](const Poly &f) { return project(ProjKind::C, n, f); };

  std::vector<WeightFamily> fams;
  Verdict weights = pass(), pairing = pass(), wit = pass();
  out.cprime.assign(np, 0);
  for (int mp = 1; mp <= np; ++mp) {
    int m = 2 * mp;
    std::string tag = "m'=" + std::to_string(mp);
    try {
      Budget local{budget.limit, 0};
      std::vector<TypeCMember> mem;
      std::vector<Poly> lifts;  // gl preimage of each member
      Poly bf = bullet_F(C, m, local), top = pr(bf);
      if (C.in_M1(m)) {
        int r = C.r(m), rp = r / 2;
        auto fs = factor_polys(C, m, local);
        Poly prod = 1;
        for (auto &f : fs) prod *= f;
        auto cm = proportional(bf, prod);
        if (!cm) throw Error("F_m^bullet is not proportional to the factor product");
        Rational cp = *cm;
        for (int t = 1; t < rp; ++t)
          if (total_degree(fs[t - 1]) % 2) cp = -cp;
        out.cprime[mp - 1] = cp;
        for (int t = 1; t <= rp + 1; ++t) {
          TypeCMember x;
          x.mp = mp;
          x.t = t;
          lifts.push_back(fs[t <= rp ? t - 1 : r - 1]);
          x.poly = pr(lifts.back());
          x.multiplicity = t < rp ? 2 : 1;
          if (t < rp)
            x.weight = w_block_C(C, C.kappa(C.level(m))[t - 1]) -
                       w_block_C(C, C.kappa(C.level(m))[t]);
          else if (t == rp)
            x.weight = Rational(2) * w_block_C(C, C.kappa(C.level(m))[rp - 1]);
          else
            x.weight = Rational(-2) * w_block_C(C, C.kappa(C.level(m))[0]);
          WeightC viaA = restrict_C(weight_formula(C, m, t <= rp ? t : r));
          if (viaA != x.weight)
            weights = fail(tag + " t=" + std::to_string(t) + ": closed form " +
                           weight_str(x.weight) + " vs restriction " + weight_str(viaA));
          mem.push_back(std::move(x));
        }
        for (int t = 1; t < rp; ++t) {
          Poly a = pr(fs[r - t - 1]), b = pr(fs[t - 1]);
          if (total_degree(fs[t - 1]) % 2) b = -b;
          if (a != b) pairing = fail(tag + " t=" + std::to_string(t));
        }
        Poly rhs = cp;
        for (auto &x : mem) rhs *= x.poly.pow(unsigned(x.multiplicity));
        rep.identity("pr(F_{2m'})^bullet = c' prod f_{m',t} " + tag, top, rhs);
      } else {
        TypeCMember x;
        x.mp = mp;
        x.t = 1;
        x.poly = top;
        lifts.push_back(bf);
        x.weight = WeightC(np);
        mem.push_back(std::move(x));
        out.cprime[mp - 1] = 1;
      }
      WeightFamily fam;
      for (std::size_t i = 0; i < mem.size(); ++i) {
        auto &x = mem[i];
        std::string name = tag + " t=" + std::to_string(x.t);
        if (x.poly.is_zero()) {
          weights = fail(name + ": f = 0");
          continue;
        }
        bool lift = x.poly.size() > kDirectActionLimit;
        if (lift) rep.notes.push_back(name + ": weight checked through the gl preimage");
        auto w = lift ? weight_of_C_lifted(C, lifts[i], x.poly) : weight_of_C(C, x.poly);
        if (!w || *w != x.weight)
          weights = fail(name + ": weight " + (w ? weight_str(*w) : "undefined") +
                         ", expected " + weight_str(x.weight));
        bool edge = C.in_M1(m) && x.t >= C.r(m) / 2;
        if (auto g = antidiagonal_witness(x.poly, n)) {
          x.witness = g;
          x.antidiagonal = true;
          if (!edge && C.in_M1(m)) wit = fail(name + ": unexpected antidiagonal witness");
        } else {
          if (edge) wit = fail(name + ": no antidiagonal witness");
          x.witness = verify_hypothesis_II(x.poly);
        }
        fam.push_back({x.weight, x.multiplicity});
      }
      fams.push_back(fam);
      for (auto &x : mem) out.members.push_back(std::move(x));
      budget.used += local.used;
    } catch (const BudgetExceeded &) {
      out.skipped.push_back(mp);
      rep.notes.push_back(tag + " skipped: budget exceeded");
    }
  }
  rep.certify("weights", weights);
  rep.certify("pairing", pairing);
  rep.certify("antidiagonal witnesses", wit);
  rep.certify("independence", independence_certificate(fams));
  long fam_size = long(out.members.size());
  if (out.skipped.empty())
    rep.certify("family size n'+s'", fam_size == np + sp
                                         ? pass()
                                         : fail(std::to_string(fam_size) + " members"));

  // (q^C)' = zero-diagonal part plus pr(h_l) for non-cut l < n'
  BracketFn br = [&C](const Poly &x, const Poly &y) { return bracket_linear(C, x, y); };
  std::vector<Poly> roots = root_basis(ProjKind::C, n), derived = roots, full = roots;
  for (int l = 1; l < np; ++l)
    if (!C.is_cut(l))
      derived.push_back(project(ProjKind::C, n, Poly::e(l, l) - Poly::e(l + 1, l + 1)));
  for (auto &h : cartan_C(n)) full.push_back(h);
  out.dim_qc = long(full.size());
  out.dim_qc_prime = long(derived.size());
  long want = long(n) * (n + 1) / 2 - sp;
  rep.certify("dim (q^C)'", out.dim_qc_prime == want
                                ? pass()
                                : fail(std::to_string(out.dim_qc_prime) + " != " +
                                       std::to_string(want)));
  if (with_index) {
    out.index_qc = index_estimate(full, br, 5, seed).index;
    out.index_qc_prime = index_estimate(derived, br, 5, seed).index;
    rep.certify("index q^C", out.index_qc == np ? pass()
                                                : fail(std::to_string(out.index_qc)));
    rep.certify("index (q^C)'", out.index_qc_prime == np + sp
                                    ? pass()
                                    : fail(std::to_string(out.index_qc_prime)));
  }
  return out;
}

// ---- sp_8 counterexample ----------------------------------------------------

SuiteReport counterexample_sp8(Budget &budget) {
  SuiteReport rep;
  rep.suite = "counterexample";
  ParabolicContraction C({1, 2, 2, 2, 1});
  const int n = 8;
  auto pr = [](const Poly &f) { return project(ProjKind::C, n, f); };
  auto fbul = [&](int m) { return pr(bullet_F(C, m, budget)); };

  Poly f1 = fbul(2), f2 = fbul(4), f3 = fbul(6), f4 = fbul(8);
  auto F8 = factor_polys(C, 8, budget);
  auto F5 = factor_polys(C, 5, budget);
  Poly f41 = pr(F8.at(0)), f83 = pr(F8.at(2));
  // pr(F_{8,2}) and f_{4,2} are only fixed up to a scalar: f_{4,2} is scaled
  // so that f_4 = f_{4,1}^2 f_{4,2}
  auto pair = proportional(pr(F8.at(1)), f41);
  rep.certify("pr(F_{8,2}) = +-pr(F_{8,1})", pair && (*pair == 1 || *pair == -1)
                                                  ? pass()
                                                  : fail("not a signed copy"));
  if (pair) rep.notes.push_back("pr(F_{8,2}) = " + rational_to_string(*pair) + " pr(F_{8,1})");
  rep.identity("f_{4,1} = pr(Delta_{45,23})", f41, pr(minor({4, 5}, {2, 3})));
  rep.identity("pr(F_{8,3}) = pr(Delta^bullet_{1238,1678})", f83,
               pr(bullet(C, minor({1, 2, 3, 8}, {1, 6, 7, 8}))));
  auto scale = proportional(f4, f41.pow(2) * f83);
  rep.certify("f_4 = c f_{4,1}^2 pr(F_{8,3}), c = +-1",
              scale && (*scale == 1 || *scale == -1) ? pass() : fail("not proportional"));
  Rational c = scale ? *scale : Rational(1);
  rep.notes.push_back("f_{4,2} = " + rational_to_string(c) + " pr(F_{8,3})");
  Poly f42 = c * f83;
  rep.identity("f_4 = f_{4,1}^2 f_{4,2}", f4, f41.pow(2) * f42);
  Poly f52 = pr(F5.at(1));
  rep.identity("pr(F_{5,2}) = e[1,8]", f52, Poly::e(1, 8));
  rep.identity("pr(F_{5,1}) = 0", pr(F5.at(0)), Poly());
  rep.identity("pr(F_5^bullet) = 0", fbul(5), Poly());
  Poly f5 = f4 - Rational(1, 4) * f2.pow(2);
  auto f51 = exact_divide(f5, f52);
  rep.certify("f_{5,2} divides f_5", f51 ? pass() : fail("no exact quotient"));
  Poly q51 = f51 ? *f51 : Poly();
  rep.identity("f_{5,1} f_{5,2} + 1/4 f_2^2 = f_{4,1}^2 f_{4,2}",
               q51 * f52 + Rational(1, 4) * f2.pow(2), f41.pow(2) * f42);

  WeightC v1 = varpi_C(4, 1), v3 = varpi_C(4, 3);
  WeightC l41 = v1 - v3, l42 = Rational(2) * (v3 - v1), l52 = Rational(2) * v1,
          l51 = Rational(-2) * v1, zero(4);
  Verdict wv = pass();
  auto expect = [&](const std::string &name, const Poly &f, const WeightC &w) {
    if (f.is_zero()) {
      wv = fail(name + " = 0");
      return;
    }
    auto got = weight_of_C(C, f);
    if (!got || *got != w)
      wv = fail(name + ": " + (got ? weight_str(*got) : "undefined") + " vs " + weight_str(w));
  };
  expect("f_1", f1, zero);
  expect("f_3", f3, zero);
  expect("f_{4,1}", f41, l41);
  expect("f_{4,2}", f42, l42);
  expect("f_{5,2}", f52, l52);
  expect("f_{5,1}", q51, l51);
  rep.certify("weights", wv);
  rep.certify("independence", independence_certificate({{{zero, 1}},
                                                        {{zero, 1}},
                                                        {{l41, 2}, {l42, 1}},
                                                        {{l51, 1}, {l52, 1}}}));
  rep.certify("detector", counterexample_detector(C) ? pass() : fail("not flagged"));
  rep.notes.push_back("relation: X_{5,1}*X_{5,2} + 1/4*X_2^2 - X_{4,1}^2*X_{4,2}");
  return rep;
}

// ---- D_6 probe ---------------------------------------------------------------

std::vector<Poly> degree1_semiinvariants(const std::vector<Poly> &candidates,
                                         const std::vector<Poly> &basis, const BracketFn &br) {
  std::vector<Poly> out;
  for (auto &e : candidates) {
    bool ok = !e.is_zero();
    for (std::size_t i = 0; ok && i < basis.size(); ++i) {
      Poly b = br(basis[i], e);
      if (!b.is_zero() && !proportional(b, e)) ok = false;
    }
    if (ok) out.push_back(e);
  }
  return out;
}

std::vector<Gen> degree1_criterion_gl(const ParabolicContraction &C) {
  std::vector<Gen> out;
  for (int k = 1; k < C.s(); ++k)
    if (C.block_size(k) == 1 && C.block_size(k + 1) == 1)
      out.push_back(entry(C.iota(k) + 1, C.iota(k)));
  if (C.block_size(1) == 1 && C.block_size(C.s()) == 1) out.push_back(entry(1, C.n()));
  std::sort(out.begin(), out.end());
  return out;
}

SuiteReport d6_suite(Budget &budget, std::uint64_t seed) {
  SuiteReport rep;
  rep.suite = "d6";
  ParabolicContraction C({1, 1, 4, 4, 1, 1});
  const int n = 12;
  auto pe = [](int u, int v) { return project_gen(ProjKind::D, n, entry(u, v)); };
  auto pr = [](const Poly &f) { return project(ProjKind::D, n, f); };

  Poly x1 = pe(2, 1), x2 = pe(1, 11), y1, y2, y12, cancel;
  for (int a = 3; a <= 6; ++a)
    for (int b = 7; b <= 10; ++b) {
      y1 += pe(a, 2) * pe(b, a) * pe(1, b);
      y2 += pe(a, 1) * pe(b, a) * pe(11, b);
      cancel += pe(1, b) * pe(b, a) * pe(a, 12);
    }
  y1 = Rational(2) * y1;
  y2 = Rational(2) * y2;
  for (int x = 3; x <= 10; ++x) y12 += pe(x, 2) * pe(11, x);
  y12 = Rational(2) * y12;

  // pr keeps the n^- degree of each monomial, so pr(F_4^bullet) != 0 means
  // it is the top component of pr(F_4)
  Poly p4 = pr(bullet_F(C, 4, budget));
  rep.certify("pr(F_4^bullet) != 0", p4.is_zero() ? fail("zero") : pass());
  Poly g4 = x1 * y1 + x2 * y2 + x1 * x2 * y12, f41 = x1 * y1, f42 = x2 * y2;
  Poly p8 = pr(bullet_F(C, 8, budget));
  rep.identity("pr(F_4)^bullet = x1 y1 + x2 y2 + x1 x2 y12", p4, g4);
  rep.identity("pr(F_8^bullet) = -(f4^(1) - f4^(2))^2", p8, -(f41 - f42).pow(2));
  // the same identities up to a scalar, with the scalar reported
  auto c4 = proportional(p4, g4);
  auto c8 = proportional(p8, (f41 - f42).pow(2));
  rep.certify("pr(F_4)^bullet = c (x1 y1 + x2 y2 + x1 x2 y12)", c4 ? pass() : fail("not proportional"));
  rep.certify("pr(F_8^bullet) = c (f4^(1) - f4^(2))^2", c8 ? pass() : fail("not proportional"));
  if (c4) rep.notes.push_back("pr(F_4)^bullet = " + rational_to_string(*c4) + " (x1 y1 + x2 y2 + x1 x2 y12)");
  if (c8) rep.notes.push_back("pr(F_8^bullet) = " + rational_to_string(*c8) + " (f4^(1) - f4^(2))^2");
  rep.identity("pr(F_6^bullet) = 0", pr(bullet_F(C, 6, budget)), Poly());
  rep.identity("sum pr(e[1,c]) pr(e[c,a]) pr(e[a,12]) = 0", cancel, Poly());

  // the n^- degree 4 part of pr(F_6) at a random point of so_12
  Verdict deg4 = fail("zero at every sampled point");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> U(-50, 50);
  for (int trial = 0; trial < 3 && !deg4.ok; ++trial) {
    std::map<Gen, Rational> raw;
    for (int u = 1; u <= n; ++u)
      for (int v = 1; v <= n; ++v) raw[entry(u, v)] = U(rng);
    LinearForm q;
    for (auto &[g, val] : raw) {
      Rational w = (val - raw[gamma_gen(g, n)]) / 2;
      if (w != 0) q[g] = Poly(w);
    }
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 1);
    Poly sum;
    for (auto &J : combinations(all, 6)) sum += minor_value(C, J, J, 4, q, budget);
    if (!sum.is_zero()) deg4 = pass();
  }
  rep.certify("deg pr(F_6) = 4 < deg F_6 = " + std::to_string(deg_nminus_F(C, 6)),
              deg_nminus_F(C, 6) == 5 ? deg4 : fail("deg F_6 != 5"));

  // degree-1 semi-invariants of the contraction of so_12
  std::vector<Poly> roots = root_basis(ProjKind::D, n), basis = roots;
  for (int j = 1; j <= n / 2; ++j) basis.push_back(pe(j, j));
  BracketFn br = [&C](const Poly &x, const Poly &y) { return bracket_linear(C, x, y); };
  auto found = degree1_semiinvariants(roots, basis, br);
  bool match = found.size() == 2;
  for (auto &want : {x1, x2}) {
    bool hit = false;
    for (auto &f : found) hit = hit || proportional(f, want).has_value();
    match = match && hit;
  }
  std::string got;
  for (auto &f : found) got += (got.empty() ? "" : "; ") + f.str();
  rep.certify("degree-1 semi-invariants are x1, x2", match ? pass() : fail(got));
  return rep;
}

}  // namespace parabolica
