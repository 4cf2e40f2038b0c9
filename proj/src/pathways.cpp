#include "parabolica/pathways.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "parabolica/classical.hpp"

namespace parabolica {

std::vector<int> Pathway::support() const {
  std::vector<int> s;
  for (int x = 1; x <= n_; ++x)
    for (int y = 1; y <= n_; ++y)
      if (has(x, y)) {
        s.push_back(x);
        s.push_back(y);
      }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::string Pathway::to_dot() const {
  std::ostringstream os;
  os << "digraph pathway {\n";
  for (int x = 1; x <= n_; ++x)
    for (int y = 1; y <= n_; ++y)
      if (has(x, y)) os << "  " << x << " -> " << y << " [label=\"" << weight(x, y).str() << "\"];\n";
  os << "}\n";
  return os.str();
}

Pathway graph_of_gl(const LinearForm &q, int n) {
  Pathway P(n);
  for (const auto &[g, img] : q) {
    if (!is_entry(g) || row(g) > n || col(g) > n) throw IndexOutOfRange("linear form outside gl_n");
    P.set(row(g), col(g), img);
  }
  return P;
}

Pathway graph_of_C(const LinearForm &q, int n) {
  if (n % 2) throw Error("odd dimension: no symplectic realisation");
  Pathway P(n);
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y) P.set(x, y, evaluate(project_gen(ProjKind::C, n, entry(x, y)), q));
  return P;
}

int DicyclicSubgraph::size() const {
  int s = 0;
  for (const auto &c : cycles) s += int(c.size());
  return s;
}

int DicyclicSubgraph::sign() const { return (size() - int(cycles.size())) % 2 ? -1 : 1; }

std::vector<DicyclicSubgraph> dicyclic_subgraphs(const Pathway &P, int m, Budget &budget) {
  int n = P.n();
  std::vector<DicyclicSubgraph> out;
  if (m < 1 || m > n) return out;
  std::vector<char> used(n + 1, 0);
  DicyclicSubgraph cur;
  int taken = 0;
  std::vector<int> path;
  std::function<void(int)> anchors;
  // grow the open path of the cycle anchored at path[0]; other vertices exceed it
  std::function<void()> extend = [&] {
    budget.charge();
    int a = path.front(), last = path.back();
    if (P.has(last, a)) {
      cur.cycles.push_back(path);
      taken += int(path.size());
      if (taken == m)
        out.push_back(cur);
      else
        anchors(a + 1);
      taken -= int(path.size());
      cur.cycles.pop_back();
    }
    if (taken + int(path.size()) >= m) return;
    for (int y = a + 1; y <= n; ++y)
      if (!used[y] && P.has(last, y)) {
        used[y] = 1;
        path.push_back(y);
        extend();
        path.pop_back();
        used[y] = 0;
      }
  };
  anchors = [&](int from) {
    for (int a = from; a <= n - (m - taken) + 1; ++a) {
      if (used[a]) continue;
      auto saved = path;
      path = {a};
      used[a] = 1;
      extend();
      used[a] = 0;
      path = std::move(saved);
    }
  };
  anchors(1);
  return out;
}

Poly subgraph_monomial(const DicyclicSubgraph &H, Flavor flavor, int n) {
  Poly r(1);
  for (const auto &c : H.cycles)
    for (std::size_t j = 0; j < c.size(); ++j) {
      Gen g = entry(c[j], c[(j + 1) % c.size()]);
      r *= flavor == Flavor::GL ? Poly::gen(g) : project_gen(ProjKind::C, n, g);
    }
  return r;
}

// ---- v-sequence and companion forms --------------------------------------

VSequence v_sequence(const ParabolicContraction &C, int xi) {
  int s = C.s();
  if (xi < 1 || xi > s) throw IndexOutOfRange("xi outside [1,s]");
  std::vector<int> next(s + 1);  // minimal unchosen element per block
  for (int k = 1; k <= s; ++k) next[k] = C.iota(k - 1) + 1;
  VSequence seq;
  int k = xi;
  for (int l = 0; l < C.n(); ++l) {
    while (next[k] > C.iota(k)) k = k % s + 1;
    seq.v.push_back(next[k]++);
    seq.t.push_back(k);
    k = k % s + 1;
  }
  return seq;
}

LinearForm companion_q(const ParabolicContraction &C, int xi) {
  auto v = v_sequence(C, xi).v;
  LinearForm q;
  for (std::size_t l = 0; l < v.size(); ++l) q[entry(v[0], v[l])] = Poly::X(int(l) + 1);
  for (std::size_t l = 0; l + 1 < v.size(); ++l) q[entry(v[l + 1], v[l])] = Poly(1);
  return q;
}

KWReport verify_hypothesis_I(const ParabolicContraction &C, int xi, Budget &budget, bool direct) {
  KWReport rep;
  int n = C.n();
  rep.v = v_sequence(C, xi).v;
  const auto &v = rep.v;
  LinearForm q = companion_q(C, xi);
  Pathway P = graph_of_gl(q, n);
  auto fail = [&](int m, const std::string &why) {
    rep.verdict = {false, "m=" + std::to_string(m) + ": " + why};
    return rep;
  };
  for (int m = 1; m <= n; ++m) {
    // the only m-dicyclic subgraph is v1 -> vm -> ... -> v2 -> v1
    auto subs = dicyclic_subgraphs(P, m, budget);
    if (subs.size() != 1) return fail(m, std::to_string(subs.size()) + " dicyclic subgraphs");
    Poly expect = Poly::e(v[0], v[m - 1]);
    for (int l = 0; l + 1 < m; ++l) expect *= Poly::e(v[l + 1], v[l]);
    Poly mono = subgraph_monomial(subs[0], Flavor::GL, n);
    if (mono != expect) return fail(m, "unexpected dicyclic subgraph");
    if (long(monomial_degree_in(mono.leading().mono, C.nminus())) != deg_nminus_F(C, m))
      return fail(m, "cycle monomial is not a monomial of F_m^bullet");
    Poly val = bullet_F_value(C, m, q, budget);
    auto c = proportional(val, Poly::X(m));
    if (!c) return fail(m, "F_m^bullet(q) = " + val.str() + " is not a multiple of X_m");
    if (*c != subs[0].sign()) return fail(m, "constant differs from the cycle sign");
    if (direct && evaluate(bullet_F(C, m, budget), q) != val)
      return fail(m, "direct evaluation disagrees");
    rep.constants.push_back(*c);
  }
  rep.verdict = {true, ""};
  return rep;
}

std::optional<Gen> verify_hypothesis_II(const Poly &f) {
  for (Gen g : f.support()) {
    std::uint32_t d = 0;
    for (const auto &t : f.terms()) d = std::max(d, t.mono.degree_in(g));
    if (d == 1) return g;
  }
  return std::nullopt;
}

SeparatingForm separating_q_gl(const ParabolicContraction &C, int m, int t, Budget &budget) {
  if (C.r(m) < 2) throw Error("m is not in M_2");
  int s = C.s();
  auto kap = C.kappa(C.level(m));
  int r = int(kap.size());
  if (t < 1 || t > r) throw IndexOutOfRange("factor index outside [1,r_m]");
  std::vector<int> range;
  if (t < r)
    for (int x = kap[t - 1] + 1; x <= kap[t]; ++x) range.push_back(x);
  else {
    for (int x = kap[r - 1] + 1; x <= s; ++x) range.push_back(x);
    for (int x = 1; x <= kap[0]; ++x) range.push_back(x);
  }
  std::sort(range.begin(), range.end());
  const Poly X = Poly::X(1);
  std::string last;
  for (int xi : range) {
    LinearForm q;
    for (const auto &[g, img] : companion_q(C, xi))
      q[g] = img.substitute([&](Gen a) { return aux_index(a) == m ? X : Poly(1); });
    bool ok = true;
    Rational c;
    for (int mu = 1; mu <= C.n() && ok; ++mu) {
      auto vals = factor_values(C, mu, q, budget);
      for (int tau = 1; tau <= int(vals.size()) && ok; ++tau) {
        if (mu == m && tau == t) {
          auto k = proportional(vals[tau - 1], X);
          if (k)
            c = *k;
          else
            ok = false;
        } else if (!vals[tau - 1].is_constant() || vals[tau - 1].is_zero()) {
          ok = false;
        }
        if (!ok)
          last = "xi=" + std::to_string(xi) + ": F_{" + std::to_string(mu) + "," + std::to_string(tau) +
                 "}(q) = " + vals[tau - 1].str();
      }
    }
    if (ok) return {q, xi, c};
  }
  throw VerificationFailed("no separating form for (m,t) = (" + std::to_string(m) + "," +
                           std::to_string(t) + "); last: " + last);
}

}  // namespace parabolica
