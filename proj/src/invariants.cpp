#include "parabolica/invariants.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

namespace parabolica {

namespace {

// depth-first expansion of a minor, row by row; optionally keeps only the
// permutations with a prescribed number of n^- entries
struct MinorDfs {
  const ParabolicContraction *C;
  const std::vector<int> &rows, &cols;
  int d;
  Budget &budget;
  std::vector<int> rblk, cblk;
  std::vector<char> used;
  std::vector<Gen> cur;
  std::vector<Term> out;

  MinorDfs(const ParabolicContraction *c, const std::vector<int> &r, const std::vector<int> &cl,
           int dd, Budget &b)
      : C(c), rows(r), cols(cl), d(dd), budget(b), used(cl.size(), 0) {
    for (int x : rows) rblk.push_back(C ? C->block_of(x) : 0);
    for (int x : cols) cblk.push_back(C ? C->block_of(x) : 0);
  }

  void run(std::size_t r, int cnt, int inv) {
    budget.charge();
    std::size_t k = rows.size();
    if (r == k) {
      if (d < 0 || cnt == d) out.push_back({Monomial::from_sorted_gens(cur), inv & 1 ? -1 : 1});
      return;
    }
    if (d >= 0) {
      // a remaining row can still land in n^- only above the lowest free column block
      int minc = INT_MAX;
      for (std::size_t c = 0; c < k; ++c)
        if (!used[c]) minc = std::min(minc, cblk[c]);
      int possible = 0;
      for (std::size_t rr = r; rr < k; ++rr)
        if (rblk[rr] > minc) ++possible;
      if (cnt + possible < d) return;
    }
    int above = 0;  // used columns to the right of c
    for (std::size_t c = 0; c < k; ++c)
      if (used[c]) ++above;
    for (std::size_t c = 0; c < k; ++c) {
      if (used[c]) {
        --above;
        continue;
      }
      int nc = cnt + (C && rblk[r] > cblk[c] ? 1 : 0);
      if (d >= 0 && nc > d) continue;
      used[c] = 1;
      cur.push_back(entry(rows[r], cols[c]));
      run(r + 1, nc, inv + above);
      cur.pop_back();
      used[c] = 0;
    }
  }
};

Poly expand(const ParabolicContraction *C, const std::vector<int> &J, const std::vector<int> &J2,
            int d, Budget &budget) {
  if (J.size() != J2.size()) throw SizeMismatch("minor of a non-square index pair");
  MinorDfs dfs(C, J, J2, d, budget);
  dfs.run(0, 0, 0);
  return Poly::from_distinct_terms(std::move(dfs.out));
}

// terms of polynomials with pairwise disjoint supports
Poly disjoint_sum(std::vector<Poly> &parts) {
  std::vector<Term> ts;
  for (auto &p : parts) ts.insert(ts.end(), p.terms().begin(), p.terms().end());
  return Poly::from_distinct_terms(std::move(ts));
}

bool nminus_only(const ParabolicContraction &C, const Poly &f) {
  for (Gen g : f.support())
    if (!C.in_nminus(g)) return false;
  return true;
}

}  // namespace

Poly minor(const std::vector<int> &J, const std::vector<int> &J2) {
  Budget b;
  b.limit = UINT64_MAX;
  return expand(nullptr, J, J2, -1, b);
}

Poly minor_restricted(const ParabolicContraction &C, const std::vector<int> &J,
                      const std::vector<int> &J2, int d, Budget &budget) {
  return expand(&C, J, J2, d, budget);
}

Poly F(const ParabolicContraction &C, int m, Budget &budget) {
  int n = C.n();
  if (m < 1 || m > n) throw IndexOutOfRange("m outside [1,n]");
  // guard: C(n,m) * m! permutations
  long double cost = 1;
  for (int k = 0; k < m; ++k) cost *= (n - k);
  if (cost > (long double)(budget.limit - std::min(budget.limit, budget.used)))
    throw BudgetExceeded("F_" + std::to_string(m) + " needs about " +
                         std::to_string((unsigned long long)cost) + " permutation visits");
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 1);
  std::vector<Poly> parts;
  for (const auto &J : combinations(all, m)) parts.push_back(expand(&C, J, J, -1, budget));
  return disjoint_sum(parts);
}

Poly bullet(const ParabolicContraction &C, const Poly &f) {
  auto d = partial_degree(f, C.nminus());
  if (!d) return Poly();
  return component_of_degree(f, C.nminus(), *d);
}

int deg_nminus_F(const ParabolicContraction &C, int m) { return m - C.level(m); }

Poly bullet_F(const ParabolicContraction &C, int m, Budget &budget) {
  int d = deg_nminus_F(C, m);
  std::vector<Poly> parts;
  // deg Delta_J = |J| - max_k |J cap I_k|, so only J in jcal reach d
  for (const auto &J : jcal(C, m)) parts.push_back(expand(&C, J, J, d, budget));
  return disjoint_sum(parts);
}

void factor_pieces(const ParabolicContraction &C, int m, int t, const PieceFn &fn) {
  int i = C.level(m), s = C.s();
  if (!C.in_M1(m)) {
    if (t != 1) throw IndexOutOfRange("factor index outside [1,r_m]");
    for (const auto &J : jcal(C, m)) fn(J, J, m - i);
    return;
  }
  auto kap = C.kappa(i);
  int r = int(kap.size());
  if (t < 1 || t > r) throw IndexOutOfRange("factor index outside [1,r_m]");
  // blocks contributing rows / columns, in increasing order
  std::vector<int> rb, cb;
  if (t < r) {
    for (int k = kap[t - 1] + 1; k <= kap[t]; ++k) rb.push_back(k);
    for (int k = kap[t - 1]; k <= kap[t] - 1; ++k) cb.push_back(k);
  } else {
    for (int k = 1; k <= s; ++k) {
      if (k <= kap[0] || k > kap[r - 1]) rb.push_back(k);
      if (k < kap[0] || k >= kap[r - 1]) cb.push_back(k);
    }
  }
  std::vector<int> blocks;
  std::set_union(rb.begin(), rb.end(), cb.begin(), cb.end(), std::back_inserter(blocks));
  // J_k ranges over min(i,i_k)-subsets of I_k (all of I_k when k is in kappa)
  std::vector<std::vector<std::vector<int>>> opts;
  for (int k : blocks) opts.push_back(combinations(C.interval(k), std::min(i, C.block_size(k))));
  std::vector<std::size_t> pick(blocks.size(), 0);
  for (;;) {
    std::vector<int> R, Cc;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const auto &Jk = opts[b][pick[b]];
      if (std::binary_search(rb.begin(), rb.end(), blocks[b])) R.insert(R.end(), Jk.begin(), Jk.end());
      if (std::binary_search(cb.begin(), cb.end(), blocks[b])) Cc.insert(Cc.end(), Jk.begin(), Jk.end());
    }
    // t < r: every entry in n^-; t = r: the top degree |J^(r)| - i
    fn(R, Cc, t < r ? int(R.size()) : int(R.size()) - i);
    std::size_t b = 0;
    while (b < blocks.size() && ++pick[b] == opts[b].size()) pick[b++] = 0;
    if (b == blocks.size()) break;
  }
}

std::vector<Poly> factor_polys(const ParabolicContraction &C, int m, Budget &budget) {
  std::vector<Poly> out;
  for (int t = 1; t <= C.r(m); ++t) {
    std::vector<Poly> parts;
    factor_pieces(C, m, t, [&](const std::vector<int> &R, const std::vector<int> &Cc, int d) {
      parts.push_back(expand(&C, R, Cc, d, budget));
    });
    out.push_back(disjoint_sum(parts));
  }
  return out;
}

Poly minor_value(const ParabolicContraction &C, const std::vector<int> &R,
                 const std::vector<int> &Cc, int d, const LinearForm &q, Budget &budget) {
  if (R.size() != Cc.size()) throw SizeMismatch("minor of a non-square index pair");
  std::size_t k = R.size();
  std::vector<char> used(k, 0);
  // only entries with a nonzero image can contribute
  std::vector<std::vector<std::pair<std::size_t, const Poly *>>> cand(k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t c = 0; c < k; ++c) {
      auto it = q.find(entry(R[a], Cc[c]));
      if (it != q.end() && !it->second.is_zero()) cand[a].push_back({c, &it->second});
    }
  Poly total;
  std::function<void(std::size_t, int, int, const Poly &)> run = [&](std::size_t a, int cnt, int inv,
                                                                     const Poly &acc) {
    budget.charge();
    if (a == k) {
      if (d < 0 || cnt == d) total += inv & 1 ? -acc : acc;
      return;
    }
    for (auto [c, img] : cand[a]) {
      if (used[c]) continue;
      int nc = cnt + (C.block_of(R[a]) > C.block_of(Cc[c]) ? 1 : 0);
      if (d >= 0 && nc > d) continue;
      int above = 0;
      for (std::size_t x = c + 1; x < k; ++x) above += used[x];
      used[c] = 1;
      run(a + 1, nc, inv + above, acc * *img);
      used[c] = 0;
    }
  };
  run(0, 0, 0, Poly(1));
  return total;
}

Poly bullet_F_value(const ParabolicContraction &C, int m, const LinearForm &q, Budget &budget) {
  Poly v;
  for (const auto &J : jcal(C, m)) v += minor_value(C, J, J, deg_nminus_F(C, m), q, budget);
  return v;
}

std::vector<Poly> factor_values(const ParabolicContraction &C, int m, const LinearForm &q,
                                Budget &budget) {
  std::vector<Poly> out;
  for (int t = 1; t <= C.r(m); ++t) {
    Poly v;
    factor_pieces(C, m, t, [&](const std::vector<int> &R, const std::vector<int> &Cc, int d) {
      v += minor_value(C, R, Cc, d, q, budget);
    });
    out.push_back(v);
  }
  return out;
}

WeightVector weight_formula(const ParabolicContraction &C, int m, int t) {
  if (!C.in_M1(m)) return WeightVector(C.n());
  auto kap = C.kappa(C.level(m));
  int r = int(kap.size());
  if (t < 1 || t > r) throw IndexOutOfRange("factor index outside [1,r_m]");
  if (t < r) return w_block(C, kap[t - 1]) - w_block(C, kap[t]);
  return w_block(C, kap[r - 1]) - w_block(C, kap[0]);
}

FactorizationCertificate factor_components(const ParabolicContraction &C, int m, Budget &budget,
                                           bool check_weights) {
  FactorizationCertificate cert;
  cert.m = m;
  auto fac = factor_polys(C, m, budget);
  int r = int(fac.size());
  Poly top = C.in_M1(m) ? bullet_F(C, m, budget) : fac[0];
  Poly prod(1);
  for (const auto &f : fac) prod *= f;
  auto fail = [&](std::string why) {
    if (cert.failure.empty()) cert.failure = std::move(why);
  };
  if (prod.is_zero()) {
    fail("a factor vanishes");
  } else {
    auto q = exact_divide(top, prod);
    if (!q || !q->is_constant() || q->is_zero())
      fail("F_m^bullet is not a constant multiple of the factor product");
    else {
      cert.c_m = q->constant_term();
      if (cert.c_m != 1 && cert.c_m != -1) fail("c_m = " + rational_to_string(cert.c_m) + " is not a sign");
    }
  }
  WeightVector total(C.n());
  for (int t = 1; t <= r; ++t) {
    SemiInvariant si{fac[t - 1], weight_formula(C, m, t), m, t};
    total = total + si.weight;
    if (t < r && !nminus_only(C, si.poly)) fail("F_{m," + std::to_string(t) + "} leaves n^-");
    if (check_weights && !si.poly.is_zero()) {
      auto w = weight_of(C, si.poly);
      if (!w)
        fail("F_{m," + std::to_string(t) + "} is not a semi-invariant");
      else if (*w != si.weight)
        fail("weight of F_{m," + std::to_string(t) + "} differs from the formula");
    }
    cert.factors.push_back(std::move(si));
  }
  if (!is_zero(total)) fail("factor weights do not sum to zero");
  cert.verified = cert.failure.empty();
  return cert;
}

Verdict independence_certificate(const std::vector<WeightFamily> &families) {
  Matrix all;
  long sum = 0;
  for (std::size_t f = 0; f < families.size(); ++f) {
    const auto &fam = families[f];
    Matrix rows;
    long g = 0;
    for (const auto &[w, mult] : fam) {
      rows.push_back(w);
      g = std::gcd(g, mult);
    }
    long rk = rank(rows);
    if (rk != long(fam.size()) - 1)
      return {false, "rank: family " + std::to_string(f) + " has weight rank " + std::to_string(rk) +
                         ", expected " + std::to_string(long(fam.size()) - 1)};
    // the one relation must be the one carried by the multiplicities
    WeightVector rel(fam.empty() ? 0 : fam[0].first.size());
    for (const auto &[w, mult] : fam) rel = rel + Rational(mult) * w;
    if (!is_zero(rel))
      return {false, "rank: family " + std::to_string(f) +
                         " has a relation other than the multiplicity-weighted sum"};
    if (g != 1) return {false, "multiplicities of family " + std::to_string(f) + " are not coprime"};
    sum += rk;
    all.insert(all.end(), rows.begin(), rows.end());
  }
  if (rank(all) != sum) return {false, "weight spans are not in direct sum"};
  return {true, ""};
}

HLambdaResult h_lambda_extraction(const ParabolicContraction &C, int m, Budget &budget) {
  HLambdaResult res;
  int i = C.level(m);
  if (!C.in_M1(m) || i >= C.imax()) {
    res.verdict = {false, "m must be m_i in M_1 with i < i_max"};
    return res;
  }
  GenPredicate diag = [](Gen g) { return is_entry(g) && row(g) == col(g); };
  Poly top = bullet_F(C, m + 1, budget);
  auto dh = partial_degree(top, diag);
  if (!dh || *dh != 1) {
    res.verdict = {false, "deg_h F_{m+1}^bullet is not 1"};
    return res;
  }
  Poly lhs = component_of_degree(top, diag, 1);
  // span of the Cartan part of q_Lambda
  RowSpace cartan;
  for (const auto &b : q_lambda_basis(C)) {
    auto v = linear_coords(b);
    if (std::all_of(v.begin(), v.end(), [](auto &kv) { return row(kv.first) == col(kv.first); }))
      cartan.add(v);
  }
  Poly rhs;
  for (const auto &J : jcal(C, m)) {
    Poly dj = expand(&C, J, J, m - i, budget);
    if (partial_degree(dj, diag).value_or(0) > 0) {
      res.verdict = {false, "Delta_J^bullet has a diagonal entry"};
      return res;
    }
    Poly h;
    for (int l = 1; l <= C.n(); ++l)
      if (!std::binary_search(J.begin(), J.end(), l)) h += Poly::e(l, l);
    rhs += h * dj;
    if (std::find(res.cartan.begin(), res.cartan.end(), h) == res.cartan.end()) {
      // the block sums of the coefficients are fixed modulo q'
      for (int k = 1; k <= C.s(); ++k) {
        int cnt = 0;
        for (int l : C.interval(k))
          if (!std::binary_search(J.begin(), J.end(), l)) ++cnt;
        if (cnt != std::max(C.block_size(k) - i, 0)) {
          res.verdict = {false, "Cartan coefficient has the wrong block sum"};
          return res;
        }
      }
      if (!cartan.contains(linear_coords(h))) {
        res.verdict = {false, "Cartan coefficient is outside q_Lambda"};
        return res;
      }
      res.cartan.push_back(h);
    }
  }
  if (lhs != rhs) {
    res.verdict = {false, "C_{m+1} differs from the sum over J(m)"};
    return res;
  }
  res.verdict = {true, ""};
  return res;
}

}  // namespace parabolica
