#include "parabolica/contraction.hpp"

#include <algorithm>
#include <iostream>
#include <random>
#include <sstream>
#include <unordered_map>

namespace parabolica {

Descriptor parse_descriptor(const std::string &s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw ParseError("descriptor needs a type prefix: " + s);
  Descriptor d;
  std::string kind = s.substr(0, colon);
  if (kind == "gl")
    d.kind = Kind::GL;
  else if (kind == "sl")
    d.kind = Kind::SL;
  else if (kind == "sp")
    d.kind = Kind::SP;
  else
    throw ParseError("unknown descriptor prefix '" + kind + "'");
  std::stringstream ss(s.substr(colon + 1));
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad block size '" + tok + "' in " + s);
    int b = std::stoi(tok);
    if (b < 1) throw ParseError("block sizes must be positive");
    d.blocks.push_back(b);
  }
  if (d.blocks.size() < 2) throw ParseError("need at least two blocks");
  if (d.kind == Kind::SP) {
    auto rev = d.blocks;
    std::reverse(rev.begin(), rev.end());
    if (rev != d.blocks) throw ParseError("sp requires symmetric blocks");
  }
  return d;
}

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::GL: return "gl";
    case Kind::SL: return "sl";
    case Kind::SP: return "sp";
  }
  return "?";
}

// ---- block data ----------------------------------------------------------

ParabolicContraction::ParabolicContraction(std::vector<int> blocks)
    : blocks_(std::move(blocks)) {
  if (blocks_.size() < 2) throw Error("a parabolic contraction needs s >= 2 blocks");
  n_ = 0;
  iota_.push_back(0);
  blk_.push_back(0);
  imax_ = 0;
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    if (blocks_[k] < 1) throw Error("block sizes must be positive");
    n_ += blocks_[k];
    iota_.push_back(n_);
    for (int x = 0; x < blocks_[k]; ++x) blk_.push_back(int(k) + 1);
    imax_ = std::max(imax_, blocks_[k]);
  }
  if (n_ > kMaxDim) throw Error("n too large");
}

int ParabolicContraction::block_of(int x) const {
  if (x < 1 || x > n_) throw IndexOutOfRange("index " + std::to_string(x) + " outside [1,n]");
  return blk_[x];
}

std::vector<int> ParabolicContraction::interval(int k) const {
  std::vector<int> v;
  for (int x = iota(k - 1) + 1; x <= iota(k); ++x) v.push_back(x);
  return v;
}

int ParabolicContraction::rho(int i) const {
  return int(std::count(blocks_.begin(), blocks_.end(), i));
}

int ParabolicContraction::m_of(int i) const {
  int m = 0;
  for (int b : blocks_) m += std::min(i, b);
  return m;
}

std::vector<int> ParabolicContraction::kappa(int i) const {
  std::vector<int> v;
  for (int k = 1; k <= s(); ++k)
    if (block_size(k) == i) v.push_back(k);
  return v;
}

std::vector<int> ParabolicContraction::K(int i) const {
  std::vector<int> v;
  for (int k = 1; k <= s(); ++k)
    if (block_size(k) >= i) v.push_back(k);
  return v;
}

std::vector<int> ParabolicContraction::Iset() const {
  std::vector<int> v;
  for (int i = 1; i <= imax_; ++i)
    if (rho(i) >= 1) v.push_back(i);
  return v;
}

std::vector<int> ParabolicContraction::M(int j) const {
  std::vector<int> v;
  for (int i = 1; i <= imax_; ++i)
    if (rho(i) >= j) v.push_back(m_of(i));
  return v;
}

int ParabolicContraction::level(int m) const {
  if (m < 1 || m > n_) throw IndexOutOfRange("m = " + std::to_string(m) + " outside [1,n]");
  int i = 1;
  while (m_of(i) < m) ++i;
  return i;
}

bool ParabolicContraction::is_cut(int l) const {
  return std::find(iota_.begin(), iota_.end(), l) != iota_.end();
}

bool ParabolicContraction::in_nminus(int p, int q) const {
  return block_of(p) > block_of(q);
}

bool ParabolicContraction::is_symmetric() const {
  auto rev = blocks_;
  std::reverse(rev.begin(), rev.end());
  return rev == blocks_;
}

Membership membership(const ParabolicContraction &C, int p, int q) {
  return C.in_nminus(p, q) ? Membership::InNminus : Membership::InP;
}

// ---- bracket and action --------------------------------------------------

Poly bracket(const ParabolicContraction &C, Gen x, Gen y) {
  if (!is_entry(x) || !is_entry(y)) throw Error("bracket of a non-entry generator");
  int a = row(x), b = col(x), c = row(y), d = col(y);
  bool nx = C.in_nminus(a, b), ny = C.in_nminus(c, d);
  if (nx && ny) return Poly();
  Poly r;
  if (b == c) r += Poly::e(a, d);
  if (d == a) r -= Poly::e(c, b);
  if (nx || ny) r = r.filter([&](const Monomial &m) { return C.in_nminus(m.factors()[0].gen); });
  return r;
}

Poly bracket_linear(const ParabolicContraction &C, const Poly &x, const Poly &y) {
  Poly r;
  for (const auto &s : x.terms())
    for (const auto &t : y.terms()) {
      if (s.mono.degree() != 1 || t.mono.degree() != 1) throw Error("bracket of non-linear elements");
      Poly b = bracket(C, s.mono.factors()[0].gen, t.mono.factors()[0].gen);
      if (!b.is_zero()) r += b * (s.coeff * t.coeff);
    }
  return r;
}

Poly act(const ParabolicContraction &C, Gen x, const Poly &f) {
  std::unordered_map<Gen, Poly> cache;
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  for (const auto &t : f.terms()) {
    for (const auto &fac : t.mono.factors()) {
      auto it = cache.find(fac.gen);
      if (it == cache.end()) it = cache.emplace(fac.gen, bracket(C, x, fac.gen)).first;
      if (it->second.is_zero()) continue;
      Monomial rest = *t.mono.divide(Monomial(fac.gen));
      for (const auto &b : it->second.terms()) {
        auto [a, fresh] = acc.try_emplace(rest * b.mono, 0);
        a->second += t.coeff * fac.exp * b.coeff;
      }
    }
  }
  std::vector<Term> ts;
  for (auto &[m, c] : acc)
    if (c != 0) ts.push_back({m, c});
  return Poly::from_distinct_terms(std::move(ts));
}

Poly act_linear(const ParabolicContraction &C, const Poly &x, const Poly &f) {
  Poly r;
  for (const auto &s : x.terms()) {
    if (s.mono.degree() != 1) throw Error("acting element must be linear");
    r += act(C, s.mono.factors()[0].gen, f) * s.coeff;
  }
  return r;
}

std::optional<WeightVector> weight_of(const ParabolicContraction &C, const Poly &f) {
  if (f.is_zero()) throw Error("weight of the zero polynomial");
  int n = C.n();
  WeightVector w(n);
  for (int j = 1; j <= n; ++j) {
    Poly g = act(C, entry(j, j), f);
    if (g.is_zero()) continue;
    auto c = proportional(g, f);
    if (!c) return std::nullopt;
    w[j - 1] = *c;
  }
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v)
      if (u != v && !act(C, entry(u, v), f).is_zero()) return std::nullopt;
  return w;
}

// ---- weights -------------------------------------------------------------

WeightVector varpi(int n, int l) {
  WeightVector w(n);
  for (int j = 1; j <= n; ++j) w[j - 1] = Rational(j <= l ? 1 : 0) - Rational(l, n);
  for (auto &x : w) x.canonicalize();
  return w;
}

WeightVector w_block(const ParabolicContraction &C, int k) {
  return varpi(C.n(), C.iota(k - 1)) - varpi(C.n(), C.iota(k));
}

WeightVector operator+(const WeightVector &a, const WeightVector &b) {
  WeightVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

WeightVector operator-(const WeightVector &a, const WeightVector &b) {
  WeightVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

WeightVector operator*(const Rational &c, const WeightVector &a) {
  WeightVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

bool is_zero(const WeightVector &w) {
  return std::all_of(w.begin(), w.end(), [](const Rational &x) { return x == 0; });
}

// ---- subsets -------------------------------------------------------------

namespace {

void combos(const std::vector<int> &pool, int k, std::size_t from, std::vector<int> &cur,
            std::vector<std::vector<int>> &out) {
  if (int(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i + (k - cur.size()) <= pool.size(); ++i) {
    cur.push_back(pool[i]);
    combos(pool, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> combinations(const std::vector<int> &pool, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  if (k >= 0 && k <= int(pool.size())) combos(pool, k, 0, cur, out);
  return out;
}

std::vector<std::vector<int>> jcal(const ParabolicContraction &C, int m) {
  int i = C.level(m), s = C.s();
  std::vector<std::vector<int>> out;
  std::vector<int> prof(s);
  // block profiles j_k <= min(i,i_k) summing to m with max j_k = i
  std::function<void(int, int)> rec = [&](int k, int left) {
    if (k == s) {
      if (left != 0 || *std::max_element(prof.begin(), prof.end()) != i) return;
      std::vector<std::vector<int>> acc{{}};
      for (int b = 1; b <= s; ++b) {
        auto ch = combinations(C.interval(b), prof[b - 1]);
        std::vector<std::vector<int>> next;
        for (const auto &a : acc)
          for (const auto &c : ch) {
            auto v = a;
            v.insert(v.end(), c.begin(), c.end());
            next.push_back(std::move(v));
          }
        acc = std::move(next);
      }
      out.insert(out.end(), acc.begin(), acc.end());
      return;
    }
    int cap = std::min(i, C.block_size(k + 1));
    for (int j = 0; j <= std::min(cap, left); ++j) {
      prof[k] = j;
      rec(k + 1, left - j);
    }
  };
  rec(0, m);
  std::sort(out.begin(), out.end());
  return out;
}

// ---- bases and index -----------------------------------------------------

std::vector<Poly> full_basis(const ParabolicContraction &C) {
  std::vector<Poly> b;
  for (int u = 1; u <= C.n(); ++u)
    for (int v = 1; v <= C.n(); ++v) b.push_back(Poly::e(u, v));
  return b;
}

std::vector<Poly> q_lambda_basis(const ParabolicContraction &C) {
  int n = C.n();
  std::vector<Poly> b;
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v)
      if (u != v) b.push_back(Poly::e(u, v));
  for (int l = 1; l < n; ++l)
    if (!C.is_cut(l)) b.push_back(Poly::e(l, l) - Poly::e(l + 1, l + 1));
  for (int i : C.Iset()) {
    Poly id;
    for (int k : C.kappa(i))
      for (int l : C.interval(k)) id += Poly::e(l, l);
    b.push_back(id);
  }
  return b;
}

IndexResult index_estimate(const std::vector<Poly> &basis, const BracketFn &br, int trials,
                           std::uint64_t seed) {
  std::size_t d = basis.size();
  RowSpace span;
  for (const auto &x : basis)
    if (!span.add(linear_coords(x))) throw Error("basis vectors are linearly dependent");
  // brackets, checked for closure
  std::vector<std::vector<SparseVec>> B(d, std::vector<SparseVec>(d));
  std::vector<Gen> gens;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Poly b = br(basis[i], basis[j]);
      if (b.is_zero()) continue;
      B[i][j] = linear_coords(b);
      if (!span.contains(B[i][j]))
        throw Error("not closed under the bracket: [" + basis[i].str() + ", " + basis[j].str() +
                    "] = " + b.str());
      for (const auto &[g, c] : B[i][j]) gens.push_back(g);
    }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  auto batch = [&](std::uint64_t sd, std::vector<long> &out) {
    std::mt19937_64 rng(sd);
    std::uniform_int_distribution<long> dist(-10000, 10000);
    for (int t = 0; t < trials; ++t) {
      std::map<Gen, Rational> f;
      for (Gen g : gens) f[g] = dist(rng);
      Matrix M(d, std::vector<Rational>(d));
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
          Rational v = 0;
          for (const auto &[g, c] : B[i][j]) v += c * f[g];
          M[i][j] = v;
          M[j][i] = -v;
        }
      out.push_back(long(d) - rank(M));
    }
  };
  IndexResult res;
  batch(seed, res.trials);
  auto [lo, hi] = std::minmax_element(res.trials.begin(), res.trials.end());
  if (*lo != *hi) {
    std::cerr << "index_estimate: trials disagree (" << *lo << " vs " << *hi
              << "), retrying with seed " << seed + 1 << "\n";
    res.retried = true;
    batch(seed + 1, res.trials);
  }
  res.index = *std::min_element(res.trials.begin(), res.trials.end());
  return res;
}

}  // namespace parabolica
