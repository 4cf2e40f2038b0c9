#include "parabolica/poly.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace parabolica {

std::string gen_to_string(Gen g) {
  if (is_aux(g)) return "X" + std::to_string(aux_index(g));
  return "e[" + std::to_string(row(g)) + "," + std::to_string(col(g)) + "]";
}

std::string rational_to_string(const Rational &r) { return r.get_str(); }

// ---- Monomial ------------------------------------------------------------

Monomial Monomial::from_factors(std::vector<Factor> fs) {
  std::sort(fs.begin(), fs.end(),
            [](const Factor &a, const Factor &b) { return a.gen < b.gen; });
  Monomial m;
  for (const auto &f : fs) {
    if (f.exp == 0) continue;
    if (!m.f_.empty() && m.f_.back().gen == f.gen)
      m.f_.back().exp += f.exp;
    else
      m.f_.push_back(f);
  }
  return m;
}

Monomial Monomial::from_sorted_gens(const std::vector<Gen> &gs) {
  Monomial m;
  m.f_.reserve(gs.size());
  for (Gen g : gs) {
    if (!m.f_.empty() && m.f_.back().gen == g)
      ++m.f_.back().exp;
    else
      m.f_.push_back({g, 1});
  }
  return m;
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (const auto &f : f_) d += f.exp;
  return d;
}

std::uint32_t Monomial::degree_in(Gen g) const {
  for (const auto &f : f_)
    if (f.gen == g) return f.exp;
  return 0;
}

Monomial Monomial::operator*(const Monomial &o) const {
  Monomial r;
  r.f_.reserve(f_.size() + o.f_.size());
  std::size_t i = 0, j = 0;
  while (i < f_.size() && j < o.f_.size()) {
    if (f_[i].gen < o.f_[j].gen)
      r.f_.push_back(f_[i++]);
    else if (f_[i].gen > o.f_[j].gen)
      r.f_.push_back(o.f_[j++]);
    else {
      r.f_.push_back({f_[i].gen, f_[i].exp + o.f_[j].exp});
      ++i, ++j;
    }
  }
  for (; i < f_.size(); ++i) r.f_.push_back(f_[i]);
  for (; j < o.f_.size(); ++j) r.f_.push_back(o.f_[j]);
  return r;
}

std::optional<Monomial> Monomial::divide(const Monomial &o) const {
  Monomial r;
  std::size_t i = 0, j = 0;
  while (j < o.f_.size()) {
    if (i == f_.size() || f_[i].gen > o.f_[j].gen) return std::nullopt;
    if (f_[i].gen < o.f_[j].gen) {
      r.f_.push_back(f_[i++]);
      continue;
    }
    if (f_[i].exp < o.f_[j].exp) return std::nullopt;
    if (f_[i].exp > o.f_[j].exp) r.f_.push_back({f_[i].gen, f_[i].exp - o.f_[j].exp});
    ++i, ++j;
  }
  for (; i < f_.size(); ++i) r.f_.push_back(f_[i]);
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (const auto &f : f_) {
    h ^= (std::size_t(f.gen) << 8) ^ f.exp;
    h *= 0x100000001b3ull;
  }
  return h;
}

int compare(const Monomial &a, const Monomial &b) {
  auto da = a.degree(), db = b.degree();
  if (da != db) return da > db ? 1 : -1;
  const auto &fa = a.factors();
  const auto &fb = b.factors();
  std::size_t n = std::min(fa.size(), fb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (fa[i].gen != fb[i].gen) return fa[i].gen < fb[i].gen ? 1 : -1;
    if (fa[i].exp != fb[i].exp) return fa[i].exp > fb[i].exp ? 1 : -1;
  }
  return 0;
}

// ---- Poly ----------------------------------------------------------------

namespace {

bool term_before(const Term &a, const Term &b) {
  return compare(a.mono, b.mono) > 0;
}

}  // namespace

Poly::Poly(long c) {
  if (c != 0) t_.push_back({Monomial(), Rational(c)});
}

Poly::Poly(const Rational &c) {
  if (c != 0) t_.push_back({Monomial(), c});
  if (!t_.empty()) t_[0].coeff.canonicalize();
}

Poly Poly::term(Monomial m, Rational c) {
  Poly p;
  c.canonicalize();
  if (c != 0) p.t_.push_back({std::move(m), std::move(c)});
  return p;
}

Poly Poly::from_terms(std::vector<Term> ts) {
  for (auto &t : ts) t.coeff.canonicalize();
  std::sort(ts.begin(), ts.end(), term_before);
  Poly p;
  p.t_.reserve(ts.size());
  for (auto &t : ts) {
    if (!p.t_.empty() && p.t_.back().mono == t.mono)
      p.t_.back().coeff += t.coeff;
    else {
      if (!p.t_.empty() && p.t_.back().coeff == 0) p.t_.pop_back();
      p.t_.push_back(std::move(t));
    }
  }
  if (!p.t_.empty() && p.t_.back().coeff == 0) p.t_.pop_back();
  return p;
}

Poly Poly::from_distinct_terms(std::vector<Term> ts) {
  std::sort(ts.begin(), ts.end(), term_before);
  Poly p;
  p.t_ = std::move(ts);
  return p;
}

bool Poly::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_[0].mono.is_one());
}

Rational Poly::constant_term() const {
  if (!t_.empty() && t_.back().mono.is_one()) return t_.back().coeff;
  return 0;
}

std::uint32_t Poly::total_degree() const {
  return t_.empty() ? 0 : t_.front().mono.degree();
}

Poly Poly::operator+(const Poly &o) const {
  Poly r;
  r.t_.reserve(t_.size() + o.t_.size());
  std::size_t i = 0, j = 0;
  while (i < t_.size() && j < o.t_.size()) {
    int c = compare(t_[i].mono, o.t_[j].mono);
    if (c > 0)
      r.t_.push_back(t_[i++]);
    else if (c < 0)
      r.t_.push_back(o.t_[j++]);
    else {
      Rational s = t_[i].coeff + o.t_[j].coeff;
      if (s != 0) r.t_.push_back({t_[i].mono, s});
      ++i, ++j;
    }
  }
  for (; i < t_.size(); ++i) r.t_.push_back(t_[i]);
  for (; j < o.t_.size(); ++j) r.t_.push_back(o.t_[j]);
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto &t : r.t_) t.coeff = -t.coeff;
  return r;
}

Poly Poly::operator-(const Poly &o) const { return *this + (-o); }

Poly Poly::operator*(const Rational &c) const {
  if (c == 0) return Poly();
  Poly r = *this;
  for (auto &t : r.t_) t.coeff *= c;
  return r;
}

Poly operator*(const Rational &c, const Poly &p) { return p * c; }
Poly operator*(long c, const Poly &p) { return p * Rational(c); }

Poly Poly::operator*(const Poly &o) const {
  if (t_.empty() || o.t_.empty()) return Poly();
  const Poly &a = t_.size() >= o.t_.size() ? *this : o;
  const Poly &b = t_.size() >= o.t_.size() ? o : *this;
  if (b.t_.size() == 1) {
    // monomial orders are multiplicative: the order is preserved
    Poly r;
    r.t_.reserve(a.t_.size());
    for (const auto &t : a.t_)
      r.t_.push_back({t.mono * b.t_[0].mono, t.coeff * b.t_[0].coeff});
    return r;
  }
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.t_.size() * b.t_.size());
  for (const auto &x : a.t_)
    for (const auto &y : b.t_) {
      auto [it, fresh] = acc.try_emplace(x.mono * y.mono, 0);
      it->second += x.coeff * y.coeff;
    }
  std::vector<Term> ts;
  ts.reserve(acc.size());
  for (auto &[m, c] : acc)
    if (c != 0) ts.push_back({m, c});
  return from_distinct_terms(std::move(ts));
}

Poly Poly::pow(unsigned k) const {
  Poly r(1), b = *this;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

bool Poly::operator==(const Poly &o) const {
  if (t_.size() != o.t_.size()) return false;
  for (std::size_t i = 0; i < t_.size(); ++i)
    if (!(t_[i].mono == o.t_[i].mono) || t_[i].coeff != o.t_[i].coeff) return false;
  return true;
}

Poly Poly::substitute(const std::function<Poly(Gen)> &img) const {
  std::map<std::pair<Gen, std::uint32_t>, Poly> cache;
  auto power = [&](Gen g, std::uint32_t e) -> const Poly & {
    auto key = std::make_pair(g, e);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache.emplace(key, img(g).pow(e)).first->second;
  };
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  for (const auto &t : t_) {
    Poly part(t.coeff);
    for (const auto &f : t.mono.factors()) {
      const Poly &p = power(f.gen, f.exp);
      if (p.is_zero()) {
        part = Poly();
        break;
      }
      part = part * p;
    }
    for (auto &pt : part.t_) {
      auto [it, fresh] = acc.try_emplace(pt.mono, 0);
      it->second += pt.coeff;
    }
  }
  std::vector<Term> ts;
  ts.reserve(acc.size());
  for (auto &[m, c] : acc)
    if (c != 0) ts.push_back({m, c});
  return from_distinct_terms(std::move(ts));
}

Poly Poly::filter(const std::function<bool(const Monomial &)> &pred) const {
  Poly r;
  for (const auto &t : t_)
    if (pred(t.mono)) r.t_.push_back(t);
  return r;
}

std::vector<Gen> Poly::support() const {
  std::vector<Gen> gs;
  for (const auto &t : t_)
    for (const auto &f : t.mono.factors()) gs.push_back(f.gen);
  std::sort(gs.begin(), gs.end());
  gs.erase(std::unique(gs.begin(), gs.end()), gs.end());
  return gs;
}

std::string Poly::str() const {
  if (t_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto &t : t_) {
    bool neg = t.coeff < 0;
    Rational a = neg ? Rational(-t.coeff) : t.coeff;
    if (first)
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    first = false;
    std::string body;
    for (const auto &f : t.mono.factors())
      for (std::uint32_t k = 0; k < f.exp; ++k) {
        if (!body.empty()) body += "*";
        body += gen_to_string(f.gen);
      }
    if (body.empty())
      s += rational_to_string(a);
    else if (a == 1)
      s += body;
    else
      s += rational_to_string(a) + "*" + body;
  }
  return s;
}

// ---- parsing -------------------------------------------------------------

namespace {

struct Parser {
  const std::string &s;
  std::size_t i = 0;

  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool peek(char c) {
    ws();
    return i < s.size() && s[i] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++i;
  }
  [[noreturn]] void fail(const std::string &what) {
    throw ParseError("poly parse error at " + std::to_string(i) + ": " + what);
  }
  std::string digits() {
    ws();
    std::size_t b = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (b == i) fail("expected integer");
    return s.substr(b, i - b);
  }
  Gen gen() {
    ws();
    if (peek('e')) {
      ++i;
      expect('[');
      int p = std::stoi(digits());
      expect(',');
      int q = std::stoi(digits());
      expect(']');
      if (p < 1 || q < 1 || p > kMaxDim || q > kMaxDim) fail("entry index out of range");
      return entry(p, q);
    }
    if (peek('X')) {
      ++i;
      int l = std::stoi(digits());
      if (l < 1) fail("aux index must be >= 1");
      return aux(l);
    }
    fail("expected generator");
  }
  Term term() {
    ws();
    Rational c = 1;
    std::vector<Factor> fs;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      mpz_class num(digits()), den = 1;
      if (peek('/')) {
        ++i;
        den = mpz_class(digits());
        if (den == 0) fail("zero denominator");
      }
      c = Rational(num, den);
      c.canonicalize();
    } else {
      fs.push_back({gen(), 1});
    }
    while (peek('*')) {
      ++i;
      fs.push_back({gen(), 1});
    }
    return {Monomial::from_factors(std::move(fs)), c};
  }
};

}  // namespace

Poly parse_poly(const std::string &s) {
  Parser p{s};
  std::vector<Term> ts;
  bool neg = false;
  if (p.peek('-')) {
    neg = true;
    ++p.i;
  } else if (p.peek('+')) {
    ++p.i;
  }
  for (;;) {
    Term t = p.term();
    if (neg) t.coeff = -t.coeff;
    ts.push_back(std::move(t));
    if (p.peek('+'))
      neg = false;
    else if (p.peek('-'))
      neg = true;
    else
      break;
    ++p.i;
  }
  p.ws();
  if (p.i != s.size()) p.fail("trailing input");
  return Poly::from_terms(std::move(ts));
}

// ---- division, degrees, evaluation ---------------------------------------

std::optional<Poly> exact_divide(const Poly &f, const Poly &g) {
  if (g.is_zero()) throw DivisorZero();
  if (f.is_zero()) return Poly();
  const Term &lg = g.leading();
  if (g.size() == 1) {
    std::vector<Term> q;
    q.reserve(f.size());
    for (const auto &t : f.terms()) {
      auto m = t.mono.divide(lg.mono);
      if (!m) return std::nullopt;
      q.push_back({std::move(*m), t.coeff / lg.coeff});
    }
    return Poly::from_distinct_terms(std::move(q));
  }
  // if g | f then every remainder is a multiple of g, so its leading
  // monomial is divisible by lm(g); the first failure is conclusive
  std::vector<Term> q;
  Poly r = f;
  while (!r.is_zero()) {
    const Term &lt = r.leading();
    auto m = lt.mono.divide(lg.mono);
    if (!m) return std::nullopt;
    Rational c = lt.coeff / lg.coeff;
    Poly step = Poly::term(*m, c);
    q.push_back({std::move(*m), c});
    r = r - g * step;
  }
  return Poly::from_distinct_terms(std::move(q));
}

std::uint32_t monomial_degree_in(const Monomial &m, const GenPredicate &S) {
  std::uint32_t d = 0;
  for (const auto &f : m.factors())
    if (S(f.gen)) d += f.exp;
  return d;
}

std::optional<long> partial_degree(const Poly &f, const GenPredicate &S) {
  if (f.is_zero()) return std::nullopt;
  long d = 0;
  for (const auto &t : f.terms()) d = std::max<long>(d, monomial_degree_in(t.mono, S));
  return d;
}

std::vector<std::uint32_t> degree_profile(const Poly &f, const GenPredicate &S) {
  std::vector<std::uint32_t> v;
  for (const auto &t : f.terms()) v.push_back(monomial_degree_in(t.mono, S));
  std::sort(v.begin(), v.end());
  return v;
}

Poly component_of_degree(const Poly &f, const GenPredicate &S, long d) {
  return f.filter([&](const Monomial &m) { return long(monomial_degree_in(m, S)) == d; });
}

Poly evaluate(const Poly &f, const LinearForm &q) {
  return f.substitute([&](Gen g) -> Poly {
    if (is_aux(g)) return Poly::gen(g);
    auto it = q.find(g);
    return it == q.end() ? Poly() : it->second;
  });
}

std::optional<Rational> proportional(const Poly &f, const Poly &g) {
  if (f.is_zero() && g.is_zero()) return Rational(1);
  if (f.is_zero() || g.is_zero() || f.size() != g.size()) return std::nullopt;
  Rational c = f.leading().coeff / g.leading().coeff;
  if (f == g * c) return c;
  return std::nullopt;
}

}  // namespace parabolica
