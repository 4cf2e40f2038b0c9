// Exact sparse multivariate polynomials over Q in the generators e[p,q]
// (matrix entries) and X_l (auxiliary indeterminates).
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace parabolica {

using Rational = mpq_class;

// ---- errors --------------------------------------------------------------

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : Error {
  using Error::Error;
};
struct DivisorZero : Error {
  DivisorZero() : Error("division by the zero polynomial") {}
};
struct IndexOutOfRange : Error {
  using Error::Error;
};
struct BudgetExceeded : Error {
  using Error::Error;
};

// ---- generators ----------------------------------------------------------
// A generator is a 32-bit code.  Matrix entries e[p,q] use (p << 8) | q, so
// the natural integer order is the lexicographic order on (p,q); auxiliary
// X_l live above kAuxBase and therefore sort after every matrix entry.

using Gen = std::uint32_t;

inline constexpr Gen kAuxBase = 1u << 16;
inline constexpr int kMaxDim = 255;

inline Gen entry(int p, int q) { return (Gen(p) << 8) | Gen(q); }
inline Gen aux(int l) { return kAuxBase + Gen(l); }
inline bool is_entry(Gen g) { return g < kAuxBase; }
inline bool is_aux(Gen g) { return g >= kAuxBase; }
inline int row(Gen g) { return int(g >> 8); }
inline int col(Gen g) { return int(g & 0xff); }
inline int aux_index(Gen g) { return int(g - kAuxBase); }

std::string gen_to_string(Gen g);

// ---- monomials -----------------------------------------------------------

struct Factor {
  Gen gen;
  std::uint32_t exp;
  bool operator==(const Factor &) const = default;
};

class Monomial {
public:
  Monomial() = default;
  explicit Monomial(Gen g, std::uint32_t e = 1) {
    if (e) f_.push_back({g, e});
  }
  // factors need not be sorted or merged
  static Monomial from_factors(std::vector<Factor> fs);
  // product of distinct generators, already sorted ascending
  static Monomial from_sorted_gens(const std::vector<Gen> &gs);

  const std::vector<Factor> &factors() const { return f_; }
  bool is_one() const { return f_.empty(); }
  std::uint32_t degree() const;
  std::uint32_t degree_in(Gen g) const;

  Monomial operator*(const Monomial &o) const;
  // nullopt when o does not divide *this
  std::optional<Monomial> divide(const Monomial &o) const;

  bool operator==(const Monomial &o) const { return f_ == o.f_; }
  std::size_t hash() const;

private:
  std::vector<Factor> f_;  // sorted by gen, exponents >= 1
};

// graded lexicographic: total degree first, then the exponent vector in
// generator order (a larger exponent on an earlier generator wins)
int compare(const Monomial &a, const Monomial &b);

struct MonomialHash {
  std::size_t operator()(const Monomial &m) const { return m.hash(); }
};

// ---- polynomials ---------------------------------------------------------

struct Term {
  Monomial mono;
  Rational coeff;
};

using GenPredicate = std::function<bool(Gen)>;

class Poly {
public:
  Poly() = default;
  Poly(long c);  // NOLINT: constants convert implicitly
  Poly(const Rational &c);
  static Poly gen(Gen g) { return Poly::term(Monomial(g), 1); }
  static Poly e(int p, int q) { return gen(entry(p, q)); }
  static Poly X(int l) { return gen(aux(l)); }
  static Poly term(Monomial m, Rational c);
  // canonicalises: sorts, merges equal monomials, drops zeros
  static Poly from_terms(std::vector<Term> ts);
  // caller guarantees distinct monomials and nonzero coefficients
  static Poly from_distinct_terms(std::vector<Term> ts);

  const std::vector<Term> &terms() const { return t_; }
  std::size_t size() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  const Term &leading() const { return t_.front(); }
  std::uint32_t total_degree() const;

  Poly operator+(const Poly &o) const;
  Poly operator-(const Poly &o) const;
  Poly operator-() const;
  Poly operator*(const Poly &o) const;
  Poly operator*(const Rational &c) const;
  Poly &operator+=(const Poly &o) { return *this = *this + o; }
  Poly &operator-=(const Poly &o) { return *this = *this - o; }
  Poly &operator*=(const Poly &o) { return *this = *this * o; }
  Poly pow(unsigned k) const;

  bool operator==(const Poly &o) const;
  bool operator!=(const Poly &o) const { return !(*this == o); }

  // apply a ring morphism given on generators (memoised per call)
  Poly substitute(const std::function<Poly(Gen)> &img) const;
  // keep only terms satisfying pred
  Poly filter(const std::function<bool(const Monomial &)> &pred) const;
  std::vector<Gen> support() const;

  std::string str() const;

private:
  std::vector<Term> t_;  // strictly decreasing monomials, nonzero coeffs
};

Poly operator*(const Rational &c, const Poly &p);
Poly operator*(long c, const Poly &p);

Poly parse_poly(const std::string &s);

// returns h with f = g*h, or nullopt when g does not divide f
std::optional<Poly> exact_divide(const Poly &f, const Poly &g);

// nullopt stands for -infinity (f = 0)
std::optional<long> partial_degree(const Poly &f, const GenPredicate &S);
std::uint32_t monomial_degree_in(const Monomial &m, const GenPredicate &S);
// sorted multiset of per-monomial S-degrees
std::vector<std::uint32_t> degree_profile(const Poly &f, const GenPredicate &S);
Poly component_of_degree(const Poly &f, const GenPredicate &S, long d);

// a linear form: e[p,q] -> polynomial in the X_l; unmapped entries are 0
using LinearForm = std::map<Gen, Poly>;
Poly evaluate(const Poly &f, const LinearForm &q);

// c != 0 with f = c*g; (0,0) gives 1
std::optional<Rational> proportional(const Poly &f, const Poly &g);

std::string rational_to_string(const Rational &r);

}  // namespace parabolica
