// Standard parabolic contractions q = p x| n^- of gl_n: block combinatorics,
// the contracted bracket, the adjoint action on Sym(q) and index estimates.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "parabolica/linalg.hpp"
#include "parabolica/poly.hpp"

namespace parabolica {

// budget on enumeration steps, shared by the expensive constructions
struct Budget {
  std::uint64_t limit = 10'000'000;
  std::uint64_t used = 0;
  void charge(std::uint64_t k = 1) {
    used += k;
    if (used > limit)
      throw BudgetExceeded("term budget of " + std::to_string(limit) + " exceeded");
  }
};

enum class Kind { GL, SL, SP };

struct Descriptor {
  Kind kind = Kind::GL;
  std::vector<int> blocks;
};

// "gl:4,1,4,2,1"; sp requires palindromic blocks
Descriptor parse_descriptor(const std::string &s);
std::string kind_name(Kind k);

using WeightVector = std::vector<Rational>;  // value on e[j,j], j = 1..n

class ParabolicContraction {
public:
  explicit ParabolicContraction(std::vector<int> blocks);

  int n() const { return n_; }
  int s() const { return int(blocks_.size()); }
  const std::vector<int> &blocks() const { return blocks_; }
  int block_size(int k) const { return blocks_.at(k - 1); }  // i_k, k = 1..s
  int iota(int k) const { return iota_.at(k); }              // k = 0..s
  int block_of(int x) const;                                 // k(x)
  std::vector<int> interval(int k) const;                    // I_k
  int imax() const { return imax_; }
  int rho(int i) const;
  int m_of(int i) const;                     // m_i, i = 0..imax
  std::vector<int> kappa(int i) const;       // {k : i_k = i}
  std::vector<int> K(int i) const;           // {k : i_k >= i}
  std::vector<int> Iset() const;             // {i : rho_i >= 1}
  std::vector<int> M(int j) const;           // {m_i : rho_i >= j}
  int p() const { return int(Iset().size()); }
  // the unique i with m_{i-1} < m <= m_i
  int level(int m) const;
  bool in_M1(int m) const { return m == m_of(level(m)) && rho(level(m)) >= 1; }
  int r(int m) const { return in_M1(m) ? rho(level(m)) : 1; }
  bool is_cut(int l) const;  // l = iota_k for some k

  bool in_nminus(int p, int q) const;
  bool in_nminus(Gen g) const { return is_entry(g) && in_nminus(row(g), col(g)); }
  GenPredicate nminus() const {
    return [this](Gen g) { return in_nminus(g); };
  }
  bool is_symmetric() const;

private:
  int n_;
  std::vector<int> blocks_, iota_, blk_;
  int imax_;
};

enum class Membership { InP, InNminus };
Membership membership(const ParabolicContraction &C, int p, int q);

// [a,b] in q for matrix-entry generators
Poly bracket(const ParabolicContraction &C, Gen a, Gen b);
// bilinear extension to degree-1 polynomials
Poly bracket_linear(const ParabolicContraction &C, const Poly &x, const Poly &y);
// derivation extension of ad(x)
Poly act(const ParabolicContraction &C, Gen x, const Poly &f);
Poly act_linear(const ParabolicContraction &C, const Poly &x, const Poly &f);

// weight of a semi-invariant, nullopt when f is not one
std::optional<WeightVector> weight_of(const ParabolicContraction &C, const Poly &f);

// fundamental weights and block weights on the diagonal basis
WeightVector varpi(int n, int l);
WeightVector w_block(const ParabolicContraction &C, int k);
WeightVector operator+(const WeightVector &a, const WeightVector &b);
WeightVector operator-(const WeightVector &a, const WeightVector &b);
WeightVector operator*(const Rational &c, const WeightVector &a);
bool is_zero(const WeightVector &w);

// all k-subsets of pool, in lexicographic order
std::vector<std::vector<int>> combinations(const std::vector<int> &pool, int k);
std::vector<std::vector<int>> jcal(const ParabolicContraction &C, int m);

std::vector<Poly> full_basis(const ParabolicContraction &C);
std::vector<Poly> q_lambda_basis(const ParabolicContraction &C);

using BracketFn = std::function<Poly(const Poly &, const Poly &)>;

struct IndexResult {
  long index = 0;
  std::vector<long> trials;  // kernel dimension per trial
  bool retried = false;
};

// min over seeded random functionals of dim - rank f([x_i,x_j]);
// throws Error when the basis is not closed under the bracket
IndexResult index_estimate(const std::vector<Poly> &basis, const BracketFn &br,
                           int trials = 5, std::uint64_t seed = 1);

}  // namespace parabolica
