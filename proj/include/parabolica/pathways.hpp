// Weighted digraphs of linear forms, dicyclic subgraphs, the v-sequence
// process, companion forms and the executable hypotheses (I'), (II), (III').
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parabolica/invariants.hpp"

namespace parabolica {

struct VerificationFailed : Error {
  using Error::Error;
};

// complete digraph on [1,n]; weight(x,y) is the weight of the edge x -> y
class Pathway {
public:
  explicit Pathway(int n) : n_(n), w_(std::size_t(n) * n) {}
  int n() const { return n_; }
  const Poly &weight(int x, int y) const { return w_[idx(x, y)]; }
  void set(int x, int y, Poly p) { w_[idx(x, y)] = std::move(p); }
  bool has(int x, int y) const { return !weight(x, y).is_zero(); }
  std::vector<int> support() const;
  std::string to_dot() const;

private:
  std::size_t idx(int x, int y) const { return std::size_t(x - 1) * n_ + (y - 1); }
  int n_;
  std::vector<Poly> w_;
};

Pathway graph_of_gl(const LinearForm &q, int n);
// edge weights q(pr^C(e[x,y])) on the symplectic realisation
Pathway graph_of_C(const LinearForm &q, int n);

// each cycle starts at its minimal vertex, cycles sorted by that vertex;
// (c0,...,ck-1) stands for sigma(c_j) = c_{j+1}
struct DicyclicSubgraph {
  std::vector<std::vector<int>> cycles;
  int size() const;
  int sign() const;  // (-1)^(size - #cycles)
  bool operator==(const DicyclicSubgraph &) const = default;
};

std::vector<DicyclicSubgraph> dicyclic_subgraphs(const Pathway &P, int m, Budget &budget);

enum class Flavor { GL, C };
Poly subgraph_monomial(const DicyclicSubgraph &H, Flavor flavor, int n);

struct VSequence {
  std::vector<int> v;  // v_1..v_n
  std::vector<int> t;  // block of v_l
};
VSequence v_sequence(const ParabolicContraction &C, int xi);
// sum_l X_l e*_{v1,vl} + sum_l e*_{v_{l+1},v_l}
LinearForm companion_q(const ParabolicContraction &C, int xi);

struct KWReport {
  Verdict verdict;
  std::vector<int> v;
  std::vector<Rational> constants;  // F_m^bullet(q) = c_m X_m, m = 1..n
};
// direct=true also evaluates the expanded F_m^bullet (small n only)
KWReport verify_hypothesis_I(const ParabolicContraction &C, int xi, Budget &budget,
                             bool direct = false);

// a generator of partial degree exactly 1
std::optional<Gen> verify_hypothesis_II(const Poly &f);

struct SeparatingForm {
  LinearForm q;  // in the single indeterminate X = X1
  int xi = 0;
  Rational c;    // F_{m,t}(q) = c X
};
SeparatingForm separating_q_gl(const ParabolicContraction &C, int m, int t, Budget &budget);

}  // namespace parabolica
