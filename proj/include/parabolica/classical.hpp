// Projections onto sl_n, sp_n, so_n and the classical-type suites: type A
// and type C families, the sp_8 counterexample and the D_6 probe.
#pragma once

#include <string>
#include <vector>

#include "parabolica/invariants.hpp"

namespace parabolica {

enum class ProjKind { A, C, D };

// e[i,j] -> e[n+1-j, n+1-i]
Gen gamma_gen(Gen g, int n);
Poly gamma_transpose(const Poly &f, int n);

// sign of the C-projection: -1 on the two diagonal n'-blocks, +1 off them
int epsilon_C(int u, int v, int n);
Poly project_gen(ProjKind kind, int n, Gen g);
// ring morphism Sym(gl_n) -> Sym(gl_n) with image Sym(sl/sp/so)
Poly project(ProjKind kind, int n, const Poly &f);

// ---- symplectic / orthogonal realisations inside Sym(gl_n) ---------------

// h^C_j = e[j,j] - e[j^g,j^g], j = 1..n/2
std::vector<Poly> cartan_C(int n);
// pr(e[u,v]) for u != v with nonzero image, one per line
std::vector<Poly> root_basis(ProjKind kind, int n);

// greedy subset of candidates generating the same Lie subalgebra
std::vector<Poly> lie_generators(const std::vector<Poly> &candidates, const BracketFn &br);

using WeightC = std::vector<Rational>;  // value on h^C_j, j = 1..n/2
WeightC restrict_C(const WeightVector &w);
WeightC varpi_C(int nprime, int l);
WeightC w_block_C(const ParabolicContraction &C, int k);
// weight for the contraction of sp_n sitting inside C (symmetric blocks)
std::optional<WeightC> weight_of_C(const ParabolicContraction &C, const Poly &f);
// the same for prF = pr^C(F), acting on F and projecting (pr^C is a module
// morphism over the sp contraction); cheap when F is much smaller than prF
std::optional<WeightC> weight_of_C_lifted(const ParabolicContraction &C, const Poly &F,
                                          const Poly &prF);

// ---- reports -------------------------------------------------------------

struct Identity {
  std::string name, lhs, rhs;
  bool equal = false;
};

struct Certificate {
  std::string name;
  Verdict verdict;
};

struct SuiteReport {
  std::string suite;
  std::vector<Identity> identities;
  std::vector<Certificate> certificates;
  std::vector<std::string> notes;
  bool ok() const;
  void identity(const std::string &name, const Poly &lhs, const Poly &rhs);
  void certify(const std::string &name, Verdict v);
};

// polynomial text, abbreviated beyond `max_terms` terms
std::string poly_summary(const Poly &f, std::size_t max_terms = 40);

// ---- type A --------------------------------------------------------------

// pr(F_m)^bullet = pr(F_m^bullet); for kind C and odd m, pr(F_m) = 0
Verdict bullet_commutes(ProjKind kind, const ParabolicContraction &C, int m, Budget &budget);

struct TypeAFamily {
  std::vector<SemiInvariant> members;  // pr^A(F_{m,t}), (m,t) != (1,1)
  Verdict weights, independence;
};
TypeAFamily typeA_family(const ParabolicContraction &C, Budget &budget);

// ---- type C --------------------------------------------------------------

struct TypeCMember {
  int mp = 0, t = 0;  // m' and t
  Poly poly;
  WeightC weight;      // lambda^C_{m',t} from the closed formula
  long multiplicity = 1;
  std::optional<Gen> witness;  // degree-1 generator, antidiagonal when possible
  bool antidiagonal = false;
};

struct TypeCFamily {
  std::vector<TypeCMember> members;
  std::vector<Rational> cprime;  // c'_{m'}, m' = 1..n'
  std::vector<int> skipped;      // m' whose f_{m'} exceeded the budget
  long dim_qc = 0, dim_qc_prime = 0, index_qc = -1, index_qc_prime = -1;
  SuiteReport report;
};
// s even, symmetric blocks; with_index also estimates the two indices
TypeCFamily typeC_family(const ParabolicContraction &C, Budget &budget, bool with_index = true,
                         std::uint64_t seed = 1);

// odd m in M_2 with 2m-2 in M_2
bool counterexample_detector(const ParabolicContraction &C);

SuiteReport counterexample_sp8(Budget &budget);
SuiteReport d6_suite(Budget &budget, std::uint64_t seed = 1);

// e is kept when [x,e] is a multiple of e for every basis element x
std::vector<Poly> degree1_semiinvariants(const std::vector<Poly> &candidates,
                                         const std::vector<Poly> &basis, const BracketFn &br);
// type A extended-Dynkin criterion: the root vectors e[i+1,i] (cut i) and
// e[1,n] whose cycle neighbours are all outside pi'
std::vector<Gen> degree1_criterion_gl(const ParabolicContraction &C);

}  // namespace parabolica
