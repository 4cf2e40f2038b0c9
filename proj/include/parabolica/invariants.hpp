// Minor sums F_m, their top n^- components F_m^bullet, the factorisation
// F_m^bullet = c_m prod_t F_{m,t} into semi-invariants, and weight data.
#pragma once

#include <string>
#include <vector>

#include "parabolica/contraction.hpp"

namespace parabolica {

struct SizeMismatch : Error {
  using Error::Error;
};

// Delta_{J,J2}; J, J2 sorted
Poly minor(const std::vector<int> &J, const std::vector<int> &J2);
// the part of Delta_{J,J2} made of permutations with exactly d entries in
// n^- (d < 0: no restriction)
Poly minor_restricted(const ParabolicContraction &C, const std::vector<int> &J,
                      const std::vector<int> &J2, int d, Budget &budget);

Poly F(const ParabolicContraction &C, int m, Budget &budget);
Poly bullet(const ParabolicContraction &C, const Poly &f);
int deg_nminus_F(const ParabolicContraction &C, int m);
Poly bullet_F(const ParabolicContraction &C, int m, Budget &budget);

struct SemiInvariant {
  Poly poly;
  WeightVector weight;
  int m = 0, t = 0;
};

struct FactorizationCertificate {
  int m = 0;
  Rational c_m;
  std::vector<SemiInvariant> factors;
  bool verified = false;
  std::string failure;  // empty when verified
};

// F_{m,t} is a sum of restricted minors (rows, columns, n^- degree); for
// m outside M_1 the single "factor" is F_m^bullet
using PieceFn = std::function<void(const std::vector<int> &, const std::vector<int> &, int)>;
void factor_pieces(const ParabolicContraction &C, int m, int t, const PieceFn &fn);

// F_{m,1}, ..., F_{m,r_m}
std::vector<Poly> factor_polys(const ParabolicContraction &C, int m, Budget &budget);

// values at a linear form, enumerating only entries where q is nonzero
Poly minor_value(const ParabolicContraction &C, const std::vector<int> &R,
                 const std::vector<int> &Cc, int d, const LinearForm &q, Budget &budget);
Poly bullet_F_value(const ParabolicContraction &C, int m, const LinearForm &q, Budget &budget);
std::vector<Poly> factor_values(const ParabolicContraction &C, int m, const LinearForm &q,
                                Budget &budget);
WeightVector weight_formula(const ParabolicContraction &C, int m, int t);
// c_m by exact division; with check_weights the factor weights are also
// recomputed from the action and compared with weight_formula
FactorizationCertificate factor_components(const ParabolicContraction &C, int m, Budget &budget,
                                           bool check_weights = false);

struct Verdict {
  bool ok = false;
  std::string reason;
  explicit operator bool() const { return ok; }
};

using WeightFamily = std::vector<std::pair<WeightVector, long>>;  // (weight, multiplicity)
// per family: weight rank = size - 1 with the multiplicity-weighted sum as
// the relation, coprime multiplicities; spans of all families in direct sum
Verdict independence_certificate(const std::vector<WeightFamily> &families);

struct HLambdaResult {
  Verdict verdict;
  std::vector<Poly> cartan;  // distinct sums of e[l,l] over l outside J
};
HLambdaResult h_lambda_extraction(const ParabolicContraction &C, int m, Budget &budget);

}  // namespace parabolica
