// Named verification runs shared by the command-line tool and the
// acceptance binary: one SuiteReport per contraction or named instance.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "parabolica/classical.hpp"

namespace parabolica {

// compositions of n with at least two parts, in a fixed order
std::vector<std::vector<int>> compositions(int n);
// palindromic compositions with an even number of parts
std::vector<std::vector<int>> symmetric_even(int n);

std::string blocks_string(const std::vector<int> &blocks);

// each check returns a failed Verdict instead of throwing, except
// BudgetExceeded which always propagates

// F_m^bullet = c_m prod_t F_{m,t} for every m, weights from the action
Verdict check_factorisation(const ParabolicContraction &C, Budget &budget);
// partial n^- degree of the expanded F_m equals the closed form
Verdict check_degree_law(const ParabolicContraction &C, Budget &budget);
// index q = n, index q_Lambda = n + s - p, |q_Lambda| = n^2 - (s - p), balance
Verdict check_index(const ParabolicContraction &C, int trials, std::uint64_t seed);
// hypothesis (I') for every xi
Verdict check_kw(const ParabolicContraction &C, Budget &budget, bool direct);
// degree-1 witnesses for every factor, separating forms for every m in M_2
Verdict check_separation(const ParabolicContraction &C, Budget &budget);
// pr^A commutes with bullet for every m, and the type A family checks
Verdict check_typeA(const ParabolicContraction &C, Budget &budget);

// all the above on one gl_n contraction
SuiteReport gl_instance_report(const ParabolicContraction &C, std::uint64_t budget_limit,
                               std::uint64_t seed);
// the n = 12 example (4,1,4,2,1), at the scale the budget allows
SuiteReport running_example_report(std::uint64_t budget_limit);
// gl_4 with blocks (2,2)
SuiteReport central_root_report(std::uint64_t budget_limit, std::uint64_t seed);
// typeC_family on symmetric blocks
SuiteReport typeC_report(const ParabolicContraction &C, std::uint64_t budget_limit,
                         bool with_index, std::uint64_t seed);

}  // namespace parabolica
