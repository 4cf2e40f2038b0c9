#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "parabolica/checks.hpp"
#include "parabolica/contraction.hpp"
#include "parabolica/invariants.hpp"

using namespace parabolica;

namespace {

const ParabolicContraction running({4, 1, 4, 2, 1});

}  // namespace

TEST_CASE("block combinatorics of the running example") {
  const auto &C = running;
  CHECK(C.n() == 12);
  CHECK(C.M(1) == std::vector<int>{5, 8, 12});
  CHECK(C.m_of(1) == C.s());
  CHECK(C.m_of(C.imax()) == C.n());
  CHECK(C.kappa(4) == std::vector<int>{1, 3});
  CHECK(C.K(2) == std::vector<int>{1, 3, 4});
  CHECK(C.Iset() == std::vector<int>{1, 2, 4});
  CHECK(C.M(2) == std::vector<int>{5, 12});
  CHECK(C.r(12) == 2);
  CHECK(C.r(6) == 1);
  CHECK(C.level(6) == 2);
  CHECK(C.interval(3) == std::vector<int>{6, 7, 8, 9});
}

TEST_CASE("block combinatorics invariants for n <= 7") {
  for (int n = 2; n <= 7; ++n)
    for (const auto &b : compositions(n)) {
      ParabolicContraction C(b);
      int prev = C.s() + 1;
      for (int i = 1; i <= C.imax(); ++i) {
        int inc = C.m_of(i) - C.m_of(i - 1);
        CHECK(inc <= prev);
        CHECK(int(C.K(i).size()) == inc);
        prev = inc;
      }
      for (int m : C.M(1))
        if (m != n) CHECK(C.level(m - 1) == C.level(m));  // m-1 is not some m_i
    }
}

TEST_CASE("composition enumeration") {
  for (int n = 2; n <= 8; ++n) CHECK(compositions(n).size() == (std::size_t(1) << (n - 1)) - 1);
  CHECK(compositions(3) == std::vector<std::vector<int>>{{1, 2}, {2, 1}, {1, 1, 1}});
  CHECK(symmetric_even(4) == std::vector<std::vector<int>>{{2, 2}, {1, 1, 1, 1}});
  CHECK(symmetric_even(6).size() == 4);  // 3,3  1,2,2,1  2,1,1,2  1^6
  CHECK(blocks_string({4, 1, 4, 2, 1}) == "4,1,4,2,1");
}

TEST_CASE("membership") {
  CHECK(membership(running, 5, 1) == Membership::InNminus);
  CHECK(membership(running, 1, 5) == Membership::InP);
  CHECK(membership(running, 3, 3) == Membership::InP);
  CHECK_THROWS_AS(membership(running, 13, 1), IndexOutOfRange);
}

TEST_CASE("bracket and action examples") {
  ParabolicContraction B2({1, 1}), B3({1, 1, 1});
  CHECK(bracket(B2, entry(1, 2), entry(2, 1)).is_zero());
  CHECK(bracket(B2, entry(2, 1), entry(1, 2)).is_zero());
  CHECK(bracket(B2, entry(1, 1), entry(2, 1)) == -Poly::e(2, 1));
  CHECK(act(B2, entry(1, 1), Poly::e(2, 1) * Poly::e(1, 2)).is_zero());
  CHECK(act(B2, entry(1, 2), Poly(7)).is_zero());
  CHECK(act(B3, entry(2, 2), Poly::e(2, 1)) == Poly::e(2, 1));
  CHECK_THROWS_AS(bracket(B3, entry(4, 1), entry(1, 1)), IndexOutOfRange);
}

TEST_CASE("weight_of examples") {
  ParabolicContraction B2({1, 1}), B3({1, 1, 1});
  Budget b;
  // F_1 is invariant; for m >= 2 only the top n^- component is
  CHECK(is_zero(*weight_of(B3, F(B3, 1, b))));
  CHECK_FALSE(weight_of(B2, F(B2, 2, b)).has_value());
  for (int m = 1; m <= 3; ++m) CHECK(is_zero(weight_of(B3, bullet_F(B3, m, b)).value()));
  CHECK(*weight_of(B3, Poly::e(2, 1)) == WeightVector{-1, 1, 0});
  CHECK_FALSE(weight_of(B2, Poly::e(2, 1) + Poly::e(1, 2)).has_value());
  CHECK_THROWS(weight_of(B2, Poly()));
}

TEST_CASE("jcal examples") {
  for (const auto &J : jcal(running, 8)) {
    std::vector<int> prof(5);
    for (int x : J) ++prof[running.block_of(x) - 1];
    CHECK(prof == std::vector<int>{2, 1, 2, 2, 1});
  }
  ParabolicContraction B3({1, 1, 1}), R4({2, 2});
  CHECK(jcal(B3, 3) == std::vector<std::vector<int>>{{1, 2, 3}});
  auto J2 = jcal(R4, 2);
  CHECK(J2 == std::vector<std::vector<int>>{{1, 3}, {1, 4}, {2, 3}, {2, 4}});
  // brute force: all 2-subsets with max block count 1
  int cnt = 0;
  for (const auto &J : combinations({1, 2, 3, 4}, 2))
    if (R4.block_of(J[0]) != R4.block_of(J[1])) ++cnt;
  CHECK(cnt == 4);
}

TEST_CASE("q_Lambda basis sizes") {
  CHECK(q_lambda_basis(running).size() == 142);
  for (int n = 2; n <= 6; ++n) {
    std::vector<int> borel(n, 1);
    CHECK(q_lambda_basis(ParabolicContraction(borel)).size() == std::size_t(n * n - (n - 1)));
  }
  CHECK(q_lambda_basis(ParabolicContraction({2, 2})).size() == 15);
}

TEST_CASE("index examples") {
  for (const auto &b : std::vector<std::vector<int>>{{1, 1}, {2, 1}, {1, 2, 1}, {2, 2}, {3, 1, 2}}) {
    ParabolicContraction C(b);
    BracketFn br = [&](const Poly &x, const Poly &y) { return bracket_linear(C, x, y); };
    CHECK(index_estimate(full_basis(C), br, 5, 7).index == C.n());
  }
  {
    const auto &C = running;
    BracketFn br = [&](const Poly &x, const Poly &y) { return bracket_linear(C, x, y); };
    CHECK(index_estimate(q_lambda_basis(C), br, 2, 7).index == 14);
  }
  BracketFn zero = [](const Poly &, const Poly &) { return Poly(); };
  CHECK(index_estimate({Poly::X(1), Poly::X(2), Poly::X(3)}, zero).index == 3);
  ParabolicContraction B3({1, 1, 1});
  BracketFn br = [&](const Poly &x, const Poly &y) { return bracket_linear(B3, x, y); };
  CHECK_THROWS(index_estimate({Poly::e(1, 2), Poly::e(2, 3)}, br));
}

TEST_CASE("Jacobi identity and derivation law: 1000 seeded cases") {
  std::mt19937_64 rng(11);
  for (int c = 0; c < 1000; ++c) {
    auto comps = compositions(2 + c % 5);
    ParabolicContraction C(comps[rng() % comps.size()]);
    int n = C.n();
    auto g = [&] { return entry(1 + rng() % n, 1 + rng() % n); };
    Poly x = Poly::gen(g()), y = Poly::gen(g()), z = Poly::gen(g());
    auto br = [&](const Poly &a, const Poly &b) { return bracket_linear(C, a, b); };
    REQUIRE((br(x, br(y, z)) + br(y, br(z, x)) + br(z, br(x, y))).is_zero());
    REQUIRE(br(x, y) == -br(y, x));
    Poly f = Poly::gen(g()) * Poly::gen(g()) + Poly::gen(g());
    Poly h = Poly::gen(g()) - Rational(1, 2) * Poly::gen(g()) * Poly::gen(g());
    Gen a = g();
    REQUIRE(act(C, a, f * h) == act(C, a, f) * h + f * act(C, a, h));
  }
}
