#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "parabolica/checks.hpp"
#include "parabolica/pathways.hpp"

using namespace parabolica;

namespace {

long factorial(int k) { return k <= 1 ? 1 : k * factorial(k - 1); }
long binom(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

Poly X1() { return Poly::X(1); }

}  // namespace

TEST_CASE("graph_of_gl examples") {
  Pathway P = graph_of_gl({{entry(2, 3), Poly(5)}}, 4);
  CHECK(P.has(2, 3));
  CHECK(P.weight(2, 3) == Poly(5));
  CHECK(P.support() == std::vector<int>{2, 3});
  CHECK(graph_of_gl({}, 4).support().empty());
  CHECK(P.to_dot().find("2 -> 3") != std::string::npos);
}

TEST_CASE("graph_of_C examples") {
  Pathway A = graph_of_C({{entry(2, 5), Poly(1)}}, 6);  // 5 = 2^g
  int edges = 0;
  for (int x = 1; x <= 6; ++x)
    for (int y = 1; y <= 6; ++y) edges += A.has(x, y);
  CHECK(edges == 1);
  CHECK(A.has(2, 5));

  Pathway B = graph_of_C({{entry(2, 1), Poly(1)}}, 6);
  CHECK(B.has(2, 1));
  CHECK(B.has(6, 5));
  CHECK_THROWS_AS(graph_of_C({}, 5), Error);

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> U(-3, 3), I(1, 6);
  for (int c = 0; c < 100; ++c) {
    LinearForm q;
    for (int k = 0; k < 5; ++k) q[entry(I(rng), I(rng))] = Poly(U(rng));
    Pathway G = graph_of_C(q, 6);
    for (int x = 1; x <= 6; ++x)
      for (int y = 1; y <= 6; ++y) REQUIRE(G.has(x, y) == G.has(7 - y, 7 - x));
  }
}

TEST_CASE("dicyclic subgraph examples") {
  Budget b;
  CHECK(dicyclic_subgraphs(Pathway(4), 2, b).empty());

  Pathway two(4);
  for (auto [x, y] : {std::pair{1, 2}, {2, 1}, {3, 4}, {4, 3}}) two.set(x, y, Poly(1));
  auto H = dicyclic_subgraphs(two, 4, b);
  REQUIRE(H.size() == 1);
  CHECK(H[0].cycles == std::vector<std::vector<int>>{{1, 2}, {3, 4}});
  CHECK(H[0].sign() == 1);

  // complete pathway: subgraphs on m vertices <-> permutations of m-subsets
  Pathway full(4);
  for (int x = 1; x <= 4; ++x)
    for (int y = 1; y <= 4; ++y) full.set(x, y, Poly(1));
  for (int m = 1; m <= 4; ++m)
    CHECK(long(dicyclic_subgraphs(full, m, b).size()) == binom(4, m) * factorial(m));

  DicyclicSubgraph loop{{{3}}};
  CHECK(subgraph_monomial(loop, Flavor::GL, 4) == Poly::e(3, 3));
  DicyclicSubgraph tri{{{1, 3, 2}}};
  CHECK(subgraph_monomial(tri, Flavor::GL, 4) == Poly::e(1, 3) * Poly::e(3, 2) * Poly::e(2, 1));
  CHECK(subgraph_monomial(tri, Flavor::C, 4) ==
        project(ProjKind::C, 4, Poly::e(1, 3) * Poly::e(3, 2) * Poly::e(2, 1)));
}

TEST_CASE("F_m(q) as a signed sum over dicyclic subgraphs, n <= 5") {
  std::mt19937_64 rng(20261015);
  std::uniform_int_distribution<int> U(-4, 4);
  for (int n = 2; n <= 5; ++n) {
    ParabolicContraction C(std::vector<int>(n, 1));
    for (int c = 0; c < 20; ++c) {
      LinearForm q;
      std::uniform_int_distribution<int> I(1, n);
      for (int k = 0; k < 2 * n; ++k) q[entry(I(rng), I(rng))] = Poly(U(rng));
      Pathway P = graph_of_gl(q, n);
      for (int m = 1; m <= n; ++m) {
        Budget b;
        Poly sum;
        for (auto &H : dicyclic_subgraphs(P, m, b)) {
          Poly v = evaluate(subgraph_monomial(H, Flavor::GL, n), q);
          REQUIRE_FALSE(v.is_zero());
          sum += Rational(H.sign()) * v;
        }
        REQUIRE(sum == evaluate(F(C, m, b), q));
      }
    }
  }
}

TEST_CASE("v_sequence examples") {
  CHECK(v_sequence(ParabolicContraction({4, 1, 4, 2, 1}), 4).v ==
        std::vector<int>{10, 12, 1, 5, 6, 11, 2, 7, 3, 8, 4, 9});
  CHECK(v_sequence(ParabolicContraction({1, 1, 1}), 1).v == std::vector<int>{1, 2, 3});
  CHECK(v_sequence(ParabolicContraction({2, 2}), 1).v == std::vector<int>{1, 3, 2, 4});
  // always a bijection onto [1,n]
  for (int n = 2; n <= 7; ++n)
    for (auto &b : compositions(n)) {
      ParabolicContraction C(b);
      for (int xi = 1; xi <= C.s(); ++xi) {
        auto v = v_sequence(C, xi).v;
        std::sort(v.begin(), v.end());
        for (int l = 1; l <= n; ++l) REQUIRE(v[l - 1] == l);
      }
    }
}

TEST_CASE("companion form") {
  ParabolicContraction C({4, 1, 4, 2, 1});
  auto v = v_sequence(C, 4).v;
  LinearForm q = companion_q(C, 4);
  Pathway P = graph_of_gl(q, 12);
  for (int l = 1; l <= 12; ++l) CHECK(P.weight(v[0], v[l - 1]) == Poly::X(l));
  for (int l = 2; l < 12; ++l) CHECK(P.has(v[l], v[l - 1]));
  Budget b;
  CHECK(evaluate(F(C, 1, b), q) == Poly::X(1));
  // exactly one m-dicyclic subgraph: the cycle v1 -> vm -> ... -> v2 -> v1
  for (int m = 1; m <= 12; ++m) {
    auto H = dicyclic_subgraphs(P, m, b);
    REQUIRE(H.size() == 1);
    REQUIRE(H[0].cycles.size() == 1);
    REQUIRE(int(H[0].cycles[0].size()) == m);
    Poly S = evaluate(subgraph_monomial(H[0], Flavor::GL, 12), q);
    CHECK(proportional(S, Poly::X(m)).has_value());
  }
}

TEST_CASE("hypothesis (I') examples") {
  Budget b;
  ParabolicContraction B2({1, 1});
  auto r = verify_hypothesis_I(B2, 1, b, true);
  CHECK(r.verdict.ok);
  LinearForm q = companion_q(B2, 1);
  CHECK(evaluate(F(B2, 1, b), q) == Poly::X(1));
  CHECK(proportional(evaluate(bullet_F(B2, 2, b), q), Poly::X(2)).has_value());

  auto run = verify_hypothesis_I(ParabolicContraction({4, 1, 4, 2, 1}), 4, b);
  CHECK(run.verdict.ok);
  CHECK(run.v == std::vector<int>{10, 12, 1, 5, 6, 11, 2, 7, 3, 8, 4, 9});
}

TEST_CASE("hypothesis (I') on every composition of n <= 6 and every xi") {
  for (int n = 2; n <= 6; ++n)
    for (auto &bl : compositions(n)) {
      ParabolicContraction C(bl);
      for (int xi = 1; xi <= C.s(); ++xi) {
        Budget b;
        auto r = verify_hypothesis_I(C, xi, b, n <= 5);
        INFO("n=", n, " xi=", xi, " ", r.verdict.reason);
        REQUIRE(r.verdict.ok);
      }
    }
}

TEST_CASE("hypothesis (II) examples") {
  CHECK(*verify_hypothesis_II(Poly::e(2, 1)) == entry(2, 1));
  CHECK_FALSE(verify_hypothesis_II(Poly::e(1, 2).pow(2)).has_value());
  for (int n = 2; n <= 6; ++n)
    for (auto &bl : compositions(n)) {
      ParabolicContraction C(bl);
      Budget b;
      for (int m = 1; m <= n; ++m)
        for (auto &f : factor_polys(C, m, b)) REQUIRE(verify_hypothesis_II(f).has_value());
    }
}

TEST_CASE("separating forms") {
  Budget b;
  ParabolicContraction run({4, 1, 4, 2, 1});
  auto sf = separating_q_gl(run, 5, 1, b);
  auto v5 = factor_values(run, 5, sf.q, b);
  CHECK(proportional(v5[0], X1()).has_value());
  CHECK((v5[1].is_constant() && !v5[1].is_zero()));
  for (auto &x : factor_values(run, 12, sf.q, b)) CHECK((x.is_constant() && !x.is_zero()));

  ParabolicContraction R4({2, 2});
  auto s4 = separating_q_gl(R4, 4, 1, b);
  CHECK(proportional(evaluate(minor({3, 4}, {1, 2}), s4.q), X1()).has_value());
  Poly other = evaluate(minor({1, 2}, {3, 4}), s4.q);
  CHECK((other.is_constant() && !other.is_zero()));

  ParabolicContraction B3({1, 1, 1});
  auto s3 = separating_q_gl(B3, 3, 2, b);
  CHECK(proportional(evaluate(Poly::e(3, 2), s3.q), X1()).has_value());
}

TEST_CASE("hypothesis (III') for every (m,t) with r_m >= 2, n <= 6") {
  for (int n = 2; n <= 6; ++n)
    for (auto &bl : compositions(n)) {
      ParabolicContraction C(bl);
      for (int m : C.M(2))
        for (int t = 1; t <= C.r(m); ++t) {
          Budget b;
          INFO("n=", n, " m=", m, " t=", t);
          auto sf = separating_q_gl(C, m, t, b);
          REQUIRE(sf.c != 0);
        }
    }
}
