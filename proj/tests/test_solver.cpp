#include "starprod/solver.hpp"

#include <random>

#include "catch_amalgamated.hpp"
#include "oracle.hpp"
#include "starprod/bank.hpp"
#include "starprod/graph.hpp"

using namespace starprod;

namespace {

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<std::pair<int, int>> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + a.vertex_count(), v + a.vertex_count());
  return Graph(a.vertex_count() + b.vertex_count(), std::move(edges));
}

}  // namespace

TEST_CASE("decide_k on small knowns") {
  REQUIRE(decide_k(make_cycle(5), 3).outcome == Decide::no);
  auto yes = decide_k(make_cycle(5), 4);
  REQUIRE(yes.outcome == Decide::yes);
  REQUIRE(oracle::brute_is_star(make_cycle(5), yes.witness->colors));

  REQUIRE(decide_k(make_path(2), 2).outcome == Decide::yes);
  REQUIRE(decide_k(make_path(2), 1).outcome == Decide::no);
  REQUIRE_THROWS_AS(decide_k(make_path(2), 0), std::invalid_argument);

  auto c3c3 = tensor_product(make_cycle(3), make_cycle(3));
  REQUIRE(decide_k(c3c3, 5).outcome == Decide::no);
  REQUIRE(decide_k(c3c3, 6).outcome == Decide::yes);
}

TEST_CASE("decide_k handles disconnected graphs componentwise") {
  auto two = disjoint_union(make_cycle(5), make_path(4));
  REQUIRE(decide_k(two, 3).outcome == Decide::no);  // the C5 side refuses 3
  auto r = decide_k(two, 4);
  REQUIRE(r.outcome == Decide::yes);
  REQUIRE(oracle::brute_is_star(two, r.witness->colors));
}

TEST_CASE("chi_star reproduces the base family tables") {
  REQUIRE(chi_star(make_path(7)).hi == 3);
  REQUIRE(chi_star(make_path(2)).hi == 2);
  REQUIRE(chi_star(make_complete_bipartite(1, 4)).hi == 2);
  auto r = chi_star(tensor_product(make_cycle(3), make_cycle(5)));
  REQUIRE(r.exact());
  REQUIRE(r.hi == 6);
}

TEST_CASE("exhausted budgets surface as unknown, never as no") {
  SolverBudget tiny;
  tiny.max_nodes = 5;
  auto g = tensor_product(make_cycle(3), make_cycle(3));
  auto r = decide_k(g, 5, tiny);
  REQUIRE(r.outcome == Decide::unknown);
  auto range = chi_star(g, tiny);
  REQUIRE(!range.exact());
  REQUIRE(range.lo <= 6);
  REQUIRE(range.hi >= 6);
  REQUIRE(range.witness);
  REQUIRE(is_star_coloring(g, *range.witness));
}

TEST_CASE("yes answers are monotone in k") {
  std::mt19937 rng(31415);
  for (int round = 0; round < 20; ++round) {
    auto g = oracle::random_graph(rng, 4 + static_cast<int>(rng() % 5), 35);
    for (int k = 1; k < 6; ++k) {
      auto a = decide_k(g, k);
      auto b = decide_k(g, k + 1);
      if (a.outcome == Decide::yes) REQUIRE(b.outcome == Decide::yes);
    }
  }
}

TEST_CASE("chi_star agrees with the naive oracle on small graphs") {
  std::mt19937 rng(271828);
  for (int round = 0; round < 40; ++round) {
    auto g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 10), 30);
    auto fast = chi_star(g);
    REQUIRE(fast.exact());
    REQUIRE(fast.hi == oracle::naive_chi_star(g));
    if (fast.witness) REQUIRE(oracle::brute_is_star(g, fast.witness->colors));
  }
}

TEST_CASE("chi_star is component-additive") {
  std::mt19937 rng(161803);
  for (int round = 0; round < 15; ++round) {
    auto a = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 5), 40);
    auto b = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 5), 40);
    auto whole = chi_star(disjoint_union(a, b));
    REQUIRE(whole.exact());
    REQUIRE(whole.hi == std::max(chi_star(a).hi, chi_star(b).hi));
  }
}

TEST_CASE("enumerate_canonical finds the unique small colorings") {
  auto c3p3 = tensor_product(make_cycle(3), make_path(3));
  auto res = enumerate_canonical(c3p3, 3);
  REQUIRE(res.complete);
  REQUIRE(res.colorings.size() == 1);
  REQUIRE(res.colorings[0].colors == std::vector<int>{1, 1, 1, 2, 2, 2, 3, 3, 3});

  auto c3p5 = tensor_product(make_cycle(3), make_path(5));
  auto res5 = enumerate_canonical(c3p5, 4);
  REQUIRE(res5.complete);
  REQUIRE(res5.colorings.size() == 1);
  REQUIRE(res5.colorings[0].colors ==
          std::vector<int>{1, 2, 2, 2, 1, 1, 3, 3, 3, 1, 1, 4, 4, 4, 1});

  REQUIRE(enumerate_canonical(make_path(2), 1).colorings.empty());
}

TEST_CASE("enumerate_canonical matches direct orbit counting") {
  std::mt19937 rng(5150);
  auto factorial_falling = [](int k, int d) {
    long long out = 1;
    for (int i = 0; i < d; ++i) out *= k - i;
    return out;
  };
  for (int round = 0; round < 20; ++round) {
    int n = 2 + static_cast<int>(rng() % 7);
    auto g = oracle::random_graph(rng, n, 35);
    int k = 2 + static_cast<int>(rng() % 3);
    auto mine = enumerate_canonical(g, k);
    REQUIRE(mine.complete);
    auto census = oracle::star_census(g, k);
    REQUIRE(mine.colorings.size() == census.canonical.size());
    std::set<std::vector<int>> got;
    long long labeled = 0;
    for (const auto& c : mine.colorings) {
      got.insert(c.colors);
      labeled += factorial_falling(k, c.color_count());
    }
    REQUIRE(got == census.canonical);
    REQUIRE(labeled == census.labeled);
  }
}

TEST_CASE("enumerate_canonical counts cross-component classes once each") {
  auto g = disjoint_union(make_path(2), make_path(2));
  auto res = enumerate_canonical(g, 2);
  REQUIRE(res.complete);
  // Two classes: both edges reuse the same pair, or the second flips it.
  REQUIRE(res.colorings.size() == 2);
}

TEST_CASE("gadget lower bounds seed the ascending search") {
  auto p4p4 = cartesian_product(make_path(4), make_path(4));
  auto c7c7 = tensor_product(make_cycle(7), make_cycle(7));
  auto seeded = chi_star_with_lower_bound_gadgets(c7c7, {{p4p4, 5}});
  REQUIRE(seeded.exact());
  REQUIRE(seeded.hi == 5);

  auto p3p4 = tensor_product(make_path(3), make_path(4));
  auto via_c4 = chi_star_with_lower_bound_gadgets(p3p4, {{make_cycle(4), 3}});
  REQUIRE(via_c4.exact());
  REQUIRE(via_c4.hi == 3);

  // A gadget that does not embed leaves the result identical to chi_star.
  auto plain = chi_star(p3p4);
  auto none = chi_star_with_lower_bound_gadgets(p3p4, {{make_cycle(7), 4}});
  REQUIRE(none.hi == plain.hi);
  REQUIRE(none.lo == plain.lo);
}

TEST_CASE("search is deterministic under a node budget") {
  auto g = tensor_product(make_cycle(5), make_path(4));
  SolverBudget b;
  b.max_nodes = 100000;
  auto r1 = decide_k(g, 4, b);
  auto r2 = decide_k(g, 4, b);
  REQUIRE(r1.outcome == r2.outcome);
  REQUIRE(r1.nodes == r2.nodes);
  if (r1.witness) REQUIRE(r1.witness->colors == r2.witness->colors);
}
