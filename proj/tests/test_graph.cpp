#include "starprod/graph.hpp"

#include <random>
#include <set>

#include "catch_amalgamated.hpp"
#include "oracle.hpp"
#include "starprod/subgraph.hpp"

using namespace starprod;

TEST_CASE("base families have the canonical edge sets") {
  auto c3 = make_cycle(3);
  REQUIRE(c3.vertex_count() == 3);
  REQUIRE(c3.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});

  auto p2 = make_path(2);
  REQUIRE(p2.edges() == std::vector<std::pair<int, int>>{{0, 1}});
  REQUIRE(make_path(1).edge_count() == 0);

  auto k14 = make_complete_bipartite(1, 4);
  REQUIRE(k14.vertex_count() == 5);
  REQUIRE(k14.edge_count() == 4);
  REQUIRE(k14.degree(0) == 4);

  auto star4 = make_star(4);
  REQUIRE(star4.vertex_count() == 5);
  REQUIRE(star4.degree(0) == 4);

  REQUIRE_THROWS_AS(make_cycle(2), std::invalid_argument);
  REQUIRE_THROWS_AS(make_path(0), std::invalid_argument);
  REQUIRE_THROWS_AS(make_complete_bipartite(0, 3), std::invalid_argument);
}

TEST_CASE("graph constructor canonicalizes and validates") {
  Graph g(3, {{2, 0}, {0, 2}, {1, 0}});
  REQUIRE(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
  REQUIRE(g.has_edge(2, 0));
  REQUIRE(!g.has_edge(1, 2));
  REQUIRE_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);
  REQUIRE_THROWS_AS(Graph(2, {{0, 5}}), std::invalid_argument);
}

TEST_CASE("tensor product structure on known pairs") {
  // P2 x P2: two disjoint edges
  auto g1 = tensor_product(make_path(2), make_path(2));
  REQUIRE(g1.vertex_count() == 4);
  REQUIRE(g1.edge_count() == 2);
  REQUIRE(connected_components(g1).components.size() == 2);

  // P3 x P3: one C4 and one K_{1,4}
  auto g2 = tensor_product(make_path(3), make_path(3));
  auto split = connected_components(g2);
  REQUIRE(split.components.size() == 2);
  std::multiset<std::pair<int, int>> shapes;
  for (const auto& comp : split.components) shapes.insert({comp.vertex_count(), comp.edge_count()});
  REQUIRE(shapes == std::multiset<std::pair<int, int>>{{4, 4}, {5, 4}});

  // C3 x P2 is a single 6-cycle
  auto g3 = tensor_product(make_cycle(3), make_path(2));
  REQUIRE(g3.vertex_count() == 6);
  REQUIRE(g3.edge_count() == 6);
  REQUIRE(connected_components(g3).components.size() == 1);
  for (int v = 0; v < 6; ++v) REQUIRE(g3.degree(v) == 2);

  // P2 x P4: two P4 components
  auto g4 = tensor_product(make_path(2), make_path(4));
  auto split4 = connected_components(g4);
  REQUIRE(split4.components.size() == 2);
  for (const auto& comp : split4.components) {
    REQUIRE(comp.vertex_count() == 4);
    REQUIRE(comp.edge_count() == 3);
  }
}

TEST_CASE("cartesian product basics") {
  auto c4 = cartesian_product(make_path(2), make_path(2));
  REQUIRE(c4.vertex_count() == 4);
  REQUIRE(c4.edge_count() == 4);
  for (int v = 0; v < 4; ++v) REQUIRE(c4.degree(v) == 2);

  auto ladder = cartesian_product(make_path(2), make_path(3));
  REQUIRE(ladder.vertex_count() == 6);
  REQUIRE(ladder.edge_count() == 7);
}

TEST_CASE("edge count of a tensor product is 2|E||E| and swap is a transpose") {
  std::mt19937 rng(991);
  for (int round = 0; round < 30; ++round) {
    auto g = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 5), 40);
    auto h = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 5), 40);
    auto gh = tensor_product(g, h);
    REQUIRE(gh.edge_count() == 2 * g.edge_count() * h.edge_count());

    auto hg = tensor_product(h, g);
    const int n2 = h.vertex_count();
    const int m2 = g.vertex_count();
    std::set<std::pair<int, int>> swapped;
    for (auto [a, b] : gh.edges()) {
      int u = flat_index(a % n2, a / n2, m2);
      int v = flat_index(b % n2, b / n2, m2);
      if (u > v) std::swap(u, v);
      swapped.insert({u, v});
    }
    std::set<std::pair<int, int>> expected(hg.edges().begin(), hg.edges().end());
    REQUIRE(swapped == expected);
  }
}

TEST_CASE("tensor products of bipartite factors with edges are disconnected") {
  std::mt19937 rng(417);
  int tried = 0;
  while (tried < 20) {
    auto g = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 5), 40);
    auto h = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 5), 40);
    if (!is_bipartite(g) || !is_bipartite(h)) continue;
    if (g.edge_count() == 0 || h.edge_count() == 0) continue;
    ++tried;
    REQUIRE(connected_components(tensor_product(g, h)).components.size() >= 2);
  }
  // C4 x C4: both factors bipartite
  REQUIRE(connected_components(tensor_product(make_cycle(4), make_cycle(4))).components.size() == 2);
}

TEST_CASE("connected_components partitions and induces correctly") {
  auto g = tensor_product(make_path(2), make_path(4));
  auto split = connected_components(g);
  std::set<int> seen;
  for (size_t c = 0; c < split.components.size(); ++c) {
    const auto& comp = split.components[c];
    const auto& map = split.to_parent[c];
    REQUIRE(static_cast<int>(map.size()) == comp.vertex_count());
    for (int v : map) REQUIRE(seen.insert(v).second);
    for (auto [u, v] : comp.edges()) REQUIRE(g.has_edge(map[u], map[v]));
  }
  REQUIRE(static_cast<int>(seen.size()) == g.vertex_count());

  auto c3split = connected_components(make_cycle(3));
  REQUIRE(c3split.components.size() == 1);
  REQUIRE(c3split.components[0].edges() == make_cycle(3).edges());
}

TEST_CASE("contains_subgraph finds and refutes embeddings") {
  auto p2p3 = cartesian_product(make_path(2), make_path(3));
  auto c4c4 = tensor_product(make_cycle(4), make_cycle(4));
  auto found = contains_subgraph(c4c4, p2p3);
  REQUIRE(found.status == EmbeddingResult::Status::found);
  for (auto [u, v] : p2p3.edges()) REQUIRE(c4c4.has_edge(found.map[u], found.map[v]));

  // gadget larger than host
  auto p4p4 = cartesian_product(make_path(4), make_path(4));
  auto p3p3 = tensor_product(make_path(3), make_path(3));
  REQUIRE(contains_subgraph(p3p3, p4p4).status == EmbeddingResult::Status::absent);

  auto c7c7 = tensor_product(make_cycle(7), make_cycle(7));
  auto big = contains_subgraph(c7c7, p4p4);
  REQUIRE(big.status == EmbeddingResult::Status::found);
  for (auto [u, v] : p4p4.edges()) REQUIRE(c7c7.has_edge(big.map[u], big.map[v]));

  // triangle in a bipartite host: absent, not budget
  REQUIRE(contains_subgraph(make_cycle(4), make_cycle(3)).status ==
          EmbeddingResult::Status::absent);

  // starved budget reports budget_exceeded, never absent
  auto starved = contains_subgraph(c7c7, p4p4, 3);
  REQUIRE(starved.status == EmbeddingResult::Status::budget_exceeded);

  REQUIRE_THROWS_AS(contains_subgraph(c7c7, tensor_product(make_path(5), make_path(5))),
                    std::invalid_argument);
}

TEST_CASE("contains_subgraph embeddings map edges to edges on random pairs") {
  std::mt19937 rng(5501);
  for (int round = 0; round < 25; ++round) {
    auto host = oracle::random_graph(rng, 6 + static_cast<int>(rng() % 4), 45);
    auto gadget = oracle::random_graph(rng, 3 + static_cast<int>(rng() % 3), 45);
    auto res = contains_subgraph(host, gadget, 500000);
    if (res.status != EmbeddingResult::Status::found) continue;
    std::set<int> used;
    for (int hv : res.map) REQUIRE(used.insert(hv).second);
    for (auto [u, v] : gadget.edges()) REQUIRE(host.has_edge(res.map[u], res.map[v]));
  }
}
