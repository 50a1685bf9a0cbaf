#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "starprod/errors.hpp"

namespace starprod {

enum class Family {
  path,
  cycle,
  star,
  complete_bipartite,
  tensor_product,
  cartesian_product,
  custom,
};

/// Optional family tag attached to a graph. `a`/`b` carry the family sizes
/// (path/cycle/star length, bipartition sizes); unused for product/custom.
struct GraphLabel {
  Family kind = Family::custom;
  int a = 0;
  int b = 0;

  friend bool operator==(const GraphLabel&, const GraphLabel&) = default;
};

/// Immutable simple undirected graph with vertices 0..n-1.
///
/// The constructor canonicalizes the edge set: endpoints are ordered u < v,
/// duplicates removed, edges sorted lexicographically. Self-loops and
/// out-of-range endpoints are rejected. Instances are safe for concurrent
/// reads after construction.
class Graph {
public:
  Graph() = default;

  Graph(int n, std::vector<std::pair<int, int>> edges, GraphLabel label = {})
      : n_(n), label_(label) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    for (auto& [u, v] : edges) {
      if (u == v) throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("Graph: edge endpoint out of range");
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// Edges as (u,v) pairs with u < v, sorted lexicographically.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  /// Sorted neighbor list of v.
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }

  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  bool has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  const GraphLabel& label() const { return label_; }

private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
  GraphLabel label_;
};

/// Path on n vertices (n >= 1), edges i -- i+1.
inline Graph make_path(int n) {
  if (n < 1) throw std::invalid_argument("make_path: need n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges), {Family::path, n, 0});
}

/// Cycle on n vertices (n >= 3), edges i -- (i+1 mod n).
inline Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("make_cycle: need n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(edges), {Family::cycle, n, 0});
}

/// Star K_{1,n} (n >= 1): center 0, leaves 1..n.
inline Graph make_star(int n) {
  if (n < 1) throw std::invalid_argument("make_star: need n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i) edges.emplace_back(0, i);
  return Graph(n + 1, std::move(edges), {Family::star, n, 0});
}

/// Complete bipartite K_{a,b} (a,b >= 1): part A = 0..a-1, part B = a..a+b-1.
inline Graph make_complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("make_complete_bipartite: need a,b >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  return Graph(a + b, std::move(edges), {Family::complete_bipartite, a, b});
}

/// Row-major index of product vertex (i,j) when the second factor has n2
/// vertices. This order is fixed so patterns, colorings and files agree
/// bit-exactly across runs.
inline int flat_index(int i, int j, int n2) { return i * n2 + j; }

/// Tensor (direct) product: (i,j) ~ (i',j') iff i~i' in g and j~j' in h.
inline Graph tensor_product(const Graph& g, const Graph& h) {
  const int n1 = g.vertex_count(), n2 = h.vertex_count();
  if (n1 == 0 || n2 == 0) throw std::invalid_argument("tensor_product: empty factor");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(2 * g.edges().size() * h.edges().size());
  for (auto [u, up] : g.edges())
    for (auto [v, vp] : h.edges()) {
      edges.emplace_back(flat_index(u, v, n2), flat_index(up, vp, n2));
      edges.emplace_back(flat_index(u, vp, n2), flat_index(up, v, n2));
    }
  return Graph(n1 * n2, std::move(edges), {Family::tensor_product, n1, n2});
}

/// Cartesian product: (i,j) ~ (i',j') iff equal in one coordinate and
/// adjacent in the other.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
  const int n1 = g.vertex_count(), n2 = h.vertex_count();
  if (n1 == 0 || n2 == 0) throw std::invalid_argument("cartesian_product: empty factor");
  std::vector<std::pair<int, int>> edges;
  for (auto [u, up] : g.edges())
    for (int j = 0; j < n2; ++j) edges.emplace_back(flat_index(u, j, n2), flat_index(up, j, n2));
  for (auto [v, vp] : h.edges())
    for (int i = 0; i < n1; ++i) edges.emplace_back(flat_index(i, v, n2), flat_index(i, vp, n2));
  return Graph(n1 * n2, std::move(edges), {Family::cartesian_product, n1, n2});
}

/// Partition of a graph into connected components.
/// components[c] is the induced subgraph; to_parent[c][i] is the original
/// vertex id of local vertex i. Components are ordered by their smallest
/// original vertex, local vertices keep the original relative order.
struct ComponentSplit {
  std::vector<Graph> components;
  std::vector<std::vector<int>> to_parent;
};

inline ComponentSplit connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = ncomp;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v))
        if (comp[w] < 0) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
    }
    ++ncomp;
  }
  ComponentSplit out;
  out.to_parent.assign(ncomp, {});
  std::vector<int> local(n);
  for (int v = 0; v < n; ++v) {
    local[v] = static_cast<int>(out.to_parent[comp[v]].size());
    out.to_parent[comp[v]].push_back(v);
  }
  std::vector<std::vector<std::pair<int, int>>> comp_edges(ncomp);
  for (auto [u, v] : g.edges()) comp_edges[comp[u]].emplace_back(local[u], local[v]);
  for (int c = 0; c < ncomp; ++c)
    out.components.emplace_back(static_cast<int>(out.to_parent[c].size()), std::move(comp_edges[c]));
  return out;
}

/// True if g is bipartite (used by tests and by the product component
/// structure checks).
inline bool is_bipartite(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> side(n, -1);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace starprod
