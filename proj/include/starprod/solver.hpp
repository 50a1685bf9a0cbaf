#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <vector>

#include "starprod/coloring.hpp"
#include "starprod/graph.hpp"
#include "starprod/subgraph.hpp"

namespace starprod {

/// Search caps. Node budgets are the reproducible knob: two runs with the
/// same node budget explore the same tree. The wall-clock cap exists for
/// interactive use and may turn a run into Unknown nondeterministically.
struct SolverBudget {
  long long max_nodes = 100'000'000;
  double max_seconds = std::numeric_limits<double>::infinity();
};

enum class Decide { yes, no, unknown };

struct DecideResult {
  Decide outcome = Decide::unknown;
  std::optional<Coloring> witness;  // set iff outcome == yes; always verified
  long long nodes = 0;
};

/// Either an exact star chromatic number (lo == hi) or a bounded range.
/// `witness`, when present, is a verified star coloring with hi colors.
struct ChiResult {
  enum class Provenance { solver, formula, construction };
  int lo = 0;
  int hi = 0;
  std::optional<Coloring> witness;
  Provenance provenance = Provenance::solver;
  long long nodes = 0;

  bool exact() const { return lo == hi; }
};

struct EnumerateResult {
  std::vector<Coloring> colorings;  // canonical forms, lexicographically sorted
  bool complete = true;             // false iff the budget tripped
  long long nodes = 0;
};

namespace detail {

/// BFS order from the lowest-index vertex of each component, components in
/// order of their lowest vertex. Keeps the colored frontier contiguous so
/// the incremental bicolored-P4 checks touch few vertices.
inline std::vector<int> bfs_order(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> order;
  order.reserve(n);
  std::vector<char> seen(n, 0);
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    queue.clear();
    queue.push_back(s);
    for (size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      order.push_back(v);
      for (int w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
    }
  }
  return order;
}

/// Backtracking search for star colorings with at most k colors.
///
/// Vertices are assigned along `order` with first-occurrence symmetry
/// breaking: a vertex may use color c only if c <= 1 + max color used so
/// far. Each candidate (vertex, color) pair examined counts as one node.
class StarSearch {
public:
  StarSearch(const Graph& g, std::vector<int> order, int k, long long max_nodes,
             double max_seconds)
      : n_(g.vertex_count()),
        k_(k),
        order_(std::move(order)),
        max_nodes_(max_nodes),
        use_deadline_(std::isfinite(max_seconds)) {
    adj_off_.assign(n_ + 1, 0);
    for (int v = 0; v < n_; ++v) adj_off_[v + 1] = adj_off_[v] + g.degree(v);
    adj_flat_.resize(adj_off_[n_]);
    for (int v = 0; v < n_; ++v) {
      int at = adj_off_[v];
      for (int w : g.neighbors(v)) adj_flat_[at++] = w;
    }
    color_.assign(n_, 0);
    if (use_deadline_)
      deadline_ = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(max_seconds));
  }

  /// Decision mode: stop at the first complete coloring.
  bool find_one(std::vector<int>& out) {
    found_.clear();
    stop_after_first_ = true;
    dfs(0, 0);
    if (found_.empty()) return false;
    out = found_.front();
    return true;
  }

  /// Enumeration mode: visit every complete coloring (one canonical
  /// representative per color-permutation class along the search order).
  const std::vector<std::vector<int>>& enumerate_all() {
    found_.clear();
    stop_after_first_ = false;
    dfs(0, 0);
    return found_;
  }

  bool budget_hit() const { return budget_hit_; }
  long long nodes() const { return nodes_; }

private:
  bool time_exceeded() {
    if (!use_deadline_) return false;
    if ((nodes_ & 0xfff) != 0) return false;
    return std::chrono::steady_clock::now() >= deadline_;
  }

  bool proper_ok(int v, int c) const {
    for (int i = adj_off_[v]; i < adj_off_[v + 1]; ++i)
      if (color_[adj_flat_[i]] == c) return false;
    return true;
  }

  // Would assigning color c to v create a bicolored P4 among colored
  // vertices? Two shapes cover every path through v: v as an endpoint
  // (v-a-b-d, bad iff c(b)=c and c(d)=c(a)) and v as an inner vertex
  // (a-v-b-d, bad iff c(a)=c(b) and c(d)=c).
  bool star_ok(int v, int c) const {
    for (int ia = adj_off_[v]; ia < adj_off_[v + 1]; ++ia) {
      const int a = adj_flat_[ia];
      const int ca = color_[a];
      if (ca == 0) continue;
      for (int ib = adj_off_[a]; ib < adj_off_[a + 1]; ++ib) {
        const int b = adj_flat_[ib];
        if (b == v || color_[b] != c) continue;
        for (int id = adj_off_[b]; id < adj_off_[b + 1]; ++id) {
          const int d = adj_flat_[id];
          if (d == v || d == a) continue;
          if (color_[d] == ca) return false;
        }
      }
      for (int ib = adj_off_[v]; ib < adj_off_[v + 1]; ++ib) {
        const int b = adj_flat_[ib];
        if (b == a || color_[b] != ca) continue;
        for (int id = adj_off_[b]; id < adj_off_[b + 1]; ++id) {
          const int d = adj_flat_[id];
          if (d == v || d == a) continue;
          if (color_[d] == c) return false;
        }
      }
    }
    return true;
  }

  // Returns true to abort the whole search (first hit in decision mode or
  // budget exhaustion).
  bool dfs(int pos, int max_used) {
    if (pos == n_) {
      found_.emplace_back(color_.begin(), color_.end());
      return stop_after_first_;
    }
    const int v = order_[pos];
    const int cmax = std::min(k_, max_used + 1);
    for (int c = 1; c <= cmax; ++c) {
      if (++nodes_ > max_nodes_ || time_exceeded()) {
        budget_hit_ = true;
        return true;
      }
      if (!proper_ok(v, c) || !star_ok(v, c)) continue;
      color_[v] = c;
      if (dfs(pos + 1, std::max(max_used, c))) {
        color_[v] = 0;
        return true;
      }
      color_[v] = 0;
    }
    return false;
  }

  int n_;
  int k_;
  std::vector<int> order_;
  std::vector<int> adj_off_;
  std::vector<int> adj_flat_;
  std::vector<int> color_;
  std::vector<std::vector<int>> found_;
  long long nodes_ = 0;
  long long max_nodes_;
  bool use_deadline_;
  bool budget_hit_ = false;
  bool stop_after_first_ = true;
  std::chrono::steady_clock::time_point deadline_;
};

/// Lower bound from local structure: 3 if the graph has a triangle, else 2
/// if it has an edge, else 1.
inline int structural_lower_bound(const Graph& g) {
  if (g.edge_count() == 0) return 1;
  for (auto [u, v] : g.edges())
    for (int w : g.neighbors(u))
      if (w != v && g.has_edge(w, v)) return 3;
  return 2;
}

}  // namespace detail

/// Decide whether g has a star coloring with at most k colors. Components
/// are solved independently (each against the full budget) and the answers
/// conjoined; a No for any component settles the question regardless of
/// budget hits elsewhere.
inline DecideResult decide_k(const Graph& g, int k, const SolverBudget& budget = {}) {
  if (k < 1) throw std::invalid_argument("decide_k: need k >= 1");
  DecideResult result;
  auto split = connected_components(g);
  std::vector<int> colors(g.vertex_count(), 0);
  bool any_unknown = false;
  for (size_t ci = 0; ci < split.components.size(); ++ci) {
    const Graph& comp = split.components[ci];
    detail::StarSearch search(comp, detail::bfs_order(comp), k, budget.max_nodes,
                              budget.max_seconds);
    std::vector<int> local;
    bool found = search.find_one(local);
    result.nodes += search.nodes();
    if (found) {
      for (int i = 0; i < comp.vertex_count(); ++i) colors[split.to_parent[ci][i]] = local[i];
    } else if (search.budget_hit()) {
      any_unknown = true;
    } else {
      result.outcome = Decide::no;
      return result;
    }
  }
  if (any_unknown) {
    result.outcome = Decide::unknown;
    return result;
  }
  Coloring witness{std::move(colors)};
  if (!is_star_coloring(g, witness))
    throw std::logic_error("decide_k: search produced a non-star coloring");
  result.outcome = Decide::yes;
  result.witness = std::move(witness);
  return result;
}

namespace detail {

struct ComponentChi {
  int lo = 1;
  int hi = 0;
  std::vector<int> witness;  // component-local, colors at hi
  long long nodes = 0;
};

/// Ascending search over k for one connected component, starting from a
/// trusted lower bound seed.
inline ComponentChi chi_component(const Graph& comp, int seed, const SolverBudget& budget) {
  ComponentChi out;
  out.lo = std::max(seed, structural_lower_bound(comp));
  const int n = comp.vertex_count();
  const auto order = bfs_order(comp);
  for (int k = out.lo; k <= n; ++k) {
    StarSearch search(comp, order, k, budget.max_nodes, budget.max_seconds);
    std::vector<int> local;
    bool found = search.find_one(local);
    out.nodes += search.nodes();
    if (found) {
      // The witness may use fewer than k distinct colors, which tightens hi.
      // With the ascending color order the distinct colors are 1..used.
      int used = 0;
      for (int c : local) used = std::max(used, c);
      out.hi = used;
      out.witness = std::move(local);
      return out;
    }
    if (!search.budget_hit()) {
      // A completed No at k proves No below k as well, so this raises the
      // bound even when an earlier probe was inconclusive.
      out.lo = k + 1;
    }
  }
  // k = n cannot fail the search itself (n fresh colors always extend), so
  // reaching this point means the budget tripped on every remaining probe.
  out.hi = n;
  out.witness.assign(n, 0);
  for (int i = 0; i < n; ++i) out.witness[order[i]] = i + 1;
  return out;
}

}  // namespace detail

/// Exact star chromatic number by ascending search, with per-component
/// decomposition (chi of the whole is the max over components). Returns
/// Exact (lo == hi) when every required No-certificate completed within
/// budget, otherwise a Range whose hi carries a verified witness.
inline ChiResult chi_star_seeded(const Graph& g, int seed, const SolverBudget& budget = {}) {
  ChiResult result;
  result.provenance = ChiResult::Provenance::solver;
  auto split = connected_components(g);
  std::vector<int> colors(g.vertex_count(), 1);
  int lo = 1, hi = 1;
  if (g.vertex_count() == 0) {
    result.lo = result.hi = 0;
    result.witness = Coloring{{}};
    return result;
  }
  for (size_t ci = 0; ci < split.components.size(); ++ci) {
    auto comp = detail::chi_component(split.components[ci], seed, budget);
    result.nodes += comp.nodes;
    lo = std::max(lo, comp.lo);
    hi = std::max(hi, comp.hi);
    for (int i = 0; i < split.components[ci].vertex_count(); ++i)
      colors[split.to_parent[ci][i]] = comp.witness[i];
  }
  result.lo = lo;
  result.hi = hi;
  Coloring witness{std::move(colors)};
  if (!is_star_coloring(g, witness))
    throw std::logic_error("chi_star: assembled witness failed verification");
  result.witness = std::move(witness);
  return result;
}

inline ChiResult chi_star(const Graph& g, const SolverBudget& budget = {}) {
  return chi_star_seeded(g, 1, budget);
}

/// chi_star with the lower bound seeded from known-chi gadget subgraphs: a
/// gadget that embeds in a component raises that component's seed, skipping
/// the expensive No-certificates below it (subgraph monotonicity).
inline ChiResult chi_star_with_lower_bound_gadgets(
    const Graph& g, const std::vector<std::pair<Graph, int>>& gadgets,
    const SolverBudget& budget = {}, long long embed_budget = 5'000'000) {
  ChiResult result;
  result.provenance = ChiResult::Provenance::solver;
  auto split = connected_components(g);
  if (g.vertex_count() == 0) return chi_star(g, budget);
  std::vector<int> colors(g.vertex_count(), 1);
  int lo = 1, hi = 1;
  for (size_t ci = 0; ci < split.components.size(); ++ci) {
    const Graph& comp_graph = split.components[ci];
    int seed = 1;
    for (const auto& [gadget, chi] : gadgets) {
      if (chi <= seed || gadget.vertex_count() > comp_graph.vertex_count()) continue;
      // A budget-limited embedding probe may only strengthen the seed;
      // an inconclusive probe is treated as "not embedded".
      if (contains_subgraph(comp_graph, gadget, embed_budget)) seed = chi;
    }
    auto comp = detail::chi_component(comp_graph, seed, budget);
    result.nodes += comp.nodes;
    lo = std::max(lo, comp.lo);
    hi = std::max(hi, comp.hi);
    for (int i = 0; i < comp_graph.vertex_count(); ++i)
      colors[split.to_parent[ci][i]] = comp.witness[i];
  }
  result.lo = lo;
  result.hi = hi;
  Coloring witness{std::move(colors)};
  if (!is_star_coloring(g, witness))
    throw std::logic_error("chi_star_with_lower_bound_gadgets: witness failed verification");
  result.witness = std::move(witness);
  return result;
}

/// All star colorings of g with at most k colors, one representative per
/// color-permutation class, emitted in canonical form and sorted. Symmetry
/// breaking runs over the whole graph (components concatenated) so that
/// cross-component color interleavings are counted once per class.
inline EnumerateResult enumerate_canonical(const Graph& g, int k, const SolverBudget& budget = {}) {
  if (k < 1) throw std::invalid_argument("enumerate_canonical: need k >= 1");
  EnumerateResult out;
  detail::StarSearch search(g, detail::bfs_order(g), k, budget.max_nodes, budget.max_seconds);
  const auto& all = search.enumerate_all();
  out.nodes = search.nodes();
  out.complete = !search.budget_hit();
  std::set<std::vector<int>> dedup;
  for (const auto& raw : all) dedup.insert(canonical_form(Coloring{raw}).colors);
  out.colorings.reserve(dedup.size());
  for (auto& v : dedup) out.colorings.push_back(Coloring{v});
  return out;
}

}  // namespace starprod
