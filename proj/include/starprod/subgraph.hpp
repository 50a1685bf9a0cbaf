#pragma once

#include <algorithm>
#include <vector>

#include "starprod/graph.hpp"

namespace starprod {

/// Outcome of a subgraph embedding search. `budget_exceeded` means
/// "unknown", never "absent".
struct EmbeddingResult {
  enum class Status { found, absent, budget_exceeded };
  Status status = Status::absent;
  std::vector<int> map;  // gadget vertex -> host vertex, valid iff found
  long long nodes = 0;   // candidate assignments examined

  explicit operator bool() const { return status == Status::found; }
};

namespace detail {

/// Order gadget vertices so each one (after the first per component) has a
/// previously ordered neighbor; start from a max-degree vertex. Keeps the
/// candidate sets small during the match.
inline std::vector<int> matching_order(const Graph& gadget) {
  const int n = gadget.vertex_count();
  std::vector<int> order;
  std::vector<char> placed(n, 0);
  while (static_cast<int>(order.size()) < n) {
    int best = -1, best_score = -1;
    for (int v = 0; v < n; ++v) {
      if (placed[v]) continue;
      int anchored = 0;
      for (int w : gadget.neighbors(v)) anchored += placed[w];
      // Prefer vertices attached to the partial order; break ties by degree.
      int score = anchored * 1000 + gadget.degree(v);
      if (score > best_score) {
        best_score = score;
        best = v;
      }
    }
    placed[best] = 1;
    order.push_back(best);
  }
  return order;
}

}  // namespace detail

/// Search for an injective map sending gadget edges to host edges (ordinary
/// subgraph, not induced). Exhausting the search space without a match is a
/// proof of absence; hitting the node budget is not.
inline EmbeddingResult contains_subgraph(const Graph& host, const Graph& gadget,
                                         long long node_budget = 2'000'000) {
  if (gadget.vertex_count() > 20)
    throw std::invalid_argument("contains_subgraph: gadget limited to 20 vertices");
  EmbeddingResult result;
  const int gn = gadget.vertex_count();
  if (gn == 0) {
    result.status = EmbeddingResult::Status::found;
    return result;
  }
  if (gn > host.vertex_count() || gadget.edge_count() > host.edge_count()) {
    result.status = EmbeddingResult::Status::absent;
    return result;
  }

  const std::vector<int> order = detail::matching_order(gadget);
  std::vector<int> pos_of(gn);
  for (int i = 0; i < gn; ++i) pos_of[order[i]] = i;
  // Gadget neighbors already placed when each position is reached.
  std::vector<std::vector<int>> back_nb(gn);
  for (int i = 0; i < gn; ++i)
    for (int w : gadget.neighbors(order[i]))
      if (pos_of[w] < i) back_nb[i].push_back(w);

  std::vector<int> map(gn, -1);
  std::vector<char> used(host.vertex_count(), 0);
  long long nodes = 0;
  bool out_of_budget = false;

  auto feasible = [&](int pos, int hv) {
    if (used[hv]) return false;
    if (host.degree(hv) < gadget.degree(order[pos])) return false;
    for (int w : back_nb[pos])
      if (!host.has_edge(map[w], hv)) return false;
    return true;
  };

  // Depth-first over positions; candidates come from host neighbors of an
  // already-mapped gadget neighbor when one exists.
  auto dfs = [&](auto&& self, int pos) -> bool {
    if (pos == gn) return true;
    const int gv = order[pos];
    if (!back_nb[pos].empty()) {
      int anchor = map[back_nb[pos].front()];
      for (int hv : host.neighbors(anchor)) {
        if (++nodes > node_budget) {
          out_of_budget = true;
          return false;
        }
        if (!feasible(pos, hv)) continue;
        map[gv] = hv;
        used[hv] = 1;
        if (self(self, pos + 1)) return true;
        used[hv] = 0;
        map[gv] = -1;
        if (out_of_budget) return false;
      }
    } else {
      for (int hv = 0; hv < host.vertex_count(); ++hv) {
        if (++nodes > node_budget) {
          out_of_budget = true;
          return false;
        }
        if (!feasible(pos, hv)) continue;
        map[gv] = hv;
        used[hv] = 1;
        if (self(self, pos + 1)) return true;
        used[hv] = 0;
        map[gv] = -1;
        if (out_of_budget) return false;
      }
    }
    return false;
  };

  bool found = dfs(dfs, 0);
  result.nodes = nodes;
  if (found) {
    // Re-check the embedding before handing it out.
    for (auto [u, v] : gadget.edges())
      if (!host.has_edge(map[u], map[v]))
        throw std::logic_error("contains_subgraph: produced an invalid embedding");
    result.status = EmbeddingResult::Status::found;
    result.map = std::move(map);
  } else {
    result.status = out_of_budget ? EmbeddingResult::Status::budget_exceeded
                                  : EmbeddingResult::Status::absent;
  }
  return result;
}

}  // namespace starprod
