#pragma once

#include <array>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "starprod/graph.hpp"

namespace starprod {

/// Total vertex coloring; colors are 1-based everywhere that is visible to
/// files or reports.
struct Coloring {
  std::vector<int> colors;

  int size() const { return static_cast<int>(colors.size()); }
  int at(int v) const { return colors[v]; }

  /// Number of distinct colors used.
  int color_count() const {
    std::set<int> s(colors.begin(), colors.end());
    return static_cast<int>(s.size());
  }

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// Result of checking a coloring. A star coloring is a proper coloring with
/// no path on four vertices using only two colors; the first witness of each
/// kind (in the deterministic vertex order) is reported.
struct VerificationReport {
  std::optional<std::pair<int, int>> proper_violation;  // edge with equal colors
  std::optional<std::array<int, 4>> star_violation;     // bicolored path w-u-v-x
  bool is_star = false;
};

/// Scan g under coloring c for properness and for bicolored P4s.
///
/// P4s are enumerated edge-centrically: for each edge u-v, each neighbor w of
/// u (w != v) and each neighbor x of v (x not in {u,w}) give the path
/// w-u-v-x, which is bicolored iff c(w)=c(v) and c(x)=c(u). Cost is
/// sum over edges of deg(u)*deg(v).
inline VerificationReport verify(const Graph& g, const Coloring& c) {
  if (c.size() != g.vertex_count())
    throw std::invalid_argument("verify: coloring length does not match vertex count");
  VerificationReport rep;
  for (auto [u, v] : g.edges()) {
    if (c.at(u) == c.at(v)) {
      rep.proper_violation = {u, v};
      break;
    }
  }
  for (auto [u, v] : g.edges()) {
    if (rep.star_violation) break;
    for (int w : g.neighbors(u)) {
      if (w == v || c.at(w) != c.at(v)) continue;
      for (int x : g.neighbors(v)) {
        if (x == u || x == w || c.at(x) != c.at(u)) continue;
        rep.star_violation = {{w, u, v, x}};
        break;
      }
      if (rep.star_violation) break;
    }
  }
  rep.is_star = !rep.proper_violation && !rep.star_violation;
  return rep;
}

inline bool is_star_coloring(const Graph& g, const Coloring& c) { return verify(g, c).is_star; }

/// Independent cross-check: a proper coloring is a star coloring iff the
/// union of every two color classes induces a star forest, i.e. no edge of
/// the union has both endpoints with induced degree >= 2.
inline bool verify_star_forest(const Graph& g, const Coloring& c) {
  if (c.size() != g.vertex_count())
    throw std::invalid_argument("verify_star_forest: coloring length mismatch");
  for (auto [u, v] : g.edges())
    if (c.at(u) == c.at(v)) throw std::invalid_argument("verify_star_forest: coloring not proper");

  const int n = g.vertex_count();
  std::set<std::pair<int, int>> pairs;
  for (auto [u, v] : g.edges()) {
    int a = c.at(u), b = c.at(v);
    if (a > b) std::swap(a, b);
    pairs.insert({a, b});
  }
  std::vector<int> deg(n);
  for (auto [a, b] : pairs) {
    std::fill(deg.begin(), deg.end(), 0);
    for (auto [u, v] : g.edges())
      if ((c.at(u) == a || c.at(u) == b) && (c.at(v) == a || c.at(v) == b)) {
        ++deg[u];
        ++deg[v];
      }
    for (auto [u, v] : g.edges())
      if ((c.at(u) == a || c.at(u) == b) && (c.at(v) == a || c.at(v) == b))
        if (deg[u] >= 2 && deg[v] >= 2) return false;
  }
  return true;
}

/// Relabel colors by first occurrence along the vertex order. Idempotent;
/// collapses the color-permutation symmetry class to one representative.
inline Coloring canonical_form(const Coloring& c) {
  std::unordered_map<int, int> relabel;
  Coloring out;
  out.colors.reserve(c.colors.size());
  int next = 1;
  for (int col : c.colors) {
    auto [it, inserted] = relabel.try_emplace(col, next);
    if (inserted) ++next;
    out.colors.push_back(it->second);
  }
  return out;
}

/// Apply a color permutation given as old color -> new color.
inline Coloring permute_colors(const Coloring& c, const std::unordered_map<int, int>& pi) {
  Coloring out = c;
  for (int& col : out.colors) col = pi.at(col);
  return out;
}

/// Restriction of a coloring to an induced subgraph described by a
/// local-to-parent vertex map (as produced by connected_components).
inline Coloring restrict_coloring(const Coloring& c, const std::vector<int>& to_parent) {
  Coloring out;
  out.colors.reserve(to_parent.size());
  for (int v : to_parent) out.colors.push_back(c.at(v));
  return out;
}

}  // namespace starprod
