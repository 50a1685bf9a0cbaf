#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "starprod/coloring.hpp"
#include "starprod/constructions.hpp"
#include "starprod/errors.hpp"
#include "starprod/graph.hpp"
#include "starprod/solver.hpp"

namespace starprod {

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// DIMACS-like graph format: "p edge <n> <m>" header, "e <u> <v>" lines with
// 1-based endpoints, edges written in sorted order. "c" lines are comments.
// ---------------------------------------------------------------------------

inline Graph read_graph_dimacs(std::istream& in) {
  std::string line;
  int n = -1;
  long long m = -1;
  std::vector<std::pair<int, int>> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    std::string kind;
    ls >> kind;
    if (kind == "p") {
      std::string fmt;
      if (!(ls >> fmt >> n >> m) || fmt != "edge")
        throw parse_error("dimacs line " + std::to_string(lineno) + ": bad problem line");
    } else if (kind == "e") {
      int u, v;
      if (!(ls >> u >> v))
        throw parse_error("dimacs line " + std::to_string(lineno) + ": bad edge line");
      if (n < 0) throw parse_error("dimacs: edge before problem line");
      if (u < 1 || v < 1 || u > n || v > n)
        throw parse_error("dimacs line " + std::to_string(lineno) + ": endpoint out of range");
      edges.emplace_back(u - 1, v - 1);
    } else {
      throw parse_error("dimacs line " + std::to_string(lineno) + ": unknown line type '" + kind +
                        "'");
    }
  }
  if (n < 0) throw parse_error("dimacs: missing problem line");
  if (m >= 0 && m != static_cast<long long>(edges.size()))
    throw parse_error("dimacs: header declares " + std::to_string(m) + " edges, found " +
                      std::to_string(edges.size()));
  try {
    return Graph(n, std::move(edges));
  } catch (const std::invalid_argument& ex) {
    throw parse_error(std::string("dimacs: ") + ex.what());
  }
}

inline void write_graph_dimacs(std::ostream& out, const Graph& g) {
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

// ---------------------------------------------------------------------------
// JSON forms. Graph: {"n":..., "edges":[[u,v],...], "label":{...}} with
// 0-based endpoints; coloring: {"k":..., "colors":[...]} with 1-based colors.
// ---------------------------------------------------------------------------

namespace detail {

inline const char* family_name(Family f) {
  switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::star: return "star";
    case Family::complete_bipartite: return "complete_bipartite";
    case Family::tensor_product: return "tensor_product";
    case Family::cartesian_product: return "cartesian_product";
    default: return "custom";
  }
}

inline Family family_from_name(const std::string& s) {
  if (s == "path") return Family::path;
  if (s == "cycle") return Family::cycle;
  if (s == "star") return Family::star;
  if (s == "complete_bipartite") return Family::complete_bipartite;
  if (s == "tensor_product") return Family::tensor_product;
  if (s == "cartesian_product") return Family::cartesian_product;
  if (s == "custom") return Family::custom;
  throw parse_error("unknown family label '" + s + "'");
}

}  // namespace detail

inline ordered_json graph_to_json(const Graph& g) {
  ordered_json j;
  j["n"] = g.vertex_count();
  auto& edges = j["edges"] = ordered_json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  if (g.label().kind != Family::custom) {
    j["label"] = {{"kind", detail::family_name(g.label().kind)},
                  {"a", g.label().a},
                  {"b", g.label().b}};
  }
  return j;
}

inline Graph graph_from_json(const ordered_json& j) {
  try {
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw parse_error("graph json: bad edge entry");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    GraphLabel label;
    if (j.contains("label")) {
      const auto& l = j.at("label");
      label.kind = detail::family_from_name(l.at("kind").get<std::string>());
      label.a = l.value("a", 0);
      label.b = l.value("b", 0);
    }
    return Graph(n, std::move(edges), label);
  } catch (const nlohmann::json::exception& ex) {
    throw parse_error(std::string("graph json: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw parse_error(std::string("graph json: ") + ex.what());
  }
}

inline Graph read_graph_json(std::istream& in) {
  ordered_json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw parse_error(std::string("graph json: ") + ex.what());
  }
  return graph_from_json(j);
}

inline void write_graph_json(std::ostream& out, const Graph& g) {
  out << graph_to_json(g).dump(2) << '\n';
}

inline Coloring read_coloring_json(std::istream& in) {
  ordered_json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw parse_error(std::string("coloring json: ") + ex.what());
  }
  try {
    Coloring c;
    for (const auto& v : j.at("colors")) c.colors.push_back(v.get<int>());
    for (int col : c.colors)
      if (col < 1) throw parse_error("coloring json: colors are 1-based");
    if (j.contains("k") && j.at("k").get<int>() != c.color_count())
      throw parse_error("coloring json: declared k does not match distinct colors");
    return c;
  } catch (const nlohmann::json::exception& ex) {
    throw parse_error(std::string("coloring json: ") + ex.what());
  }
}

inline void write_coloring_json(std::ostream& out, const Coloring& c) {
  ordered_json j;
  j["k"] = c.color_count();
  j["colors"] = c.colors;
  out << j.dump(2) << '\n';
}

// ---------------------------------------------------------------------------
// Inline product specs: "P7", "C5", "C3xC4", "P4xC6", ...
// ---------------------------------------------------------------------------

struct ParsedSpec {
  Graph graph;
  std::optional<ProductSpec> product;  // present iff the spec names a product
  std::optional<FactorSpec> single;    // present iff the spec names one factor
};

inline ParsedSpec parse_spec(const std::string& s) {
  auto read_factor = [&](size_t& pos) -> FactorSpec {
    if (pos >= s.size() || (s[pos] != 'P' && s[pos] != 'C'))
      throw parse_error("spec '" + s + "': expected P or C at position " + std::to_string(pos));
    FactorSpec f;
    f.kind = s[pos] == 'P' ? Family::path : Family::cycle;
    ++pos;
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw parse_error("spec '" + s + "': missing size");
    f.n = std::stoi(s.substr(start, pos - start));
    return f;
  };
  size_t pos = 0;
  FactorSpec left = read_factor(pos);
  ParsedSpec out;
  if (pos == s.size()) {
    try {
      out.graph = build_factor(left);
    } catch (const std::invalid_argument& ex) {
      throw parse_error("spec '" + s + "': " + ex.what());
    }
    out.single = left;
    return out;
  }
  if (s[pos] != 'x') throw parse_error("spec '" + s + "': expected 'x'");
  ++pos;
  FactorSpec right = read_factor(pos);
  if (pos != s.size()) throw parse_error("spec '" + s + "': trailing characters");
  try {
    out.graph = build_product({left, right});
  } catch (const std::invalid_argument& ex) {
    throw parse_error("spec '" + s + "': " + ex.what());
  }
  out.product = ProductSpec{left, right};
  return out;
}

inline bool looks_like_spec(const std::string& s) {
  return !s.empty() && (s[0] == 'P' || s[0] == 'C') && s.size() >= 2 &&
         std::isdigit(static_cast<unsigned char>(s[1]));
}

/// CLI argument resolution: an inline spec when it parses as one, otherwise a
/// graph file (JSON if the extension says so, DIMACS otherwise).
inline ParsedSpec load_graph_argument(const std::string& arg) {
  if (looks_like_spec(arg)) return parse_spec(arg);
  std::ifstream in(arg);
  if (!in) throw parse_error("cannot open graph file: " + arg);
  ParsedSpec out;
  std::filesystem::path p(arg);
  if (p.extension() == ".json")
    out.graph = read_graph_json(in);
  else
    out.graph = read_graph_dimacs(in);
  return out;
}

// ---------------------------------------------------------------------------
// ChiResult JSON and digests.
// ---------------------------------------------------------------------------

inline ordered_json chi_result_json(const ChiResult& r) {
  ordered_json j;
  if (r.exact())
    j["exact"] = r.hi;
  else
    j["range"] = {r.lo, r.hi};
  switch (r.provenance) {
    case ChiResult::Provenance::solver: j["provenance"] = "solver"; break;
    case ChiResult::Provenance::formula: j["provenance"] = "formula"; break;
    case ChiResult::Provenance::construction: j["provenance"] = "construction"; break;
  }
  if (r.nodes > 0) j["nodes"] = r.nodes;
  if (r.witness) j["witness_colors"] = r.witness->color_count();
  return j;
}

/// FNV-1a 64-bit digest, used by the run manifests to pin file contents.
inline std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex_digest(const std::string& bytes) {
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(bytes);
  return out.str();
}

inline std::string read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace starprod
