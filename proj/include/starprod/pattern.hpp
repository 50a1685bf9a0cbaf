#pragma once

#include <cctype>
#include <istream>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "starprod/coloring.hpp"
#include "starprod/errors.hpp"
#include "starprod/graph.hpp"

namespace starprod {

/// An r x s color matrix describing a coloring of (cycle-or-path r) x
/// (cycle-or-path s): cell (i,j) colors product vertex (i,j). A wrap flag
/// marks the corresponding factor as a cycle.
struct Pattern {
  int rows = 0;
  int cols = 0;
  std::vector<int> cells;  // row-major, 1-based colors
  bool wrap_rows = false;
  bool wrap_cols = false;
  std::string source;  // free-form provenance tag, carried through files

  int at(int i, int j) const { return cells[i * cols + j]; }
  int& at(int i, int j) { return cells[i * cols + j]; }

  int color_count() const { return Coloring{cells}.color_count(); }

  friend bool operator==(const Pattern& a, const Pattern& b) {
    return a.rows == b.rows && a.cols == b.cols && a.cells == b.cells &&
           a.wrap_rows == b.wrap_rows && a.wrap_cols == b.wrap_cols;
  }
};

inline Pattern make_pattern(int rows, int cols, std::vector<std::vector<int>> entries,
                            bool wrap_rows, bool wrap_cols, std::string source = {}) {
  Pattern p;
  p.rows = rows;
  p.cols = cols;
  p.wrap_rows = wrap_rows;
  p.wrap_cols = wrap_cols;
  p.source = std::move(source);
  p.cells.reserve(rows * cols);
  if (static_cast<int>(entries.size()) != rows)
    throw std::invalid_argument("make_pattern: row count mismatch");
  for (const auto& row : entries) {
    if (static_cast<int>(row.size()) != cols)
      throw std::invalid_argument("make_pattern: column count mismatch");
    p.cells.insert(p.cells.end(), row.begin(), row.end());
  }
  return p;
}

namespace detail {
inline void check_pattern(const Pattern& p, const char* where) {
  if (p.rows < 1 || p.cols < 1) throw std::invalid_argument(std::string(where) + ": empty pattern");
  if (static_cast<int>(p.cells.size()) != p.rows * p.cols)
    throw std::invalid_argument(std::string(where) + ": cell count mismatch");
  for (int c : p.cells)
    if (c < 1) throw std::invalid_argument(std::string(where) + ": colors are 1-based");
  if (p.wrap_rows && p.rows < 3)
    throw std::invalid_argument(std::string(where) + ": wrapped rows need >= 3 rows");
  if (p.wrap_cols && p.cols < 3)
    throw std::invalid_argument(std::string(where) + ": wrapped cols need >= 3 cols");
}
}  // namespace detail

/// Build the product graph named by the pattern shape and the coloring the
/// matrix assigns to it (row-major vertex order).
inline std::pair<Graph, Coloring> pattern_to_coloring(const Pattern& p) {
  detail::check_pattern(p, "pattern_to_coloring");
  Graph row_factor = p.wrap_rows ? make_cycle(p.rows) : make_path(p.rows);
  Graph col_factor = p.wrap_cols ? make_cycle(p.cols) : make_path(p.cols);
  Graph product = tensor_product(row_factor, col_factor);
  return {std::move(product), Coloring{p.cells}};
}

/// Replicate the matrix blockwise: vert_copies times down, horiz_copies
/// times across. Wrap flags are preserved; validity of the tiled coloring is
/// the verifier's call, not assumed here.
inline Pattern tile(const Pattern& p, int vert_copies, int horiz_copies) {
  if (vert_copies < 1 || horiz_copies < 1) throw std::invalid_argument("tile: copies must be >= 1");
  Pattern out;
  out.rows = p.rows * vert_copies;
  out.cols = p.cols * horiz_copies;
  out.wrap_rows = p.wrap_rows;
  out.wrap_cols = p.wrap_cols;
  out.source = p.source;
  out.cells.resize(static_cast<size_t>(out.rows) * out.cols);
  for (int i = 0; i < out.rows; ++i)
    for (int j = 0; j < out.cols; ++j) out.at(i, j) = p.at(i % p.rows, j % p.cols);
  return out;
}

/// Transpose; colors a product with the factors swapped, matching the
/// (i,j) -> (j,i) isomorphism between G x H and H x G.
inline Pattern transpose(const Pattern& p) {
  Pattern out;
  out.rows = p.cols;
  out.cols = p.rows;
  out.wrap_rows = p.wrap_cols;
  out.wrap_cols = p.wrap_rows;
  out.source = p.source;
  out.cells.resize(p.cells.size());
  for (int i = 0; i < out.rows; ++i)
    for (int j = 0; j < out.cols; ++j) out.at(i, j) = p.at(j, i);
  return out;
}

/// Drop a wrap flag, turning the cycle factor into a path on the same
/// vertices. The matrix is unchanged; the colored graph loses the wrap
/// edges, so a star coloring stays star (subgraph monotonicity).
inline Pattern unwrap_rows(Pattern p) {
  p.wrap_rows = false;
  return p;
}
inline Pattern unwrap_cols(Pattern p) {
  p.wrap_cols = false;
  return p;
}

/// Keep the first `rows` rows (valid for unwrapped row factors: a shorter
/// path is a subgraph).
inline Pattern take_rows(const Pattern& p, int rows) {
  if (p.wrap_rows) throw std::invalid_argument("take_rows: cannot cut a wrapped axis");
  if (rows < 1 || rows > p.rows) throw std::invalid_argument("take_rows: bad row count");
  Pattern out = p;
  out.rows = rows;
  out.cells.assign(p.cells.begin(), p.cells.begin() + static_cast<size_t>(rows) * p.cols);
  return out;
}

// ---------------------------------------------------------------------------
// Nonnegative integer representation k = alpha*a + beta*b (coprime a, b).
// ---------------------------------------------------------------------------

/// Smallest-alpha nonnegative solution of alpha*a + beta*b = k, or nullopt
/// when k is not representable. Representability is guaranteed for
/// k >= (a-1)(b-1).
inline std::optional<std::pair<int, int>> sylvester_represent(int k, int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("sylvester_represent: need a,b >= 1");
  if (std::gcd(a, b) != 1) throw std::invalid_argument("sylvester_represent: a,b must be coprime");
  if (k < 0) return std::nullopt;
  for (int alpha = 0; alpha * a <= k; ++alpha) {
    int rest = k - alpha * a;
    if (rest % b == 0) return std::make_pair(alpha, rest / b);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Stitching: concatenation of patterns that agree on a narrow boundary.
// ---------------------------------------------------------------------------

/// A concatenation recipe: bank pattern ids with multiplicities, applied
/// along one axis. Pieces must agree on the leading overlap_width columns
/// (rows for vertical stitching); width 3 suffices because a P4 in these
/// products spans at most four consecutive columns.
struct StitchPlan {
  enum class Axis { horizontal, vertical };
  Axis axis = Axis::horizontal;
  std::vector<std::pair<std::string, int>> pieces;  // (bank id, multiplicity)
  int overlap_width = 3;
};

namespace detail {

inline void check_h_prefix(const Pattern& base, const Pattern& piece, int width,
                           const std::string& id) {
  for (int i = 0; i < base.rows; ++i)
    for (int j = 0; j < width; ++j)
      if (base.at(i, j) != piece.at(i, j))
        throw stitch_error("hstitch: piece '" + id + "' disagrees on prefix cell (" +
                               std::to_string(i) + "," + std::to_string(j) + ")",
                           i, j);
}

}  // namespace detail

/// Concatenate pieces left-to-right in plan order. All pieces must share row
/// count, row wrap flag, a cyclic column axis, and an identical
/// overlap_width-column prefix. The result wraps its columns and is NOT
/// assumed valid; callers verify.
template <typename BankLookup>
inline Pattern hstitch(const StitchPlan& plan, BankLookup&& bank) {
  std::vector<std::pair<std::string, const Pattern*>> expanded;
  for (const auto& [id, mult] : plan.pieces) {
    if (mult < 0) throw std::invalid_argument("hstitch: negative multiplicity");
    const Pattern& p = bank(id);
    for (int i = 0; i < mult; ++i) expanded.emplace_back(id, &p);
  }
  if (expanded.empty()) throw std::invalid_argument("hstitch: no pieces");
  const Pattern& first = *expanded.front().second;
  Pattern out;
  out.rows = first.rows;
  out.cols = 0;
  out.wrap_rows = first.wrap_rows;
  out.wrap_cols = true;
  for (const auto& [id, piece] : expanded) {
    if (piece->rows != first.rows || piece->wrap_rows != first.wrap_rows)
      throw std::invalid_argument("hstitch: piece '" + id + "' has incompatible rows");
    if (!piece->wrap_cols)
      throw std::invalid_argument("hstitch: piece '" + id + "' must wrap its columns");
    if (piece->cols < plan.overlap_width + 1)
      throw std::invalid_argument("hstitch: piece '" + id + "' is narrower than the overlap");
    detail::check_h_prefix(first, *piece, plan.overlap_width, id);
    out.cols += piece->cols;
  }
  out.cells.resize(static_cast<size_t>(out.rows) * out.cols);
  int col0 = 0;
  for (const auto& [id, piece] : expanded) {
    for (int i = 0; i < out.rows; ++i)
      for (int j = 0; j < piece->cols; ++j) out.at(i, col0 + j) = piece->at(i, j);
    col0 += piece->cols;
  }
  return out;
}

/// Transpose analogue of hstitch: stack pieces top-to-bottom, requiring an
/// identical overlap_width-row prefix; result wraps its rows.
template <typename BankLookup>
inline Pattern vstitch(const StitchPlan& plan, BankLookup&& bank) {
  std::map<std::string, Pattern> transposed;
  for (const auto& [id, mult] : plan.pieces)
    if (!transposed.count(id)) transposed.emplace(id, transpose(bank(id)));
  StitchPlan tplan = plan;
  tplan.axis = StitchPlan::Axis::horizontal;
  return transpose(hstitch(
      tplan, [&](const std::string& id) -> const Pattern& { return transposed.at(id); }));
}

/// Assemble an m x n doubly-wrapped pattern from the four 4/5-sided base
/// blocks: rows split as m = 4a+5b, columns as n = 4c+5d (minimal-alpha
/// representations), and the band at (height h, width w) is the bank entry
/// named prefix + "C{h}xC{w}". Possible for all m, n >= 12.
template <typename BankLookup>
inline Pattern block_compose(int m, int n, BankLookup&& bank) {
  if (m < 12 || n < 12) throw std::invalid_argument("block_compose: need m, n >= 12");
  auto rows_rep = sylvester_represent(m, 4, 5);
  auto cols_rep = sylvester_represent(n, 4, 5);
  if (!rows_rep || !cols_rep)
    throw std::invalid_argument("block_compose: size not representable by 4s and 5s");
  std::vector<int> row_bands, col_bands;
  row_bands.insert(row_bands.end(), rows_rep->first, 4);
  row_bands.insert(row_bands.end(), rows_rep->second, 5);
  col_bands.insert(col_bands.end(), cols_rep->first, 4);
  col_bands.insert(col_bands.end(), cols_rep->second, 5);

  Pattern out;
  out.rows = m;
  out.cols = n;
  out.wrap_rows = true;
  out.wrap_cols = true;
  out.cells.resize(static_cast<size_t>(m) * n);
  int r0 = 0;
  for (int h : row_bands) {
    int c0 = 0;
    for (int w : col_bands) {
      const Pattern& block =
          bank("C" + std::to_string(h) + "xC" + std::to_string(w));
      if (block.rows != h || block.cols != w)
        throw std::invalid_argument("block_compose: bank block has wrong shape");
      for (int i = 0; i < h; ++i)
        for (int j = 0; j < w; ++j) out.at(r0 + i, c0 + j) = block.at(i, j);
      c0 += w;
    }
    r0 += h;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pattern CSV file format.
// ---------------------------------------------------------------------------
// Header line:  # rows=<r> cols=<s> wrap_rows=<0|1> wrap_cols=<0|1> source=<tag>
// followed by r lines of s comma-separated integers. LF endings, bit-exact
// round trips.

inline Pattern parse_pattern_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw parse_error("pattern: empty input");
  if (line.empty() || line[0] != '#') throw parse_error("pattern: missing '#' header line");
  Pattern p;
  {
    std::istringstream hs(line.substr(1));
    std::string tok;
    int seen = 0;
    while (hs >> tok) {
      auto eq = tok.find('=');
      if (eq == std::string::npos) throw parse_error("pattern: bad header token '" + tok + "'");
      std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
      try {
        if (key == "rows") {
          p.rows = std::stoi(val);
          ++seen;
        } else if (key == "cols") {
          p.cols = std::stoi(val);
          ++seen;
        } else if (key == "wrap_rows") {
          p.wrap_rows = std::stoi(val) != 0;
          ++seen;
        } else if (key == "wrap_cols") {
          p.wrap_cols = std::stoi(val) != 0;
          ++seen;
        } else if (key == "source") {
          p.source = val;
        } else {
          throw parse_error("pattern: unknown header key '" + key + "'");
        }
      } catch (const std::invalid_argument&) {
        throw parse_error("pattern: bad value for header key '" + key + "'");
      }
    }
    if (seen != 4) throw parse_error("pattern: header must set rows, cols, wrap_rows, wrap_cols");
  }
  if (p.rows < 1 || p.cols < 1) throw parse_error("pattern: non-positive dimensions");
  p.cells.reserve(static_cast<size_t>(p.rows) * p.cols);
  for (int i = 0; i < p.rows; ++i) {
    if (!std::getline(in, line)) throw parse_error("pattern: expected " + std::to_string(p.rows) +
                                                   " rows, got " + std::to_string(i));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string cell;
    int count = 0;
    while (std::getline(ls, cell, ',')) {
      try {
        size_t pos = 0;
        int v = std::stoi(cell, &pos);
        while (pos < cell.size() && std::isspace(static_cast<unsigned char>(cell[pos]))) ++pos;
        if (pos != cell.size()) throw std::invalid_argument("");
        if (v < 1) throw parse_error("pattern: colors are 1-based");
        p.cells.push_back(v);
      } catch (const std::invalid_argument&) {
        throw parse_error("pattern: bad cell '" + cell + "' in row " + std::to_string(i + 1));
      } catch (const std::out_of_range&) {
        throw parse_error("pattern: cell out of range in row " + std::to_string(i + 1));
      }
      ++count;
    }
    if (count != p.cols)
      throw parse_error("pattern: row " + std::to_string(i + 1) + " has " + std::to_string(count) +
                        " cells, expected " + std::to_string(p.cols));
  }
  detail::check_pattern(p, "parse_pattern_csv");
  return p;
}

inline Pattern parse_pattern_csv(const std::string& text) {
  std::istringstream in(text);
  return parse_pattern_csv(in);
}

inline void write_pattern_csv(std::ostream& out, const Pattern& p) {
  out << "# rows=" << p.rows << " cols=" << p.cols << " wrap_rows=" << (p.wrap_rows ? 1 : 0)
      << " wrap_cols=" << (p.wrap_cols ? 1 : 0);
  if (!p.source.empty()) out << " source=" << p.source;
  out << '\n';
  for (int i = 0; i < p.rows; ++i) {
    for (int j = 0; j < p.cols; ++j) {
      if (j) out << ',';
      out << p.at(i, j);
    }
    out << '\n';
  }
}

inline std::string pattern_csv_string(const Pattern& p) {
  std::ostringstream out;
  write_pattern_csv(out, p);
  return out.str();
}

/// Reshape a coloring of an r x s product back into a matrix (inverse of
/// pattern_to_coloring for row-major products).
inline Pattern coloring_to_pattern(const Coloring& c, int rows, int cols, bool wrap_rows,
                                   bool wrap_cols, std::string source = {}) {
  if (c.size() != rows * cols) throw std::invalid_argument("coloring_to_pattern: size mismatch");
  Pattern p;
  p.rows = rows;
  p.cols = cols;
  p.wrap_rows = wrap_rows;
  p.wrap_cols = wrap_cols;
  p.cells = c.colors;
  p.source = std::move(source);
  detail::check_pattern(p, "coloring_to_pattern");
  return p;
}

}  // namespace starprod
