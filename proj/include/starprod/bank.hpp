#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <string>

#include "starprod/bank_data.hpp"
#include "starprod/coloring.hpp"
#include "starprod/errors.hpp"
#include "starprod/pattern.hpp"

namespace starprod {

struct PatternBankEntry {
  std::string id;  // product name, e.g. "C3xC4" or "C5xP3"
  Pattern pattern;
  std::string source;
  bool verified = false;
};

using PatternBank = std::map<std::string, PatternBankEntry>;

namespace detail {

/// Parse a bank id of the form <C|P><int>x<C|P><int> into wrap flags and
/// sizes, so load-time verification can also reject mislabeled entries.
struct BankShape {
  bool wrap_rows, wrap_cols;
  int rows, cols;
};

inline BankShape parse_bank_id(const std::string& id) {
  auto read_factor = [&](size_t& pos) -> std::pair<bool, int> {
    if (pos >= id.size() || (id[pos] != 'C' && id[pos] != 'P'))
      throw parse_error("bank id '" + id + "': expected C or P");
    bool wrap = id[pos] == 'C';
    ++pos;
    size_t start = pos;
    while (pos < id.size() && std::isdigit(static_cast<unsigned char>(id[pos]))) ++pos;
    if (pos == start) throw parse_error("bank id '" + id + "': missing size");
    return {wrap, std::stoi(id.substr(start, pos - start))};
  };
  size_t pos = 0;
  auto [wr, r] = read_factor(pos);
  if (pos >= id.size() || id[pos] != 'x') throw parse_error("bank id '" + id + "': expected 'x'");
  ++pos;
  auto [wc, c] = read_factor(pos);
  if (pos != id.size()) throw parse_error("bank id '" + id + "': trailing characters");
  return {wr, wc, r, c};
}

inline void verify_bank_entry(PatternBankEntry& entry) {
  const auto shape = parse_bank_id(entry.id);
  const Pattern& p = entry.pattern;
  if (p.rows != shape.rows || p.cols != shape.cols || p.wrap_rows != shape.wrap_rows ||
      p.wrap_cols != shape.wrap_cols)
    throw verification_error("bank entry '" + entry.id + "': pattern shape does not match its id");
  auto [graph, coloring] = pattern_to_coloring(p);
  auto report = verify(graph, coloring);
  if (!report.is_star) {
    std::string what = "bank entry '" + entry.id + "' failed verification: ";
    if (report.proper_violation)
      what += "equal colors on edge (" + std::to_string(report.proper_violation->first) + "," +
              std::to_string(report.proper_violation->second) + ")";
    else
      what += "bicolored path " + std::to_string((*report.star_violation)[0]) + "-" +
              std::to_string((*report.star_violation)[1]) + "-" +
              std::to_string((*report.star_violation)[2]) + "-" +
              std::to_string((*report.star_violation)[3]);
    throw verification_error(what);
  }
  entry.verified = true;
}

}  // namespace detail

/// The built-in pattern bank. Every entry is verified once, on first access;
/// a failure here is a hard error.
inline const PatternBank& builtin_bank() {
  static const PatternBank bank = [] {
    PatternBank b;
    for (const auto& [id, csv] : detail::builtin_patterns) {
      PatternBankEntry entry;
      entry.id = id;
      entry.pattern = parse_pattern_csv(std::string(csv));
      entry.source = entry.pattern.source;
      detail::verify_bank_entry(entry);
      b.emplace(entry.id, std::move(entry));
    }
    return b;
  }();
  return bank;
}

/// Load a bank from a directory of .csv pattern files (id = file stem).
/// Entries are verified like the built-in ones.
inline PatternBank load_bank(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir))
    throw parse_error("load_bank: not a directory: " + dir.string());
  PatternBank bank;
  std::vector<std::filesystem::path> files;
  for (const auto& de : std::filesystem::directory_iterator(dir))
    if (de.is_regular_file() && de.path().extension() == ".csv") files.push_back(de.path());
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    std::ifstream in(path);
    if (!in) throw parse_error("load_bank: cannot open " + path.string());
    PatternBankEntry entry;
    entry.id = path.stem().string();
    entry.pattern = parse_pattern_csv(in);
    entry.source = entry.pattern.source;
    detail::verify_bank_entry(entry);
    bank.emplace(entry.id, std::move(entry));
  }
  return bank;
}

inline const Pattern& bank_pattern(const PatternBank& bank, const std::string& id) {
  auto it = bank.find(id);
  if (it == bank.end()) throw std::out_of_range("pattern bank has no entry '" + id + "'");
  return it->second.pattern;
}

}  // namespace starprod
