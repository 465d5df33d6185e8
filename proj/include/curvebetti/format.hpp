#ifndef CURVEBETTI_FORMAT_HPP
#define CURVEBETTI_FORMAT_HPP

// Text and JSON views of tables, ledgers and complexes.

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "betti.hpp"

namespace curvebetti {

using ordered_json = nlohmann::ordered_json;

inline std::string to_string(Grading g) { return g == Grading::Standard ? "standard" : "semigroup"; }

inline Grading grading_from_string(const std::string& s) {
  if (s == "standard") return Grading::Standard;
  if (s == "semigroup") return Grading::Semigroup;
  throw Error(ErrorKind::InvalidInput, "unknown grading '" + s + "'");
}

namespace detail {

/// Row label of an entry: deg - i in the standard grading, deg otherwise.
inline Int row_of(Grading g, Int i, Int deg) { return g == Grading::Standard ? deg - i : deg; }
inline Int deg_of(Grading g, Int i, Int row) { return g == Grading::Standard ? row + i : row; }

}  // namespace detail

/// Macaulay2-like layout: columns i, rows deg - i (standard) or deg
/// (semigroup), '-' for zero. Standard tables list every row between the
/// first and last nonempty one.
inline std::string format_table(const BettiTable& table, bool with_totals = false) {
  if (table.empty()) return "(empty)\n";
  const Grading g = table.grading();
  const Int cols = table.max_index() + 1;
  std::map<Int, std::vector<Int>> rows;
  for (const auto& [key, value] : table.entries()) {
    auto& row = rows[detail::row_of(g, key.second, key.first)];
    row.resize(static_cast<std::size_t>(cols), 0);
    row[static_cast<std::size_t>(key.second)] = value;
  }
  if (g == Grading::Standard)
    for (Int r = rows.begin()->first; r <= rows.rbegin()->first; ++r)
      rows[r].resize(static_cast<std::size_t>(cols), 0);

  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> cells;
  auto cell = [](Int v) { return v == 0 ? std::string("-") : std::to_string(v); };
  if (with_totals) {
    labels.push_back("total:");
    std::vector<std::string> line;
    for (Int t : table.totals()) line.push_back(std::to_string(t));
    cells.push_back(line);
  }
  for (const auto& [r, row] : rows) {
    labels.push_back(std::to_string(r) + ":");
    std::vector<std::string> line;
    for (Int v : row) line.push_back(cell(v));
    cells.push_back(line);
  }

  std::size_t label_w = 0;
  for (const auto& l : labels) label_w = std::max(label_w, l.size());
  std::vector<std::size_t> col_w(static_cast<std::size_t>(cols), 1);
  for (std::size_t c = 0; c < col_w.size(); ++c) {
    col_w[c] = std::to_string(c).size();
    for (const auto& line : cells) col_w[c] = std::max(col_w[c], line[c].size());
  }

  std::ostringstream out;
  auto pad = [&](const std::string& s, std::size_t w) { out << std::string(w - s.size(), ' ') << s; };
  pad("", label_w);
  for (std::size_t c = 0; c < col_w.size(); ++c) {
    out << ' ';
    pad(std::to_string(c), col_w[c]);
  }
  out << '\n';
  for (std::size_t k = 0; k < labels.size(); ++k) {
    pad(labels[k], label_w);
    for (std::size_t c = 0; c < col_w.size(); ++c) {
      out << ' ';
      pad(cells[k][c], col_w[c]);
    }
    out << '\n';
  }
  return out.str();
}

/// Inverse of format_table. The totals row, if present, is checked.
inline BettiTable parse_table(const std::string& text, Grading grading = Grading::Standard) {
  BettiTable table(grading);
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorKind::InvalidInput, "empty table text");
  if (line == "(empty)") return table;
  std::vector<Int> header;
  {
    std::istringstream hs(line);
    Int c;
    while (hs >> c) header.push_back(c);
  }
  std::vector<Int> totals;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string label;
    if (!(ls >> label)) continue;
    if (label.empty() || label.back() != ':')
      throw Error(ErrorKind::InvalidInput, "bad row label '" + label + "'");
    std::vector<std::string> tokens;
    for (std::string t; ls >> t;) tokens.push_back(t);
    if (tokens.size() != header.size())
      throw Error(ErrorKind::InvalidInput, "row '" + label + "' has the wrong number of cells");
    if (label == "total:") {
      for (const auto& t : tokens) totals.push_back(std::stoll(t));
      continue;
    }
    const Int row = std::stoll(label.substr(0, label.size() - 1));
    for (std::size_t c = 0; c < tokens.size(); ++c)
      if (tokens[c] != "-") table.add(header[c], detail::deg_of(grading, header[c], row), std::stoll(tokens[c]));
  }
  if (!totals.empty() && totals != table.totals())
    throw Error(ErrorKind::InvalidInput, "totals row disagrees with the entries");
  return table;
}

inline ordered_json table_to_json(const BettiTable& table) {
  ordered_json j;
  j["grading"] = to_string(table.grading());
  const auto& split = table.split();
  if (split) {
    j["split_row"] = split->value;
    j["split_basis"] = split->basis == Split::Basis::Degree ? "degree" : "row";
    j["split_empirical"] = split->empirical;
  } else {
    j["split_row"] = nullptr;
  }
  ordered_json entries = ordered_json::array();
  for (const auto& [key, value] : table.entries())
    entries.push_back({{"i", key.second}, {"deg", key.first}, {"value", value}});
  j["entries"] = entries;
  return j;
}

inline BettiTable table_from_json(const nlohmann::json& j) {
  try {
    BettiTable table(grading_from_string(j.at("grading").get<std::string>()));
    for (const auto& e : j.at("entries"))
      table.add(e.at("i").get<Int>(), e.at("deg").get<Int>(), e.at("value").get<Int>());
    if (!j.at("split_row").is_null()) {
      Split s;
      s.value = j.at("split_row").get<Int>();
      s.basis = j.value("split_basis", std::string("degree")) == "row" ? Split::Basis::Row
                                                                      : Split::Basis::Degree;
      s.empirical = j.value("split_empirical", false);
      table.set_split(s);
    }
    return table;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed table JSON: ") + ex.what());
  }
}

inline ordered_json homology_to_json(const HomologyVector& h) {
  ordered_json dims = ordered_json::array();
  for (int i = 0; i <= h.top(); ++i) dims.push_back(h[i]);
  return dims;
}

inline ordered_json ledger_to_json(const DegreeLedger& ledger) {
  ordered_json out = ordered_json::array();
  for (const auto& e : ledger)
    out.push_back({{"l", e.l}, {"r", e.r}, {"reduced_homology", homology_to_json(e.homology)}});
  return out;
}

inline ordered_json complex_to_json(const SimplicialComplex& cx) {
  return {{"ground", mask_to_vertices(cx.ground())}, {"facets", cx.facet_lists()}};
}

/// "{0,2,4,5} {0,3,5}" style facet listing.
inline std::string format_facets(const SimplicialComplex& cx) {
  if (cx.is_void()) return "void";
  std::string out;
  for (const auto& facet : cx.facet_lists()) {
    if (!out.empty()) out += ' ';
    out += '{';
    for (std::size_t i = 0; i < facet.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(facet[i]);
    }
    out += '}';
  }
  return out;
}

inline ordered_json run_to_json(const ProjectiveRun& run) {
  ordered_json j;
  j["sequence"] = run.sc.base.a;
  j["shift"] = run.sc.j;
  j["k"] = run.sc.k;
  j["e"] = run.sc.e;
  j["mode"] = run.rigorous() ? "rigorous" : "scan";
  j["regJ"] = run.regJ >= 0 ? ordered_json(run.regJ) : ordered_json(nullptr);
  j["l_scanned"] = run.l_scanned;
  if (run.rigorous()) j["window"] = {run.window_lo, run.window_hi};
  j["table"] = table_to_json(run.table);
  return j;
}

}  // namespace curvebetti

#endif  // CURVEBETTI_FORMAT_HPP
