#ifndef CURVEBETTI_BETTI_HPP
#define CURVEBETTI_BETTI_HPP

// Betti tables of the projective closure, the affine curve and the
// homogeneous part J(a), each read off as sums of reduced homology of
// squarefree divisor complexes.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "affsg.hpp"
#include "divisor.hpp"
#include "numsg.hpp"
#include "parallel.hpp"
#include "simplicial.hpp"

namespace curvebetti {

enum class Grading { Standard, Semigroup };

/// Where the low (J(a)) block ends. Basis Degree: entries with deg > value
/// are high. Basis Row: entries with deg - i > value are high.
struct Split {
  enum class Basis { Degree, Row };
  Int value = 0;
  Basis basis = Basis::Degree;
  bool empirical = false;

  bool is_high(Int i, Int deg) const noexcept {
    return basis == Basis::Degree ? deg > value : deg - i > value;
  }

  friend bool operator==(const Split&, const Split&) = default;
};

/// Sparse (i, deg) -> positive count. Iteration order is (deg, i).
class BettiTable {
public:
  using Key = std::pair<Int, Int>;  // (deg, i)

  explicit BettiTable(Grading grading = Grading::Standard) : grading_(grading) {}

  Grading grading() const noexcept { return grading_; }
  const std::optional<Split>& split() const noexcept { return split_; }
  void set_split(std::optional<Split> s) { split_ = s; }

  void add(Int i, Int deg, Int count) {
    if (count < 0) throw Error(ErrorKind::InvalidInput, "negative Betti count");
    if (count == 0) return;
    entries_[{deg, i}] += count;
  }

  Int get(Int i, Int deg) const {
    auto it = entries_.find({deg, i});
    return it == entries_.end() ? 0 : it->second;
  }

  const std::map<Key, Int>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

  Int max_index() const {
    Int top = -1;
    for (const auto& [key, value] : entries_) top = std::max(top, key.second);
    return top;
  }

  /// Column sums, i = 0..max_index.
  std::vector<Int> totals() const {
    std::vector<Int> out(static_cast<std::size_t>(max_index() + 1), 0);
    for (const auto& [key, value] : entries_) out[static_cast<std::size_t>(key.second)] += value;
    return out;
  }

  /// Sub-table on one side of the split (requires a split).
  BettiTable block(bool high) const {
    if (!split_) throw Error(ErrorKind::Precondition, "table has no low/high split");
    BettiTable out(grading_);
    out.split_ = split_;
    for (const auto& [key, value] : entries_)
      if (split_->is_high(key.second, key.first) == high) out.entries_[key] = value;
    return out;
  }

  /// Same entries (split and grading ignored).
  bool same_entries(const BettiTable& other) const { return entries_ == other.entries_; }

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

private:
  Grading grading_;
  std::optional<Split> split_;
  std::map<Key, Int> entries_;
};

struct LedgerEntry {
  Int l = 0;
  Int r = 0;
  HomologyVector homology;

  friend bool operator==(const LedgerEntry&, const LedgerEntry&) = default;
};

/// Degrees (l, r) with some nonzero H~_i, i >= 0, ordered by (l, r).
using DegreeLedger = std::vector<LedgerEntry>;

struct RunOptions {
  FieldSpec field = FieldSpec::rationals();
  int threads = 0;  // 0: CURVEBETTI_THREADS or hardware
};

struct ProjectiveMode {
  enum class Kind { Rigorous, Scan };
  Kind kind = Kind::Scan;
  Int regJ = -1;    // required for Rigorous; optional hint for Scan
  Int l_max = 0;    // Scan only; 0 picks the default
  Int buffer = -1;  // Rigorous only; -1 picks dc + B

  static ProjectiveMode rigorous(Int regJ, Int buffer = -1) {
    return {Kind::Rigorous, regJ, 0, buffer};
  }
  static ProjectiveMode scan(Int l_max = 0, Int regJ = -1) { return {Kind::Scan, regJ, l_max, -1}; }
};

/// Rigorous mode is only sound once k = a_n + j exceeds N (j > N - a_n).
inline bool projective_regime(const CurveSequence& curve, Int j, Int regJ) {
  return curve.an() + j > bound_N(curve, regJ);
}

/// Rigorous when the shift is past the projective threshold, scan otherwise.
inline ProjectiveMode auto_mode(const CurveSequence& curve, Int j, Int regJ) {
  return projective_regime(curve, j, regJ) ? ProjectiveMode::rigorous(regJ)
                                           : ProjectiveMode::scan(0, regJ);
}

struct ProjectiveRun {
  ShiftedCurve sc;
  ProjectiveMode mode;
  BettiTable table{Grading::Standard};
  DegreeLedger ledger;
  Int regJ = -1;
  Int l_scanned = 0;  // largest l examined
  Int degrees_examined = 0;
  // Rigorous mode only: [window_lo, window_hi) for r in the high block.
  Int window_lo = 0;
  Int window_hi = 0;

  bool rigorous() const noexcept { return mode.kind == ProjectiveMode::Kind::Rigorous; }

  /// A ledger degree is high when every homology class it carries lands in
  /// the high block of the table.
  bool is_high(const LedgerEntry& entry) const {
    const auto& split = table.split();
    if (!split) return false;
    for (int i = 0; i <= entry.homology.top(); ++i)
      if (entry.homology[i] != 0 && !split->is_high(i, entry.l)) return false;
    return entry.homology.nontrivial();
  }
};

namespace detail {

/// Largest l with l < r/b_1 + (dc + b_1)/b_{n-1} + n.
inline Int lemma_l_bound(const CurveSequence& curve, Int r) {
  // l - n < r/b1 + q/bl  <=>  (l - n) b1 bl < r bl + q b1
  const Int b1 = curve.b1(), bl = curve.b_last(), q = curve.dc() + curve.b1();
  const __int128 rhs = static_cast<__int128>(r) * bl + static_cast<__int128>(q) * b1;
  const __int128 unit = static_cast<__int128>(b1) * bl;
  // largest x with x * unit < rhs
  const __int128 x = (rhs - 1) >= 0 ? (rhs - 1) / unit : -1;
  return static_cast<Int>(x) + static_cast<Int>(curve.n());
}

inline Int ceil_div(Int a, Int b) { return (a + b - 1) / b; }

/// Homology of Delta_{l,r} for each degree, in parallel, in input order.
inline std::vector<HomologyVector> evaluate_degrees(const GradedOracle& oracle,
                                                    const std::vector<std::pair<Int, Int>>& degrees,
                                                    const RunOptions& options) {
  std::vector<HomologyVector> out(degrees.size());
  parallel_for(degrees.size(), resolve_threads(options.threads), [&](std::size_t idx) {
    const auto [l, r] = degrees[idx];
    out[idx] = filtered_homology(delta_lr(oracle, l, r), options.field);
  });
  return out;
}

/// First empty row above regJ (or above the lowest row) with entries beyond it.
inline std::optional<Split> empirical_split(const BettiTable& table, Int regJ) {
  std::set<Int> rows;
  for (const auto& [key, value] : table.entries()) rows.insert(key.first - key.second);
  if (rows.empty()) return std::nullopt;
  const Int start = regJ >= 0 ? regJ + 1 : *rows.begin() + 1;
  const Int last = *rows.rbegin();
  for (Int s = start; s < last; ++s)
    if (!rows.count(s)) return Split{s, Split::Basis::Row, true};
  return std::nullopt;
}

}  // namespace detail

/// Default scan depth: far enough to pass both the regularity guess and the
/// row where x_0-syzygies sit (l ~ (ek + dc + B)/b_1).
inline Int default_scan_lmax(const ShiftedCurve& sc, Int regJ) {
  const auto& c = sc.base;
  const Int n = static_cast<Int>(c.n());
  const Int reg_part = 4 * (n + std::max<Int>(regJ, 0));
  const Int window_part = detail::ceil_div(sc.e * sc.k + c.dc() + c.B, c.b1()) +
                          detail::ceil_div(c.dc() + c.b1(), c.b_last()) + 2 * n;
  return std::max(reg_part, window_part);
}

/// beta_{i,l} of the projective closure as sum over r of dim H~_i(Delta_{l,r}).
inline ProjectiveRun betti_projective(const ShiftedCurve& sc, const ProjectiveMode& mode,
                                      const RunOptions& options = {}) {
  const auto& curve = sc.base;
  const Int n = static_cast<Int>(curve.n());
  ProjectiveRun run;
  run.sc = sc;
  run.mode = mode;
  run.regJ = mode.regJ;

  GradedOracle oracle(sc);
  std::vector<std::pair<Int, Int>> low, high;

  auto collect_members = [&](Int l, Int r_lo, Int r_hi, std::vector<std::pair<Int, Int>>& out) {
    for (Int r = std::max<Int>(r_lo, 0); r < r_hi; ++r)
      if (oracle.representable(l, r)) out.emplace_back(l, r);
  };

  if (mode.kind == ProjectiveMode::Kind::Rigorous) {
    if (mode.regJ < 0) throw Error(ErrorKind::Precondition, "rigorous mode needs regJ");
    const Int N = bound_N(curve, mode.regJ);
    if (sc.k <= N)
      throw Error(ErrorKind::WindowBreach, "rigorous mode used below the threshold k > N",
                  {{"j", sc.j}, {"k", sc.k}, {"N", N}, {"min_shift", N - curve.an() + 1}});
    const Int split = n + mode.regJ;
    const Int buffer = mode.buffer >= 0 ? mode.buffer : curve.dc() + curve.B;
    run.window_lo = sc.e * sc.k;
    run.window_hi = sc.e * sc.k + curve.dc() + curve.B;
    const Int r_lo = run.window_lo - buffer;
    const Int r_hi = run.window_hi + buffer;
    const Int l_top = detail::lemma_l_bound(curve, run.window_hi - 1) + n;

    oracle.build_up_to(std::max(split * sc.k, r_hi));
    for (Int l = 1; l <= split; ++l) collect_members(l, 0, l * sc.k + 1, low);
    for (Int l = split + 1; l <= l_top; ++l) collect_members(l, r_lo, r_hi, high);
    run.l_scanned = std::max(split, l_top);
    run.table.set_split(Split{split, Split::Basis::Degree, false});
  } else {
    const Int l_max = mode.l_max > 0 ? mode.l_max : default_scan_lmax(sc, mode.regJ);
    if (l_max < 2) throw Error(ErrorKind::Precondition, "scan mode needs l_max >= 2");
    oracle.build_up_to(l_max * sc.k);
    for (Int l = 1; l <= l_max; ++l) collect_members(l, 0, l * sc.k + 1, low);
    run.l_scanned = l_max;
  }

  std::vector<std::pair<Int, Int>> degrees = low;
  degrees.insert(degrees.end(), high.begin(), high.end());
  run.degrees_examined = static_cast<Int>(degrees.size());
  const auto homology = detail::evaluate_degrees(oracle, degrees, options);

  for (std::size_t idx = 0; idx < degrees.size(); ++idx) {
    if (!homology[idx].nontrivial()) continue;
    run.ledger.push_back({degrees[idx].first, degrees[idx].second, homology[idx]});
  }
  std::sort(run.ledger.begin(), run.ledger.end(),
            [](const LedgerEntry& x, const LedgerEntry& y) {
              return std::pair(x.l, x.r) < std::pair(y.l, y.r);
            });
  for (const auto& entry : run.ledger)
    for (int i = 0; i <= entry.homology.top(); ++i) run.table.add(i, entry.l, entry.homology[i]);

  if (mode.kind == ProjectiveMode::Kind::Rigorous) {
    const Int split = n + mode.regJ;
    nlohmann::json breaches = nlohmann::json::array();
    for (const auto& entry : run.ledger) {
      if (entry.l <= split) continue;
      const bool in_window = entry.r >= run.window_lo && entry.r < run.window_hi;
      const bool above_slope = entry.l * curve.b1() >= entry.r;
      const bool below_bound = entry.l <= detail::lemma_l_bound(curve, entry.r);
      if (!(in_window && above_slope && below_bound))
        breaches.push_back({{"l", entry.l}, {"r", entry.r}, {"in_window", in_window},
                            {"l_ge_r_over_b1", above_slope}, {"l_below_bound", below_bound}});
    }
    if (!breaches.empty())
      throw Error(ErrorKind::WindowBreach, "homology found outside the predicted window",
                  {{"j", sc.j}, {"window", {run.window_lo, run.window_hi}}, {"degrees", breaches}});
  } else {
    const Int l_max = run.l_scanned;
    for (const auto& entry : run.ledger)
      if (entry.l > l_max - (n + 1))
        throw Error(ErrorKind::ScanTruncated, "nonzero homology near the scan boundary",
                    {{"l", entry.l}, {"r", entry.r}, {"l_max", l_max}});
    run.table.set_split(detail::empirical_split(run.table, mode.regJ));
  }
  return run;
}

/// Betti numbers of I(a+j) in the semigroup grading deg x_i = k - b_i. The
/// candidate degrees are m = lk - r over the projective ledger: the minimal
/// graded resolution dehomogenizes to a resolution of I(a+j).
inline BettiTable betti_affine(const ProjectiveRun& run, const RunOptions& options = {}) {
  const auto& sc = run.sc;
  std::set<Int> candidate_set;
  for (const auto& entry : run.ledger) candidate_set.insert(entry.l * sc.k - entry.r);
  const std::vector<Int> candidates(candidate_set.begin(), candidate_set.end());

  AffineOracle oracle(sc);
  oracle.build_up_to(candidates.empty() ? 0 : candidates.back());
  std::vector<HomologyVector> homology(candidates.size());
  parallel_for(candidates.size(), resolve_threads(options.threads), [&](std::size_t idx) {
    homology[idx] = filtered_homology(delta_m(oracle, candidates[idx]), options.field);
  });

  BettiTable table(Grading::Semigroup);
  for (std::size_t idx = 0; idx < candidates.size(); ++idx)
    for (int i = 0; i <= homology[idx].top(); ++i) table.add(i, candidates[idx], homology[idx][i]);
  if (run.rigorous())
    table.set_split(Split{sc.k * (static_cast<Int>(sc.n()) + run.regJ), Split::Basis::Degree, false});
  return table;
}

/// reg = max(deg - i) over a standard-graded table.
inline Int reg(const BettiTable& table) {
  if (table.empty()) throw Error(ErrorKind::EmptyTable, "regularity of an empty table");
  if (table.grading() != Grading::Standard)
    throw Error(ErrorKind::Precondition, "regularity needs a standard-graded table");
  Int best = table.entries().begin()->first.first - table.entries().begin()->first.second;
  for (const auto& [key, value] : table.entries()) best = std::max(best, key.first - key.second);
  return best;
}

struct JRun {
  BettiTable table{Grading::Standard};
  Int regJ = 0;  // 0 when J(a) is the zero ideal
  Int l_scanned = 0;
  bool zero_ideal = false;
};

/// Betti table of J(a), the toric ideal of {(a_i, 1)}, from Delta_{(s,l)}.
/// Scans l = 1, 2, ... and stops at l = max(32, 4 reg) for the running reg;
/// hitting `l_cap` first is a ScanTruncated error.
inline JRun betti_J(const CurveSequence& curve, const RunOptions& options = {}, Int l_cap = 512) {
  const AffineSemigroup sg = homog_part_semigroup(curve);
  JRun out;
  Int box_l = 0;
  std::optional<BoxMembership> table;
  Int current_reg = -1;

  for (Int l = 1;; ++l) {
    if (l > l_cap)
      throw Error(ErrorKind::ScanTruncated, "J(a) scan reached the l cap",
                  {{"l_cap", l_cap}, {"reg_so_far", current_reg}});
    if (l > box_l) {
      box_l = std::max<Int>(2 * box_l, 32);
      table.emplace(sg, std::vector<Int>{box_l * curve.an(), box_l});
    }
    const Int s_lo = l * curve.a.front(), s_hi = l * curve.an();
    std::vector<Int> degrees;
    for (Int s = s_lo; s <= s_hi; ++s)
      if (table->contains(std::vector<Int>{s, l})) degrees.push_back(s);

    std::vector<HomologyVector> homology(degrees.size());
    parallel_for(degrees.size(), resolve_threads(options.threads), [&](std::size_t idx) {
      const std::vector<Int> v{degrees[idx], l};
      homology[idx] = filtered_homology(delta_v(sg, *table, v), options.field);
    });
    for (const auto& h : homology)
      for (int i = 0; i <= h.top(); ++i) {
        out.table.add(i, l, h[i]);
        if (h[i] != 0) current_reg = std::max(current_reg, l - i);
      }
    out.l_scanned = l;
    if (l >= std::max<Int>(32, 4 * current_reg)) break;
  }

  out.zero_ideal = out.table.empty();
  out.regJ = out.zero_ideal ? 0 : reg(out.table);
  return out;
}

/// Number of minimal inhomogeneous generators: beta_0 summed over the high block.
inline Int mu_prime(const ProjectiveRun& run) {
  if (!run.table.split())
    throw Error(ErrorKind::Precondition, "mu' needs a low/high split; none was found");
  Int total = 0;
  for (const auto& [key, value] : run.table.entries())
    if (key.second == 0 && run.table.split()->is_high(0, key.first)) total += value;
  return total;
}

inline Int mu_prime(const ShiftedCurve& sc, Int regJ, const RunOptions& options = {}) {
  return mu_prime(betti_projective(sc, auto_mode(sc.base, sc.j, regJ), options));
}

}  // namespace curvebetti

#endif  // CURVEBETTI_BETTI_HPP
