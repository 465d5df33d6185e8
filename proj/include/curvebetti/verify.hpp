#ifndef CURVEBETTI_VERIFY_HPP
#define CURVEBETTI_VERIFY_HPP

// Executable checks of the shifting, periodicity, double cone and deletion
// statements, plus the Bresinsky family suite. Every check returns a report;
// theory violations in the regime where the statement is proven are "fail",
// below that regime they are "inconclusive".

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "betti.hpp"
#include "format.hpp"

namespace curvebetti {

struct VerificationReport {
  enum class Status { Pass, Fail, Inconclusive };

  explicit VerificationReport(std::string name = {}) : check(std::move(name)) {}

  std::string check;
  Status status = Status::Pass;
  ordered_json params = ordered_json::object();
  std::vector<ordered_json> witnesses;

  bool passed() const noexcept { return status == Status::Pass; }

  /// Records a violation; it fails only when the statement is guaranteed.
  void violation(ordered_json witness, bool guaranteed) {
    witnesses.push_back(std::move(witness));
    const Status s = guaranteed ? Status::Fail : Status::Inconclusive;
    if (status == Status::Pass || s == Status::Fail) status = s;
  }

  void inconclusive(ordered_json witness) {
    witnesses.push_back(std::move(witness));
    if (status == Status::Pass) status = Status::Inconclusive;
  }

  ordered_json to_json() const {
    ordered_json j;
    j["check"] = check;
    j["status"] = to_string(status);
    j["params"] = params;
    j["witnesses"] = witnesses;
    return j;
  }

  static std::string to_string(Status s) {
    switch (s) {
      case Status::Pass: return "pass";
      case Status::Fail: return "fail";
      case Status::Inconclusive: return "inconclusive";
    }
    return "?";
  }
};

struct VerifyOptions {
  RunOptions run;
  Int l_max = 0;    // scan depth below the threshold; 0 picks the default
  Int buffer = -1;  // rigorous window buffer; -1 picks dc + B
  // Test hook: edits Delta_{l,r} before a complex-level check looks at it.
  std::function<void(Int l, Int r, SimplicialComplex&)> tamper;
};

namespace detail {

inline Int resolve_regJ(const CurveSequence& curve, Int regJ, const RunOptions& options) {
  return regJ >= 0 ? regJ : betti_J(curve, options).regJ;
}

inline ProjectiveRun run_for_check(const CurveSequence& curve, Int j, Int regJ,
                                   const VerifyOptions& options) {
  ProjectiveMode mode = auto_mode(curve, j, regJ);
  if (mode.kind == ProjectiveMode::Kind::Scan) mode.l_max = options.l_max;
  else mode.buffer = options.buffer;
  return betti_projective(shift_curve(curve, j), mode, options.run);
}

inline ordered_json base_params(const CurveSequence& curve, Int j, Int regJ, const VerifyOptions& options) {
  const Int N = bound_N(curve, regJ);
  ordered_json p;
  p["sequence"] = curve.a;
  p["shift"] = j;
  p["regJ"] = regJ;
  p["field"] = options.run.field.name();
  p["N"] = N;
  p["projective_threshold"] = N - curve.an();
  p["affine_threshold"] = N;
  return p;
}

inline ordered_json ledger_witness(const ProjectiveRun& run) {
  return {{"kind", "ledger"}, {"shift", run.sc.j}, {"mode", run.rigorous() ? "rigorous" : "scan"},
          {"entries", ledger_to_json(run.ledger)}};
}

/// Runs body; scan truncation becomes inconclusive, a window breach in
/// rigorous mode becomes a failure.
template <typename Body>
void guarded(VerificationReport& report, Body&& body) {
  try {
    body();
  } catch (const Error& ex) {
    if (ex.kind() == ErrorKind::ScanTruncated)
      report.inconclusive({{"kind", "scan_truncated"}, {"error", ex.to_json()}});
    else if (ex.kind() == ErrorKind::WindowBreach)
      report.violation({{"kind", "window_breach"}, {"error", ex.to_json()}}, true);
    else
      throw;
  }
}

inline SimplicialComplex checked_complex(const GradedOracle& oracle, Int l, Int r,
                                         const VerifyOptions& options) {
  SimplicialComplex cx = delta_lr(oracle, l, r);
  if (options.tamper) options.tamper(l, r, cx);
  return cx;
}

inline std::vector<const LedgerEntry*> high_entries(const ProjectiveRun& run) {
  std::vector<const LedgerEntry*> out;
  for (const auto& e : run.ledger)
    if (run.is_high(e)) out.push_back(&e);
  return out;
}

inline Int max_r(const std::vector<const LedgerEntry*>& entries) {
  Int top = 0;
  for (const auto* e : entries) top = std::max(top, e->r);
  return top;
}

inline std::vector<Int> padded(std::vector<Int> v, std::size_t size) {
  v.resize(std::max(v.size(), size), 0);
  return v;
}

}  // namespace detail

/// Structural audit of the high block of a run: window, slope and l bound
/// per ledger degree, vertex-0 deletion, distinct affine degrees. Returns
/// the violations (empty when clean).
inline std::vector<ordered_json> audit_high_block(const ProjectiveRun& run,
                                                  const VerifyOptions& options = {}) {
  const auto& sc = run.sc;
  const auto& curve = sc.base;
  const auto high = detail::high_entries(run);
  std::vector<ordered_json> out;
  if (high.empty()) return out;

  GradedOracle graded(sc);
  graded.build_up_to(detail::max_r(high));
  AffineOracle affine(sc);
  Int m_top = 0;
  for (const auto* e : high) m_top = std::max(m_top, e->l * sc.k - e->r);
  affine.build_up_to(m_top);

  const Int lo = sc.e * sc.k, hi = sc.e * sc.k + curve.dc() + curve.B;
  std::map<Int, std::pair<Int, Int>> seen;
  for (const auto* e : high) {
    if (e->r < lo || e->r >= hi)
      out.push_back({{"kind", "window"}, {"l", e->l}, {"r", e->r}, {"window", {lo, hi}}});
    if (e->l * curve.b1() < e->r) out.push_back({{"kind", "slope"}, {"l", e->l}, {"r", e->r}});
    if (e->l > detail::lemma_l_bound(curve, e->r))
      out.push_back({{"kind", "l_bound"}, {"l", e->l}, {"r", e->r},
                     {"bound", detail::lemma_l_bound(curve, e->r)}});
    const Int m = e->l * sc.k - e->r;
    const SimplicialComplex proj = detail::checked_complex(graded, e->l, e->r, options);
    const SimplicialComplex aff = delta_m(affine, m);
    if (!(delete_vertex(proj, 0) == aff))
      out.push_back({{"kind", "deletion"}, {"l", e->l}, {"r", e->r}, {"m", m},
                     {"projective_facets", proj.facet_lists()}, {"affine_facets", aff.facet_lists()}});
    if (auto [it, fresh] = seen.emplace(m, std::pair(e->l, e->r)); !fresh)
      out.push_back({{"kind", "distinctness"}, {"m", m},
                     {"degrees", {{it->second.first, it->second.second}, {e->l, e->r}}}});
  }
  return out;
}

/// High block of Ibar(a+j+b_1) is the high block of Ibar(a+j) moved up e
/// degrees; the low block is unchanged. Also compares the complexes.
inline VerificationReport check_shift(const CurveSequence& curve, Int j, Int regJ = -1,
                                      const VerifyOptions& options = {}) {
  if (j < 1) throw Error(ErrorKind::Precondition, "check_shift needs j >= 1");
  regJ = detail::resolve_regJ(curve, regJ, options.run);
  VerificationReport report{"shift"};
  report.params = detail::base_params(curve, j, regJ, options);
  const bool guaranteed = curve.an() + j > bound_N(curve, regJ);
  report.params["guaranteed"] = guaranteed;

  detail::guarded(report, [&] {
    const ProjectiveRun a = detail::run_for_check(curve, j, regJ, options);
    const ProjectiveRun b = detail::run_for_check(curve, j + curve.b1(), regJ, options);
    const Int e = a.sc.e;
    report.params["e"] = e;
    report.params["b1"] = curve.b1();
    report.witnesses.push_back(detail::ledger_witness(a));
    report.witnesses.push_back(detail::ledger_witness(b));
    if (!a.table.split() || !b.table.split()) {
      report.inconclusive({{"kind", "no_split"}, {"detail", "no empty row separates the blocks"}});
      return;
    }

    const BettiTable low_a = a.table.block(false), low_b = b.table.block(false);
    if (!low_a.same_entries(low_b))
      report.violation({{"kind", "low_block"}, {"j", table_to_json(low_a)}, {"j_plus_b1", table_to_json(low_b)}},
                       guaranteed);
    BettiTable moved(Grading::Standard);
    const BettiTable high_a = a.table.block(true);
    for (const auto& [key, value] : high_a.entries()) moved.add(key.second, key.first + e, value);
    const BettiTable high_b = b.table.block(true);
    if (!moved.same_entries(high_b))
      report.violation({{"kind", "high_block"}, {"j_moved", table_to_json(moved)}, {"j_plus_b1", table_to_json(high_b)}},
                       guaranteed);

    const auto high = detail::high_entries(a);
    GradedOracle oa(a.sc), ob(b.sc);
    oa.build_up_to(detail::max_r(high));
    ob.build_up_to(detail::max_r(high) + e * curve.b1());
    for (const auto* entry : high) {
      const SimplicialComplex x = detail::checked_complex(oa, entry->l, entry->r, options);
      const SimplicialComplex y = delta_lr(ob, entry->l + e, entry->r + e * curve.b1());
      if (!(x == y))
        report.violation({{"kind", "complex"}, {"l", entry->l}, {"r", entry->r},
                          {"facets_j", x.facet_lists()}, {"facets_j_plus_b1", y.facet_lists()}},
                         guaranteed);
    }
  });
  return report;
}

/// Total Betti numbers of I(a+j) and Ibar(a+j) agree.
inline VerificationReport check_affine_equality(const CurveSequence& curve, Int j, Int regJ = -1,
                                                const VerifyOptions& options = {}) {
  if (j < 1) throw Error(ErrorKind::Precondition, "check_affine_equality needs j >= 1");
  regJ = detail::resolve_regJ(curve, regJ, options.run);
  VerificationReport report{"affine"};
  report.params = detail::base_params(curve, j, regJ, options);
  const bool guaranteed = j > bound_N(curve, regJ);
  report.params["guaranteed"] = guaranteed;

  detail::guarded(report, [&] {
    const ProjectiveRun run = detail::run_for_check(curve, j, regJ, options);
    const BettiTable affine = betti_affine(run, options.run);
    const std::size_t width = std::max(run.table.totals().size(), affine.totals().size());
    const auto proj = detail::padded(run.table.totals(), width);
    const auto aff = detail::padded(affine.totals(), width);
    report.witnesses.push_back({{"kind", "totals"}, {"projective", proj}, {"affine", aff}});
    report.witnesses.push_back(detail::ledger_witness(run));
    for (std::size_t i = 0; i < width; ++i)
      if (aff[i] > proj[i])  // dehomogenization can only drop Betti numbers
        report.violation({{"kind", "inequality"}, {"i", i}, {"projective", proj[i]}, {"affine", aff[i]}}, true);
    if (proj != aff) report.violation({{"kind", "totals_differ"}}, guaranteed);
  });
  return report;
}

/// beta_i(I(a+j+t b_1)) constant for t = 0..periods.
inline VerificationReport check_main_periodicity(const CurveSequence& curve, Int j, Int periods,
                                                 Int regJ = -1, const VerifyOptions& options = {}) {
  if (j < 1) throw Error(ErrorKind::Precondition, "check_main_periodicity needs j >= 1");
  if (periods < 0) throw Error(ErrorKind::Precondition, "periods must be >= 0");
  VerificationReport report{"period"};
  if (periods == 0) {
    report.params = {{"sequence", curve.a}, {"shift", j}, {"periods", 0}};
    return report;
  }
  regJ = detail::resolve_regJ(curve, regJ, options.run);
  report.params = detail::base_params(curve, j, regJ, options);
  report.params["periods"] = periods;
  const bool guaranteed = j > bound_N(curve, regJ);
  report.params["guaranteed"] = guaranteed;

  detail::guarded(report, [&] {
    std::vector<std::vector<Int>> rows;
    ordered_json series = ordered_json::array();
    for (Int t = 0; t <= periods; ++t) {
      const Int jt = j + t * curve.b1();
      const ProjectiveRun run = detail::run_for_check(curve, jt, regJ, options);
      rows.push_back(betti_affine(run, options.run).totals());
      ordered_json point = {{"shift", jt}, {"affine_totals", rows.back()}};
      if (run.table.split()) point["mu_prime"] = mu_prime(run);
      series.push_back(point);
    }
    report.witnesses.push_back({{"kind", "series"}, {"points", series}});
    for (std::size_t t = 1; t < rows.size(); ++t)
      if (rows[t] != rows[0])
        report.violation({{"kind", "totals_change"}, {"t", t}, {"first", rows[0]}, {"later", rows[t]}},
                         guaranteed);
  });
  return report;
}

/// Each homology-bearing high degree: facets missing 0 contain 1, facets
/// with 0 contain n, and r lies in [ek, ek + dc + B).
inline VerificationReport check_double_cone(const CurveSequence& curve, Int j, Int regJ = -1,
                                            const VerifyOptions& options = {}) {
  if (j < 1) throw Error(ErrorKind::Precondition, "check_double_cone needs j >= 1");
  regJ = detail::resolve_regJ(curve, regJ, options.run);
  VerificationReport report{"double-cone"};
  report.params = detail::base_params(curve, j, regJ, options);
  const bool guaranteed = curve.an() + j > bound_N(curve, regJ);
  report.params["guaranteed"] = guaranteed;

  detail::guarded(report, [&] {
    const ProjectiveRun run = detail::run_for_check(curve, j, regJ, options);
    report.witnesses.push_back(detail::ledger_witness(run));
    if (!run.table.split()) {
      report.inconclusive({{"kind", "no_split"}});
      return;
    }
    const auto high = detail::high_entries(run);
    GradedOracle oracle(run.sc);
    oracle.build_up_to(detail::max_r(high));
    const int n = static_cast<int>(curve.n());
    const Int lo = run.sc.e * run.sc.k, hi = lo + curve.dc() + curve.B;
    for (const auto* e : high) {
      const SimplicialComplex cx = detail::checked_complex(oracle, e->l, e->r, options);
      if (!double_cone_witness(cx, 0, 1, n))
        report.violation({{"kind", "not_double_cone"}, {"l", e->l}, {"r", e->r}, {"facets", cx.facet_lists()}},
                         guaranteed);
      if (e->r < lo || e->r >= hi)
        report.violation({{"kind", "window"}, {"l", e->l}, {"r", e->r}, {"window", {lo, hi}}}, guaranteed);
    }
    report.params["high_degrees"] = high.size();
  });
  return report;
}

/// Delta_{lk-r} equals Delta_{l,r} with vertex 0 deleted, with the same
/// homology, for each high ledger degree; the lk - r are distinct.
inline VerificationReport check_deletion(const CurveSequence& curve, Int j, Int regJ = -1,
                                         const VerifyOptions& options = {}) {
  if (j < 1) throw Error(ErrorKind::Precondition, "check_deletion needs j >= 1");
  regJ = detail::resolve_regJ(curve, regJ, options.run);
  VerificationReport report{"deletion"};
  report.params = detail::base_params(curve, j, regJ, options);
  const bool guaranteed = j > bound_N(curve, regJ);
  report.params["guaranteed"] = guaranteed;

  detail::guarded(report, [&] {
    const ProjectiveRun run = detail::run_for_check(curve, j, regJ, options);
    report.witnesses.push_back(detail::ledger_witness(run));
    if (!run.table.split()) {
      report.inconclusive({{"kind", "no_split"}});
      return;
    }
    const auto high = detail::high_entries(run);
    report.params["high_degrees"] = high.size();
    report.params["skipped_low_degrees"] = run.ledger.size() - high.size();

    GradedOracle graded(run.sc);
    graded.build_up_to(detail::max_r(high));
    AffineOracle affine(run.sc);
    Int m_top = 0;
    for (const auto* e : high) m_top = std::max(m_top, e->l * run.sc.k - e->r);
    affine.build_up_to(m_top);

    std::map<Int, std::pair<Int, Int>> seen;
    for (const auto* e : high) {
      const Int m = e->l * run.sc.k - e->r;
      const SimplicialComplex proj = detail::checked_complex(graded, e->l, e->r, options);
      const SimplicialComplex aff = delta_m(affine, m);
      if (!(delete_vertex(proj, 0) == aff))
        report.violation({{"kind", "deletion"}, {"l", e->l}, {"r", e->r}, {"m", m},
                          {"projective_facets", proj.facet_lists()}, {"affine_facets", aff.facet_lists()}},
                         guaranteed);
      const HomologyVector hp = filtered_homology(proj, options.run.field);
      const HomologyVector ha = filtered_homology(aff, options.run.field);
      for (int i = 0; i <= std::max(hp.top(), ha.top()); ++i)
        if (hp[i] != ha[i])
          report.violation({{"kind", "homology"}, {"l", e->l}, {"r", e->r}, {"m", m}, {"i", i},
                            {"projective", hp[i]}, {"affine", ha[i]}},
                           guaranteed);
      if (auto [it, fresh] = seen.emplace(m, std::pair(e->l, e->r)); !fresh)
        report.violation({{"kind", "distinctness"}, {"m", m},
                          {"degrees", {{it->second.first, it->second.second}, {e->l, e->r}}}},
                         guaranteed);
    }
  });
  return report;
}

/// Minimal inhomogeneous generators look like x_1^u f - x_0^e g x_n^v: each
/// high degree with H~_0 != 0 is a double cone and carries monomials with
/// x_0-exponent 0 and e.
inline VerificationReport check_inhomogeneous_shape(const CurveSequence& curve, Int j, Int regJ = -1,
                                                    const VerifyOptions& options = {}) {
  regJ = detail::resolve_regJ(curve, regJ, options.run);
  const Int N = bound_N(curve, regJ);
  if (j <= N)
    throw Error(ErrorKind::Precondition, "check_inhomogeneous_shape needs j > N",
                {{"j", j}, {"N", N}});
  VerificationReport report{"inhomog"};
  report.params = detail::base_params(curve, j, regJ, options);

  detail::guarded(report, [&] {
    const ProjectiveRun run = detail::run_for_check(curve, j, regJ, options);
    report.witnesses.push_back(detail::ledger_witness(run));
    const auto high = detail::high_entries(run);
    GradedOracle oracle(run.sc);
    oracle.build_up_to(detail::max_r(high));
    const int n = static_cast<int>(curve.n());
    Int generators = 0;
    for (const auto* e : high) {
      if (e->homology[0] == 0) continue;
      generators += e->homology[0];
      const SimplicialComplex cx = detail::checked_complex(oracle, e->l, e->r, options);
      const bool cone = double_cone_witness(cx, 0, 1, n);
      const bool plain = oracle.representable_with_x0(e->l, e->r, 0);
      const bool offset = oracle.representable_with_x0(e->l, e->r, run.sc.e);
      if (!(cone && plain && offset))
        report.violation({{"kind", "shape"}, {"l", e->l}, {"r", e->r}, {"double_cone", cone},
                          {"x0_free_monomial", plain}, {"x0_power_e_monomial", offset},
                          {"facets", cx.facet_lists()}},
                         true);
    }
    report.params["e"] = run.sc.e;
    report.params["mu_prime"] = generators;
  });
  return report;
}

// ---------------------------------------------------------------------------
// Bresinsky curves a^h.

struct BresinskyContext {
  Int h = 0;
  CurveSequence curve;
  Int j = 0;
  Int m = 0;
  Int s = 0;
  Int alpha = 0;       // digit multiplying 2h - 1
  Int beta_digit = 0;  // digit multiplying 4h

  Int period() const noexcept { return 6 * h - 1; }
  bool sharp() const noexcept { return s == 4 * h; }
  /// j above 4 b_1 b_2 (b_2 + 1).
  Int envelope() const noexcept { return 4 * curve.b1() * curve.b2() * (curve.b2() + 1); }

  /// Upper bound on mu' for this digit case (the sharp case is exact).
  Int mu_bound() const noexcept {
    const Int sum = alpha + beta_digit;
    if (sum == 6 * h - 2) return 6 * h - 1;
    if (sum == 4 * h - 1) return 4 * h + 1;
    return 6 * h - 2;
  }
};

inline std::vector<Int> bresinsky_sequence(Int h) {
  if (h < 2) throw Error(ErrorKind::InvalidInput, "Bresinsky family needs h >= 2", {{"h", h}});
  return {(2 * h - 1) * 2 * h, (2 * h - 1) * (2 * h + 1), 2 * h * (2 * h + 1), 2 * h * (2 * h + 1) + 2 * h - 1};
}

/// j = (6h-1) m + s and s = (2h-1) alpha - 4h beta with the digit ranges
/// 0 <= alpha <= 4h, 0 <= beta <= 2h-1, (alpha, beta) != (4h, 2h-1).
inline BresinskyContext bresinsky_context(Int h, Int j) {
  if (j < 1) throw Error(ErrorKind::InvalidInput, "shift j must be >= 1");
  BresinskyContext ctx;
  ctx.h = h;
  ctx.curve = make_curve(bresinsky_sequence(h));
  ctx.j = j;
  ctx.m = j / ctx.period();
  ctx.s = j % ctx.period();
  int found = 0;
  for (Int alpha = 0; alpha <= 4 * h; ++alpha)
    for (Int beta = 0; beta <= 2 * h - 1; ++beta) {
      if (alpha == 4 * h && beta == 2 * h - 1) continue;
      if ((2 * h - 1) * alpha - 4 * h * beta != ctx.s) continue;
      ctx.alpha = alpha;
      ctx.beta_digit = beta;
      ++found;
    }
  if (found != 1)
    throw Error(ErrorKind::InternalWeightMismatch, "digit decomposition of s is not unique",
                {{"h", h}, {"s", ctx.s}, {"solutions", found}});
  return ctx;
}

/// Binomial x^lhs - x^rhs in x_1..x_4.
struct FamilyBinomial {
  std::string family;  // f2, g2, f3, g3, sharp
  Int index = 0;
  std::array<Int, 4> lhs{};
  std::array<Int, 4> rhs{};

  Int degree() const noexcept { return lhs[0] + lhs[1] + lhs[2] + lhs[3]; }
};

/// Affine degree of a monomial, deg x_i = a_i + j.
inline Int affine_weight(const BresinskyContext& ctx, const std::array<Int, 4>& exps) {
  Int w = 0;
  for (std::size_t i = 0; i < 4; ++i) w += exps[i] * (ctx.curve.a[i] + ctx.j);
  return w;
}

namespace detail {

inline void validate_binomial(const BresinskyContext& ctx, const FamilyBinomial& f) {
  const Int rhs_degree = f.rhs[0] + f.rhs[1] + f.rhs[2] + f.rhs[3];
  if (affine_weight(ctx, f.lhs) != affine_weight(ctx, f.rhs) || f.degree() != rhs_degree + 1)
    throw Error(ErrorKind::InternalWeightMismatch, "family binomial is not balanced",
                {{"family", f.family}, {"index", f.index}, {"lhs", f.lhs}, {"rhs", f.rhs}});
}

inline bool nonnegative(const FamilyBinomial& f) {
  for (std::size_t i = 0; i < 4; ++i)
    if (f.lhs[i] < 0 || f.rhs[i] < 0) return false;
  return true;
}

}  // namespace detail

/// The four candidate families, entries with a negative exponent dropped.
inline std::vector<FamilyBinomial> bresinsky_family(const BresinskyContext& ctx) {
  const Int h = ctx.h, m = ctx.m, a = ctx.alpha, b = ctx.beta_digit;
  std::vector<FamilyBinomial> out;
  auto emit = [&](FamilyBinomial f) {
    if (!detail::nonnegative(f)) return;
    detail::validate_binomial(ctx, f);
    out.push_back(std::move(f));
  };
  for (Int v = 0; v <= 2 * h - 1; ++v) {
    emit({"f2", v, {v + m + 1 - b, 0, a + b + 2 * h - v, 0}, {0, v, 0, m + 2 * h + a - v}});
    emit({"g2", v, {v + m + 2 * h - b, 0, a + b + 1 - 4 * h - v, 0}, {0, v, 0, m - 2 * h + a - v}});
  }
  for (Int u = 0; u <= 4 * h; ++u) {
    emit({"f3", u, {m - 6 * h + a + 1 + u, 10 * h - 2 - a - b - u, 0, 0}, {0, 0, u, m + 4 * h - 2 - b - u}});
    emit({"g3", u, {m - 2 * h + 1 + a + u, 4 * h - 1 - a - b - u, 0, 0}, {0, 0, u, m + 2 * h - 1 - b - u}});
  }
  return out;
}

/// The 6h - 1 generators of the sharp case s = 4h, all of degree m + 2h + 1.
inline std::vector<FamilyBinomial> bresinsky_sharp_generators(const BresinskyContext& ctx) {
  if (!ctx.sharp()) throw Error(ErrorKind::Precondition, "sharp generators need s = 4h", {{"s", ctx.s}});
  const Int h = ctx.h, m = ctx.m;
  std::vector<FamilyBinomial> out;
  for (Int i = 0; i <= 4 * h - 1; ++i)
    out.push_back({"sharp", i, {m + 2 * h + 1 - i, i, 0, 0}, {0, 0, 4 * h - i, m - 2 * h + i}});
  for (Int i = 1; i <= 2 * h - 1; ++i)
    out.push_back({"sharp", 4 * h + i - 1, {m + 2 * h + 1 - i, 0, i, 0}, {0, 2 * h - 1 - i, 0, m + i + 1}});
  for (const auto& f : out) {
    if (!detail::nonnegative(f))
      throw Error(ErrorKind::InternalWeightMismatch, "sharp generator has a negative exponent");
    detail::validate_binomial(ctx, f);
  }
  return out;
}

inline ordered_json family_to_json(const BresinskyContext& ctx, const std::vector<FamilyBinomial>& fam) {
  ordered_json out = ordered_json::array();
  for (const auto& f : fam)
    out.push_back({{"family", f.family}, {"index", f.index}, {"lhs", f.lhs}, {"rhs", f.rhs},
                   {"degree", f.degree()}, {"weight", affine_weight(ctx, f.lhs)}});
  return out;
}

/// mu' = 6h - 1 exactly when j = 4h mod 6h - 1, the case bound otherwise;
/// every generator degree must match a family binomial.
inline VerificationReport bresinsky_mu_check(Int h, Int j, const VerifyOptions& options = {}) {
  const BresinskyContext ctx = bresinsky_context(h, j);
  if (j <= ctx.envelope())
    throw Error(ErrorKind::Precondition, "Bresinsky check needs j > 4 b1 b2 (b2 + 1)",
                {{"j", j}, {"envelope", ctx.envelope()}});
  const Int regJ = 4 * h;
  VerificationReport report{"bresinsky"};
  report.params = detail::base_params(ctx.curve, j, regJ, options);
  report.params["h"] = h;
  report.params["m"] = ctx.m;
  report.params["s"] = ctx.s;
  report.params["alpha"] = ctx.alpha;
  report.params["beta_digit"] = ctx.beta_digit;
  report.params["sharp"] = ctx.sharp();

  detail::guarded(report, [&] {
    const ProjectiveRun run = detail::run_for_check(ctx.curve, j, regJ, options);
    const Int mu = mu_prime(run);
    report.params["mu_prime"] = mu;
    report.params["mu_bound"] = ctx.mu_bound();
    if (ctx.sharp() ? mu != 6 * h - 1 : mu > ctx.mu_bound())
      report.violation({{"kind", "mu_prime"}, {"observed", mu}, {"expected", ctx.sharp() ? "= 6h-1" : "<= bound"},
                        {"bound", ctx.mu_bound()}},
                       true);

    std::set<std::pair<Int, Int>> family_degrees;
    for (const auto& f : bresinsky_family(ctx)) family_degrees.emplace(f.degree(), affine_weight(ctx, f.lhs));
    ordered_json matched = ordered_json::array();
    for (const auto* e : detail::high_entries(run)) {
      if (e->homology[0] == 0) continue;
      const Int weight = e->l * run.sc.k - e->r;
      const bool hit = family_degrees.count({e->l, weight}) > 0;
      matched.push_back({{"l", e->l}, {"r", e->r}, {"weight", weight}, {"count", e->homology[0]}, {"in_family", hit}});
      if (!hit) report.violation({{"kind", "unmatched_generator"}, {"l", e->l}, {"r", e->r}, {"weight", weight}}, true);
    }
    report.witnesses.push_back({{"kind", "generator_degrees"}, {"degrees", matched}});
    report.witnesses.push_back(detail::ledger_witness(run));
  });
  return report;
}

}  // namespace curvebetti

#endif  // CURVEBETTI_VERIFY_HPP
