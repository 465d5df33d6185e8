#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace curvebetti;

namespace {

using Status = VerificationReport::Status;

const CurveSequence& five() {
  static const CurveSequence c = make_curve({1, 2, 3, 7, 10});
  return c;
}

bool has_kind(const VerificationReport& r, const std::string& kind) {
  for (const auto& w : r.witnesses)
    if (w.value("kind", "") == kind) return true;
  return false;
}

}  // namespace

TEST(Checks, PassAtShift49) {
  for (const auto& report : {check_shift(five(), 49, 4), check_affine_equality(five(), 49, 4),
                             check_double_cone(five(), 49, 4), check_deletion(five(), 49, 4)}) {
    EXPECT_EQ(report.status, Status::Pass) << report.to_json().dump();
    EXPECT_TRUE(has_kind(report, "ledger"));
    EXPECT_FALSE(report.params["guaranteed"].get<bool>());
  }
  EXPECT_EQ(check_shift(five(), 49, 4).params["e"], 1);
}

TEST(Checks, PeriodZeroIsTrivial) {
  const auto r = check_main_periodicity(five(), 49, 0, 4);
  EXPECT_EQ(r.status, Status::Pass);
  EXPECT_THROW(check_main_periodicity(five(), 49, -1, 4), Error);
}

TEST(Checks, Preconditions) {
  EXPECT_THROW(check_shift(five(), 0, 4), Error);
  EXPECT_THROW(check_inhomogeneous_shape(five(), 2736, 4), Error);
  EXPECT_THROW(bresinsky_mu_check(2, 3168), Error);
}

TEST(Checks, InjectedFacetBreaksDoubleCone) {
  VerifyOptions opts;
  opts.tamper = [](Int l, Int r, SimplicialComplex& cx) {
    if (l == 9 && r == 73) {
      auto facets = cx.facets();
      facets.push_back((1u << 2) | (1u << 3) | (1u << 4));  // {2,3,4}: misses both 0 and 1
      cx = SimplicialComplex::from_facet_masks(facets, cx.ground());
    }
  };
  const auto below = check_double_cone(five(), 49, 4, opts);
  EXPECT_EQ(below.status, Status::Inconclusive);
  EXPECT_TRUE(has_kind(below, "not_double_cone"));

  opts.tamper = [](Int, Int, SimplicialComplex& cx) {
    auto facets = cx.facets();
    facets.push_back((1u << 2) | (1u << 3));
    cx = SimplicialComplex::from_facet_masks(facets, cx.ground());
  };
  const auto above = check_double_cone(five(), 2737, 4, opts);
  EXPECT_EQ(above.status, Status::Fail);
  EXPECT_TRUE(has_kind(above, "not_double_cone"));
  EXPECT_FALSE(above.witnesses.empty());

  const auto shape = check_inhomogeneous_shape(five(), 2737, 4, opts);
  EXPECT_EQ(shape.status, Status::Fail);
  const auto deletion = check_deletion(five(), 2737, 4, opts);
  EXPECT_EQ(deletion.status, Status::Fail);
  EXPECT_TRUE(has_kind(deletion, "deletion"));
}

TEST(Checks, GuaranteedRegimeFivePointCurve) {
  EXPECT_EQ(check_double_cone(five(), 2737, 4).status, Status::Pass);
  EXPECT_EQ(check_deletion(five(), 2737, 4).status, Status::Pass);
  EXPECT_EQ(check_inhomogeneous_shape(five(), 2737, 4).status, Status::Pass);
}

// shift passing at j and j + b_1 goes together with period passing for two periods
TEST(Checks, ShiftAndPeriodCompose) {
  const Int j = 2750;
  const bool shifts = check_shift(five(), j, 4).passed() && check_shift(five(), j + 9, 4).passed();
  const auto period = check_main_periodicity(five(), j, 2, 4);
  EXPECT_TRUE(shifts);
  EXPECT_EQ(period.passed(), shifts);
}

TEST(Checks, ReportJsonShape) {
  const auto j = check_shift(five(), 49, 4).to_json();
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"check", "status", "params", "witnesses"}));
  EXPECT_EQ(j["status"], "pass");
}

TEST(Bresinsky, ContextExamples) {
  const auto ctx = bresinsky_context(2, 3176);
  EXPECT_EQ(ctx.curve.a, (std::vector<Int>{12, 15, 20, 23}));
  EXPECT_EQ(ctx.curve.b, (std::vector<Int>{11, 8, 3, 0}));
  EXPECT_EQ(ctx.m, 288);
  EXPECT_EQ(ctx.s, 8);
  EXPECT_EQ(ctx.alpha, 8);
  EXPECT_EQ(ctx.beta_digit, 2);
  EXPECT_TRUE(ctx.sharp());
  EXPECT_EQ(ctx.envelope(), 3168);

  const auto low = bresinsky_context(2, 3169);
  EXPECT_EQ(low.s, 1);
  EXPECT_EQ(3 * low.alpha - 8 * low.beta_digit, 1);
  EXPECT_FALSE(low.sharp());
  EXPECT_THROW(bresinsky_context(1, 5), Error);
}

TEST(Bresinsky, DigitDecompositionUniqueForAllSmallH) {
  for (Int h = 2; h <= 6; ++h)
    for (Int s = 0; s <= 6 * h - 2; ++s) {
      const auto ctx = bresinsky_context(h, (6 * h - 1) * 100 + s);
      EXPECT_EQ(ctx.s, s);
      EXPECT_EQ((2 * h - 1) * ctx.alpha - 4 * h * ctx.beta_digit, s);
      EXPECT_EQ(ctx.sharp(), ctx.alpha + ctx.beta_digit == 6 * h - 2);
    }
}

TEST(Bresinsky, FamiliesAreBalanced) {
  for (Int h = 2; h <= 4; ++h)
    for (Int s = 0; s <= 6 * h - 2; ++s) {
      const auto ctx = bresinsky_context(h, (6 * h - 1) * 500 + s);
      for (const auto& f : bresinsky_family(ctx)) {
        EXPECT_EQ(affine_weight(ctx, f.lhs), affine_weight(ctx, f.rhs));
        EXPECT_EQ(f.degree(), f.rhs[0] + f.rhs[1] + f.rhs[2] + f.rhs[3] + 1);
      }
      if (ctx.sharp()) {
        const auto sharp = bresinsky_sharp_generators(ctx);
        EXPECT_EQ(static_cast<Int>(sharp.size()), 6 * h - 1);
        for (const auto& f : sharp) EXPECT_EQ(f.degree(), ctx.m + 2 * h + 1);
      } else {
        EXPECT_THROW(bresinsky_sharp_generators(ctx), Error);
      }
    }
}

TEST(Bresinsky, SharpAndNonSharpShifts) {
  const auto sharp = bresinsky_mu_check(2, 3176);
  EXPECT_EQ(sharp.status, Status::Pass) << sharp.to_json().dump();
  EXPECT_EQ(sharp.params["mu_prime"], 11);
  const auto other = bresinsky_mu_check(2, 3169);
  EXPECT_EQ(other.status, Status::Pass);
  EXPECT_LE(other.params["mu_prime"].get<Int>(), 10);
}
