#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace curvebetti;

namespace {

using Entries = std::map<std::pair<Int, Int>, Int>;  // (deg, i) -> value

// Left table of the five-point example at j = 49.
const Entries kTable49 = {{{2, 0}, 1},  {{3, 0}, 6},  {{4, 1}, 8},  {{5, 2}, 1},  {{5, 1}, 2},
                          {{6, 2}, 4},  {{7, 3}, 1},  {{7, 0}, 2},  {{8, 1}, 1},  {{8, 0}, 1},
                          {{9, 1}, 11}, {{10, 2}, 13}, {{11, 3}, 3}, {{12, 3}, 1}};

Entries table58() {
  Entries out;
  for (const auto& [key, value] : kTable49) {
    const bool high = key.first - key.second >= 7;
    out[{key.first + (high ? 1 : 0), key.second}] = value;
  }
  return out;
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Precondition;
}

}  // namespace

TEST(BettiJ, TwoPointCurveIsTheZeroIdeal) {
  const auto J = betti_J(make_curve({1, 2}));
  EXPECT_TRUE(J.zero_ideal);
  EXPECT_TRUE(J.table.empty());
  EXPECT_EQ(J.regJ, 0);
}

TEST(BettiJ, TwistedCubicCone) {
  // (1,1),(2,1),(3,1): one quadric x_1 x_3 - x_2^2
  const auto J = betti_J(make_curve({1, 2, 3}));
  EXPECT_EQ(J.table.entries(), (Entries{{{2, 0}, 1}}));
  EXPECT_EQ(J.regJ, 2);
}

TEST(BettiJ, FivePointCurveMatchesLowBlock) {
  const auto J = betti_J(make_curve({1, 2, 3, 7, 10}));
  EXPECT_EQ(J.regJ, 4);
  Entries low;
  for (const auto& [key, value] : kTable49)
    if (key.first - key.second <= 4) low[key] = value;
  EXPECT_EQ(J.table.entries(), low);
}

TEST(BettiJ, BresinskyRegularity) { EXPECT_EQ(betti_J(make_curve({12, 15, 20, 23})).regJ, 8); }

TEST(BettiJ, CapIsEnforced) {
  EXPECT_EQ(kind_of([] { betti_J(make_curve({1, 2, 3, 7, 10}), {}, 5); }), ErrorKind::ScanTruncated);
}

TEST(BettiProjective, GoldenTablesOverBothFields) {
  const auto curve = make_curve({1, 2, 3, 7, 10});
  for (const auto& field : {FieldSpec::rationals(), FieldSpec::prime(32003)}) {
    RunOptions opts{field, 1};
    const auto r49 = betti_projective(shift_curve(curve, 49), ProjectiveMode::scan(0, 4), opts);
    EXPECT_EQ(r49.table.entries(), kTable49) << field.name();
    EXPECT_EQ(reg(r49.table), 9);
    EXPECT_EQ(r49.table.totals(), (std::vector<Int>{10, 22, 18, 5}));
    ASSERT_TRUE(r49.table.split());
    EXPECT_EQ(r49.table.split()->value, 5);
    EXPECT_TRUE(r49.table.split()->empirical);
    EXPECT_EQ(mu_prime(r49), 3);

    const auto r58 = betti_projective(shift_curve(curve, 58), ProjectiveMode::scan(0, 4), opts);
    EXPECT_EQ(r58.table.entries(), table58()) << field.name();
    EXPECT_EQ(reg(r58.table), 10);
  }
}

TEST(BettiProjective, ErrorsAndModes) {
  const auto curve = make_curve({1, 2, 3, 7, 10});
  EXPECT_EQ(kind_of([&] { betti_projective(shift_curve(curve, 49), ProjectiveMode::rigorous(4)); }),
            ErrorKind::WindowBreach);
  EXPECT_EQ(kind_of([&] { betti_projective(shift_curve(curve, 49), ProjectiveMode::scan(8, 4)); }),
            ErrorKind::ScanTruncated);
  EXPECT_EQ(kind_of([&] { betti_projective(shift_curve(curve, 49), ProjectiveMode::scan(1)); }),
            ErrorKind::Precondition);
  EXPECT_EQ(kind_of([&] { betti_projective(shift_curve(curve, 3000), ProjectiveMode::rigorous(-1)); }),
            ErrorKind::Precondition);
  EXPECT_EQ(auto_mode(curve, 2726, 4).kind, ProjectiveMode::Kind::Scan);
  EXPECT_EQ(auto_mode(curve, 2727, 4).kind, ProjectiveMode::Kind::Rigorous);
}

TEST(BettiTable, RegAndBlocks) {
  BettiTable t;
  EXPECT_EQ(kind_of([&] { reg(t); }), ErrorKind::EmptyTable);
  t.add(0, 2, 1);
  EXPECT_EQ(reg(t), 2);
  EXPECT_THROW(t.add(0, 3, -1), Error);
  EXPECT_THROW(t.block(true), Error);
  t.add(1, 9, 4);
  t.set_split(Split{5, Split::Basis::Degree, false});
  EXPECT_EQ(t.block(true).entries(), (Entries{{{9, 1}, 4}}));
  EXPECT_EQ(t.block(false).entries(), (Entries{{{2, 0}, 1}}));
  BettiTable s(Grading::Semigroup);
  s.add(0, 5, 1);
  EXPECT_THROW(reg(s), Error);
}

TEST(BettiAffine, TotalsAgreeAtShift49) {
  const auto run = betti_projective(shift_curve(make_curve({1, 2, 3, 7, 10}), 49), ProjectiveMode::scan(0, 4));
  const auto affine = betti_affine(run);
  EXPECT_EQ(affine.grading(), Grading::Semigroup);
  EXPECT_EQ(affine.totals(), (std::vector<Int>{10, 22, 18, 5}));
}

// Curves small enough that a full scan past the threshold is cheap: the
// windowed run must give the same table, and the high block must pass the
// structural audit.
TEST(BettiProperty, RigorousEqualsScanPastThreshold) {
  for (const auto& a : std::vector<std::vector<Int>>{{1, 2, 3}, {1, 3, 4}, {2, 3, 5}, {1, 2, 5}, {1, 4, 6}}) {
    const auto curve = make_curve(a);
    const Int regJ = betti_J(curve).regJ;
    const Int first = bound_N(curve, regJ) - curve.an() + 1;
    for (Int j = first; j < first + 3; ++j) {
      const auto sc = shift_curve(curve, j);
      const auto rig = betti_projective(sc, ProjectiveMode::rigorous(regJ));
      const auto scan = betti_projective(sc, ProjectiveMode::scan(0, regJ));
      EXPECT_EQ(rig.table.entries(), scan.table.entries()) << ::testing::PrintToString(a) << " j=" << j;
      if (j > bound_N(curve, regJ)) { EXPECT_TRUE(audit_high_block(rig).empty()); }

      const auto affine = betti_affine(rig);
      const auto tp = rig.table.totals(), ta = affine.totals();
      for (std::size_t i = 0; i < ta.size(); ++i) EXPECT_LE(ta[i], i < tp.size() ? tp[i] : 0);
      for (const auto& [key, value] : rig.table.entries()) EXPECT_LT(key.second, key.first);
    }
  }
}

TEST(BettiProperty, ThreadCountDoesNotChangeResults) {
  const auto sc = shift_curve(make_curve({1, 2, 3, 7, 10}), 49);
  const auto one = betti_projective(sc, ProjectiveMode::scan(0, 4), {FieldSpec::rationals(), 1});
  const auto many = betti_projective(sc, ProjectiveMode::scan(0, 4), {FieldSpec::rationals(), 8});
  EXPECT_EQ(one.table, many.table);
  EXPECT_EQ(one.ledger, many.ledger);
}

TEST(MuPrime, NeedsASplit) {
  ProjectiveRun run;
  EXPECT_EQ(kind_of([&] { mu_prime(run); }), ErrorKind::Precondition);
}
