#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace curvebetti;

using Facets = std::vector<std::vector<int>>;

// Facets come from the brute-force enumeration of the defining equation.
// Besides the four facets usually quoted, {1,2,3} is a face of D(9,73) via
// y = (0,2,6,1,0,0); in D(10,83), {0,2,3,4,5} is a face via y = (1,0,1,1,3,4)
// and {1,3,4} is not a face. The homology is the same either way.
TEST(DivisorComplex, GoldenComplexesAtShift49) {
  const auto sc = shift_curve(make_curve({1, 2, 3, 7, 10}), 49);
  const auto d973 = delta_lr(sc, 9, 73);
  EXPECT_EQ(d973.facet_lists(), (Facets{{0, 2, 4, 5}, {0, 3, 5}, {1, 2, 3}, {1, 2, 4}, {1, 3, 4}}));
  EXPECT_TRUE(double_cone_witness(d973, 0, 1, 5));
  const auto d1083 = delta_lr(sc, 10, 83);
  EXPECT_EQ(d1083.facet_lists(), (Facets{{0, 1, 2, 3, 5}, {0, 1, 4, 5}, {0, 2, 3, 4, 5}, {1, 2, 4}}));
  EXPECT_TRUE(double_cone_witness(d1083, 0, 1, 5));

  const auto h973 = reduced_homology(d973, FieldSpec::rationals());
  const auto h1083 = reduced_homology(d1083, FieldSpec::rationals());
  EXPECT_EQ(h973, HomologyVector({0, 0, 1}));
  EXPECT_EQ(h1083, HomologyVector({0, 0, 0, 1}));

  // the quoted facet lists, as complexes, carry the same homology
  const auto q973 = SimplicialComplex::from_facets({{0, 2, 4, 5}, {0, 3, 5}, {1, 2, 4}, {1, 3, 4}}, 0x3f);
  const auto q1083 = SimplicialComplex::from_facets({{0, 1, 4, 5}, {0, 1, 2, 3, 5}, {0, 3, 4, 5}, {1, 2, 4}, {1, 3, 4}}, 0x3f);
  EXPECT_EQ(reduced_homology(q973, FieldSpec::rationals()), h973);
  EXPECT_EQ(reduced_homology(q1083, FieldSpec::rationals()), h1083);
}

TEST(DivisorComplex, EveryFaceIsABruteForceMember) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = oracle::random_sequence(rng, 3 + trial % 2, 10);
    const auto sc = shift_curve(make_curve(a), 1 + trial % 7);
    GradedOracle o(sc);
    o.build_up_to(6 * sc.k);
    for (Int l = 1; l <= 5; ++l)
      for (Int r = 0; r <= l * sc.k; r += 1 + l) {
        const auto cx = delta_lr(o, l, r);
        const VertexMask ground = cx.ground();
        for (VertexMask f = ground;; f = (f - 1) & ground) {
          EXPECT_EQ(cx.contains(f), oracle::graded_member(sc, l, r, f));
          if (f == 0) break;
        }
      }
  }
}

TEST(DivisorComplex, AffineComplexAgreesWithBruteForce) {
  const auto sc = shift_curve(make_curve({1, 2, 3, 7, 10}), 49);
  AffineOracle o(sc);
  o.build_up_to(600);
  for (Int m : {0, 50, 100, 459, 463, 513, 517, 577}) {
    const auto cx = delta_m(o, m);
    for (VertexMask f = 0; f < 64; f += 2)
      EXPECT_EQ(cx.contains(f), oracle::affine_member(sc, m, f)) << m << " " << f;
  }
  EXPECT_TRUE(delta_m(o, 1).is_void());
}

TEST(DivisorComplex, DeletionOfVertexZeroAtGoldenDegrees) {
  const auto sc = shift_curve(make_curve({1, 2, 3, 7, 10}), 49);
  for (auto [l, r] : {std::pair<Int, Int>{9, 73}, {10, 83}}) {
    const auto proj = delta_lr(sc, l, r);
    const auto aff = delta_m(sc, l * sc.k - r);
    EXPECT_EQ(delete_vertex(proj, 0), aff) << l << "," << r;
  }
}

TEST(DivisorComplex, SemigroupVersionForJ) {
  const auto sg = homog_part_semigroup(make_curve({1, 2, 3}));
  // (4, 2) = (1,1) + (3,1) = (2,1) + (2,1)
  const auto cx = delta_v(sg, std::vector<Int>{4, 2});
  EXPECT_EQ(cx.facet_lists(), (Facets{{1, 3}, {2}}));
  EXPECT_EQ(reduced_homology(cx, FieldSpec::rationals())[0], 1);
  EXPECT_TRUE(delta_v(sg, std::vector<Int>{-1, 2}).is_void());
}

TEST(QuickTriviality, Classification) {
  EXPECT_EQ(quick_triviality(SimplicialComplex::from_facets({{1, 2, 3}})).kind, Triviality::Kind::FullSimplex);
  const auto cone = quick_triviality(SimplicialComplex::from_facets({{1, 2}, {2, 3}}));
  EXPECT_EQ(cone.kind, Triviality::Kind::ConeAt);
  EXPECT_EQ(cone.apex, 2);
  EXPECT_FALSE(quick_triviality(SimplicialComplex::from_facets({{1}, {2}})).acyclic());
  EXPECT_FALSE(quick_triviality(SimplicialComplex::from_facets({{}})).acyclic());
}
