#ifndef CURVEBETTI_DIVISOR_HPP
#define CURVEBETTI_DIVISOR_HPP

// Squarefree divisor complexes: F is a face of Delta_v when v minus the sum
// of the generators indexed by F stays inside the semigroup.

#include <algorithm>
#include <bit>
#include <span>
#include <vector>

#include "affsg.hpp"
#include "simplicial.hpp"

namespace curvebetti {

/// Mask with bits first..last set.
inline constexpr VertexMask vertex_range(int first, int last) {
  VertexMask m = 0;
  for (int v = first; v <= last; ++v) m |= VertexMask{1} << v;
  return m;
}

/// Delta_v for a general affine semigroup, vertices 1..n'. The caller's
/// table must cover the box [0, v].
inline SimplicialComplex delta_v(const AffineSemigroup& sg, const BoxMembership& table,
                                 std::span<const Int> v) {
  if (v.size() != sg.ambient_dim) throw Error(ErrorKind::InvalidInput, "degree dimension mismatch");
  if (sg.size() + 1 > static_cast<std::size_t>(kMaxVertices))
    throw Error(ErrorKind::InvalidVertex, "too many generators for a bitmask complex");
  const VertexMask ground = vertex_range(1, static_cast<int>(sg.size()));
  std::vector<Int> rest(v.size());
  return SimplicialComplex::from_predicate(ground, [&](VertexMask face) {
    std::copy(v.begin(), v.end(), rest.begin());
    for (VertexMask bits = face; bits != 0; bits &= bits - 1) {
      const auto& g = sg.generators[static_cast<std::size_t>(std::countr_zero(bits)) - 1];
      for (std::size_t c = 0; c < rest.size(); ++c) rest[c] -= g[c];
    }
    return table.contains(rest);
  });
}

inline SimplicialComplex delta_v(const AffineSemigroup& sg, std::span<const Int> v) {
  for (Int x : v)
    if (x < 0) return SimplicialComplex::void_complex(vertex_range(1, static_cast<int>(sg.size())));
  BoxMembership table(sg, std::vector<Int>(v.begin(), v.end()));
  return delta_v(sg, table, v);
}

/// Delta_{l,r}(j) on vertices 0..n.
inline SimplicialComplex delta_lr(const GradedOracle& oracle, Int l, Int r) {
  const VertexMask ground = vertex_range(0, static_cast<int>(oracle.curve().n()));
  if (l < 0 || r < 0) return SimplicialComplex::void_complex(ground);
  return SimplicialComplex::from_predicate(
      ground, [&](VertexMask face) { return oracle.representable(l, r, face); });
}

inline SimplicialComplex delta_lr(const ShiftedCurve& sc, Int l, Int r) {
  GradedOracle oracle(sc);
  oracle.build_up_to(std::max<Int>(r, 0));
  return delta_lr(oracle, l, r);
}

/// Delta_m on vertices 1..n.
inline SimplicialComplex delta_m(const AffineOracle& oracle, Int m) {
  const VertexMask ground = vertex_range(1, static_cast<int>(oracle.curve().n()));
  if (m < 0) return SimplicialComplex::void_complex(ground);
  return SimplicialComplex::from_predicate(
      ground, [&](VertexMask face) { return oracle.representable(m, face); });
}

inline SimplicialComplex delta_m(const ShiftedCurve& sc, Int m) {
  AffineOracle oracle(sc);
  oracle.build_up_to(std::max<Int>(m, 0));
  return delta_m(oracle, m);
}

struct Triviality {
  enum class Kind { FullSimplex, ConeAt, Unknown };
  Kind kind = Kind::Unknown;
  int apex = -1;

  /// Known to have vanishing reduced homology.
  bool acyclic() const noexcept { return kind != Kind::Unknown; }
};

/// Cheap acyclicity filter: full simplex on its vertex set, or a cone.
inline Triviality quick_triviality(const SimplicialComplex& cx) {
  const VertexMask verts = cx.vertices();
  if (verts == 0) return {};
  if (cx.contains(verts)) return {Triviality::Kind::FullSimplex, -1};
  for (VertexMask bits = verts; bits != 0; bits &= bits - 1) {
    const int v = std::countr_zero(bits);
    if (is_cone(cx, v)) return {Triviality::Kind::ConeAt, v};
  }
  return {};
}

/// Homology with the quick filter in front.
inline HomologyVector filtered_homology(const SimplicialComplex& cx, const FieldSpec& field) {
  if (cx.is_void() || quick_triviality(cx).acyclic()) return HomologyVector{};
  return reduced_homology(cx, field);
}

}  // namespace curvebetti

#endif  // CURVEBETTI_DIVISOR_HPP
