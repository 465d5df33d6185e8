#ifndef CURVEBETTI_SIMPLICIAL_HPP
#define CURVEBETTI_SIMPLICIAL_HPP

// Simplicial complexes on at most 16 vertices, faces stored as bitmasks,
// with exact reduced homology over Q or GF(p).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "affsg.hpp"
#include "errors.hpp"
#include "linalg.hpp"

namespace curvebetti {

inline constexpr int kMaxVertices = 16;

inline std::vector<int> mask_to_vertices(VertexMask mask) {
  std::vector<int> out;
  for (; mask != 0; mask &= mask - 1) out.push_back(std::countr_zero(mask));
  return out;
}

/// Complex over a ground set of vertices. The void complex has no faces at
/// all; the complex {∅} has exactly the empty face.
class SimplicialComplex {
public:
  SimplicialComplex() { init(0); }

  static SimplicialComplex void_complex(VertexMask ground) {
    SimplicialComplex cx;
    cx.init(ground);
    return cx;
  }

  /// Downward closure of the given facets. An empty facet list gives the
  /// void complex; a single empty facet gives {∅}.
  static SimplicialComplex from_facets(const std::vector<std::vector<int>>& facets,
                                       VertexMask ground = 0) {
    std::vector<VertexMask> masks;
    for (const auto& facet : facets) {
      VertexMask m = 0;
      for (int v : facet) {
        if (v < 0 || v >= kMaxVertices)
          throw Error(ErrorKind::InvalidVertex, "vertex " + std::to_string(v) + " out of range");
        m |= VertexMask{1} << v;
      }
      masks.push_back(m);
    }
    return from_facet_masks(masks, ground);
  }

  static SimplicialComplex from_facet_masks(const std::vector<VertexMask>& facets,
                                            VertexMask ground = 0) {
    VertexMask all = ground;
    for (VertexMask f : facets) all |= f;
    if ((all >> kMaxVertices) != 0) throw Error(ErrorKind::InvalidVertex, "vertex out of range");
    SimplicialComplex cx;
    cx.init(all);
    for (VertexMask f : facets) cx.mark_down(f);
    return cx;
  }

  /// Faces decided by a monotone predicate (true on F implies true on every
  /// subset of F). Supersets are visited first so subsets of a known face
  /// are never queried.
  static SimplicialComplex from_predicate(VertexMask ground,
                                          const std::function<bool(VertexMask)>& is_face) {
    if ((ground >> kMaxVertices) != 0) throw Error(ErrorKind::InvalidVertex, "vertex out of range");
    SimplicialComplex cx;
    cx.init(ground);
    for (VertexMask f = ground;; f = (f - 1) & ground) {
      if (!cx.faces_[f] && is_face(f)) cx.mark_down(f);
      if (f == 0) break;
    }
    return cx;
  }

  VertexMask ground() const noexcept { return ground_; }
  bool is_void() const noexcept { return face_count_ == 0; }
  std::size_t face_count() const noexcept { return face_count_; }

  bool contains(VertexMask face) const noexcept {
    if ((face & ~ground_) != 0) return false;
    return faces_[face] != 0;
  }

  /// Vertices v with {v} a face.
  VertexMask vertices() const noexcept {
    VertexMask out = 0;
    for (VertexMask bits = ground_; bits != 0; bits &= bits - 1) {
      const VertexMask v = bits & (~bits + 1);
      if (faces_[v]) out |= v;
    }
    return out;
  }

  /// -1 for {∅}; -2 for the void complex.
  int dimension() const noexcept {
    int best = -2;
    for_each_face([&](VertexMask f) { best = std::max(best, std::popcount(f) - 1); });
    return best;
  }

  std::vector<VertexMask> faces() const {
    std::vector<VertexMask> out;
    for_each_face([&](VertexMask f) { out.push_back(f); });
    return out;
  }

  /// Maximal faces, ordered by their sorted vertex lists.
  std::vector<VertexMask> facets() const {
    std::vector<VertexMask> out;
    for_each_face([&](VertexMask f) {
      for (VertexMask rest = ground_ & ~f; rest != 0; rest &= rest - 1)
        if (faces_[f | (rest & (~rest + 1))]) return;
      out.push_back(f);
    });
    std::sort(out.begin(), out.end(), [](VertexMask x, VertexMask y) {
      return mask_to_vertices(x) < mask_to_vertices(y);
    });
    return out;
  }

  std::vector<std::vector<int>> facet_lists() const {
    std::vector<std::vector<int>> out;
    for (VertexMask f : facets()) out.push_back(mask_to_vertices(f));
    return out;
  }

  template <typename Fn>
  void for_each_face(Fn&& fn) const {
    if (faces_.empty()) return;
    for (VertexMask f = ground_;; f = (f - 1) & ground_) {
      if (faces_[f]) fn(f);
      if (f == 0) break;
    }
  }

  friend bool operator==(const SimplicialComplex& x, const SimplicialComplex& y) {
    if (x.ground_ != y.ground_ || x.face_count_ != y.face_count_) return false;
    bool same = true;
    x.for_each_face([&](VertexMask f) { same = same && y.faces_[f]; });
    return same;
  }

private:
  void init(VertexMask ground) {
    ground_ = ground;
    faces_.assign(std::size_t{1} << std::bit_width(ground), 0);
    face_count_ = 0;
  }

  void mark_down(VertexMask f) {
    for (VertexMask s = f;; s = (s - 1) & f) {
      if (!faces_[s]) {
        faces_[s] = 1;
        ++face_count_;
      }
      if (s == 0) break;
    }
  }

  VertexMask ground_ = 0;
  std::vector<std::uint8_t> faces_;
  std::size_t face_count_ = 0;
};

/// Coefficient field: the rationals or GF(p).
struct FieldSpec {
  enum class Kind { Rationals, Prime };
  Kind kind = Kind::Rationals;
  Int p = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(Int p) {
    bool ok = p >= 2 && p < (Int{1} << 31);
    for (Int q = 2; ok && q * q <= p; ++q) ok = (p % q) != 0;
    if (!ok) throw Error(ErrorKind::InvalidInput, "field characteristic must be a prime below 2^31");
    return {Kind::Prime, p};
  }

  std::string name() const {
    return kind == Kind::Rationals ? std::string("QQ") : "GF(" + std::to_string(p) + ")";
  }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// dims of reduced homology H~_i for i = -1, 0, 1, ...; trailing zeros dropped.
class HomologyVector {
public:
  HomologyVector() = default;
  /// from_minus_one[0] is H~_{-1}.
  explicit HomologyVector(std::vector<Int> from_minus_one) : dims_(std::move(from_minus_one)) {
    while (!dims_.empty() && dims_.back() == 0) dims_.pop_back();
  }

  Int operator[](int i) const noexcept {
    const int idx = i + 1;
    return (idx >= 0 && idx < static_cast<int>(dims_.size())) ? dims_[idx] : 0;
  }

  /// Largest i with a nonzero entry, or -2 when all vanish.
  int top() const noexcept { return static_cast<int>(dims_.size()) - 2; }

  bool is_zero() const noexcept { return dims_.empty(); }
  /// Some H~_i with i >= 0 is nonzero.
  bool nontrivial() const noexcept { return top() >= 0; }

  const std::vector<Int>& raw() const noexcept { return dims_; }

  friend bool operator==(const HomologyVector&, const HomologyVector&) = default;

private:
  std::vector<Int> dims_;
};

inline bool is_cone(const SimplicialComplex& cx, int apex) {
  if (apex < 0 || apex >= kMaxVertices) throw Error(ErrorKind::InvalidVertex, "apex out of range");
  const VertexMask a = VertexMask{1} << apex;
  if (!cx.contains(a)) return false;
  bool cone = true;
  cx.for_each_face([&](VertexMask f) { cone = cone && cx.contains(f | a); });
  return cone;
}

inline SimplicialComplex delete_vertex(const SimplicialComplex& cx, int v) {
  if (v < 0 || v >= kMaxVertices) throw Error(ErrorKind::InvalidVertex, "vertex out of range");
  const VertexMask bit = VertexMask{1} << v;
  std::vector<VertexMask> kept;
  for (VertexMask f : cx.facets()) kept.push_back(f & ~bit);
  if (cx.is_void()) return SimplicialComplex::void_complex(cx.ground() & ~bit);
  return SimplicialComplex::from_facet_masks(kept, cx.ground() & ~bit);
}

/// Every facet missing `zero` contains `one`, and every facet containing
/// `zero` contains `last`.
inline bool double_cone_witness(const SimplicialComplex& cx, int zero, int one, int last) {
  for (int v : {zero, one, last})
    if (v < 0 || v >= kMaxVertices) throw Error(ErrorKind::InvalidVertex, "vertex out of range");
  const VertexMask z = VertexMask{1} << zero, o = VertexMask{1} << one, l = VertexMask{1} << last;
  for (VertexMask f : cx.facets()) {
    if ((f & z) == 0 && (f & o) == 0) return false;
    if ((f & z) != 0 && (f & l) == 0) return false;
  }
  return true;
}

/// Sum over faces of (-1)^dim, the empty face counting -1.
inline Int reduced_euler_characteristic(const SimplicialComplex& cx) {
  Int chi = 0;
  cx.for_each_face([&](VertexMask f) { chi += (std::popcount(f) % 2 == 1) ? 1 : -1; });
  return chi;
}

inline HomologyVector reduced_homology(const SimplicialComplex& cx, const FieldSpec& field) {
  if (cx.is_void()) return HomologyVector{};

  // by_size[s] lists faces with s vertices; index_of maps a face to its column.
  const int top = std::popcount(cx.ground());
  std::vector<std::vector<VertexMask>> by_size(static_cast<std::size_t>(top) + 2);
  std::vector<std::size_t> index_of(std::size_t{1} << std::bit_width(cx.ground()), 0);
  cx.for_each_face([&](VertexMask f) { by_size[std::popcount(f)].push_back(f); });
  for (auto& group : by_size) {
    std::sort(group.begin(), group.end());
    for (std::size_t i = 0; i < group.size(); ++i) index_of[group[i]] = i;
  }

  // rank[s]: rank of the boundary from size-s faces to size-(s-1) faces.
  std::vector<std::size_t> rank(by_size.size() + 1, 0);
  for (std::size_t s = 1; s < by_size.size(); ++s) {
    const auto& cols = by_size[s];
    const auto& rows = by_size[s - 1];
    if (cols.empty() || rows.empty()) continue;
    DenseMatrix<Int> boundary(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      Int sign = 1;
      for (VertexMask bits = cols[c]; bits != 0; bits &= bits - 1) {
        const VertexMask v = bits & (~bits + 1);
        boundary(index_of[cols[c] & ~v], c) = sign;
        sign = -sign;
      }
    }
    rank[s] = field.kind == FieldSpec::Kind::Rationals ? rank_rational(boundary)
                                                       : rank_mod_p(std::move(boundary), field.p);
  }

  std::vector<Int> dims;
  for (std::size_t s = 0; s < by_size.size(); ++s) {
    const Int cycles = static_cast<Int>(by_size[s].size()) - static_cast<Int>(rank[s]);
    dims.push_back(cycles - static_cast<Int>(rank[s + 1]));
  }
  return HomologyVector(std::move(dims));
}

}  // namespace curvebetti

#endif  // CURVEBETTI_SIMPLICIAL_HPP
