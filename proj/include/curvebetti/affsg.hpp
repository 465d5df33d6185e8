#ifndef CURVEBETTI_AFFSG_HPP
#define CURVEBETTI_AFFSG_HPP

// Membership queries for the three semigroups in play: the projective
// curve semigroup generated by (k,0), (b_i, k - b_i); the affine curve
// semigroup <k - b_1, ..., k - b_n>; and the homogeneous-part semigroup
// generated by (a_i, 1).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <set>
#include <span>
#include <vector>

#include "errors.hpp"
#include "numsg.hpp"

namespace curvebetti {

/// Bit i set <=> vertex i. Vertices live in 0..15.
using VertexMask = std::uint32_t;

/// Semigroup in N^m generated by finitely many nonzero vectors.
struct AffineSemigroup {
  std::size_t ambient_dim = 0;
  std::vector<std::vector<Int>> generators;

  std::size_t size() const noexcept { return generators.size(); }
};

inline AffineSemigroup make_semigroup(std::vector<std::vector<Int>> generators) {
  if (generators.empty()) throw Error(ErrorKind::InvalidInput, "semigroup needs a generator");
  const std::size_t dim = generators.front().size();
  if (dim == 0) throw Error(ErrorKind::InvalidInput, "ambient dimension must be positive");
  std::set<std::vector<Int>> seen;
  for (const auto& g : generators) {
    if (g.size() != dim) throw Error(ErrorKind::InvalidInput, "generator dimension mismatch");
    if (std::any_of(g.begin(), g.end(), [](Int x) { return x < 0; }))
      throw Error(ErrorKind::InvalidInput, "generator coordinates must be nonnegative");
    if (std::all_of(g.begin(), g.end(), [](Int x) { return x == 0; }))
      throw Error(ErrorKind::InvalidInput, "zero generator");
    if (!seen.insert(g).second) throw Error(ErrorKind::InvalidInput, "duplicate generator");
  }
  return AffineSemigroup{dim, std::move(generators)};
}

/// Generators (a_i, 1); its toric ideal is J(a), the ideal generated by the
/// homogeneous elements of I(a).
inline AffineSemigroup homog_part_semigroup(const CurveSequence& curve) {
  std::vector<std::vector<Int>> gens;
  for (Int ai : curve.a) gens.push_back({ai, 1});
  return make_semigroup(std::move(gens));
}

/// Reachability table of an affine semigroup over the box [0, bound].
class BoxMembership {
public:
  BoxMembership(const AffineSemigroup& sg, std::vector<Int> bound)
      : bound_(std::move(bound)) {
    if (bound_.size() != sg.ambient_dim)
      throw Error(ErrorKind::InvalidInput, "box bound dimension mismatch");
    strides_.assign(bound_.size(), 1);
    std::size_t total = 1;
    for (std::size_t i = bound_.size(); i-- > 0;) {
      if (bound_[i] < 0) throw Error(ErrorKind::InvalidInput, "negative box bound");
      strides_[i] = total;
      total *= static_cast<std::size_t>(bound_[i] + 1);
    }
    reach_.assign(total, 0);
    reach_[0] = 1;

    // Lexicographic order: p - g precedes p for every nonzero g <= p.
    std::vector<Int> point(bound_.size(), 0);
    for (std::size_t index = 1; index < total; ++index) {
      increment(point);
      for (const auto& g : sg.generators) {
        bool fits = true;
        std::size_t offset = 0;
        for (std::size_t c = 0; c < point.size(); ++c) {
          if (g[c] > point[c]) { fits = false; break; }
          offset += static_cast<std::size_t>(g[c]) * strides_[c];
        }
        if (fits && reach_[index - offset]) { reach_[index] = 1; break; }
      }
    }
  }

  const std::vector<Int>& bound() const noexcept { return bound_; }

  bool contains(std::span<const Int> v) const {
    std::size_t index = 0;
    for (std::size_t c = 0; c < bound_.size(); ++c) {
      if (v[c] < 0) return false;
      if (v[c] > bound_[c])
        throw Error(ErrorKind::Precondition, "membership query outside the tabulated box");
      index += static_cast<std::size_t>(v[c]) * strides_[c];
    }
    return reach_[index] != 0;
  }

private:
  void increment(std::vector<Int>& point) const {
    for (std::size_t c = point.size(); c-- > 0;) {
      if (point[c] < bound_[c]) { ++point[c]; return; }
      point[c] = 0;
    }
  }

  std::vector<Int> bound_;
  std::vector<std::size_t> strides_;
  std::vector<std::uint8_t> reach_;
};

/// Projective membership: y_0 k + sum y_i b_i = r with |y| = l.
///
/// Backed by fewest-coins over {b_1..b_{n-1}}; b_n = 0 soaks up the count
/// so "exactly l" becomes "at most l". Call build_up_to() before sharing
/// across threads; queries are read-only afterwards.
class GradedOracle {
public:
  explicit GradedOracle(const ShiftedCurve& sc) : sc_(sc) {
    min_coins_.push_back(0);
  }

  const ShiftedCurve& curve() const noexcept { return sc_; }
  Int built_upto() const noexcept { return static_cast<Int>(min_coins_.size()) - 1; }

  void build_up_to(Int r_max) {
    const auto& b = sc_.base.b;
    const std::size_t coins = sc_.n() - 1;
    for (Int x = built_upto() + 1; x <= r_max; ++x) {
      Int best = kUnreachable;
      for (std::size_t i = 0; i < coins; ++i) {
        if (b[i] > x) continue;
        const Int prev = min_coins_[static_cast<std::size_t>(x - b[i])];
        if (prev != kUnreachable) best = std::min(best, prev + 1);
      }
      min_coins_.push_back(best);
    }
  }

  /// Weight of vertex i in the first coordinate.
  Int weight(std::size_t vertex) const noexcept {
    return vertex == 0 ? sc_.k : sc_.base.b[vertex - 1];
  }

  /// Is there y with |y| = l, y_0 k + sum y_i b_i = r and y_i >= 1 on `forced`?
  bool representable(Int l, Int r, VertexMask forced = 0) const {
    if ((forced >> (sc_.n() + 1)) != 0)
      throw Error(ErrorKind::InvalidVertex, "forced vertex outside 0..n");
    for (VertexMask bits = forced; bits != 0; bits &= bits - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(bits));
      r -= weight(v);
      l -= 1;
    }
    if (r < 0 || l < 0) return false;
    check_range(r);
    for (Int y0 = 0; y0 <= l && y0 * sc_.k <= r; ++y0)
      if (min_coins_[static_cast<std::size_t>(r - y0 * sc_.k)] <= l - y0) return true;
    return false;
  }

  /// Same, with the x_0 exponent pinned to exactly y0.
  bool representable_with_x0(Int l, Int r, Int y0) const {
    r -= y0 * sc_.k;
    l -= y0;
    if (r < 0 || l < 0) return false;
    check_range(r);
    return min_coins_[static_cast<std::size_t>(r)] <= l;
  }

private:
  static constexpr Int kUnreachable = std::numeric_limits<Int>::max() / 4;

  void check_range(Int r) const {
    if (r > built_upto())
      throw Error(ErrorKind::Precondition, "graded query beyond the built table",
                  {{"r", r}, {"built", built_upto()}});
  }

  ShiftedCurve sc_;
  std::vector<Int> min_coins_;
};

/// Affine membership: sum y_i (k - b_i) = m over i = 1..n.
class AffineOracle {
public:
  explicit AffineOracle(const ShiftedCurve& sc) : sc_(sc) { reach_.push_back(1); }

  const ShiftedCurve& curve() const noexcept { return sc_; }
  Int built_upto() const noexcept { return static_cast<Int>(reach_.size()) - 1; }

  Int weight(std::size_t vertex) const noexcept { return sc_.k - sc_.base.b[vertex - 1]; }

  void build_up_to(Int m_max) {
    for (Int x = built_upto() + 1; x <= m_max; ++x) {
      std::uint8_t hit = 0;
      for (std::size_t v = 1; v <= sc_.n() && !hit; ++v) {
        const Int w = weight(v);
        if (w <= x && reach_[static_cast<std::size_t>(x - w)]) hit = 1;
      }
      reach_.push_back(hit);
    }
  }

  /// Is m - sum_{i in forced} (k - b_i) in the semigroup? Bits 1..n.
  bool representable(Int m, VertexMask forced = 0) const {
    if ((forced >> (sc_.n() + 1)) != 0 || (forced & 1u) != 0)
      throw Error(ErrorKind::InvalidVertex, "forced vertex outside 1..n");
    for (VertexMask bits = forced; bits != 0; bits &= bits - 1)
      m -= weight(static_cast<std::size_t>(std::countr_zero(bits)));
    if (m < 0) return false;
    if (m > built_upto())
      throw Error(ErrorKind::Precondition, "affine query beyond the built table",
                  {{"m", m}, {"built", built_upto()}});
    return reach_[static_cast<std::size_t>(m)] != 0;
  }

private:
  ShiftedCurve sc_;
  std::vector<std::uint8_t> reach_;
};

inline bool graded_representable(const ShiftedCurve& sc, Int l, Int r, VertexMask forced) {
  if (r < 0 || l < 0) return false;
  GradedOracle oracle(sc);
  oracle.build_up_to(r);
  return oracle.representable(l, r, forced);
}

inline bool affine_representable(const ShiftedCurve& sc, Int m, VertexMask forced) {
  if (m < 0) return false;
  AffineOracle oracle(sc);
  oracle.build_up_to(m);
  return oracle.representable(m, forced);
}

}  // namespace curvebetti

#endif  // CURVEBETTI_AFFSG_HPP
