#ifndef CURVEBETTI_NUMSG_HPP
#define CURVEBETTI_NUMSG_HPP

// Numerical semigroup arithmetic and the scalar constants attached to a
// monomial curve sequence a = (a_1 < ... < a_n).

#include <algorithm>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"

namespace curvebetti {

/// Vertices 0..n of the projective divisor complexes must fit in 16 bits.
inline constexpr std::size_t kMaxCurveLength = 15;

/// A strictly increasing positive sequence with its derived constants.
///
/// b_i = a_n - a_i (so b_n = 0), d = gcd(b_1..b_{n-1}), c is the conductor
/// of <b_1/d, ..., b_{n-1}/d> and B = sum(b) + n + d.
struct CurveSequence {
  std::vector<Int> a;
  std::vector<Int> b;
  Int d = 0;
  Int c = 0;
  Int B = 0;

  std::size_t n() const noexcept { return a.size(); }
  Int an() const noexcept { return a.back(); }
  Int b1() const noexcept { return b.front(); }
  /// b_2 in one-based numbering; equals b_n = 0 when n = 2.
  Int b2() const noexcept { return b[1]; }
  /// Smallest nonzero b, i.e. b_{n-1}.
  Int b_last() const noexcept { return b[n() - 2]; }
  /// n = 2 (equivalently b_{n-1} = b_1): the semigroup <b_1/d> is <1>.
  bool degenerate() const noexcept { return b_last() == b1(); }
  /// d*c, the bottom of the representation window.
  Int dc() const noexcept { return d * c; }

  friend bool operator==(const CurveSequence&, const CurveSequence&) = default;
};

/// A curve shifted by j: k = a_n + j and e = d / gcd(d, k).
struct ShiftedCurve {
  CurveSequence base;
  Int j = 0;
  Int k = 0;
  Int e = 1;

  std::size_t n() const noexcept { return base.n(); }
};

/// u = t*b_1 + sum_i w_i b_i with dc <= v := sum_i w_i b_i < dc + b_1.
struct Representation {
  Int t = 0;
  std::vector<Int> w;  // n - 1 entries, indexed like b_1..b_{n-1}
  Int v = 0;

  Int weight() const noexcept {
    return std::accumulate(w.begin(), w.end(), Int{0});
  }
};

namespace detail {

inline Int gcd_of(std::span<const Int> values) {
  Int g = 0;
  for (Int x : values) g = std::gcd(g, x);
  return g;
}

}  // namespace detail

/// Least element of the semigroup generated by `gens` in each residue class
/// modulo m (round-robin shortest paths over Z/m).
inline std::vector<Int> apery_set(std::span<const Int> gens, Int m) {
  if (m <= 0) throw Error(ErrorKind::InvalidInput, "apery_set: modulus must be positive");
  if (gens.empty()) throw Error(ErrorKind::InvalidInput, "apery_set: no generators");
  for (Int g : gens)
    if (g <= 0) throw Error(ErrorKind::InvalidInput, "apery_set: generators must be positive");

  constexpr Int kInf = std::numeric_limits<Int>::max();
  std::vector<Int> ap(static_cast<std::size_t>(m), kInf);
  ap[0] = 0;
  for (Int g : gens) {
    const Int step = g % m;
    if (step == 0) continue;
    const Int cycles = std::gcd(step, m);
    const Int length = m / cycles;
    for (Int start = 0; start < cycles; ++start) {
      // Begin each sweep at the cycle minimum; one pass then suffices.
      Int best = start;
      for (Int i = 0, p = start; i < length; ++i, p = (p + step) % m)
        if (ap[p] < ap[best]) best = p;
      if (ap[best] == kInf) continue;
      for (Int i = 0, p = best; i < length; ++i) {
        const Int next = (p + step) % m;
        if (ap[p] != kInf && ap[p] + g < ap[next]) ap[next] = ap[p] + g;
        p = next;
      }
    }
  }
  if (std::find(ap.begin(), ap.end(), kInf) != ap.end())
    throw Error(ErrorKind::NotCoprime, "apery_set: some residue class is unreachable (gcd != 1)");
  return ap;
}

/// Least c such that every integer >= c lies in <gens>.
inline Int conductor(std::span<const Int> gens) {
  if (gens.empty()) throw Error(ErrorKind::InvalidInput, "conductor: no generators");
  for (Int g : gens)
    if (g <= 0) throw Error(ErrorKind::InvalidInput, "conductor: generators must be positive");
  if (detail::gcd_of(gens) != 1)
    throw Error(ErrorKind::NotCoprime, "conductor: generators are not coprime");
  const Int m = *std::min_element(gens.begin(), gens.end());
  const auto ap = apery_set(gens, m);
  return *std::max_element(ap.begin(), ap.end()) - m + 1;
}

inline CurveSequence make_curve(std::span<const Int> a) {
  if (a.size() < 2)
    throw Error(ErrorKind::InvalidSequence, "sequence needs at least two entries");
  if (a.size() > kMaxCurveLength)
    throw Error(ErrorKind::InvalidSequence,
                "sequence longer than " + std::to_string(kMaxCurveLength) + " entries");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 1) throw Error(ErrorKind::InvalidSequence, "sequence entries must be positive");
    if (i > 0 && a[i] <= a[i - 1])
      throw Error(ErrorKind::InvalidSequence, "sequence must be strictly increasing");
  }

  CurveSequence curve;
  curve.a.assign(a.begin(), a.end());
  const std::size_t n = a.size();
  curve.b.resize(n);
  for (std::size_t i = 0; i < n; ++i) curve.b[i] = a[n - 1] - a[i];
  curve.d = detail::gcd_of(std::span<const Int>(curve.b).first(n - 1));

  std::vector<Int> reduced;
  for (std::size_t i = 0; i + 1 < n; ++i) reduced.push_back(curve.b[i] / curve.d);
  curve.c = conductor(reduced);

  curve.B = std::accumulate(curve.b.begin(), curve.b.end(), Int{0}) + static_cast<Int>(n) + curve.d;
  return curve;
}

inline CurveSequence make_curve(std::initializer_list<Int> a) {
  return make_curve(std::span<const Int>(a.begin(), a.size()));
}

inline Int shift_e(const CurveSequence& curve, Int j) {
  if (j < 1) throw Error(ErrorKind::InvalidInput, "shift j must be >= 1");
  return curve.d / std::gcd(curve.d, curve.an() + j);
}

inline ShiftedCurve shift_curve(const CurveSequence& curve, Int j) {
  ShiftedCurve sc;
  sc.base = curve;
  sc.j = j;
  sc.e = shift_e(curve, j);
  sc.k = curve.an() + j;
  return sc;
}

/// Splits u as t*b_1 + v with dc <= v < dc + b_1 (t maximal), then picks a
/// minimum-size w with w.b = v, preferring weight on later (smaller) b_i.
inline Representation represent(const CurveSequence& curve, Int u) {
  const Int d = curve.d;
  if (u < curve.dc() || u % d != 0)
    throw Error(ErrorKind::NotRepresentable,
                "represent: u must be a multiple of d with u >= d*c",
                {{"u", u}, {"d", d}, {"dc", curve.dc()}});

  Representation rep;
  rep.t = (u - curve.dc()) / curve.b1();
  rep.v = u - rep.t * curve.b1();

  const std::size_t coins = curve.n() - 1;
  const Int target = rep.v / d;
  constexpr Int kInf = std::numeric_limits<Int>::max() / 4;

  // prefix[i][x]: fewest coins from b_1/d..b_i/d summing to x.
  std::vector<std::vector<Int>> prefix(coins + 1, std::vector<Int>(target + 1, kInf));
  prefix[0][0] = 0;
  for (std::size_t i = 1; i <= coins; ++i) {
    const Int coin = curve.b[i - 1] / d;
    auto& row = prefix[i];
    row = prefix[i - 1];
    for (Int x = coin; x <= target; ++x)
      if (row[x - coin] != kInf) row[x] = std::min(row[x], row[x - coin] + 1);
  }
  if (prefix[coins][target] == kInf)
    throw Error(ErrorKind::NotRepresentable, "represent: window value not in semigroup",
                {{"v", rep.v}});

  rep.w.assign(coins, 0);
  Int remaining = target;
  Int budget = prefix[coins][target];
  for (std::size_t i = coins; i >= 1; --i) {
    const Int coin = curve.b[i - 1] / d;
    for (Int take = remaining / coin; take >= 0; --take) {
      const Int rest = remaining - take * coin;
      if (prefix[i - 1][rest] != kInf && prefix[i - 1][rest] + take <= budget) {
        rep.w[i - 1] = take;
        remaining = rest;
        budget -= take;
        break;
      }
    }
  }
  return rep;
}

/// max{ b_1 (n + regJ), b_1 b_2 ((dc + b_1)/b_{n-1} + B) }, evaluated over
/// the rationals and rounded up.
inline Int bound_N(const CurveSequence& curve, Int regJ) {
  if (regJ < 0) throw Error(ErrorKind::InvalidInput, "bound_N: regJ must be nonnegative");
  using Wide = __int128;
  const Wide n = static_cast<Wide>(curve.n());
  const Wide b1 = curve.b1(), b2 = curve.b2(), bl = curve.b_last();
  const Wide separation = b1 * (n + regJ);
  const Wide numerator = b1 * b2 * (Wide{curve.dc()} + b1 + Wide{curve.B} * bl);
  const Wide window = (numerator + bl - 1) / bl;
  const Wide result = std::max(separation, window);
  if (result > std::numeric_limits<Int>::max())
    throw Error(ErrorKind::InvalidInput, "bound_N: value overflows 64 bits");
  return static_cast<Int>(result);
}

}  // namespace curvebetti

#endif  // CURVEBETTI_NUMSG_HPP
