#ifndef CURVEBETTI_LINALG_HPP
#define CURVEBETTI_LINALG_HPP

// Exact rank of small dense integer matrices.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace curvebetti {

/// Row-major dense matrix.
template <typename T>
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<T> data;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, T{0}) {}

  T& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

namespace detail {

inline bool checked_mul(Int a, Int b, Int& out) { return !__builtin_mul_overflow(a, b, &out); }
inline bool checked_sub(Int a, Int b, Int& out) { return !__builtin_sub_overflow(a, b, &out); }

/// Fraction-free (Bareiss) elimination. Returns nullopt when a 64-bit
/// intermediate overflows.
inline std::optional<std::size_t> bareiss_rank_i64(DenseMatrix<Int> m) {
  std::size_t rank = 0;
  Int previous = 1;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != rank)
      for (std::size_t c = 0; c < m.cols; ++c) std::swap(m(pivot, c), m(rank, c));
    const Int p = m(rank, col);
    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      const Int factor = m(r, col);
      for (std::size_t c = col + 1; c < m.cols; ++c) {
        Int lhs, rhs, diff;
        if (!checked_mul(p, m(r, c), lhs) || !checked_mul(factor, m(rank, c), rhs) ||
            !checked_sub(lhs, rhs, diff))
          return std::nullopt;
        m(r, c) = diff / previous;
      }
      m(r, col) = 0;
    }
    previous = p;
    ++rank;
  }
  return rank;
}

inline std::size_t bareiss_rank_big(const DenseMatrix<Int>& source) {
  using Big = boost::multiprecision::cpp_int;
  DenseMatrix<Big> m(source.rows, source.cols);
  for (std::size_t i = 0; i < source.data.size(); ++i) m.data[i] = source.data[i];
  std::size_t rank = 0;
  Big previous = 1;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != rank)
      for (std::size_t c = 0; c < m.cols; ++c) std::swap(m(pivot, c), m(rank, c));
    const Big p = m(rank, col);
    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      const Big factor = m(r, col);
      for (std::size_t c = col + 1; c < m.cols; ++c)
        m(r, c) = (p * m(r, c) - factor * m(rank, c)) / previous;
      m(r, col) = 0;
    }
    previous = p;
    ++rank;
  }
  return rank;
}

inline Int mod_inverse(Int a, Int p) {
  Int result = 1, base = a % p, exp = p - 2;
  while (exp > 0) {
    if (exp & 1) result = static_cast<Int>((static_cast<__int128>(result) * base) % p);
    base = static_cast<Int>((static_cast<__int128>(base) * base) % p);
    exp >>= 1;
  }
  return result;
}

}  // namespace detail

/// Rank over the rationals.
inline std::size_t rank_rational(const DenseMatrix<Int>& m) {
  if (auto fast = detail::bareiss_rank_i64(m)) return *fast;
  return detail::bareiss_rank_big(m);
}

/// Rank over GF(p), p prime.
inline std::size_t rank_mod_p(DenseMatrix<Int> m, Int p) {
  for (auto& x : m.data) x = ((x % p) + p) % p;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != rank)
      for (std::size_t c = 0; c < m.cols; ++c) std::swap(m(pivot, c), m(rank, c));
    const Int inv = detail::mod_inverse(m(rank, col), p);
    for (std::size_t c = col; c < m.cols; ++c)
      m(rank, c) = static_cast<Int>((static_cast<__int128>(m(rank, c)) * inv) % p);
    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      const Int factor = m(r, col);
      if (factor == 0) continue;
      for (std::size_t c = col; c < m.cols; ++c) {
        const Int sub = static_cast<Int>((static_cast<__int128>(factor) * m(rank, c)) % p);
        m(r, c) = (m(r, c) - sub + p) % p;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace curvebetti

#endif  // CURVEBETTI_LINALG_HPP
