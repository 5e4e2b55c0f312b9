#pragma once

// Division-free determinants over a commutative ring. T needs copy, +=, -=
// and binary *.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

namespace tautcalc {

template <class T>
using Matrix = std::vector<std::vector<T>>;

namespace detail {

inline void require_square(std::size_t rows, std::size_t cols) {
  if (rows != cols) throw std::invalid_argument("determinant needs a square matrix");
  if (rows > 20) throw std::invalid_argument("matrix too large for subset expansion");
}

}  // namespace detail

/// Laplace expansion along rows, memoized over column subsets. The cofactor
/// for the bottom k rows and a k-element column set is computed once; the
/// subsets of one size are independent and are split across threads. Each
/// thread writes only its own slots, so the result does not depend on the
/// thread count.
template <class T>
T minor_expansion_det(const Matrix<T>& a, const T& zero, const T& one, int threads = 1) {
  const std::size_t n = a.size();
  for (const auto& row : a) detail::require_square(n, row.size());
  if (n == 0) return one;

  const std::uint32_t full = (1U << n) - 1U;
  std::vector<T> minors(static_cast<std::size_t>(full) + 1, zero);
  minors[0] = one;

  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t row = n - k;
    std::vector<std::uint32_t> level;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) == k) level.push_back(mask);
    }

    auto work = [&](std::size_t begin, std::size_t end) {
      for (std::size_t idx = begin; idx < end; ++idx) {
        const std::uint32_t mask = level[idx];
        T acc = zero;
        int position = 0;
        for (std::size_t c = 0; c < n; ++c) {
          if (!((mask >> c) & 1U)) continue;
          T term = a[row][c] * minors[mask & ~(1U << c)];
          if (position % 2 == 0) {
            acc += term;
          } else {
            acc -= term;
          }
          ++position;
        }
        minors[mask] = std::move(acc);
      }
    };

    const std::size_t workers =
        std::clamp<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), 1, level.size());
    if (workers == 1) {
      work(0, level.size());
      continue;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (level.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(level.size(), begin + chunk);
      if (begin < end) pool.emplace_back(work, begin, end);
    }
    for (auto& t : pool) t.join();
  }
  return minors[full];
}

/// Sum over all permutations. Only meant as an independent check on small
/// matrices.
template <class T>
T leibniz_det(const Matrix<T>& a, const T& zero, const T& one) {
  const std::size_t n = a.size();
  for (const auto& row : a) detail::require_square(n, row.size());
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  T total = zero;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    T term = one;
    for (std::size_t i = 0; i < n; ++i) term = term * a[i][perm[i]];
    if (inversions % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace tautcalc
