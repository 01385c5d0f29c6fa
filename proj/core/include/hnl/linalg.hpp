#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "hnl/error.hpp"
#include "hnl/rational.hpp"

namespace hnl {

/// Determinant of a square matrix over a commutative ring by cofactor
/// expansion with memoised minors over column subsets: N * 2^(N-1) ring
/// multiplications, no division. `zero` supplies the additive identity.
template <class T>
T determinant(const std::vector<std::vector<T>>& m, const T& zero) {
  const std::size_t n = m.size();
  if (n == 0) throw DomainError("determinant of an empty matrix");
  for (const auto& row : m) {
    if (row.size() != n) throw DomainError("determinant needs a square matrix");
  }
  if (n > 24) throw DomainError("determinant size too large for subset expansion");
  // minor[S] = det(rows 0..|S|-1, columns S).
  std::vector<T> minor(std::size_t{1} << n, zero);
  for (std::size_t c = 0; c < n; ++c) {
    minor[std::size_t{1} << c] = m[0][c];
  }
  for (std::size_t mask = 1; mask < minor.size(); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size < 2) continue;
    const std::size_t row = size - 1;
    T acc = zero;
    std::size_t position = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask & (std::size_t{1} << c))) continue;
      const std::size_t rest = mask & ~(std::size_t{1} << c);
      // Expansion along the last row of the submatrix: sign (-1)^(row + position).
      T term = m[row][c] * minor[rest];
      if ((row + position) % 2) {
        acc -= term;
      } else {
        acc += term;
      }
      ++position;
    }
    minor[mask] = std::move(acc);
  }
  return minor.back();
}

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Rank over the rationals by fraction-free (Bareiss) elimination on an
/// integer-scaled copy of the matrix.
std::size_t rank_fraction_free(const RationalMatrix& m);

}  // namespace hnl
