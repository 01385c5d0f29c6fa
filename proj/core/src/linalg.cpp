#include "hnl/linalg.hpp"

#include <utility>

namespace hnl {

std::size_t rank_fraction_free(const RationalMatrix& m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  // Scale each row by the lcm of its denominators; rank is unchanged.
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    if (m[r].size() != cols) throw DomainError("ragged matrix");
    Integer l = 1;
    for (const auto& q : m[r]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) {
      a[r][c] = m[r][c].get_num() * (l / m[r][c].get_den());
    }
  }
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = a[rank][c] * a[r][j] - a[r][c] * a[rank][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[r][j] = std::move(v);
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace hnl
