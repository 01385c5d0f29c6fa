#include "hnl/combinatorics.hpp"

#include "hnl/rational.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace hnl {

std::size_t choose(std::size_t m, std::size_t k) {
  if (k > m) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), m, k);
  if (!r.fits_ulong_p()) return std::numeric_limits<std::size_t>::max();
  return r.get_ui();
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t m) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < m - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

int unshuffle_sign(std::span<const std::size_t> head) {
  // Moving head[i] from its position to slot i passes head[i] - i tail elements.
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < head.size(); ++i) inversions += head[i] - i;
  return inversions % 2 ? -1 : 1;
}

void for_each_unshuffle(std::size_t k, std::size_t m, const std::function<void(const Unshuffle&)>& visit) {
  if (k > m) return;
  Unshuffle u;
  u.head.resize(k);
  std::iota(u.head.begin(), u.head.end(), std::size_t{0});
  u.tail.resize(m - k);
  do {
    std::size_t h = 0, t = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (h < k && u.head[h] == i) {
        ++h;
      } else {
        u.tail[t++] = i;
      }
    }
    u.sign = unshuffle_sign(u.head);
    visit(u);
  } while (next_combination(u.head, m));
}

int permutation_sign(std::span<const std::size_t> perm) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) ++inversions;
    }
  }
  return inversions % 2 ? -1 : 1;
}

void for_each_permutation(std::size_t n, const std::function<void(std::span<const std::size_t>, int)>& visit) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    visit(perm, permutation_sign(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace hnl
