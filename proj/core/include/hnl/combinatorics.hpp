#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace hnl {

/// Number of k-subsets of an m-set, saturating at SIZE_MAX.
std::size_t choose(std::size_t m, std::size_t k);

/// Advance `idx` (strictly increasing, values < m) to the next k-subset in
/// lexicographic order. Returns false after the last one.
bool next_combination(std::vector<std::size_t>& idx, std::size_t m);

/// An unshuffle of {0..m-1}: the first block `head` (k increasing indices)
/// followed by the complement `tail` in increasing order.
struct Unshuffle {
  std::vector<std::size_t> head;
  std::vector<std::size_t> tail;
  int sign;  ///< +1 or -1: parity of the permutation (head, tail).
};

/// Visit every unshuffle of S^k_m, heads in lexicographic order.
void for_each_unshuffle(std::size_t k, std::size_t m, const std::function<void(const Unshuffle&)>& visit);

/// Sign of (head, complement) for a k-subset of {0..m-1}, given in increasing order.
int unshuffle_sign(std::span<const std::size_t> head);

/// Sign of a permutation given as the image list, computed by inversion count.
int permutation_sign(std::span<const std::size_t> perm);

/// Visit every permutation of {0..n-1} in lexicographic order together with its sign.
void for_each_permutation(std::size_t n,
                          const std::function<void(std::span<const std::size_t>, int)>& visit);

}  // namespace hnl
