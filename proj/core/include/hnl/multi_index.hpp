#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace hnl {

/// Derivative multiindex sigma = (sigma^1, ..., sigma^n): how many times each
/// variable is differentiated. Entries are non-negative.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t n) : exps_(n, 0) {}
  explicit MultiIndex(std::vector<int> exps);
  MultiIndex(std::initializer_list<int> exps) : MultiIndex(std::vector<int>(exps)) {}

  /// The one-variable multiindex (j).
  static MultiIndex single(int j) { return MultiIndex({j}); }

  std::size_t size() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }

  /// |sigma| = sum of entries.
  int order() const;

  MultiIndex operator+(const MultiIndex& other) const;

  bool operator==(const MultiIndex&) const = default;

  /// Jet order: by total order ascending, then lexicographically descending
  /// (so for n = 2 the first-order block is D_x, D_y).
  std::strong_ordering operator<=>(const MultiIndex& other) const;

  std::string to_string() const;

 private:
  std::vector<int> exps_;
};

std::ostream& operator<<(std::ostream& os, const MultiIndex& m);

/// All multiindices of length n with order <= k, sorted by the jet order above.
std::vector<MultiIndex> multi_indices_up_to(std::size_t n, int k);

/// All multiindices of length n with order exactly k, lexicographically descending.
std::vector<MultiIndex> multi_indices_of_order(std::size_t n, int k);

}  // namespace hnl
