#include "hnl/verify.hpp"

#include <limits>
#include <numeric>

namespace hnl {

TestSpace monomial_test_space(std::size_t n_vars, int degree) {
  if (degree < 0) throw DomainError("test space degree must be non-negative");
  TestSpace t{monomials_up_to(n_vars, degree),
              "monomials of degree <= " + std::to_string(degree) + " in " + std::to_string(n_vars) + " variable(s)",
              degree};
  return t;
}

std::size_t tuple_count(std::size_t m, const std::vector<std::size_t>& group_sizes) {
  std::size_t total = 1;
  for (std::size_t k : group_sizes) {
    const std::size_t c = choose(m, k);
    if (c == 0) return 0;
    if (total > std::numeric_limits<std::size_t>::max() / c) return std::numeric_limits<std::size_t>::max();
    total *= c;
  }
  return total;
}

namespace detail {

std::vector<std::vector<std::size_t>> first_group_tuple(const std::vector<std::size_t>& group_sizes) {
  std::vector<std::vector<std::size_t>> g;
  for (std::size_t k : group_sizes) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    g.push_back(std::move(idx));
  }
  return g;
}

bool next_group_tuple(std::vector<std::vector<std::size_t>>& groups, std::size_t m) {
  for (std::size_t gi = groups.size(); gi-- > 0;) {
    if (next_combination(groups[gi], m)) return true;
    std::iota(groups[gi].begin(), groups[gi].end(), std::size_t{0});
  }
  return false;
}

}  // namespace detail

}  // namespace hnl
