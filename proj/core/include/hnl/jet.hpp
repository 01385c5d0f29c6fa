#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hnl/homotopy.hpp"
#include "hnl/multi_index.hpp"
#include "hnl/polynomial.hpp"
#include "hnl/skew_op.hpp"
#include "hnl/verify.hpp"

namespace hnl {

/// Rows of the n-variable bracket of jet order k.
struct JetBracketSpec {
  std::size_t n = 1;
  int k = 0;
  /// All multiindices of order <= k, by order then lexicographically descending.
  std::vector<MultiIndex> basis;

  std::size_t arity() const { return basis.size(); }
};

JetBracketSpec jet_bracket_spec(std::size_t n, int k);

/// C(n+k, n) two ways; throws if the sum form and the closed form disagree.
std::size_t jet_dimension(std::size_t n, int k);
std::size_t jet_dimension_sum(std::size_t n, int k);
std::size_t jet_dimension_closed(std::size_t n, int k);

/// det || D_{s_i}(a_j) || with s_i running over spec.basis.
SkewOp box_op(std::size_t n, int k);
Polynomial box_bracket(const JetBracketSpec& spec, std::span<const Polynomial> args);

/// Jacobian determinant det || d f_i / d x^j || of n functions in n variables.
SkewOp nambu_op(std::size_t n);
Polynomial nambu_bracket(std::span<const Polynomial> args);

/// box_{k_out}[box_{k_in}] = 0 checked on increasing monomial tuples of
/// degree <= k_in + k_out.
JacobiReport check_cross_vanishing(std::size_t n, int k_in, int k_out, const SearchOptions& options = {});

/// Search for a failure of D(ab, c...) = a D(b, c...) + D(a, c...) b with a, b
/// any pair (repeats allowed) and c an increasing tuple from the test space.
JacobiReport check_leibniz(const SkewOp& d, const TestSpace& t, const SearchOptions& options = {});

}  // namespace hnl
