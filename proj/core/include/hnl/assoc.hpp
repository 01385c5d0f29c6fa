#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hnl/diff_op.hpp"
#include "hnl/polynomial.hpp"
#include "hnl/skew_op.hpp"

namespace hnl {

using DiffSkewOp = BasicSkewOp<DiffOp>;

/// Alternating sum over S_N of a_{s(1)} o ... o a_{s(N)}. Computed by
/// memoising Alt(S) = sum_i (-1)^i a_{S_i} o Alt(S \ S_i) over index subsets,
/// N 2^(N-1) compositions in total.
DiffOp alt_bracket(std::span<const DiffOp> args);

/// The alternating N-bracket as an operator on the algebra of differential operators.
DiffSkewOp alt_bracket_op(std::size_t arity, std::size_t n_vars = 1);

/// Outcome of comparing [w_1 d^p, ..., w_N d^p] with W(w) d^e, e = Np - N(N-1)/2.
struct OnlyWronskianResult {
  bool holds = false;
  int exponent = 0;
  Polynomial wronskian;
  DiffOp bracket;
  DiffOp expected;
  DiffOp residual;  ///< bracket - expected
  /// c with bracket = c * expected, when the bracket is proportional.
  std::optional<Rational> ratio;
};

/// N even, 2p >= N - 1.
OnlyWronskianResult check_only_wronskian(int arity, int p, std::span<const Polynomial> weights);

/// Which relation between alternating brackets applies to D_k[D_l].
struct DeltaIdentity {
  std::string name;          ///< "both-even", "inner-even" or "inner-odd"
  Rational coefficient;      ///< D_k[D_l] = coefficient * D_{k+l-1}
};

DeltaIdentity delta_identity_for(std::size_t outer, std::size_t inner);

struct DeltaIdentityResult {
  DeltaIdentity identity;
  bool holds = false;
  DiffOp lhs;
  DiffOp rhs;
  DiffOp residual;
};

/// Evaluate D_k[D_l] on a sample of k + l - 1 operators and compare with the
/// relation chosen by the parities of k and l.
DeltaIdentityResult delta_identity_check(std::size_t outer, std::size_t inner, std::span<const DiffOp> sample);

/// The bracket of w_i d^{N/2} and whether it is again of the form u d^{N/2}.
struct ClosureResult {
  bool closed = false;
  DiffOp bracket;
};

ClosureResult check_half_order_closure(int arity, std::span<const Polynomial> weights);

/// z^a d^b for 0 <= a <= max_degree, 0 <= b <= max_order (a from min_degree
/// when Laurent terms are wanted), ordered by b then a.
std::vector<DiffOp> diffop_basis(int max_degree, int max_order, int min_degree = 0);

/// Polynomial vector fields f d_i on n-space with f a monomial of degree <= d.
std::vector<DiffOp> vector_field_basis(std::size_t n_vars, int max_degree);

}  // namespace hnl
