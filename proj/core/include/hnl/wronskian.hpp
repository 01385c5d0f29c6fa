#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hnl/multi_index.hpp"
#include "hnl/polynomial.hpp"
#include "hnl/rational.hpp"
#include "hnl/skew_op.hpp"

namespace hnl {

/// det || D_{rows_i}(a_j) || as an operator: rows are derivative
/// multiindices (strictly increasing in jet order), columns are arguments.
SkewOp wronskian_op(std::vector<MultiIndex> rows, std::size_t n_vars);

/// One-variable generalised Wronskian W^{i_1..i_N}; indices strictly increasing.
SkewOp generalized_wronskian_op(const std::vector<int>& indices);

/// W^{0,1,..,N-1}.
SkewOp classical_wronskian_op(std::size_t arity);

/// The unary operator d^j/dx^j, built directly (not as a determinant).
SkewOp derivation_power_op(int j);

/// W^{0..N-1} assembled as d^0 ^ d^1 ^ ... ^ d^{N-1} through exterior
/// multiplication: an independent route to the same operator.
SkewOp wronskian_as_wedge(std::size_t arity);

/// Classical Wronskian det || d^{i-1} a_j / dx^{i-1} || of one-variable polynomials.
Polynomial wronskian(std::span<const Polynomial> args);

/// det || d^{i_k} a_j / dx^{i_k} ||; rejects non-increasing index lists.
Polynomial generalized_wronskian(const std::vector<int>& indices, std::span<const Polynomial> args);

/// c * x^nu with a rational exponent.
struct FormalMonomial {
  Rational coefficient;
  Rational exponent;

  bool is_zero() const { return coefficient == 0; }
  FormalMonomial derive() const { return {coefficient * exponent, exponent - 1}; }
  FormalMonomial operator*(const FormalMonomial& o) const {
    return {coefficient * o.coefficient, exponent + o.exponent};
  }
  /// Zero monomials compare equal regardless of exponent.
  bool operator==(const FormalMonomial& o) const {
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
    return coefficient == o.coefficient && exponent == o.exponent;
  }
};

/// W^{0..N-1}(x^{nu_1}, ..., x^{nu_N}) computed as the determinant of the
/// derivative matrix of the formal monomials.
FormalMonomial wronskian_monomials(std::span<const Rational> exponents);

/// Structure constant Omega(i_1..i_N) of [a_{i_1},...,a_{i_N}] = Omega a_{i_1+..+i_N}
/// for a_i = x^{i + N/2} under W^{0..N-1}: the Vandermonde product.
Rational witt_structure_constant(std::span<const long> indices);

/// W_m = det of the Wronskian matrix of (x, x^2/2!, ..., x^m/m!), computed by
/// the last-row recurrence.
Polynomial recurrence_wm(int m);

/// Outcome of comparing both sides of the change-of-variable law for the Wronskian.
struct ConformalReport {
  bool holds = false;          ///< sides agree up to the truncation degree
  bool certified = false;      ///< truncation degree covers both sides entirely
  int truncation_degree = 0;
  int required_degree = 0;     ///< max degree of either side
  long weight = 0;             ///< exponent of dy/dx used
  Polynomial lhs;
  Polynomial rhs;
};

/// Compare W_x(phi o y) with (dy/dx)^w * (W_y phi) o y to degree D, where
/// w = N(N-1)/2 unless overridden. y must satisfy y(0) = 0, y'(0) != 0.
ConformalReport conformal_weight_check(std::span<const Polynomial> phi, const Polynomial& y, int truncation_degree,
                                       std::optional<long> weight_override = std::nullopt);

}  // namespace hnl
