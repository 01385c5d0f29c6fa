#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hnl/polynomial.hpp"
#include "hnl/rational.hpp"
#include "hnl/skew_op.hpp"
#include "hnl/verify.hpp"

namespace hnl {

/// Structure constants of an alternating N-bracket on k^r: the value on each
/// increasing basis N-tuple.
class StructureTensor {
 public:
  using Key = std::vector<std::size_t>;
  using Vector = std::vector<Rational>;

  StructureTensor(std::size_t dim, std::size_t arity);

  std::size_t dim() const { return dim_; }
  std::size_t arity() const { return arity_; }
  const std::map<Key, Vector>& entries() const { return entries_; }

  /// Set the bracket of basis vectors `indices` (any order; permuted keys are
  /// stored with the sign applied). Repeated indices are rejected.
  void set(Key indices, Vector value);

  /// Bracket of basis vectors in the given order; zero on repeats.
  Vector bracket(Key indices) const;

  /// Bracket of arbitrary coordinate vectors by multilinear expansion.
  Vector bracket_vectors(std::span<const Vector> args) const;

  /// The bracket as an operator on linear forms x_0..x_{r-1} standing for the basis.
  SkewOp as_skew_op(std::string description = "structure tensor") const;

  /// Basis embedded as the variables x_0..x_{r-1}.
  TestSpace basis_space() const;

  bool operator==(const StructureTensor& o) const = default;

 private:
  std::size_t dim_;
  std::size_t arity_;
  std::map<Key, Vector> entries_;
};

/// Coordinates of a homogeneous linear polynomial.
StructureTensor::Vector linear_coordinates(const Polynomial& p);
/// The linear polynomial with the given coordinates.
Polynomial linear_form(const StructureTensor::Vector& v);

/// [a_0, .., a_j omitted, .., a_N] = (-1)^j a_j on k^{N+1}.
StructureTensor cross_product_algebra(std::size_t arity);

/// [a_0, .., a_j omitted, .., a_N] = a_{N-j} on k^{N+1}.
StructureTensor a2_algebra(std::size_t arity);

/// Wronskians of x^i/i! with slot j removed equal x^{N-j}/(N-j)!, all j.
struct RepCheck {
  bool holds = true;
  std::vector<std::string> relations;
  std::optional<std::string> failure;
};

RepCheck a2_wronskian_rep_check(std::size_t arity);
RepCheck sl2_wronskian_rep_check();

/// Seeded random structure constants (numerators in [-5,5], denominators in
/// [1,3]) on every increasing tuple. Deterministic for a given seed on every platform.
StructureTensor random_skew_bracket(std::size_t dim, std::size_t arity, std::uint64_t seed);

/// Tensor JSON: {"r": .., "N": .., "entries": [{"indices": [..], "value": ["p/q", ..]}]}.
std::string to_json_text(const StructureTensor& t, std::optional<std::uint64_t> seed = std::nullopt);
StructureTensor structure_tensor_from_json(std::string_view text);

}  // namespace hnl
