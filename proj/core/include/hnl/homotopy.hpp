#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hnl/combinatorics.hpp"
#include "hnl/error.hpp"
#include "hnl/linalg.hpp"
#include "hnl/polynomial.hpp"
#include "hnl/skew_op.hpp"
#include "hnl/verify.hpp"

namespace hnl {

/// Result of an exhaustive identity check.
struct JacobiReport {
  std::string identity;
  std::vector<std::string> operators;
  std::string test_space;
  std::optional<int> test_degree;
  std::size_t test_space_size = 0;
  /// Per-slot differential order of the checked expression; a monomial test
  /// space of at least this degree makes the verdict hold on all polynomials.
  int soundness_bound = 0;
  /// True when the test space is all monomials up to at least the bound.
  bool bound_met = false;
  std::size_t tuples_total = 0;
  std::size_t tuples_checked = 0;
  bool pass = true;
  /// No tuple could be formed; the pass carries no information.
  bool vacuous = false;
  std::optional<std::vector<std::vector<std::size_t>>> witness_indices;
  std::vector<std::string> witness_args;
  std::string witness_value;
};

namespace detail {

template <class V>
void fill_space(JacobiReport& r, const BasicTestSpace<V>& t, int bound) {
  r.test_space = t.description;
  r.test_degree = t.degree;
  r.test_space_size = t.size();
  r.soundness_bound = bound;
  r.bound_met = t.degree && *t.degree >= bound;
}

template <class V>
std::vector<V> gather(const BasicTestSpace<V>& t, const std::vector<std::size_t>& idx) {
  std::vector<V> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(t.elements[i]);
  return out;
}

}  // namespace detail

/// D[D] = 0 on every increasing (2N-1)-tuple of the test space.
template <class V>
JacobiReport check_homotopy_jacobi(const BasicSkewOp<V>& d, const BasicTestSpace<V>& t,
                                   const SearchOptions& options = {}) {
  JacobiReport r;
  r.identity = "homotopy-jacobi";
  r.operators = {d.description()};
  detail::fill_space(r, t, 2 * d.slot_order_bound());
  const std::size_t m = 2 * d.arity() - 1;
  if (m > t.size()) {
    r.vacuous = true;
    return r;
  }
  const auto dd = action(d, d);
  auto s = search_tuples<V>(
      t.size(), {m},
      [&](const std::vector<std::vector<std::size_t>>& g) -> std::optional<V> {
        V v = dd(detail::gather(t, g[0]));
        if (v == d.zero()) return std::nullopt;
        return v;
      },
      options);
  r.tuples_total = s.tuples_total;
  r.tuples_checked = s.tuples_checked;
  if (s.failing) {
    r.pass = false;
    r.witness_indices = s.failing;
    for (const auto& a : detail::gather(t, (*s.failing)[0])) r.witness_args.push_back(a.to_string());
    r.witness_value = s.payload->to_string();
  }
  return r;
}

/// [[D_{a_1..a_r}, D_{b_1..b_k}]] = 0 for all increasing a-, b- and
/// argument tuples of the test space.
template <class V>
JacobiReport check_nkr_jacobi(const BasicSkewOp<V>& d, std::size_t k, std::size_t r_count,
                              const BasicTestSpace<V>& t, const SearchOptions& options = {}) {
  const std::size_t n = d.arity();
  if (!(r_count <= k && k < n)) throw DomainError("(N,k,r)-Jacobi needs 0 <= r <= k < N");
  JacobiReport r;
  r.identity = "nkr(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(r_count) + ")";
  r.operators = {d.description()};
  detail::fill_space(r, t, 2 * d.slot_order_bound());
  const std::size_t rest = 2 * n - r_count - k - 1;
  const std::vector<std::size_t> groups{r_count, k, rest};
  if (tuple_count(t.size(), groups) == 0) {
    r.vacuous = true;
    return r;
  }
  auto s = search_tuples<V>(
      t.size(), groups,
      [&](const std::vector<std::vector<std::size_t>>& g) -> std::optional<V> {
        const auto da = inner_product(d, detail::gather(t, g[0]));
        const auto db = inner_product(d, detail::gather(t, g[1]));
        V v = rn_bracket(da, db)(detail::gather(t, g[2]));
        if (v == d.zero()) return std::nullopt;
        return v;
      },
      options);
  r.tuples_total = s.tuples_total;
  r.tuples_checked = s.tuples_checked;
  if (s.failing) {
    r.pass = false;
    r.witness_indices = s.failing;
    for (const auto& grp : *s.failing) {
      for (const auto& a : detail::gather(t, grp)) r.witness_args.push_back(a.to_string());
    }
    r.witness_value = s.payload->to_string();
  }
  return r;
}

/// (1 / (N!(N-1)!)) sum over all of S_{2N-1} of sign * D(D(a_s1..a_sN), a_s(N+1)..).
template <class V>
V full_permutation_value(const BasicSkewOp<V>& d, std::span<const V> args) {
  const std::size_t n = d.arity();
  if (n == 0) throw DomainError("full permutation sum of an arity-0 operator");
  if (args.size() != 2 * n - 1) throw DomainError("full permutation sum needs 2N-1 arguments");
  V acc = d.zero();
  std::vector<V> inner(n, d.zero()), outer(n, d.zero());
  for_each_permutation(args.size(), [&](std::span<const std::size_t> p, int sign) {
    for (std::size_t i = 0; i < n; ++i) inner[i] = args[p[i]];
    outer[0] = d(inner);
    for (std::size_t i = 1; i < n; ++i) outer[i] = args[p[n - 1 + i]];
    V v = d(outer);
    if (sign > 0) {
      acc += v;
    } else {
      acc -= v;
    }
  });
  Integer norm = factorial(static_cast<long>(n)) * factorial(static_cast<long>(n - 1));
  return acc * Rational(Rational(1) / Rational(norm));
}

/// Evidence that [[D, D]] vanishes on a test space. Differentials built from
/// D demand one and report its scope.
struct SquareZeroCertificate {
  std::string op;
  std::string scope;
  bool bound_met = false;
  std::size_t tuples_checked = 0;
};

/// Check [[D, D]] = 0 on the test space; a certificate on success.
template <class V>
std::optional<SquareZeroCertificate> certify_square_zero(const BasicSkewOp<V>& d, const BasicTestSpace<V>& t,
                                                         const SearchOptions& options = {}) {
  const auto res = op_zero_on(rn_bracket(d, d), t, options);
  if (!res.equal || res.vacuous) return std::nullopt;
  return SquareZeroCertificate{d.description(), t.description,
                               t.degree && *t.degree >= 2 * d.slot_order_bound(), res.tuples_checked};
}

/// d_D(E) = [[D, E]] for an even-arity D with a square-zero certificate.
template <class V>
BasicSkewOp<V> hochschild_differential(const BasicSkewOp<V>& d, const SquareZeroCertificate& cert,
                                       const BasicSkewOp<V>& e) {
  if (d.arity() % 2) throw DomainError("Hochschild differential needs an even-arity operator");
  if (cert.op != d.description()) throw DomainError("certificate was issued for " + cert.op);
  return rn_bracket(d, e);
}

/// Element of the r-th exterior power of span(base): sorted index tuples to
/// coefficients.
class ExteriorTensor {
 public:
  using Key = std::vector<std::size_t>;

  ExteriorTensor(std::vector<Polynomial> base, std::size_t degree);

  /// The basis tensor base[i_1] ^ ... ^ base[i_r] (indices in any order).
  static ExteriorTensor basis(std::vector<Polynomial> base, Key indices);

  const std::vector<Polynomial>& base() const { return base_; }
  std::size_t degree() const { return degree_; }
  const std::map<Key, Rational>& components() const { return components_; }
  bool is_zero() const { return components_.empty(); }

  /// Add c * base[idx_1] ^ ... ^ base[idx_r]; sorts with sign, drops repeats.
  void add(Key idx, const Rational& c);

  /// Same tensor over a base that extends this one (prefix unchanged).
  ExteriorTensor rebased(std::vector<Polynomial> extended) const;

  bool operator==(const ExteriorTensor& o) const;

  std::string to_string() const;

 private:
  std::vector<Polynomial> base_;
  std::size_t degree_;
  std::map<Key, Rational> components_;
};

/// Coordinates of polynomials in a linearly independent list.
class SpanCoordinates {
 public:
  explicit SpanCoordinates(std::vector<Polynomial> base);

  /// Coordinates, or nullopt when p is outside the span.
  std::optional<std::vector<Rational>> coordinates(const Polynomial& p) const;
  /// p minus its projection onto the span along the pivot monomials.
  Polynomial residual(const Polynomial& p) const;

 private:
  // Reduced rows: pivot monomial, polynomial row, its expression in the base.
  struct Row {
    Polynomial::Exponents pivot;
    Polynomial poly;
    std::vector<Rational> combo;
  };
  std::vector<Polynomial> base_;
  std::vector<Row> rows_;
};

struct KoszulResult {
  ExteriorTensor tensor;
  /// Elements appended to the input base so that the output is expressible.
  std::vector<Polynomial> extension;
};

/// d_D(a_1 ^ .. ^ a_r) = sum over S^k_r of sign D(a_head) ^ a_tail, extended
/// linearly. When D leaves span(base) and auto_extend is set, missing
/// monomials are appended to the base and reported; otherwise an error.
KoszulResult koszul_differential(const SkewOp& d, const ExteriorTensor& omega, bool auto_extend = true);

/// Whether D maps every increasing k-tuple of the base into span(base); the
/// first escaping tuple otherwise.
std::optional<std::vector<std::size_t>> closure_violation(const SkewOp& d, const std::vector<Polynomial>& base);

struct HomologyRank {
  std::size_t degree = 0;
  std::size_t dim_chains = 0;     ///< C(|base|, r)
  std::size_t rank_out = 0;       ///< rank of d: L^r -> L^{r-k+1}
  std::size_t rank_in = 0;        ///< rank of d: L^{r+k-1} -> L^r
  std::size_t dim_kernel = 0;
  std::size_t dim_homology = 0;
  bool composite_zero = false;    ///< (d o d) matrix vanishes
  bool extended_range = false;    ///< a degree below 2 is involved
};

/// Matrix of d_D from degree r to r-k+1 in the basis tensors (rows: output keys).
RationalMatrix koszul_matrix(const SkewOp& d, const std::vector<Polynomial>& base, std::size_t r);

HomologyRank koszul_homology_rank(const SkewOp& d, const std::vector<Polynomial>& base, std::size_t r);

}  // namespace hnl
