#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "hnl/combinatorics.hpp"
#include "hnl/error.hpp"
#include "hnl/polynomial.hpp"
#include "hnl/skew_op.hpp"

namespace hnl {

/// Default ceiling on the number of argument tuples a certifying check may
/// evaluate before refusing.
inline constexpr std::size_t kDefaultTupleBudget = 2'000'000;

/// Finite verification domain: a list of algebra elements whose strictly
/// increasing tuples are fed to multilinear alternating operators.
template <class V>
struct BasicTestSpace {
  std::vector<V> elements;
  std::string description;
  /// Per-slot degree bound when the elements are all monomials of degree <= d.
  std::optional<int> degree;

  std::size_t size() const { return elements.size(); }
};

using TestSpace = BasicTestSpace<Polynomial>;

/// All monomials of degree <= d in n variables.
TestSpace monomial_test_space(std::size_t n_vars, int degree);

/// An explicit element list (e.g. a finite algebra basis).
template <class V>
BasicTestSpace<V> custom_test_space(std::vector<V> elements, std::string description) {
  if (elements.empty()) throw DomainError("test space must be nonempty");
  return BasicTestSpace<V>{std::move(elements), std::move(description), std::nullopt};
}

/// Options shared by all exhaustive tuple searches.
struct SearchOptions {
  std::size_t budget = kDefaultTupleBudget;
  /// Worker threads; 0 means hardware concurrency. The verdict and the
  /// reported witness do not depend on this.
  unsigned threads = 1;
};

/// Outcome of an exhaustive search over products of increasing index tuples.
template <class Payload>
struct SearchResult {
  std::size_t tuples_total = 0;
  std::size_t tuples_checked = 0;
  /// First failing tuple in lexicographic order, one index list per group.
  std::optional<std::vector<std::vector<std::size_t>>> failing;
  std::optional<Payload> payload;
};

/// Total number of tuples in the product of C(m, k_g) over groups.
std::size_t tuple_count(std::size_t m, const std::vector<std::size_t>& group_sizes);

namespace detail {

bool next_group_tuple(std::vector<std::vector<std::size_t>>& groups, std::size_t m);
std::vector<std::vector<std::size_t>> first_group_tuple(const std::vector<std::size_t>& group_sizes);

}  // namespace detail

/// Enumerate every product of strictly increasing index tuples (one per group,
/// drawn from {0..m-1}) in lexicographic order and report the first one for
/// which `probe` returns a payload. Refuses with BudgetExceeded before doing
/// any work if the product exceeds the budget.
template <class Payload>
SearchResult<Payload> search_tuples(
    std::size_t m, const std::vector<std::size_t>& group_sizes,
    const std::function<std::optional<Payload>(const std::vector<std::vector<std::size_t>>&)>& probe,
    const SearchOptions& options = {}) {
  SearchResult<Payload> result;
  result.tuples_total = tuple_count(m, group_sizes);
  if (result.tuples_total > options.budget) throw BudgetExceeded(result.tuples_total, options.budget);
  if (result.tuples_total == 0) return result;

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  auto cursor = detail::first_group_tuple(group_sizes);
  bool more = true;
  const std::size_t block = threads == 1 ? 1 : 64 * threads;
  while (more) {
    std::vector<std::vector<std::vector<std::size_t>>> batch;
    while (more && batch.size() < block) {
      batch.push_back(cursor);
      more = detail::next_group_tuple(cursor, m);
    }
    std::vector<std::optional<Payload>> outcomes(batch.size());
    if (threads == 1 || batch.size() == 1) {
      for (std::size_t i = 0; i < batch.size(); ++i) {
        outcomes[i] = probe(batch[i]);
        if (outcomes[i]) break;
      }
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
          for (std::size_t i = t; i < batch.size(); i += threads) outcomes[i] = probe(batch[i]);
        });
      }
      for (auto& th : pool) th.join();
    }
    for (std::size_t i = 0; i < batch.size(); ++i) {
      ++result.tuples_checked;
      if (outcomes[i]) {
        result.failing = batch[i];
        result.payload = std::move(outcomes[i]);
        return result;
      }
    }
  }
  return result;
}

/// Values observed at a failing argument tuple.
template <class V>
struct Witness {
  std::vector<std::size_t> indices;  ///< indices into the test space
  std::vector<V> args;
  V lhs;
  V rhs;
};

template <class V>
struct EqualityResult {
  bool equal = true;
  /// No tuple could be formed (arity exceeds the test space size).
  bool vacuous = false;
  std::size_t tuples_checked = 0;
  std::optional<Witness<V>> witness;
};

/// Decide equality of two alternating operators of equal arity by
/// evaluation on all strictly increasing tuples of distinct test-space
/// elements. Sufficient for multilinear alternating operators whose slots
/// are differential of order <= the test-space degree.
template <class V>
EqualityResult<V> op_equal_on(const BasicSkewOp<V>& a, const BasicSkewOp<V>& b, const BasicTestSpace<V>& space,
                              const SearchOptions& options = {}) {
  if (a.arity() != b.arity()) throw DomainError("cannot compare operators of different arity");
  EqualityResult<V> r;
  const std::size_t k = a.arity();
  if (k > space.size()) {
    r.vacuous = true;
    return r;
  }
  using Pair = std::pair<V, V>;
  auto search = search_tuples<Pair>(
      space.size(), {k},
      [&](const std::vector<std::vector<std::size_t>>& g) -> std::optional<Pair> {
        std::vector<V> args;
        for (std::size_t i : g[0]) args.push_back(space.elements[i]);
        V lhs = a(args);
        V rhs = b(args);
        if (lhs == rhs) return std::nullopt;
        return Pair{std::move(lhs), std::move(rhs)};
      },
      options);
  r.tuples_checked = search.tuples_checked;
  if (search.failing) {
    r.equal = false;
    Witness<V> w{(*search.failing)[0], {}, search.payload->first, search.payload->second};
    for (std::size_t i : w.indices) w.args.push_back(space.elements[i]);
    r.witness = std::move(w);
  }
  return r;
}

/// Operator vanishes on every increasing tuple of the test space.
template <class V>
EqualityResult<V> op_zero_on(const BasicSkewOp<V>& a, const BasicTestSpace<V>& space, const SearchOptions& options = {}) {
  return op_equal_on(a, zero_op(a.arity(), a.zero()), space, options);
}

}  // namespace hnl
