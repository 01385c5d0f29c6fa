#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hnl/combinatorics.hpp"
#include "hnl/error.hpp"
#include "hnl/multi_index.hpp"
#include "hnl/polynomial.hpp"
#include "hnl/rational.hpp"

namespace hnl {

/// Structural facts carried alongside an operator's evaluator.
struct OpInfo {
  std::string description;
  /// Upper bound on the differential order any single argument receives.
  int slot_order_bound = 0;
  /// Generalised Wronskian multiindex list D_{s_1} ^ ... ^ D_{s_k}, if the
  /// operator is one.
  std::optional<std::vector<MultiIndex>> wronskian;
  /// Norm |op| = sum of |s_j|; additive under wedge and action.
  std::optional<long> norm;
};

/// A k-linear alternating operator Hom(Lambda^k A, A) on an algebra whose
/// elements have type V. The operator is represented by its evaluator; the
/// alternating property is a contract on the evaluator (checked by tests).
///
/// Arity 0 denotes a constant (the fully contracted inner product).
template <class V>
class BasicSkewOp {
 public:
  using Value = V;
  using Evaluator = std::function<V(std::span<const V>)>;

  BasicSkewOp(std::size_t arity, V zero, Evaluator eval, OpInfo info = {})
      : arity_(arity),
        zero_(std::make_shared<const V>(std::move(zero))),
        eval_(std::make_shared<const Evaluator>(std::move(eval))),
        info_(std::make_shared<const OpInfo>(std::move(info))) {}

  std::size_t arity() const { return arity_; }
  const V& zero() const { return *zero_; }
  const OpInfo& info() const { return *info_; }
  const std::string& description() const { return info_->description; }
  int slot_order_bound() const { return info_->slot_order_bound; }

  V operator()(std::span<const V> args) const {
    if (args.size() != arity_) {
      throw DomainError("operator " + info_->description + " expects " + std::to_string(arity_) +
                        " arguments, got " + std::to_string(args.size()));
    }
    return (*eval_)(args);
  }
  V operator()(const std::vector<V>& args) const { return (*this)(std::span<const V>(args)); }

  /// Copy with replaced metadata.
  BasicSkewOp with_info(OpInfo info) const {
    BasicSkewOp r(*this);
    r.info_ = std::make_shared<const OpInfo>(std::move(info));
    return r;
  }

 private:
  std::size_t arity_;
  std::shared_ptr<const V> zero_;
  std::shared_ptr<const Evaluator> eval_;
  std::shared_ptr<const OpInfo> info_;
};

using SkewOp = BasicSkewOp<Polynomial>;

namespace detail {

inline std::optional<long> add_norms(const OpInfo& a, const OpInfo& b) {
  if (a.norm && b.norm) return *a.norm + *b.norm;
  return std::nullopt;
}

template <class V>
std::vector<V> pick(std::span<const V> args, std::span<const std::size_t> idx) {
  std::vector<V> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(args[i]);
  return out;
}

}  // namespace detail

/// The identity map as an arity-1 operator.
template <class V>
BasicSkewOp<V> identity_op(V zero) {
  return BasicSkewOp<V>(
      1, std::move(zero), [](std::span<const V> a) { return a[0]; },
      OpInfo{.description = "id", .slot_order_bound = 0, .wronskian = std::nullopt, .norm = std::nullopt});
}

/// The zero operator of the given arity.
template <class V>
BasicSkewOp<V> zero_op(std::size_t arity, V zero) {
  return BasicSkewOp<V>(
      arity, zero, [zero](std::span<const V>) { return zero; }, OpInfo{.description = "0"});
}

/// Inner product: fixes the first m arguments. Delta_{a_1..a_m}(a_{m+1}..a_k) = Delta(a_1..a_k).
template <class V>
BasicSkewOp<V> inner_product(const BasicSkewOp<V>& op, std::vector<V> fixed) {
  if (fixed.size() > op.arity()) throw DomainError("inner product with more arguments than the arity");
  const std::size_t rest = op.arity() - fixed.size();
  auto shared = std::make_shared<const std::vector<V>>(std::move(fixed));
  OpInfo info = op.info();
  info.description = "inner(" + op.description() + "; " + std::to_string(shared->size()) + " args)";
  info.wronskian.reset();
  return BasicSkewOp<V>(
      rest, op.zero(),
      [op, shared](std::span<const V> args) {
        std::vector<V> full(*shared);
        full.insert(full.end(), args.begin(), args.end());
        return op(full);
      },
      std::move(info));
}

/// Sum of c_i * op_i over operators of one arity.
template <class V>
BasicSkewOp<V> linear_combination(std::vector<std::pair<Rational, BasicSkewOp<V>>> terms) {
  if (terms.empty()) throw DomainError("empty linear combination");
  const std::size_t arity = terms.front().second.arity();
  int bound = 0;
  std::string desc;
  for (const auto& [c, op] : terms) {
    if (op.arity() != arity) throw DomainError("linear combination of operators of different arity");
    bound = std::max(bound, op.slot_order_bound());
    if (!desc.empty()) desc += " + ";
    desc += c.get_str() + "*" + op.description();
  }
  V zero = terms.front().second.zero();
  auto shared = std::make_shared<const std::vector<std::pair<Rational, BasicSkewOp<V>>>>(std::move(terms));
  return BasicSkewOp<V>(
      arity, zero,
      [shared, zero](std::span<const V> args) {
        V acc = zero;
        for (const auto& [c, op] : *shared) {
          if (c != 0) acc += op(args) * c;
        }
        return acc;
      },
      OpInfo{.description = desc, .slot_order_bound = bound});
}

template <class V>
BasicSkewOp<V> scaled(const BasicSkewOp<V>& op, const Rational& c) {
  return linear_combination<V>({{c, op}});
}

template <class V>
BasicSkewOp<V> difference(const BasicSkewOp<V>& a, const BasicSkewOp<V>& b) {
  return linear_combination<V>({{Rational(1), a}, {Rational(-1), b}});
}

/// Exterior multiplication:
/// (D ^ E)(a_1..a_{k+l}) = sum over unshuffles S^k_{k+l} of sign * D(a_head) * E(a_tail).
template <class V>
BasicSkewOp<V> wedge(const BasicSkewOp<V>& d, const BasicSkewOp<V>& e) {
  const std::size_t k = d.arity();
  const std::size_t l = e.arity();
  OpInfo info;
  info.description = "wedge(" + d.description() + "," + e.description() + ")";
  info.slot_order_bound = std::max(d.slot_order_bound(), e.slot_order_bound());
  if (d.info().wronskian && e.info().wronskian) {
    auto w = *d.info().wronskian;
    w.insert(w.end(), e.info().wronskian->begin(), e.info().wronskian->end());
    info.wronskian = std::move(w);
  }
  info.norm = detail::add_norms(d.info(), e.info());
  return BasicSkewOp<V>(
      k + l, d.zero(),
      [d, e, k, l](std::span<const V> args) {
        V acc = d.zero();
        for_each_unshuffle(k, k + l, [&](const Unshuffle& u) {
          V term = d(detail::pick(args, u.head)) * e(detail::pick(args, u.tail));
          if (u.sign > 0) {
            acc += term;
          } else {
            acc -= term;
          }
        });
        return acc;
      },
      std::move(info));
}

/// Evaluate the action D[E] directly on arguments:
/// sum over unshuffles S^l_{k+l-1} of sign * D(E(a_head), a_tail...).
template <class V>
V action_value(const BasicSkewOp<V>& d, const BasicSkewOp<V>& e, std::span<const V> args) {
  const std::size_t l = e.arity();
  const std::size_t m = d.arity() + l - 1;
  if (d.arity() == 0) throw DomainError("action of an arity-0 operator");
  if (args.size() != m) throw DomainError("action expects " + std::to_string(m) + " arguments");
  V acc = d.zero();
  std::vector<V> outer(d.arity(), d.zero());
  for_each_unshuffle(l, m, [&](const Unshuffle& u) {
    outer[0] = e(detail::pick(args, u.head));
    for (std::size_t i = 0; i < u.tail.size(); ++i) outer[i + 1] = args[u.tail[i]];
    V term = d(outer);
    if (u.sign > 0) {
      acc += term;
    } else {
      acc -= term;
    }
  });
  return acc;
}

/// The action D[E] as an operator of arity k + l - 1.
template <class V>
BasicSkewOp<V> action(const BasicSkewOp<V>& d, const BasicSkewOp<V>& e) {
  if (d.arity() == 0) throw DomainError("action of an arity-0 operator");
  OpInfo info;
  info.description = "act(" + d.description() + "," + e.description() + ")";
  info.slot_order_bound = d.slot_order_bound() + e.slot_order_bound();
  info.norm = detail::add_norms(d.info(), e.info());
  return BasicSkewOp<V>(
      d.arity() + e.arity() - 1, d.zero(), [d, e](std::span<const V> args) { return action_value(d, e, args); },
      std::move(info));
}

/// Sign (-1)^((k-1)(l-1)) of the Richardson-Nijenhuis bracket.
inline int rn_sign(std::size_t k, std::size_t l) { return ((k - 1) * (l - 1)) % 2 ? -1 : 1; }

/// Richardson-Nijenhuis bracket [[D, E]] = D[E] - (-1)^((k-1)(l-1)) E[D].
template <class V>
BasicSkewOp<V> rn_bracket(const BasicSkewOp<V>& d, const BasicSkewOp<V>& e) {
  if (d.arity() == 0 || e.arity() == 0) throw DomainError("RN bracket needs operators of positive arity");
  const int sign = rn_sign(d.arity(), e.arity());
  OpInfo info;
  info.description = "rn(" + d.description() + "," + e.description() + ")";
  info.slot_order_bound = d.slot_order_bound() + e.slot_order_bound();
  info.norm = detail::add_norms(d.info(), e.info());
  return BasicSkewOp<V>(
      d.arity() + e.arity() - 1, d.zero(),
      [d, e, sign](std::span<const V> args) {
        V r = action_value(d, e, args);
        V s = action_value(e, d, args);
        if (sign > 0) {
          r -= s;
        } else {
          r += s;
        }
        return r;
      },
      std::move(info));
}

/// Norm of a generalised Wronskian (or of an operator built from them).
template <class V>
long op_norm(const BasicSkewOp<V>& op) {
  if (!op.info().norm) throw DomainError("operator " + op.description() + " carries no Wronskian norm");
  return *op.info().norm;
}

}  // namespace hnl
