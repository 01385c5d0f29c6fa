#include "hnl/jet.hpp"

#include "hnl/error.hpp"
#include "hnl/linalg.hpp"
#include "hnl/wronskian.hpp"

namespace hnl {

JetBracketSpec jet_bracket_spec(std::size_t n, int k) {
  if (n == 0) throw DomainError("jet bracket needs at least one variable");
  if (k < 0) throw DomainError("jet order must be non-negative");
  return JetBracketSpec{n, k, multi_indices_up_to(n, k)};
}

std::size_t jet_dimension_sum(std::size_t n, int k) {
  std::size_t total = 0;
  for (int i = 0; i <= k; ++i) total += choose(n + static_cast<std::size_t>(i) - 1, n - 1);
  return total;
}

std::size_t jet_dimension_closed(std::size_t n, int k) { return choose(n + static_cast<std::size_t>(k), n); }

std::size_t jet_dimension(std::size_t n, int k) {
  if (n == 0) throw DomainError("jet dimension needs n >= 1");
  if (k < 0) throw DomainError("jet order must be non-negative");
  const std::size_t a = jet_dimension_sum(n, k);
  const std::size_t b = jet_dimension_closed(n, k);
  if (a != b) throw Error("jet dimension forms disagree");
  return a;
}

SkewOp box_op(std::size_t n, int k) {
  const auto spec = jet_bracket_spec(n, k);
  SkewOp op = wronskian_op(spec.basis, n);
  OpInfo info = op.info();
  info.description = "box(" + std::to_string(n) + "," + std::to_string(k) + ")";
  return op.with_info(std::move(info));
}

Polynomial box_bracket(const JetBracketSpec& spec, std::span<const Polynomial> args) {
  if (args.size() != spec.arity()) throw DomainError("box bracket expects " + std::to_string(spec.arity()) + " arguments");
  return box_op(spec.n, spec.k)(args);
}

SkewOp nambu_op(std::size_t n) {
  if (n == 0) throw DomainError("Nambu bracket needs at least one variable");
  return SkewOp(
      n, Polynomial(n),
      [n](std::span<const Polynomial> args) {
        std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n, Polynomial(n)));
        for (std::size_t i = 0; i < n; ++i) {
          if (args[i].n_vars() != n) throw DomainError("Nambu bracket arguments must have n variables");
          for (std::size_t j = 0; j < n; ++j) m[i][j] = args[i].derive(j);
        }
        return determinant(m, Polynomial(n));
      },
      OpInfo{.description = "nambu" + std::to_string(n),
             .slot_order_bound = 1,
             .wronskian = std::nullopt,
             .norm = static_cast<long>(n)});
}

Polynomial nambu_bracket(std::span<const Polynomial> args) {
  if (args.empty()) throw DomainError("Nambu bracket of no functions");
  const std::size_t n = args[0].n_vars();
  if (args.size() != n) throw DomainError("Nambu bracket in n variables takes exactly n arguments");
  return nambu_op(n)(args);
}

JacobiReport check_cross_vanishing(std::size_t n, int k_in, int k_out, const SearchOptions& options) {
  if (k_in < 1 || k_out < 1) throw DomainError("jet orders must be at least 1");
  const SkewOp in = box_op(n, k_in);
  const SkewOp out = box_op(n, k_out);
  const int bound = k_in + k_out;
  const TestSpace t = monomial_test_space(n, bound);
  JacobiReport r;
  r.identity = "cross-vanishing";
  r.operators = {out.description(), in.description()};
  detail::fill_space(r, t, bound);
  const std::size_t m = in.arity() + out.arity() - 1;
  if (m > t.size()) {
    r.vacuous = true;
    return r;
  }
  const SkewOp composite = action(out, in);
  auto s = search_tuples<Polynomial>(
      t.size(), {m},
      [&](const std::vector<std::vector<std::size_t>>& g) -> std::optional<Polynomial> {
        Polynomial v = composite(detail::gather(t, g[0]));
        if (v.is_zero()) return std::nullopt;
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

JacobiReport check_leibniz(const SkewOp& d, const TestSpace& t, const SearchOptions& options) {
  JacobiReport r;
  r.identity = "leibniz";
  r.operators = {d.description()};
  detail::fill_space(r, t, d.slot_order_bound());
  const std::size_t rest = d.arity() - 1;
  if (d.arity() == 0 || rest > t.size()) {
    r.vacuous = true;
    return r;
  }
  // Group sizes {1, 1, rest}: a, b range over the whole space independently
  // of one another; search_tuples enumerates each singleton group fully.
  auto s = search_tuples<std::pair<Polynomial, Polynomial>>(
      t.size(), {1, 1, rest},
      [&](const std::vector<std::vector<std::size_t>>& g) -> std::optional<std::pair<Polynomial, Polynomial>> {
        const Polynomial& a = t.elements[g[0][0]];
        const Polynomial& b = t.elements[g[1][0]];
        auto tail = detail::gather(t, g[2]);
        std::vector<Polynomial> args{a * b};
        args.insert(args.end(), tail.begin(), tail.end());
        Polynomial lhs = d(args);
        args[0] = b;
        Polynomial rhs = a * d(args);
        args[0] = a;
        rhs += d(args) * b;
        if (lhs == rhs) return std::nullopt;
        return std::pair{std::move(lhs), std::move(rhs)};
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
    r.witness_value = s.payload->first.to_string() + " != " + s.payload->second.to_string();
  }
  return r;
}

}  // namespace hnl
