#include "hnl/assoc.hpp"

#include <bit>

#include "hnl/error.hpp"
#include "hnl/wronskian.hpp"

namespace hnl {

DiffOp alt_bracket(std::span<const DiffOp> args) {
  const std::size_t n = args.size();
  if (n == 0) throw DomainError("alternating bracket of no operators");
  if (n > 20) throw DomainError("alternating bracket arity too large");
  for (const auto& a : args) {
    if (a.n_vars() != args[0].n_vars()) throw DomainError("operators in different variable counts");
  }
  std::vector<DiffOp> alt(std::size_t{1} << n, DiffOp(args[0].n_vars()));
  for (std::size_t i = 0; i < n; ++i) alt[std::size_t{1} << i] = args[i];
  for (std::size_t mask = 1; mask < alt.size(); ++mask) {
    if (std::popcount(mask) < 2) continue;
    DiffOp acc(args[0].n_vars());
    std::size_t position = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t bit = std::size_t{1} << i;
      if (!(mask & bit)) continue;
      DiffOp t = args[i].compose(alt[mask & ~bit]);
      if (position % 2) {
        acc -= t;
      } else {
        acc += t;
      }
      ++position;
    }
    alt[mask] = std::move(acc);
  }
  return alt.back();
}

DiffSkewOp alt_bracket_op(std::size_t arity, std::size_t n_vars) {
  if (arity == 0) throw DomainError("alternating bracket arity must be positive");
  return DiffSkewOp(
      arity, DiffOp(n_vars), [](std::span<const DiffOp> a) { return alt_bracket(a); },
      OpInfo{.description = "alt" + std::to_string(arity)});
}

OnlyWronskianResult check_only_wronskian(int arity, int p, std::span<const Polynomial> weights) {
  if (arity < 2) throw DomainError("bracket arity must be at least 2");
  if (arity % 2) throw DomainError("odd arity needs half-integer powers of d; only even N is supported");
  if (2 * p < arity - 1) throw DomainError("order p must satisfy p >= (N-1)/2");
  if (weights.size() != static_cast<std::size_t>(arity)) throw DomainError("need exactly N weights");
  std::vector<DiffOp> ops;
  for (const auto& w : weights) ops.push_back(DiffOp::term(w, p));
  OnlyWronskianResult r;
  r.exponent = arity * p - arity * (arity - 1) / 2;
  r.wronskian = wronskian(weights);
  r.bracket = alt_bracket(ops);
  r.expected = DiffOp::term(r.wronskian, r.exponent);
  r.residual = r.bracket - r.expected;
  r.holds = r.residual.is_zero();
  if (r.holds) {
    r.ratio = Rational(1);
  } else if (!r.expected.is_zero() && !r.bracket.is_zero()) {
    const auto& [e, c] = *r.wronskian.terms().begin();
    const Rational q = r.bracket.coefficient(r.exponent).coefficient(e) / c;
    if (r.bracket == r.expected * q) r.ratio = q;
  }
  return r;
}

DeltaIdentity delta_identity_for(std::size_t outer, std::size_t inner) {
  if (outer < 2 || inner < 2) throw DomainError("bracket arities must be at least 2");
  if (inner % 2) return {"inner-odd", Rational(static_cast<long>(outer))};
  if (outer % 2) return {"inner-even", Rational(1)};
  return {"both-even", Rational(0)};
}

DeltaIdentityResult delta_identity_check(std::size_t outer, std::size_t inner, std::span<const DiffOp> sample) {
  DeltaIdentityResult r;
  r.identity = delta_identity_for(outer, inner);
  const std::size_t m = outer + inner - 1;
  if (sample.size() != m) throw DomainError("sample must contain k + l - 1 operators");
  const std::size_t n_vars = sample[0].n_vars();
  r.lhs = action_value(alt_bracket_op(outer, n_vars), alt_bracket_op(inner, n_vars), sample);
  r.rhs = r.identity.coefficient == 0 ? DiffOp(n_vars) : alt_bracket(sample) * r.identity.coefficient;
  r.residual = r.lhs - r.rhs;
  r.holds = r.residual.is_zero();
  return r;
}

ClosureResult check_half_order_closure(int arity, std::span<const Polynomial> weights) {
  if (arity < 2 || arity % 2) throw DomainError("closure of w d^{N/2} needs even N");
  if (weights.size() != static_cast<std::size_t>(arity)) throw DomainError("need exactly N weights");
  std::vector<DiffOp> ops;
  for (const auto& w : weights) ops.push_back(DiffOp::term(w, arity / 2));
  ClosureResult r;
  r.bracket = alt_bracket(ops);
  r.closed = r.bracket.is_homogeneous_of_order(arity / 2);
  return r;
}

std::vector<DiffOp> diffop_basis(int max_degree, int max_order, int min_degree) {
  if (max_order < 0 || max_degree < min_degree) throw DomainError("empty operator basis");
  std::vector<DiffOp> out;
  for (int b = 0; b <= max_order; ++b) {
    for (int a = min_degree; a <= max_degree; ++a) out.push_back(DiffOp::term(Polynomial::monomial(1, {a}), b));
  }
  return out;
}

std::vector<DiffOp> vector_field_basis(std::size_t n_vars, int max_degree) {
  std::vector<DiffOp> out;
  for (std::size_t i = 0; i < n_vars; ++i) {
    DiffOp::Orders o(n_vars, 0);
    o[i] = 1;
    for (const auto& m : monomials_up_to(n_vars, max_degree)) out.push_back(DiffOp::term(m, o));
  }
  return out;
}

}  // namespace hnl
