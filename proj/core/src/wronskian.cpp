#include "hnl/wronskian.hpp"

#include <algorithm>
#include <memory>

#include "hnl/error.hpp"
#include "hnl/linalg.hpp"

namespace hnl {

namespace {

std::string describe_rows(const std::vector<MultiIndex>& rows, std::size_t n) {
  std::string s = "W[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) s += ",";
    s += n == 1 ? std::to_string(rows[i][0]) : rows[i].to_string();
  }
  return s + "]";
}

void require_one_variable(std::span<const Polynomial> args) {
  for (const auto& a : args) {
    if (a.n_vars() != 1) throw DomainError("one-variable Wronskian given a polynomial in " +
                                           std::to_string(a.n_vars()) + " variables");
  }
}

std::vector<MultiIndex> to_rows(const std::vector<int>& indices) {
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 0) throw DomainError("Wronskian indices must be non-negative");
    if (i && indices[i] <= indices[i - 1]) throw DomainError("Wronskian indices must be strictly increasing");
  }
  std::vector<MultiIndex> rows;
  for (int i : indices) rows.push_back(MultiIndex::single(i));
  return rows;
}

}  // namespace

SkewOp wronskian_op(std::vector<MultiIndex> rows, std::size_t n_vars) {
  if (rows.empty()) throw DomainError("Wronskian needs at least one row");
  int bound = 0;
  long norm = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n_vars) throw DomainError("row multiindex length does not match variable count");
    if (i && !(rows[i - 1] < rows[i])) throw DomainError("Wronskian rows must be strictly increasing");
    bound = std::max(bound, rows[i].order());
    norm += rows[i].order();
  }
  OpInfo info{.description = describe_rows(rows, n_vars), .slot_order_bound = bound, .wronskian = rows, .norm = norm};
  auto shared = std::make_shared<const std::vector<MultiIndex>>(std::move(rows));
  return SkewOp(
      shared->size(), Polynomial(n_vars),
      [shared, n_vars](std::span<const Polynomial> args) {
        const std::size_t n = shared->size();
        for (const auto& a : args) {
          if (a.n_vars() != n_vars) throw DomainError("argument variable count does not match operator");
        }
        std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n, Polynomial(n_vars)));
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) m[i][j] = args[j].apply((*shared)[i]);
        }
        return determinant(m, Polynomial(n_vars));
      },
      std::move(info));
}

SkewOp generalized_wronskian_op(const std::vector<int>& indices) { return wronskian_op(to_rows(indices), 1); }

SkewOp classical_wronskian_op(std::size_t arity) {
  std::vector<int> idx(arity);
  for (std::size_t i = 0; i < arity; ++i) idx[i] = static_cast<int>(i);
  return generalized_wronskian_op(idx);
}

SkewOp derivation_power_op(int j) {
  if (j < 0) throw DomainError("derivation power must be non-negative");
  OpInfo info{.description = "D[" + std::to_string(j) + "]",
              .slot_order_bound = j,
              .wronskian = std::vector<MultiIndex>{MultiIndex::single(j)},
              .norm = j};
  return SkewOp(
      1, Polynomial(1),
      [j](std::span<const Polynomial> a) {
        Polynomial p = a[0];
        for (int t = 0; t < j; ++t) p = p.derive(0);
        return p;
      },
      std::move(info));
}

SkewOp wronskian_as_wedge(std::size_t arity) {
  if (arity == 0) throw DomainError("Wronskian arity must be positive");
  // Right-nested: d^0 ^ (d^1 ^ (... ^ d^{N-1})).
  SkewOp acc = derivation_power_op(static_cast<int>(arity) - 1);
  for (std::size_t i = arity - 1; i-- > 0;) acc = wedge(derivation_power_op(static_cast<int>(i)), acc);
  return acc;
}

Polynomial wronskian(std::span<const Polynomial> args) {
  if (args.empty()) throw DomainError("Wronskian of no functions");
  require_one_variable(args);
  return classical_wronskian_op(args.size())(args);
}

Polynomial generalized_wronskian(const std::vector<int>& indices, std::span<const Polynomial> args) {
  require_one_variable(args);
  return generalized_wronskian_op(indices)(args);
}

FormalMonomial wronskian_monomials(std::span<const Rational> exponents) {
  const std::size_t n = exponents.size();
  if (n == 0) throw DomainError("Wronskian of no monomials");
  // Row i holds d^i x^{nu_j} = nu_j (nu_j - 1) ... (nu_j - i + 1) x^{nu_j - i}.
  std::vector<std::vector<FormalMonomial>> rows(n, std::vector<FormalMonomial>(n));
  for (std::size_t j = 0; j < n; ++j) {
    FormalMonomial f{1, exponents[j]};
    for (std::size_t i = 0; i < n; ++i) {
      rows[i][j] = f;
      f = f.derive();
    }
  }
  // Every product along a permutation has exponent sum(nu) - N(N-1)/2, so
  // the determinant factors as (det of coefficients) * x^{that}.
  Rational exponent = -Rational(static_cast<long>(n * (n - 1) / 2));
  for (const auto& e : exponents) exponent += e;
  RationalMatrix coeffs(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) coeffs[i][j] = rows[i][j].coefficient;
  }
  return FormalMonomial{determinant(coeffs, Rational(0)), exponent};
}

Rational witt_structure_constant(std::span<const long> indices) {
  Rational omega = 1;
  for (std::size_t j = 0; j < indices.size(); ++j) {
    for (std::size_t k = j + 1; k < indices.size(); ++k) omega *= Rational(indices[k] - indices[j]);
  }
  return omega;
}

Polynomial recurrence_wm(int m) {
  if (m < 1) throw DomainError("recurrence index must be at least 1");
  std::vector<Polynomial> w(static_cast<std::size_t>(m) + 1, Polynomial(1));
  w[1] = Polynomial::variable(1, 0);
  for (int k = 2; k <= m; ++k) {
    Polynomial acc(1);
    for (int l = 1; l <= k - 1; ++l) {
      const Polynomial term = w[static_cast<std::size_t>(k - l)] * Polynomial::divided_power(l);
      acc += (l + 1) % 2 == 0 ? term : -term;
    }
    const Polynomial tail = Polynomial::divided_power(k);
    acc += k % 2 == 0 ? -tail : tail;
    w[static_cast<std::size_t>(k)] = std::move(acc);
  }
  return w[static_cast<std::size_t>(m)];
}

ConformalReport conformal_weight_check(std::span<const Polynomial> phi, const Polynomial& y, int truncation_degree,
                                       std::optional<long> weight_override) {
  if (phi.empty()) throw DomainError("conformal check needs at least one function");
  require_one_variable(phi);
  if (y.n_vars() != 1) throw DomainError("change of variable must be one-variable");
  if (y.constant_term() != 0) throw DomainError("change of variable must fix the origin: y(0) = 0");
  const Polynomial dy = y.derive(0);
  if (dy.constant_term() == 0) throw DomainError("change of variable is not invertible at the origin");
  if (truncation_degree < 0) throw DomainError("truncation degree must be non-negative");

  const std::size_t n = phi.size();
  ConformalReport r;
  r.truncation_degree = truncation_degree;
  r.weight = weight_override ? *weight_override : static_cast<long>(n * (n - 1) / 2);
  if (r.weight < 0) throw DomainError("weight must be non-negative");

  std::vector<Polynomial> pulled;
  const std::vector<Polynomial> subst{y};
  for (const auto& f : phi) pulled.push_back(f.substitute(subst));
  const Polynomial lhs = wronskian(pulled);
  const Polynomial rhs = dy.pow(static_cast<unsigned>(r.weight)) * wronskian(phi).substitute(subst);
  r.required_degree = std::max(lhs.degree(), rhs.degree());
  r.certified = truncation_degree >= r.required_degree;
  r.lhs = lhs.truncate(truncation_degree);
  r.rhs = rhs.truncate(truncation_degree);
  r.holds = r.lhs == r.rhs;
  return r;
}

}  // namespace hnl
