#include "hnl/finite.hpp"

#include <algorithm>
#include <random>

#include <nlohmann/json.hpp>

#include "hnl/combinatorics.hpp"
#include "hnl/error.hpp"
#include "hnl/linalg.hpp"
#include "hnl/wronskian.hpp"

namespace hnl {

StructureTensor::StructureTensor(std::size_t dim, std::size_t arity) : dim_(dim), arity_(arity) {
  if (dim == 0) throw DomainError("algebra dimension must be positive");
  if (arity == 0) throw DomainError("bracket arity must be positive");
}

void StructureTensor::set(Key indices, Vector value) {
  if (indices.size() != arity_) throw DomainError("structure constant key has the wrong arity");
  if (value.size() != dim_) throw DomainError("structure constant value has the wrong dimension");
  for (std::size_t i : indices) {
    if (i >= dim_) throw DomainError("basis index out of range");
  }
  const int sign = permutation_sign(std::span<const std::size_t>(indices));
  std::sort(indices.begin(), indices.end());
  if (std::adjacent_find(indices.begin(), indices.end()) != indices.end()) {
    throw DomainError("structure constant key has a repeated index");
  }
  if (sign < 0) {
    for (auto& v : value) v = -v;
  }
  if (std::all_of(value.begin(), value.end(), [](const Rational& q) { return q == 0; })) {
    entries_.erase(indices);
  } else {
    entries_[std::move(indices)] = std::move(value);
  }
}

StructureTensor::Vector StructureTensor::bracket(Key indices) const {
  Vector zero(dim_, 0);
  if (indices.size() != arity_) throw DomainError("bracket called with the wrong arity");
  for (std::size_t i : indices) {
    if (i >= dim_) throw DomainError("basis index out of range");
  }
  // Sign of the sorting permutation; repeats give zero.
  std::vector<std::size_t> order(indices.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return indices[a] < indices[b]; });
  Key sorted;
  for (std::size_t i : order) sorted.push_back(indices[i]);
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return zero;
  auto it = entries_.find(sorted);
  if (it == entries_.end()) return zero;
  Vector v = it->second;
  if (permutation_sign(std::span<const std::size_t>(order)) < 0) {
    for (auto& q : v) q = -q;
  }
  return v;
}

StructureTensor::Vector StructureTensor::bracket_vectors(std::span<const Vector> args) const {
  if (args.size() != arity_) throw DomainError("bracket called with the wrong arity");
  for (const auto& a : args) {
    if (a.size() != dim_) throw DomainError("argument vector has the wrong dimension");
  }
  Vector out(dim_, 0);
  for (const auto& [key, value] : entries_) {
    RationalMatrix m(arity_, std::vector<Rational>(arity_));
    for (std::size_t i = 0; i < arity_; ++i) {
      for (std::size_t j = 0; j < arity_; ++j) m[i][j] = args[j][key[i]];
    }
    const Rational c = determinant(m, Rational(0));
    if (c == 0) continue;
    for (std::size_t t = 0; t < dim_; ++t) out[t] += c * value[t];
  }
  return out;
}

StructureTensor::Vector linear_coordinates(const Polynomial& p) {
  StructureTensor::Vector v(p.n_vars(), 0);
  for (const auto& [e, c] : p.terms()) {
    int deg = 0;
    std::size_t var = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0) throw DomainError("finite algebra element must be a linear form");
      deg += e[i];
      if (e[i]) var = i;
    }
    if (deg != 1) throw DomainError("finite algebra element must be a linear form");
    v[var] = c;
  }
  return v;
}

Polynomial linear_form(const StructureTensor::Vector& v) {
  Polynomial p(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) p += Polynomial::monomial(v.size(), [&] {
      Polynomial::Exponents e(v.size(), 0);
      e[i] = 1;
      return e;
    }(), v[i]);
  }
  return p;
}

SkewOp StructureTensor::as_skew_op(std::string description) const {
  const StructureTensor self = *this;
  return SkewOp(
      arity_, Polynomial(dim_),
      [self](std::span<const Polynomial> args) {
        std::vector<Vector> vs;
        for (const auto& a : args) {
          if (a.n_vars() != self.dim()) throw DomainError("argument lives in the wrong dimension");
          vs.push_back(linear_coordinates(a));
        }
        return linear_form(self.bracket_vectors(vs));
      },
      OpInfo{.description = std::move(description), .slot_order_bound = 0});
}

TestSpace StructureTensor::basis_space() const {
  std::vector<Polynomial> basis;
  for (std::size_t i = 0; i < dim_; ++i) basis.push_back(Polynomial::variable(dim_, i));
  return custom_test_space(std::move(basis), "basis of k^" + std::to_string(dim_));
}

namespace {

// [a_0..a_N with a_j omitted] = sign_j * a_{target(j)}.
template <class F>
StructureTensor omit_one_algebra(std::size_t arity, F&& rule) {
  if (arity < 2) throw DomainError("bracket arity must be at least 2");
  StructureTensor t(arity + 1, arity);
  for (std::size_t j = 0; j <= arity; ++j) {
    StructureTensor::Key key;
    for (std::size_t i = 0; i <= arity; ++i) {
      if (i != j) key.push_back(i);
    }
    auto [target, sign] = rule(j);
    StructureTensor::Vector v(arity + 1, 0);
    v[target] = sign;
    t.set(std::move(key), std::move(v));
  }
  return t;
}

}  // namespace

StructureTensor cross_product_algebra(std::size_t arity) {
  return omit_one_algebra(arity, [](std::size_t j) { return std::pair{j, j % 2 ? -1L : 1L}; });
}

StructureTensor a2_algebra(std::size_t arity) {
  return omit_one_algebra(arity, [arity](std::size_t j) { return std::pair{arity - j, 1L}; });
}

RepCheck a2_wronskian_rep_check(std::size_t arity) {
  if (arity < 2) throw DomainError("bracket arity must be at least 2");
  RepCheck r;
  const int n = static_cast<int>(arity);
  for (int j = 0; j <= n; ++j) {
    std::vector<Polynomial> args;
    for (int i = 0; i <= n; ++i) {
      if (i != j) args.push_back(Polynomial::divided_power(i));
    }
    const Polynomial got = wronskian(args);
    const Polynomial want = Polynomial::divided_power(n - j);
    r.relations.push_back("omit a_" + std::to_string(j) + ": " + got.to_string());
    if (got != want && r.holds) {
      r.holds = false;
      r.failure = "omitting a_" + std::to_string(j) + " gives " + got.to_string() + ", expected " + want.to_string();
    }
  }
  return r;
}

RepCheck sl2_wronskian_rep_check() {
  const Polynomial e = Polynomial::constant(1, 1);
  const Polynomial h = Polynomial::monomial(1, {1}, -2);
  const Polynomial f = Polynomial::monomial(1, {2}, -1);
  struct Rel {
    const char* name;
    Polynomial got;
    Polynomial want;
  };
  const std::vector<Rel> rels{{"[h,e] = 2e", wronskian(std::vector<Polynomial>{h, e}), e * Rational(2)},
                              {"[h,f] = -2f", wronskian(std::vector<Polynomial>{h, f}), f * Rational(-2)},
                              {"[e,f] = h", wronskian(std::vector<Polynomial>{e, f}), h}};
  RepCheck r;
  for (const auto& rel : rels) {
    r.relations.push_back(std::string(rel.name) + ": " + rel.got.to_string());
    if (rel.got != rel.want && r.holds) {
      r.holds = false;
      r.failure = std::string(rel.name) + " gives " + rel.got.to_string();
    }
  }
  return r;
}

StructureTensor random_skew_bracket(std::size_t dim, std::size_t arity, std::uint64_t seed) {
  StructureTensor t(dim, arity);
  if (arity > dim) return t;
  // mt19937_64 output is fixed by the standard; distributions are not, so
  // values are drawn from raw outputs.
  std::mt19937_64 gen(seed);
  std::vector<std::size_t> key(arity);
  for (std::size_t i = 0; i < arity; ++i) key[i] = i;
  do {
    StructureTensor::Vector v(dim);
    for (auto& q : v) {
      const long num = static_cast<long>(gen() % 11) - 5;
      const long den = static_cast<long>(gen() % 3) + 1;
      q = make_rational(num, den);
    }
    t.set(key, std::move(v));
  } while (next_combination(key, dim));
  return t;
}

std::string to_json_text(const StructureTensor& t, std::optional<std::uint64_t> seed) {
  nlohmann::ordered_json j;
  j["r"] = t.dim();
  j["N"] = t.arity();
  if (seed) j["seed"] = *seed;
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& [key, value] : t.entries()) {
    nlohmann::ordered_json e;
    e["indices"] = key;
    std::vector<std::string> vals;
    for (const auto& q : value) vals.push_back(q.get_str());
    e["value"] = vals;
    j["entries"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

StructureTensor structure_tensor_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("structure tensor JSON: ") + e.what());
  }
  try {
    StructureTensor t(j.at("r").get<std::size_t>(), j.at("N").get<std::size_t>());
    for (const auto& e : j.at("entries")) {
      StructureTensor::Vector v;
      for (const auto& s : e.at("value")) {
        Rational q;
        if (s.is_number_integer()) {
          q = Rational(s.get<long>());
        } else {
          if (q.set_str(s.get<std::string>(), 10) != 0) throw DomainError("structure tensor JSON: bad rational");
          q.canonicalize();
        }
        v.push_back(q);
      }
      t.set(e.at("indices").get<std::vector<std::size_t>>(), std::move(v));
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("structure tensor JSON: ") + e.what());
  }
}

}  // namespace hnl
