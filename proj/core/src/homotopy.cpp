#include "hnl/homotopy.hpp"

#include <algorithm>

#include "hnl/linalg.hpp"

namespace hnl {

ExteriorTensor::ExteriorTensor(std::vector<Polynomial> base, std::size_t degree)
    : base_(std::move(base)), degree_(degree) {}

ExteriorTensor ExteriorTensor::basis(std::vector<Polynomial> base, Key indices) {
  ExteriorTensor t(std::move(base), indices.size());
  t.add(std::move(indices), 1);
  return t;
}

void ExteriorTensor::add(Key idx, const Rational& c) {
  if (idx.size() != degree_) throw DomainError("exterior tensor component of the wrong degree");
  if (c == 0) return;
  for (std::size_t i : idx) {
    if (i >= base_.size()) throw DomainError("exterior tensor index outside the base");
  }
  // Insertion sort, counting transpositions.
  bool odd = false;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return;
      std::swap(idx[j - 1], idx[j]);
      odd = !odd;
    }
  }
  auto [it, inserted] = components_.emplace(std::move(idx), 0);
  it->second += odd ? Rational(-c) : c;
  if (it->second == 0) components_.erase(it);
}

ExteriorTensor ExteriorTensor::rebased(std::vector<Polynomial> extended) const {
  if (extended.size() < base_.size() || !std::equal(base_.begin(), base_.end(), extended.begin())) {
    throw DomainError("rebasing needs an extension of the current base");
  }
  ExteriorTensor t(std::move(extended), degree_);
  t.components_ = components_;
  return t;
}

bool ExteriorTensor::operator==(const ExteriorTensor& o) const {
  return degree_ == o.degree_ && base_ == o.base_ && components_ == o.components_;
}

std::string ExteriorTensor::to_string() const {
  if (components_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : components_) {
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const Rational mag = c < 0 ? Rational(-c) : c;
    std::string wedge;
    for (std::size_t i : k) {
      if (!wedge.empty()) wedge += "^";
      wedge += "(" + base_[i].to_string() + ")";
    }
    if (k.empty()) wedge = "1";
    out += mag == 1 ? wedge : mag.get_str() + "*" + wedge;
  }
  return out;
}

SpanCoordinates::SpanCoordinates(std::vector<Polynomial> base) : base_(std::move(base)) {
  for (std::size_t i = 0; i < base_.size(); ++i) {
    std::vector<Rational> combo(base_.size(), 0);
    combo[i] = 1;
    Polynomial p = base_[i];
    for (const auto& row : rows_) {
      const Rational c = p.coefficient(row.pivot);
      if (c == 0) continue;
      p -= row.poly * c;
      for (std::size_t j = 0; j < combo.size(); ++j) combo[j] -= row.combo[j] * c;
    }
    if (p.is_zero()) throw DomainError("base elements are linearly dependent");
    const auto& [pivot, lead] = *p.terms().begin();
    const Rational inv = 1 / lead;
    Row row{pivot, p * inv, {}};
    for (auto& v : combo) v *= inv;
    row.combo = std::move(combo);
    // Keep earlier rows reduced with respect to the new pivot.
    for (auto& r : rows_) {
      const Rational c = r.poly.coefficient(row.pivot);
      if (c == 0) continue;
      r.poly -= row.poly * c;
      for (std::size_t j = 0; j < r.combo.size(); ++j) r.combo[j] -= row.combo[j] * c;
    }
    rows_.push_back(std::move(row));
  }
}

Polynomial SpanCoordinates::residual(const Polynomial& p) const {
  Polynomial r = p;
  for (const auto& row : rows_) {
    const Rational c = r.coefficient(row.pivot);
    if (c != 0) r -= row.poly * c;
  }
  return r;
}

std::optional<std::vector<Rational>> SpanCoordinates::coordinates(const Polynomial& p) const {
  std::vector<Rational> out(base_.size(), 0);
  Polynomial r = p;
  for (const auto& row : rows_) {
    const Rational c = r.coefficient(row.pivot);
    if (c == 0) continue;
    r -= row.poly * c;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += row.combo[j] * c;
  }
  if (!r.is_zero()) return std::nullopt;
  return out;
}

KoszulResult koszul_differential(const SkewOp& d, const ExteriorTensor& omega, bool auto_extend) {
  const std::size_t k = d.arity();
  const std::size_t r = omega.degree();
  if (k == 0) throw DomainError("Koszul differential of an arity-0 operator");
  std::vector<Polynomial> base = omega.base();
  if (r < k) return KoszulResult{ExteriorTensor(base, 0), {}};

  // Evaluate every needed bracket first; extend the base until all fit.
  struct Piece {
    std::vector<std::size_t> tail;
    Rational coeff;
    Polynomial value;
  };
  std::vector<Piece> pieces;
  for (const auto& [key, c] : omega.components()) {
    for_each_unshuffle(k, r, [&](const Unshuffle& u) {
      std::vector<Polynomial> args;
      for (std::size_t i : u.head) args.push_back(base[key[i]]);
      Polynomial v = d(args);
      if (v.is_zero()) return;
      std::vector<std::size_t> tail;
      for (std::size_t i : u.tail) tail.push_back(key[i]);
      pieces.push_back({std::move(tail), u.sign > 0 ? c : Rational(-c), std::move(v)});
    });
  }
  std::vector<Polynomial> extension;
  SpanCoordinates coords(base);
  for (const auto& piece : pieces) {
    Polynomial res = coords.residual(piece.value);
    if (res.is_zero()) continue;
    if (!auto_extend) throw DomainError("operator leaves the span of the base: " + piece.value.to_string());
    for (const auto& [e, c] : res.terms()) {
      Polynomial m = Polynomial::monomial(res.n_vars(), e);
      base.push_back(m);
      extension.push_back(m);
    }
    coords = SpanCoordinates(base);
  }
  ExteriorTensor out(base, r - k + 1);
  for (const auto& piece : pieces) {
    const auto xs = coords.coordinates(piece.value);
    for (std::size_t j = 0; j < xs->size(); ++j) {
      if ((*xs)[j] == 0) continue;
      std::vector<std::size_t> key{j};
      key.insert(key.end(), piece.tail.begin(), piece.tail.end());
      out.add(std::move(key), piece.coeff * (*xs)[j]);
    }
  }
  return KoszulResult{std::move(out), std::move(extension)};
}

std::optional<std::vector<std::size_t>> closure_violation(const SkewOp& d, const std::vector<Polynomial>& base) {
  const SpanCoordinates coords(base);
  const std::size_t k = d.arity();
  if (k > base.size()) return std::nullopt;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  do {
    std::vector<Polynomial> args;
    for (std::size_t i : idx) args.push_back(base[i]);
    if (!coords.residual(d(args)).is_zero()) return idx;
  } while (next_combination(idx, base.size()));
  return std::nullopt;
}

namespace {

std::vector<std::vector<std::size_t>> all_keys(std::size_t m, std::size_t r) {
  std::vector<std::vector<std::size_t>> keys;
  if (r > m) return keys;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  do {
    keys.push_back(idx);
  } while (r > 0 && next_combination(idx, m));
  return keys;
}

}  // namespace

RationalMatrix koszul_matrix(const SkewOp& d, const std::vector<Polynomial>& base, std::size_t r) {
  const std::size_t k = d.arity();
  if (k == 0) throw DomainError("Koszul differential of an arity-0 operator");
  if (auto bad = closure_violation(d, base)) throw DomainError("operator is not closed on the span of the base");
  const auto in_keys = all_keys(base.size(), r);
  const std::size_t out_degree = r >= k ? r - k + 1 : 0;
  const auto out_keys = r >= k ? all_keys(base.size(), out_degree) : std::vector<std::vector<std::size_t>>{};
  RationalMatrix m(out_keys.size(), std::vector<Rational>(in_keys.size(), 0));
  if (r < k) return m;
  std::map<std::vector<std::size_t>, std::size_t> row_of;
  for (std::size_t i = 0; i < out_keys.size(); ++i) row_of[out_keys[i]] = i;
  for (std::size_t col = 0; col < in_keys.size(); ++col) {
    const auto res = koszul_differential(d, ExteriorTensor::basis(base, in_keys[col]), false);
    for (const auto& [key, c] : res.tensor.components()) m[row_of.at(key)][col] = c;
  }
  return m;
}

HomologyRank koszul_homology_rank(const SkewOp& d, const std::vector<Polynomial>& base, std::size_t r) {
  const std::size_t k = d.arity();
  HomologyRank h;
  h.degree = r;
  h.dim_chains = r <= base.size() ? static_cast<std::size_t>(choose(base.size(), r)) : 0;
  if (auto bad = closure_violation(d, base)) throw DomainError("operator is not closed on the span of the base");
  const RationalMatrix out = koszul_matrix(d, base, r);
  const RationalMatrix in = koszul_matrix(d, base, r + k - 1);
  h.rank_out = out.empty() || out.front().empty() ? 0 : rank_fraction_free(out);
  h.rank_in = in.empty() || in.front().empty() ? 0 : rank_fraction_free(in);
  h.dim_kernel = h.dim_chains - h.rank_out;
  h.dim_homology = h.dim_kernel - h.rank_in;
  // out (rows ^{r-k+1}, cols ^r) times in (rows ^r, cols ^{r+k-1}).
  h.composite_zero = true;
  if (!out.empty() && !in.empty()) {
    for (std::size_t i = 0; i < out.size() && h.composite_zero; ++i) {
      for (std::size_t j = 0; j < in.front().size(); ++j) {
        Rational s = 0;
        for (std::size_t t = 0; t < in.size(); ++t) s += out[i][t] * in[t][j];
        if (s != 0) {
          h.composite_zero = false;
          break;
        }
      }
    }
  }
  h.extended_range = r < 2 || (r >= k && r - k + 1 < 2);
  return h;
}

}  // namespace hnl
