#include "hnl/diff_op.hpp"

#include <algorithm>

#include "hnl/error.hpp"
#include "hnl/parse.hpp"

namespace hnl {

namespace {

void require_same_space(const DiffOp& a, const DiffOp& b) {
  if (a.n_vars() != b.n_vars()) throw DomainError("differential operators in different variable counts");
}

// Visit every gamma <= alpha componentwise with the product of binomials.
template <class F>
void for_each_lower(const DiffOp::Orders& alpha, F&& visit) {
  DiffOp::Orders gamma(alpha.size(), 0);
  for (;;) {
    Integer c = 1;
    for (std::size_t i = 0; i < alpha.size(); ++i) c *= binomial(alpha[i], gamma[i]);
    visit(gamma, Rational(c));
    std::size_t i = 0;
    while (i < alpha.size() && gamma[i] == alpha[i]) gamma[i++] = 0;
    if (i == alpha.size()) return;
    ++gamma[i];
  }
}

}  // namespace

DiffOp::DiffOp(std::size_t n_vars) : n_vars_(n_vars) {
  if (n_vars == 0) throw DomainError("differential operator needs at least one variable");
}

DiffOp DiffOp::identity(std::size_t n_vars) { return multiplication(Polynomial::constant(n_vars, 1)); }

DiffOp DiffOp::multiplication(const Polynomial& w) { return term(w, Orders(w.n_vars(), 0)); }

DiffOp DiffOp::term(const Polynomial& w, Orders orders) {
  if (orders.size() != w.n_vars()) throw DomainError("derivative order vector does not match variable count");
  for (int o : orders) {
    if (o < 0) throw DomainError("derivative orders must be non-negative");
  }
  DiffOp d(w.n_vars());
  d.add_term(orders, w);
  return d;
}

DiffOp DiffOp::term(const Polynomial& w, int j) {
  if (w.n_vars() != 1) throw DomainError("single-order term needs a one-variable coefficient");
  return term(w, Orders{j});
}

DiffOp DiffOp::derivation(std::size_t var, std::size_t n_vars) {
  if (var >= n_vars) throw DomainError("derivation variable out of range");
  Orders o(n_vars, 0);
  o[var] = 1;
  return term(Polynomial::constant(n_vars, 1), o);
}

void DiffOp::add_term(const Orders& orders, const Polynomial& w) {
  if (w.is_zero()) return;
  auto it = terms_.find(orders);
  if (it == terms_.end()) {
    terms_.emplace(orders, w);
    return;
  }
  it->second += w;
  if (it->second.is_zero()) terms_.erase(it);
}

int DiffOp::order() const {
  int best = -1;
  for (const auto& [o, w] : terms_) {
    int s = 0;
    for (int v : o) s += v;
    best = std::max(best, s);
  }
  return best;
}

Polynomial DiffOp::coefficient(const Orders& orders) const {
  auto it = terms_.find(orders);
  return it == terms_.end() ? Polynomial(n_vars_) : it->second;
}

Polynomial DiffOp::coefficient(int j) const {
  if (n_vars_ != 1) throw DomainError("single-order coefficient of a multi-variable operator");
  return coefficient(Orders{j});
}

bool DiffOp::is_homogeneous_of_order(int k) const {
  return std::all_of(terms_.begin(), terms_.end(), [k](const auto& t) {
    int s = 0;
    for (int v : t.first) s += v;
    return s == k;
  });
}

DiffOp DiffOp::operator-() const { return *this * Rational(-1); }

DiffOp DiffOp::operator+(const DiffOp& o) const {
  DiffOp r(*this);
  r += o;
  return r;
}

DiffOp DiffOp::operator-(const DiffOp& o) const {
  DiffOp r(*this);
  r -= o;
  return r;
}

DiffOp DiffOp::operator*(const Rational& c) const {
  DiffOp r(n_vars_);
  if (c == 0) return r;
  for (const auto& [o, w] : terms_) r.terms_.emplace(o, w * c);
  return r;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  require_same_space(*this, o);
  for (const auto& [ord, w] : o.terms_) add_term(ord, w);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
  require_same_space(*this, o);
  for (const auto& [ord, w] : o.terms_) add_term(ord, -w);
  return *this;
}

// (a d^alpha)(b d^beta) = sum_{gamma <= alpha} C(alpha, gamma) a (d^gamma b) d^{alpha - gamma + beta}.
DiffOp DiffOp::compose(const DiffOp& o) const {
  require_same_space(*this, o);
  DiffOp r(n_vars_);
  for (const auto& [alpha, a] : terms_) {
    for (const auto& [beta, b] : o.terms_) {
      for_each_lower(alpha, [&](const Orders& gamma, const Rational& c) {
        Polynomial db = b;
        for (std::size_t v = 0; v < n_vars_; ++v) {
          for (int t = 0; t < gamma[v]; ++t) db = db.derive(v);
        }
        if (db.is_zero()) return;
        Orders out(n_vars_);
        for (std::size_t v = 0; v < n_vars_; ++v) out[v] = alpha[v] - gamma[v] + beta[v];
        r.add_term(out, a * db * c);
      });
    }
  }
  return r;
}

Polynomial DiffOp::apply(const Polynomial& f) const {
  if (f.n_vars() != n_vars_) throw DomainError("function and operator variable counts differ");
  Polynomial acc(n_vars_);
  for (const auto& [o, w] : terms_) {
    Polynomial g = f;
    for (std::size_t v = 0; v < n_vars_; ++v) {
      for (int t = 0; t < o[v]; ++t) g = g.derive(v);
    }
    acc += w * g;
  }
  return acc;
}

Polynomial DiffOp::symbol() const {
  Polynomial::TermMap out;
  for (const auto& [o, w] : terms_) {
    for (const auto& [e, c] : w.terms()) {
      Polynomial::Exponents full(e);
      full.insert(full.end(), o.begin(), o.end());
      out.emplace(std::move(full), c);
    }
  }
  return Polynomial(2 * n_vars_, std::move(out));
}

DiffOp DiffOp::from_symbol(const Polynomial& s, std::size_t n_vars) {
  if (s.n_vars() != 2 * n_vars) throw DomainError("operator symbol must have twice the variable count");
  DiffOp d(n_vars);
  for (const auto& [e, c] : s.terms()) {
    Orders o(e.begin() + static_cast<long>(n_vars), e.end());
    for (int v : o) {
      if (v < 0) throw DomainError("negative power of a derivation");
    }
    Polynomial::Exponents fe(e.begin(), e.begin() + static_cast<long>(n_vars));
    d.add_term(o, Polynomial::monomial(n_vars, std::move(fe), c));
  }
  return d;
}

std::string DiffOp::to_string() const {
  std::vector<std::string> names;
  for (const auto& alts : diffop_variable_names(n_vars_)) names.push_back(alts.front());
  for (const auto& d : derivative_names(n_vars_)) names.push_back(d);
  return symbol().to_string(names);
}

DiffOp compose(const DiffOp& a, const DiffOp& b) { return a.compose(b); }

std::ostream& operator<<(std::ostream& os, const DiffOp& d) { return os << d.to_string(); }

std::vector<std::vector<std::string>> diffop_variable_names(std::size_t n_vars) {
  if (n_vars == 1) return {{"z", "x"}};
  std::vector<std::vector<std::string>> names;
  const auto defaults = default_variable_names(n_vars);
  for (std::size_t i = 0; i < n_vars; ++i) {
    names.push_back({defaults[i]});
    if (defaults[i] != "x" + std::to_string(i + 1)) names.back().push_back("x" + std::to_string(i + 1));
  }
  return names;
}

std::vector<std::string> derivative_names(std::size_t n_vars) {
  if (n_vars == 1) return {"d"};
  std::vector<std::string> names;
  for (const auto& n : default_variable_names(n_vars)) names.push_back("d" + n);
  return names;
}

DiffOp parse_diffop(std::string_view text, std::size_t n_vars) {
  ParseOptions opt;
  opt.laurent = true;
  opt.variable_names = diffop_variable_names(n_vars);
  for (const auto& d : derivative_names(n_vars)) opt.variable_names.push_back({d});
  return DiffOp::from_symbol(parse_poly(text, 2 * n_vars, opt), n_vars);
}

std::vector<DiffOp> parse_diffop_list(std::string_view text, std::size_t n_vars) {
  std::vector<DiffOp> out;
  for (const auto& item : split_top_level(text, ';')) out.push_back(parse_diffop(item, n_vars));
  return out;
}

}  // namespace hnl
