#include "hnl/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "hnl/error.hpp"

namespace hnl {

namespace {

int total(const Polynomial::Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

bool Polynomial::TermOrder::operator()(const Exponents& a, const Exponents& b) const {
  const int da = total(a);
  const int db = total(b);
  if (da != db) return da > db;
  return a > b;
}

Polynomial::Polynomial(std::size_t n_vars) : n_vars_(n_vars) {
  if (n_vars == 0) throw DomainError("polynomial needs at least one variable");
}

Polynomial::Polynomial(std::size_t n_vars, TermMap terms) : Polynomial(n_vars) {
  for (auto& [e, c] : terms) {
    if (e.size() != n_vars) throw DomainError("exponent vector length does not match variable count");
    if (c != 0) terms_.emplace(e, c);
  }
}

Polynomial Polynomial::constant(std::size_t n_vars, const Rational& c) {
  Polynomial p(n_vars);
  p.add_term(Exponents(n_vars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t n_vars, std::size_t var) {
  if (var >= n_vars) throw DomainError("variable index out of range");
  Exponents e(n_vars, 0);
  e[var] = 1;
  return monomial(n_vars, std::move(e));
}

Polynomial Polynomial::monomial(std::size_t n_vars, Exponents exps, const Rational& c) {
  if (exps.size() != n_vars) throw DomainError("exponent vector length does not match variable count");
  Polynomial p(n_vars);
  p.add_term(exps, c);
  return p;
}

Polynomial Polynomial::divided_power(int k) {
  if (k < 0) throw DomainError("divided power needs k >= 0");
  return monomial(1, {k}, Rational(Integer(1), factorial(k)));
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total(terms_.begin()->first) == 0 &&
                            std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                                        [](int e) { return e == 0; }));
}

bool Polynomial::has_negative_exponents() const {
  for (const auto& [e, c] : terms_) {
    for (int x : e) {
      if (x < 0) return true;
    }
  }
  return false;
}

Rational Polynomial::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(Exponents(n_vars_, 0)); }

int Polynomial::degree() const { return terms_.empty() ? -1 : total(terms_.begin()->first); }

int Polynomial::min_degree() const { return terms_.empty() ? 0 : total(terms_.rbegin()->first); }

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.n_vars_ != n_vars_) throw DomainError("variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.n_vars_ != n_vars_) throw DomainError("variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial r(*this);
  r += other;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  Polynomial r(*this);
  r -= other;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (other.n_vars_ != n_vars_) throw DomainError("variable count mismatch");
  Polynomial r(n_vars_);
  if (terms_.empty() || other.terms_.empty()) return r;
  Exponents e(n_vars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      for (std::size_t i = 0; i < n_vars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return Polynomial(n_vars_);
  Polynomial r(*this);
  for (auto& [e, coef] : r.terms_) coef *= c;
  return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(n_vars_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derive(std::size_t var) const {
  if (var >= n_vars_) throw DomainError("variable index out of range");
  Polynomial r(n_vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d(e);
    d[var] -= 1;
    r.add_term(d, c * e[var]);
  }
  return r;
}

Polynomial Polynomial::apply(const MultiIndex& sigma) const {
  if (sigma.size() != n_vars_) throw DomainError("multiindex length does not match variable count");
  Polynomial r(n_vars_);
  for (const auto& [e, c] : terms_) {
    Rational coef = c;
    Exponents d(e);
    bool vanished = false;
    for (std::size_t v = 0; v < n_vars_ && !vanished; ++v) {
      for (int t = 0; t < sigma[v]; ++t) {
        if (d[v] == 0) {
          vanished = true;
          break;
        }
        coef *= d[v];
        d[v] -= 1;
      }
    }
    if (!vanished) r.add_term(d, coef);
  }
  return r;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> values) const {
  if (values.size() != n_vars_) throw DomainError("substitution needs one value per variable");
  const std::size_t target = values.front().n_vars();
  for (const auto& v : values) {
    if (v.n_vars() != target) throw DomainError("substituted values live in different variable spaces");
  }
  // Cache powers per variable.
  std::vector<std::vector<Polynomial>> powers(n_vars_);
  Polynomial r(target);
  for (const auto& [e, c] : terms_) {
    Polynomial t = constant(target, c);
    for (std::size_t v = 0; v < n_vars_; ++v) {
      if (e[v] < 0) throw DomainError("cannot substitute into a negative exponent");
      auto& pw = powers[v];
      if (pw.empty()) pw.push_back(constant(target, 1));
      while (static_cast<int>(pw.size()) <= e[v]) pw.push_back(pw.back() * values[v]);
      if (e[v] > 0) t = t * pw[e[v]];
    }
    r += t;
  }
  return r;
}

Polynomial Polynomial::truncate(int max_degree) const {
  Polynomial r(n_vars_);
  for (const auto& [e, c] : terms_) {
    if (total(e) <= max_degree) r.terms_.emplace(e, c);
  }
  return r;
}

std::string Polynomial::to_string(const std::vector<std::string>& names_in) const {
  if (terms_.empty()) return "0";
  const auto names = names_in.empty() ? default_variable_names(n_vars_) : names_in;
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t v = 0; v < n_vars_; ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[v];
      if (e[v] != 1) mono += "^" + std::to_string(e[v]);
    }
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    std::string body;
    if (mono.empty()) {
      body = mag.get_str();
    } else if (mag == 1) {
      body = mono;
    } else {
      body = mag.get_str() + "*" + mono;
    }
    if (first) {
      out = negative ? "-" + body : body;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

Polynomial derive(const Polynomial& p, std::size_t var) { return p.derive(var); }

Polynomial apply_multiindex(const Polynomial& p, const MultiIndex& sigma) { return p.apply(sigma); }

std::vector<std::string> default_variable_names(std::size_t n) {
  if (n <= 3) {
    static const std::vector<std::string> xyz{"x", "y", "z"};
    return {xyz.begin(), xyz.begin() + static_cast<long>(n)};
  }
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

std::vector<Polynomial> monomials_up_to(std::size_t n, int d) {
  std::vector<Polynomial> out;
  for (const auto& m : multi_indices_up_to(n, d)) out.push_back(Polynomial::monomial(n, m.exponents()));
  return out;
}

}  // namespace hnl
