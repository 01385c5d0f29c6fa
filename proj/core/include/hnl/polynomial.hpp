#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hnl/multi_index.hpp"
#include "hnl/rational.hpp"

namespace hnl {

/// Exact multivariate polynomial over the rationals in a fixed number of
/// variables. Exponents may be negative (Laurent polynomials); the parser only
/// produces those when asked to.
///
/// Terms are kept in graded lexicographic order, highest first, with no zero
/// coefficients stored. Values are immutable: every operation returns a new
/// polynomial.
class Polynomial {
 public:
  using Exponents = std::vector<int>;

  /// Graded lex, descending: higher total degree first, then lexicographically
  /// larger exponent vectors first.
  struct TermOrder {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  using TermMap = std::map<Exponents, Rational, TermOrder>;

  Polynomial() : Polynomial(1) {}
  explicit Polynomial(std::size_t n_vars);
  Polynomial(std::size_t n_vars, TermMap terms);

  static Polynomial constant(std::size_t n_vars, const Rational& c);
  static Polynomial variable(std::size_t n_vars, std::size_t var);
  static Polynomial monomial(std::size_t n_vars, Exponents exps, const Rational& c = 1);

  /// x^k / k! in one variable.
  static Polynomial divided_power(int k);

  std::size_t n_vars() const { return n_vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool has_negative_exponents() const;

  /// Coefficient of the given monomial (zero when absent).
  Rational coefficient(const Exponents& exps) const;

  /// Constant term.
  Rational constant_term() const;

  /// Maximum total degree of a term; -1 for the zero polynomial.
  int degree() const;

  /// Minimum total degree of a term; 0 for the zero polynomial.
  int min_degree() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);

  Polynomial pow(unsigned e) const;

  /// Partial derivative with respect to variable `var`.
  Polynomial derive(std::size_t var) const;

  /// Iterated partial derivative d^{|sigma|} / dx^sigma.
  Polynomial apply(const MultiIndex& sigma) const;

  /// Substitute values[i] for variable i. The result lives in the variable
  /// space of the values (all must agree). Negative exponents are rejected.
  Polynomial substitute(std::span<const Polynomial> values) const;

  /// Drop every term of total degree above `max_degree`.
  Polynomial truncate(int max_degree) const;

  bool operator==(const Polynomial& other) const = default;

  /// Canonical text in the expression grammar. `names` gives the printed
  /// name of each variable; empty means the default names.
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void add_term(const Exponents& e, const Rational& c);

  std::size_t n_vars_;
  TermMap terms_;
};

Polynomial operator*(const Rational& c, const Polynomial& p);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// derive() as a free function.
Polynomial derive(const Polynomial& p, std::size_t var);

/// apply() as a free function.
Polynomial apply_multiindex(const Polynomial& p, const MultiIndex& sigma);

/// Default printed variable names: x, y, z for n <= 3, else x1..xn.
std::vector<std::string> default_variable_names(std::size_t n);

/// All monomials (coefficient one) in n variables of total degree <= d, in
/// ascending graded order (1 first). Non-negative exponents only.
std::vector<Polynomial> monomials_up_to(std::size_t n, int d);

}  // namespace hnl
