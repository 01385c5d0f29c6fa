#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "hnl/polynomial.hpp"
#include "hnl/rational.hpp"

namespace hnl {

/// Linear differential operator sum_alpha w_alpha(x) d^alpha with (Laurent)
/// polynomial coefficients, kept in normal order: coefficients to the left.
/// In one variable this is sum_j w_j(z) d^j.
class DiffOp {
 public:
  using Orders = std::vector<int>;
  /// Graded lex, descending, as for polynomial exponents.
  using TermMap = std::map<Orders, Polynomial, Polynomial::TermOrder>;

  DiffOp() : DiffOp(1) {}
  explicit DiffOp(std::size_t n_vars);

  static DiffOp identity(std::size_t n_vars = 1);
  /// Multiplication by a function.
  static DiffOp multiplication(const Polynomial& w);
  /// w * d^orders.
  static DiffOp term(const Polynomial& w, Orders orders);
  /// w(z) d^j in one variable.
  static DiffOp term(const Polynomial& w, int j);
  /// d/dx_var.
  static DiffOp derivation(std::size_t var, std::size_t n_vars = 1);

  std::size_t n_vars() const { return n_vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Highest total order with a nonzero coefficient; -1 for zero.
  int order() const;

  /// Coefficient of d^orders (zero polynomial when absent).
  Polynomial coefficient(const Orders& orders) const;
  Polynomial coefficient(int j) const;

  /// True iff every term has total order exactly k.
  bool is_homogeneous_of_order(int k) const;

  DiffOp operator-() const;
  DiffOp operator+(const DiffOp& o) const;
  DiffOp operator-(const DiffOp& o) const;
  DiffOp operator*(const Rational& c) const;
  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);

  /// Composition (this after o), expanded with the Leibniz rule.
  DiffOp compose(const DiffOp& o) const;

  /// Apply to a function.
  Polynomial apply(const Polynomial& f) const;

  bool operator==(const DiffOp& o) const = default;

  /// Normal-ordered text such as "z*d^2 - 1/2*d + z^-1", written as a
  /// polynomial in the function variables and the derivative symbols.
  std::string to_string() const;

  /// The same data as a polynomial in 2n commuting variables (x..., d...).
  Polynomial symbol() const;
  static DiffOp from_symbol(const Polynomial& s, std::size_t n_vars);

 private:
  void add_term(const Orders& orders, const Polynomial& w);

  std::size_t n_vars_;
  TermMap terms_;
};

DiffOp compose(const DiffOp& a, const DiffOp& b);

std::ostream& operator<<(std::ostream& os, const DiffOp& d);

/// Names of the derivative symbols: "d" in one variable, "d" + variable name otherwise.
std::vector<std::string> derivative_names(std::size_t n_vars);

/// Function variable names used by the operator grammar: z (alias x) in one
/// variable, the polynomial defaults otherwise.
std::vector<std::vector<std::string>> diffop_variable_names(std::size_t n_vars);

/// Parse a normal-ordered operator such as "z*d^2 + z^-1*d - 3". Each d^j
/// stands to the right of its coefficient; negative powers of z are allowed.
DiffOp parse_diffop(std::string_view text, std::size_t n_vars = 1);

/// Parse a ';'-separated list of operators.
std::vector<DiffOp> parse_diffop_list(std::string_view text, std::size_t n_vars = 1);

}  // namespace hnl
