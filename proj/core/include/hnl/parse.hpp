#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hnl/polynomial.hpp"

namespace hnl {

/// Options for the polynomial expression parser. The grammar is documented in
/// docs/grammar.md.
struct ParseOptions {
  /// Accept negative exponents on single monomials (Laurent polynomials).
  bool laurent = false;
  /// Accepted spellings per variable. Empty means: x1..xn, plus x, y, z for n <= 3.
  std::vector<std::vector<std::string>> variable_names;
};

/// Parse an expression in the variables of an n-variable polynomial ring.
Polynomial parse_poly(std::string_view text, std::size_t n_vars, const ParseOptions& options = {});

/// Split a list of expressions on a separator that is not nested in parentheses
/// or brackets. Surrounding whitespace is trimmed; an all-blank input yields an
/// empty list.
std::vector<std::string> split_top_level(std::string_view text, char separator);

/// Parse a separator-delimited list of polynomials.
std::vector<Polynomial> parse_poly_list(std::string_view text, std::size_t n_vars, char separator = ',',
                                        const ParseOptions& options = {});

}  // namespace hnl
