#include "hnl/parse.hpp"

#include <cctype>
#include <limits>

#include "hnl/error.hpp"

namespace hnl {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t n, const ParseOptions& options)
      : text_(text), n_(n), laurent_(options.laurent) {
    if (options.variable_names.empty()) {
      for (std::size_t i = 0; i < n; ++i) {
        names_.push_back({"x" + std::to_string(i + 1)});
        if (n <= 3) names_.back().push_back(default_variable_names(n)[i]);
      }
    } else {
      if (options.variable_names.size() != n) throw DomainError("one name list per variable required");
      names_ = options.variable_names;
    }
  }

  Polynomial parse() {
    skip_space();
    if (at_end()) throw ParseError("empty expression", pos_);
    Polynomial p = expr();
    skip_space();
    if (!at_end()) throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool starts_primary() const {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
           c == '(' || c == '_';
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      skip_space();
      const char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      Polynomial rhs = term();
      acc = c == '+' ? acc + rhs : acc - rhs;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      skip_space();
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * unary();
      } else if (c == '/') {
        const std::size_t at = ++pos_;
        Polynomial rhs = unary();
        if (!rhs.is_constant()) throw ParseError("division by a non-constant expression", at);
        const Rational d = rhs.constant_term();
        if (d == 0) throw ParseError("division by zero", at);
        acc = acc * Rational(1 / d);
      } else if (starts_primary()) {
        // Implicit multiplication: "2x", "3(x+1)", "x y".
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    skip_space();
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    if (peek() == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    skip_space();
    if (peek() != '^') return base;
    const std::size_t at = ++pos_;
    skip_space();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected integer exponent", pos_);
    long e = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      e = e * 10 + (text_[pos_++] - '0');
      if (e > 100000) throw ParseError("exponent too large", at);
    }
    if (!negative) return base.pow(static_cast<unsigned>(e));
    if (!laurent_) throw ParseError("negative exponent outside Laurent context", at);
    if (base.term_count() != 1) throw ParseError("negative exponent needs a single monomial base", at);
    const auto& [exps, c] = *base.terms().begin();
    Polynomial::Exponents inv(exps);
    for (int& x : inv) x = -x;
    return Polynomial::monomial(n_, std::move(inv), Rational(1 / c)).pow(static_cast<unsigned>(e));
  }

  Polynomial primary() {
    skip_space();
    const char c = peek();
    if (c == '(') {
      const std::size_t open = pos_++;
      Polynomial inner = expr();
      skip_space();
      if (peek() != ')') throw ParseError("unbalanced parenthesis", open);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      return Polynomial::constant(n_, Rational(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      // Identifiers: a letter run followed by an optional digit run ("x", "x12").
      while (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      for (std::size_t v = 0; v < names_.size(); ++v) {
        for (const auto& alias : names_[v]) {
          if (alias == name) return Polynomial::variable(n_, v);
        }
      }
      throw ParseError("unknown variable '" + name + "'", start);
    }
    if (at_end()) throw ParseError("unexpected end of expression", pos_);
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  std::string_view text_;
  std::size_t n_;
  bool laurent_;
  std::vector<std::vector<std::string>> names_;
  std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

Polynomial parse_poly(std::string_view text, std::size_t n_vars, const ParseOptions& options) {
  return Parser(text, n_vars, options).parse();
}

std::vector<std::string> split_top_level(std::string_view text, char separator) {
  std::vector<std::string> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == separator && depth == 0) {
      parts.push_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  parts.push_back(trim(text.substr(start)));
  if (parts.size() == 1 && parts.front().empty()) parts.clear();
  return parts;
}

std::vector<Polynomial> parse_poly_list(std::string_view text, std::size_t n_vars, char separator,
                                        const ParseOptions& options) {
  std::vector<Polynomial> out;
  for (const auto& part : split_top_level(text, separator)) out.push_back(parse_poly(part, n_vars, options));
  return out;
}

}  // namespace hnl
