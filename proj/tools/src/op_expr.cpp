#include "hnl/tools/op_expr.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "hnl/error.hpp"
#include "hnl/jet.hpp"
#include "hnl/parse.hpp"
#include "hnl/wronskian.hpp"

namespace hnl::cli {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  SkewOp parse() {
    SkewOp op = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return op;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError("operator expression: " + what, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string ident() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  bool at_digit() {
    skip();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  long integer() {
    if (!at_digit()) fail("expected an integer");
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1'000'000) fail("integer too large");
      ++pos_;
    }
    return v;
  }

  Rational number() {
    const long num = integer();
    if (accept('/')) {
      const long den = integer();
      if (den == 0) fail("zero denominator");
      return make_rational(num, den);
    }
    return Rational(num);
  }

  static void same_vars(const SkewOp& a, const SkewOp& b) {
    if (a.zero().n_vars() != b.zero().n_vars()) {
      throw DomainError("operators " + a.description() + " and " + b.description() +
                        " act on different numbers of variables");
    }
  }

  SkewOp expr() {
    std::vector<std::pair<Rational, SkewOp>> terms;
    Rational sign(1);
    if (accept('-')) sign = -1;
    terms.emplace_back(sign, term());
    for (;;) {
      if (accept('+')) {
        sign = 1;
      } else if (accept('-')) {
        sign = -1;
      } else {
        break;
      }
      terms.emplace_back(sign, term());
      same_vars(terms.front().second, terms.back().second);
    }
    if (terms.size() == 1 && terms[0].first == 1) return terms[0].second;
    return linear_combination<Polynomial>(std::move(terms));
  }

  SkewOp term() {
    if (at_digit()) {
      const Rational c = number();
      expect('*');
      return scaled(wedge_chain(), c);
    }
    return wedge_chain();
  }

  SkewOp wedge_chain() {
    SkewOp acc = atom();
    while (accept('^')) {
      SkewOp next = atom();
      same_vars(acc, next);
      acc = wedge(acc, next);
    }
    return acc;
  }

  std::pair<SkewOp, SkewOp> two_args() {
    expect('(');
    SkewOp a = expr();
    expect(',');
    SkewOp b = expr();
    expect(')');
    same_vars(a, b);
    return {std::move(a), std::move(b)};
  }

  // Raw text up to the parenthesis that closes the current group.
  std::string_view until_close() {
    const std::size_t start = pos_;
    int depth = 0;
    while (pos_ < s_.size()) {
      const char c = s_[pos_];
      if (c == '(') ++depth;
      if (c == ')') {
        if (depth == 0) return s_.substr(start, pos_ - start);
        --depth;
      }
      ++pos_;
    }
    fail("unbalanced parentheses");
  }

  SkewOp atom() {
    if (accept('(')) {
      SkewOp op = expr();
      expect(')');
      return op;
    }
    const std::size_t start = pos_;
    const std::string name = ident();
    if (name.empty()) fail("expected an operator");
    if (name == "W") {
      expect('[');
      std::vector<int> idx{static_cast<int>(integer())};
      while (accept(',')) idx.push_back(static_cast<int>(integer()));
      expect(']');
      return generalized_wronskian_op(idx);
    }
    if (name == "D") {
      expect('[');
      const int j = static_cast<int>(integer());
      expect(']');
      return derivation_power_op(j);
    }
    if (name == "id") {
      std::size_t n = 1;
      if (accept('(')) {
        n = static_cast<std::size_t>(integer());
        expect(')');
      }
      if (n == 0) fail("id needs at least one variable");
      return identity_op(Polynomial(n));
    }
    if (name == "box") {
      expect('(');
      const long n = integer();
      expect(',');
      const long k = integer();
      expect(')');
      if (n == 0) fail("box needs at least one variable");
      return box_op(static_cast<std::size_t>(n), static_cast<int>(k));
    }
    if (name == "nambu") {
      long n = 0;
      if (accept('(')) {
        n = integer();
        expect(')');
      } else {
        n = integer();
      }
      if (n == 0) fail("nambu needs at least one variable");
      return nambu_op(static_cast<std::size_t>(n));
    }
    if (name == "wedge") {
      auto [a, b] = two_args();
      return wedge(a, b);
    }
    if (name == "act") {
      auto [a, b] = two_args();
      return action(a, b);
    }
    if (name == "rn") {
      auto [a, b] = two_args();
      return rn_bracket(a, b);
    }
    if (name == "inner") {
      expect('(');
      SkewOp op = expr();
      expect(';');
      const std::string_view raw = until_close();
      expect(')');
      auto polys = parse_poly_list(raw, op.zero().n_vars());
      if (polys.size() > op.arity()) throw DomainError("inner product with more arguments than the arity");
      return inner_product(op, std::move(polys));
    }
    pos_ = start;
    fail("unknown operator '" + name + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

SkewOp parse_op_expr(std::string_view text) { return Parser(text).parse(); }

}  // namespace hnl::cli
