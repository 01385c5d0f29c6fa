#include <gtest/gtest.h>

#include "hnl/error.hpp"
#include "hnl/parse.hpp"
#include "hnl/polynomial.hpp"
#include "test_support.hpp"

using namespace hnl;
using hnl::testing::Rng;

TEST(Parse, ZeroPolynomial) {
  const auto p = parse_poly("0", 1);
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.to_string(), "0");
}

TEST(Parse, DirectReading) {
  const auto p = parse_poly("x^2*y - 1/2", 2);
  EXPECT_EQ(p.term_count(), 2u);
  EXPECT_EQ(p.coefficient({2, 1}), 1);
  EXPECT_EQ(p.coefficient({0, 0}), make_rational(-1, 2));
  EXPECT_EQ(p.to_string(), "x^2*y - 1/2");
}

TEST(Parse, SquareAgreesWithRepeatedMultiplication) {
  const Polynomial x = Polynomial::variable(1, 0);
  const Polynomial one = Polynomial::constant(1, 1);
  const Polynomial oracle = (x + one) * (x + one);
  EXPECT_EQ(parse_poly("(x+1)^2", 1), oracle);
  EXPECT_EQ(oracle.to_string(), "x^2 + 2*x + 1");
}

TEST(Parse, ImplicitMultiplicationAndAliases) {
  EXPECT_EQ(parse_poly("-2x", 1), Polynomial::monomial(1, {1}, -2));
  EXPECT_EQ(parse_poly("3(x1 + 1)", 1), parse_poly("3*x + 3", 1));
  EXPECT_EQ(parse_poly("x y z", 3), Polynomial::monomial(3, {1, 1, 1}));
  EXPECT_EQ(parse_poly("x4^2", 4), Polynomial::monomial(4, {0, 0, 0, 2}));
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_poly("x +", 1), ParseError);
  EXPECT_THROW(parse_poly("(x", 1), ParseError);
  EXPECT_THROW(parse_poly("y", 1), ParseError);
  EXPECT_THROW(parse_poly("x/(x+1)", 1), ParseError);
  EXPECT_THROW(parse_poly("x^-1", 1), ParseError);
  try {
    parse_poly("x * $", 1);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(Parse, LaurentExponents) {
  ParseOptions opt;
  opt.laurent = true;
  const auto p = parse_poly("z^-2 + 3", 1, ParseOptions{.laurent = true, .variable_names = {{"z"}}});
  EXPECT_EQ(p.coefficient({-2}), 1);
  EXPECT_TRUE(p.has_negative_exponents());
  EXPECT_EQ(p.derive(0), Polynomial::monomial(1, {-3}, -2));
  EXPECT_THROW(parse_poly("(x+1)^-1", 1, opt), ParseError);
}

TEST(Parse, PrintParseRoundTripOnRandomPolynomials) {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
    const Polynomial p = rng.polynomial(n, 5, 5);
    EXPECT_EQ(parse_poly(p.to_string(), n), p) << p;
    ParseOptions laurent{.laurent = true};
    const Polynomial q = rng.polynomial(n, 3, 4, true);
    EXPECT_EQ(parse_poly(q.to_string(), n, laurent), q) << q;
  }
}

TEST(Derive, PowerRule) {
  EXPECT_EQ(derive(parse_poly("x^3", 1), 0), parse_poly("3x^2", 1));
  EXPECT_TRUE(derive(parse_poly("7/3", 1), 0).is_zero());
  EXPECT_EQ(derive(parse_poly("x^2*y - 1/2", 2), 1), parse_poly("x^2", 2));
  EXPECT_THROW(derive(parse_poly("x", 1), 1), DomainError);
}

TEST(ApplyMultiindex, Examples) {
  const auto p = parse_poly("x^2*y + 3x - y^3", 2);
  EXPECT_EQ(apply_multiindex(p, MultiIndex{0, 0}), p);
  EXPECT_EQ(apply_multiindex(parse_poly("x*y", 2), MultiIndex{1, 1}), parse_poly("1", 2));
  EXPECT_EQ(apply_multiindex(parse_poly("x^2*y", 2), MultiIndex{2, 0}), parse_poly("2y", 2));
  EXPECT_THROW(apply_multiindex(p, MultiIndex{1}), DomainError);
}

TEST(PolynomialProperties, RingAxioms) {
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
    const auto p = rng.polynomial(n, 4);
    const auto q = rng.polynomial(n, 4);
    const auto r = rng.polynomial(n, 4);
    EXPECT_EQ((p + q) * r, p * r + q * r);
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_TRUE((p - p).is_zero());
  }
}

TEST(PolynomialProperties, LeibnizRule) {
  Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
    const auto p = rng.polynomial(n, 5);
    const auto q = rng.polynomial(n, 5);
    const std::size_t v = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    EXPECT_EQ(derive(p * q, v), derive(p, v) * q + p * derive(q, v));
  }
}

TEST(PolynomialProperties, MultiindexComposition) {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
    const auto p = rng.polynomial(n, 7, 6);
    std::vector<int> s(n), t(n);
    for (std::size_t v = 0; v < n; ++v) {
      s[v] = static_cast<int>(rng.uniform(0, 3));
      t[v] = static_cast<int>(rng.uniform(0, 3));
    }
    const MultiIndex sigma(s), tau(t);
    EXPECT_EQ(apply_multiindex(p, sigma + tau), apply_multiindex(apply_multiindex(p, sigma), tau));
  }
}

TEST(Polynomial, SubstituteAndTruncate) {
  const auto p = parse_poly("y^2 + 1", 1, ParseOptions{.variable_names = {{"y"}}});
  const auto y = parse_poly("x + x^2", 1);
  const std::vector<Polynomial> vals{y};
  EXPECT_EQ(p.substitute(vals), parse_poly("x^4 + 2x^3 + x^2 + 1", 1));
  EXPECT_EQ(p.substitute(vals).truncate(2), parse_poly("x^2 + 1", 1));
}

TEST(MultiIndexOrder, JetBasisOrder) {
  const auto basis = multi_indices_up_to(2, 2);
  ASSERT_EQ(basis.size(), 6u);
  EXPECT_EQ(basis[0], (MultiIndex{0, 0}));
  EXPECT_EQ(basis[1], (MultiIndex{1, 0}));
  EXPECT_EQ(basis[2], (MultiIndex{0, 1}));
  EXPECT_EQ(basis[3], (MultiIndex{2, 0}));
  EXPECT_EQ(basis[4], (MultiIndex{1, 1}));
  EXPECT_EQ(basis[5], (MultiIndex{0, 2}));
  EXPECT_THROW(MultiIndex({1, -1}), DomainError);
}
