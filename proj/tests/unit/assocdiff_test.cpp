#include <gtest/gtest.h>

#include <map>

#include "hnl/assoc.hpp"
#include "hnl/combinatorics.hpp"
#include "hnl/homotopy.hpp"
#include "hnl/parse.hpp"
#include "hnl/wronskian.hpp"
#include "test_support.hpp"

using namespace hnl;
using hnl::testing::Rng;

namespace {

DiffOp O(const char* s) { return parse_diffop(s); }
Polynomial Z(const char* s) { return parse_poly(s, 1, ParseOptions{.laurent = true, .variable_names = {{"z", "x"}}}); }

// Direct sum over S_N, composing left to right.
DiffOp naive_alt(const std::vector<DiffOp>& a) {
  DiffOp acc(a[0].n_vars());
  for_each_permutation(a.size(), [&](std::span<const std::size_t> p, int sign) {
    DiffOp t = a[p[0]];
    for (std::size_t i = 1; i < p.size(); ++i) t = t.compose(a[p[i]]);
    acc += t * Rational(sign);
  });
  return acc;
}

DiffOp random_op(Rng& rng, int max_order, int max_degree, int terms = 3) {
  DiffOp d(1);
  for (int t = 0; t < terms; ++t) {
    d += DiffOp::term(rng.polynomial(1, max_degree, 2), static_cast<int>(rng.uniform(0, max_order)));
  }
  return d;
}

}  // namespace

TEST(DiffOp, ParseAndPrint) {
  const DiffOp a = O("z*d^2 + z^-1*d - 3");
  EXPECT_EQ(a.coefficient(2), Z("z"));
  EXPECT_EQ(a.coefficient(1), Z("z^-1"));
  EXPECT_EQ(a.coefficient(0), Z("-3"));
  EXPECT_EQ(a.order(), 2);
  EXPECT_EQ(parse_diffop(a.to_string()), a);
  EXPECT_EQ(O("d").to_string(), "d");
  EXPECT_THROW(O("d^-1"), DomainError);
  const auto list = parse_diffop_list("z*d^1; d^1; z^2*d^1");
  ASSERT_EQ(list.size(), 3u);
  EXPECT_EQ(list[2], DiffOp::term(Z("z^2"), 1));
}

TEST(DiffOp, ComposeExamples) {
  EXPECT_EQ(compose(O("d"), O("z")), O("z*d + 1"));
  const DiffOp a = O("z^2*d^3 - 5z + d");
  EXPECT_EQ(compose(DiffOp::identity(), a), a);
  EXPECT_EQ(compose(a, DiffOp::identity()), a);
  EXPECT_EQ(compose(O("z*d"), O("d")), O("z*d^2"));
  EXPECT_EQ(compose(O("d^2"), O("z^2")), O("z^2*d^2 + 4z*d + 2"));
}

TEST(DiffOp, ComposeMatchesActionOnFunctions) {
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const DiffOp a = random_op(rng, 3, 3);
    const DiffOp b = random_op(rng, 3, 3);
    const Polynomial f = rng.polynomial(1, 7, 4);
    EXPECT_EQ(a.compose(b).apply(f), a.apply(b.apply(f)));
  }
}

TEST(DiffOp, OrderAdditiveForNonzeroLeaders) {
  Rng rng(32);
  for (int trial = 0; trial < 50; ++trial) {
    const DiffOp a = random_op(rng, 3, 2);
    const DiffOp b = random_op(rng, 3, 2);
    if (a.is_zero() || b.is_zero()) continue;
    EXPECT_EQ(a.compose(b).order(), a.order() + b.order());
  }
}

TEST(DiffOp, Associativity) {
  Rng rng(33);
  for (int trial = 0; trial < 200; ++trial) {
    const DiffOp a = random_op(rng, 2, 2), b = random_op(rng, 2, 2), c = random_op(rng, 2, 2);
    EXPECT_EQ(a.compose(b).compose(c), a.compose(b.compose(c)));
  }
}

TEST(DiffOp, LaurentCoefficients) {
  const DiffOp a = O("z^-1*d");
  EXPECT_EQ(compose(O("d"), a), O("z^-1*d^2 - z^-2*d"));
}

TEST(DiffOp, SeveralVariables) {
  const DiffOp dx = DiffOp::derivation(0, 2), dy = DiffOp::derivation(1, 2);
  const DiffOp xy = DiffOp::multiplication(parse_poly("x*y", 2));
  EXPECT_EQ(compose(dx, xy), parse_diffop("x*y*dx + y", 2));
  EXPECT_EQ(compose(dx, dy), compose(dy, dx));
  EXPECT_EQ(parse_diffop("y^2*dx*dy - x", 2).to_string(), "y^2*dx*dy - x");
}

TEST(AltBracket, CommutatorOfVectorFields) {
  Rng rng(34);
  for (int trial = 0; trial < 30; ++trial) {
    const Polynomial w1 = rng.polynomial(1, 4), w2 = rng.polynomial(1, 4);
    const std::vector<DiffOp> args{DiffOp::term(w1, 1), DiffOp::term(w2, 1)};
    EXPECT_EQ(alt_bracket(args), DiffOp::term(w1 * w2.derive(0) - w2 * w1.derive(0), 1));
  }
}

TEST(AltBracket, MatchesNaivePermutationSum) {
  Rng rng(35);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<DiffOp> args;
      for (std::size_t i = 0; i < n; ++i) args.push_back(random_op(rng, 2, 2, 2));
      EXPECT_EQ(alt_bracket(args), naive_alt(args)) << n;
    }
  }
}

TEST(AltBracket, RepeatedArgumentVanishes) {
  Rng rng(36);
  for (std::size_t n = 2; n <= 4; ++n) {
    std::vector<DiffOp> args;
    for (std::size_t i = 0; i < n; ++i) args.push_back(random_op(rng, 2, 2));
    args[n - 1] = args[0];
    EXPECT_TRUE(alt_bracket(args).is_zero());
  }
}

// The bracket is proportional to W d^2 with factor 2, not equal to it. A
// direct sum of w_s1 d^2(w_s2 d^2(...f)) over S_4 confirms the factor.
TEST(AltBracket, FourSecondOrderOperatorsGiveTwiceWronskian) {
  Rng rng(37);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Polynomial> w;
    std::vector<DiffOp> args;
    for (int i = 0; i < 4; ++i) {
      w.push_back(rng.polynomial(1, 3, 4));
      args.push_back(DiffOp::term(w.back(), 2));
    }
    EXPECT_EQ(alt_bracket(args), DiffOp::term(wronskian(w), 2) * Rational(2));
  }
}

TEST(OnlyWronskian, CommutatorCase) {
  Rng rng(38);
  const std::vector<Polynomial> w{rng.polynomial(1, 3, 4), rng.polynomial(1, 3, 4)};
  const auto r = check_only_wronskian(2, 1, w);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(*r.ratio, 1);
  EXPECT_EQ(r.exponent, 1);
}

TEST(OnlyWronskian, HigherOrderResidualIsReported) {
  // N = 2, p = 2: [w1 d^2, w2 d^2] = 2(w1 w2' - w2 w1') d^3 + (w1 w2'' - w2 w1'') d^2.
  const std::vector<Polynomial> w{Z("z"), Z("z^3")};
  const auto r = check_only_wronskian(2, 2, w);
  EXPECT_EQ(r.exponent, 3);
  EXPECT_EQ(r.bracket, O("4z^3*d^3 + 6z^2*d^2"));
  EXPECT_EQ(r.expected, O("2z^3*d^3"));
  EXPECT_FALSE(r.holds);
  EXPECT_FALSE(r.ratio);
  EXPECT_EQ(r.residual, O("2z^3*d^3 + 6z^2*d^2"));
}

TEST(OnlyWronskian, VandermondeWeights) {
  const std::vector<Polynomial> w{Z("1"), Z("z"), Z("z^2"), Z("z^3")};
  const auto r = check_only_wronskian(4, 2, w);
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.ratio);
  EXPECT_EQ(*r.ratio, 2);
  EXPECT_EQ(r.bracket, O("24*d^2"));
  EXPECT_EQ(r.exponent, 2);
  const std::vector<Rational> nu{0, 1, 2, 3};
  EXPECT_EQ(r.wronskian, Polynomial::constant(1, wronskian_monomials(nu).coefficient));
  EXPECT_EQ(r.wronskian, Z("12"));
}

TEST(OnlyWronskian, Errors) {
  const std::vector<Polynomial> w3{Z("1"), Z("z"), Z("z^2")};
  EXPECT_THROW(check_only_wronskian(3, 2, w3), DomainError);
  const std::vector<Polynomial> w2{Z("1"), Z("z")};
  EXPECT_THROW(check_only_wronskian(2, 0, w2), DomainError);
}

TEST(DeltaIdentity, ClassicalJacobi) {
  const std::vector<DiffOp> s{O("d"), O("z*d"), O("z^2*d")};
  const auto r = delta_identity_check(2, 2, s);
  EXPECT_EQ(r.identity.name, "both-even");
  EXPECT_TRUE(r.holds);
}

TEST(DeltaIdentity, ParityRelationsOnRandomSamples) {
  Rng rng(39);
  const std::vector<std::pair<std::size_t, std::size_t>> cases{{3, 2}, {2, 3}, {4, 2}, {3, 3}, {2, 2}};
  for (auto [k, l] : cases) {
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<DiffOp> s;
      for (std::size_t i = 0; i < k + l - 1; ++i) s.push_back(random_op(rng, 1, 2));
      const auto r = delta_identity_check(k, l, s);
      EXPECT_TRUE(r.holds) << k << "," << l << ": " << r.residual;
    }
  }
  EXPECT_EQ(delta_identity_for(3, 2).coefficient, 1);
  EXPECT_EQ(delta_identity_for(2, 3).coefficient, 2);
  EXPECT_EQ(delta_identity_for(3, 3).coefficient, 3);
  EXPECT_EQ(delta_identity_for(4, 2).coefficient, 0);
}

TEST(DeltaIdentity, InnerEvenByHandExpansion) {
  Rng rng(40);
  std::vector<DiffOp> s;
  for (int i = 0; i < 4; ++i) s.push_back(random_op(rng, 1, 2));
  // D3[D2] summed over the six unshuffles of S^2_4 with the naive bracket.
  DiffOp lhs(1);
  for_each_unshuffle(2, 4, [&](const Unshuffle& u) {
    const DiffOp inner = naive_alt({s[u.head[0]], s[u.head[1]]});
    lhs += naive_alt({inner, s[u.tail[0]], s[u.tail[1]]}) * Rational(u.sign);
  });
  EXPECT_EQ(lhs, naive_alt(s));
}

TEST(EvenHomotopy, BasisOperatorsSatisfyJacobi) {
  const auto basis2 = custom_test_space(diffop_basis(2, 1), "z^a d^b, a <= 2, b <= 1");
  const auto r2 = check_homotopy_jacobi(alt_bracket_op(2), basis2);
  EXPECT_TRUE(r2.pass);
  EXPECT_FALSE(r2.vacuous);
  EXPECT_EQ(r2.tuples_checked, 20u);
  const auto basis4 = custom_test_space(diffop_basis(3, 1), "z^a d^b, a <= 3, b <= 1");
  const auto r4 = check_homotopy_jacobi(alt_bracket_op(4), basis4);
  EXPECT_TRUE(r4.pass);
  EXPECT_FALSE(r4.vacuous);
  EXPECT_EQ(r4.tuples_checked, 8u);
}

// With b <= 1 every 5-bracket vanishes and so does D3[D3] = 3 D5; second
// order operators are needed.
TEST(EvenHomotopy, OddArityDoesNotVanish) {
  const auto first = custom_test_space(diffop_basis(2, 1), "z^a d^b, a <= 2, b <= 1");
  EXPECT_TRUE(check_homotopy_jacobi(alt_bracket_op(3), first).pass);
  const auto basis = custom_test_space(diffop_basis(2, 2), "z^a d^b, a <= 2, b <= 2");
  const auto r = check_homotopy_jacobi(alt_bracket_op(3), basis);
  EXPECT_FALSE(r.pass);
}

TEST(HalfOrderClosure, EvenArities) {
  Rng rng(41);
  const std::map<int, long> factor{{2, 1}, {4, 2}, {6, 90}};
  for (int n : {2, 4, 6}) {
    std::vector<Polynomial> w;
    for (int i = 0; i < n; ++i) w.push_back(rng.polynomial(1, 6, 3));
    const auto r = check_half_order_closure(n, w);
    EXPECT_TRUE(r.closed) << n;
    EXPECT_EQ(r.bracket, DiffOp::term(wronskian(w), n / 2) * Rational(factor.at(n))) << n;
  }
}

TEST(Bases, Shapes) {
  EXPECT_EQ(diffop_basis(2, 1).size(), 6u);
  EXPECT_EQ(diffop_basis(1, 1, -1).size(), 6u);
  EXPECT_EQ(vector_field_basis(2, 2).size(), 12u);
  EXPECT_EQ(vector_field_basis(2, 2)[0].order(), 1);
}
