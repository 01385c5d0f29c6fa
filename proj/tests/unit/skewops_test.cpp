#include <gtest/gtest.h>

#include <algorithm>

#include "hnl/parse.hpp"
#include "hnl/skew_op.hpp"
#include "hnl/verify.hpp"
#include "hnl/wronskian.hpp"
#include "test_support.hpp"

using namespace hnl;
using hnl::testing::Rng;
using hnl::testing::X;

namespace {

Polynomial P(const char* s) { return parse_poly(s, 1); }

// 2x2 determinant written out by hand.
Polynomial det2(const Polynomial& a, const Polynomial& b, const Polynomial& c, const Polynomial& d) {
  return a * d - b * c;
}

std::vector<Polynomial> random_args(Rng& rng, std::size_t k, int deg) {
  std::vector<Polynomial> v;
  for (std::size_t i = 0; i < k; ++i) v.push_back(rng.polynomial(1, deg, 3));
  return v;
}

}  // namespace

TEST(InnerProduct, FixesLeadingArguments) {
  const SkewOp w = generalized_wronskian_op({0, 1});
  const auto w_x = inner_product(w, {X()});
  EXPECT_EQ(w_x.arity(), 1u);
  const Polynomial x = X(), x2 = X(2);
  EXPECT_EQ(w_x({x2}), det2(x, x2, x.derive(0), x2.derive(0)));
  EXPECT_EQ(w_x({x2}), x2);

  const auto w0 = inner_product(w, {Polynomial(1)});
  Rng rng(5);
  for (int i = 0; i < 20; ++i) EXPECT_TRUE(w0(random_args(rng, 1, 4)).is_zero());

  const auto c = inner_product(w, {P("1"), X()});
  EXPECT_EQ(c.arity(), 0u);
  EXPECT_EQ(c(std::vector<Polynomial>{}), P("1"));
  EXPECT_THROW(inner_product(w, {P("1"), X(), X(2)}), DomainError);
}

TEST(Wedge, Examples) {
  const SkewOp d0 = derivation_power_op(0), d1 = derivation_power_op(1), d2 = derivation_power_op(2);
  const auto w01 = wedge(d0, d1);
  EXPECT_EQ(w01({X(), X(2)}), X() * P("2x") - X(2) * P("1"));
  EXPECT_EQ(w01({X(), X(2)}), X(2));
  Rng rng(6);
  for (int i = 0; i < 20; ++i) {
    const Polynomial a = rng.polynomial(1, 5);
    EXPECT_TRUE(w01({a, a}).is_zero());
  }
  EXPECT_EQ(wedge(d0, wedge(d1, d2))({P("1"), X(), X(2)}), P("2"));
}

TEST(Wedge, GradedCommutativity) {
  Rng rng(7);
  const SkewOp a = generalized_wronskian_op({0, 2});
  const SkewOp b = derivation_power_op(1);
  const SkewOp c = generalized_wronskian_op({0, 1, 3});
  for (const auto& [l, r] : std::vector<std::pair<SkewOp, SkewOp>>{{a, b}, {a, c}, {b, c}, {a, a}}) {
    const auto ab = wedge(l, r);
    const auto ba = wedge(r, l);
    const int sign = (l.arity() * r.arity()) % 2 ? -1 : 1;
    EXPECT_TRUE(op_equal_on(ab, scaled(ba, Rational(sign)), monomial_test_space(1, 4)).equal);
  }
}

TEST(Action, Examples) {
  const SkewOp w01 = generalized_wronskian_op({0, 1});
  EXPECT_TRUE(op_zero_on(action(w01, w01), monomial_test_space(1, 4)).equal);

  const SkewOp id = identity_op(Polynomial(1));
  const SkewOp w012 = classical_wronskian_op(3);
  EXPECT_TRUE(op_equal_on(action(w012, id), scaled(w012, Rational(3)), monomial_test_space(1, 4)).equal);

  const std::vector<Polynomial> args{P("1"), X(), X(2), X(3)};
  // Hand-rolled sum over the six unshuffles of S^2_4.
  Polynomial oracle(1);
  for_each_unshuffle(2, 4, [&](const Unshuffle& u) {
    std::vector<Polynomial> outer{w01({args[u.head[0]], args[u.head[1]]}), args[u.tail[0]], args[u.tail[1]]};
    oracle += w012(outer) * Rational(u.sign);
  });
  EXPECT_TRUE(oracle.is_zero());
  EXPECT_TRUE(action(w012, w01)(args).is_zero());
}

TEST(Action, SlotBound) {
  const SkewOp a = generalized_wronskian_op({0, 2});
  const SkewOp b = generalized_wronskian_op({1, 3});
  EXPECT_EQ(action(a, b).slot_order_bound(), a.slot_order_bound() + b.slot_order_bound());
  EXPECT_EQ(action(a, b).slot_order_bound(), 5);
}

TEST(RnBracket, WronskianBracketsVanish) {
  const SkewOp w01 = generalized_wronskian_op({0, 1});
  EXPECT_TRUE(op_zero_on(rn_bracket(w01, w01), monomial_test_space(1, 4)).equal);
  const SkewOp w012 = classical_wronskian_op(3);
  EXPECT_TRUE(rn_bracket(w012, w01)({P("1"), X(), X(2), X(3)}).is_zero());
}

TEST(RnBracket, SelfBracketParity) {
  // Odd arity: (k-1)^2 even, so [[D,D]] = D[D] - D[D] = 0 identically.
  const SkewOp w013 = generalized_wronskian_op({0, 1, 3});
  EXPECT_TRUE(op_zero_on(rn_bracket(w013, w013), monomial_test_space(1, 5)).equal);
  // Even arity: [[D,D]] = 2 D[D].
  const SkewOp w02 = generalized_wronskian_op({0, 2});
  const auto t = monomial_test_space(1, 4);
  EXPECT_TRUE(op_equal_on(rn_bracket(w02, w02), scaled(action(w02, w02), Rational(2)), t).equal);
  EXPECT_FALSE(op_zero_on(rn_bracket(w02, w02), t).equal);
}

TEST(RnBracket, GradedAntisymmetry) {
  const std::vector<SkewOp> ops{generalized_wronskian_op({0, 2}), derivation_power_op(2),
                                generalized_wronskian_op({0, 1, 3}), wedge(derivation_power_op(1),
                                                                           derivation_power_op(0))};
  const auto t = monomial_test_space(1, 4);
  for (const auto& a : ops) {
    for (const auto& b : ops) {
      const int s = -rn_sign(a.arity(), b.arity());
      EXPECT_TRUE(op_equal_on(rn_bracket(a, b), scaled(rn_bracket(b, a), Rational(s)), t).equal)
          << a.description() << " " << b.description();
    }
  }
}

TEST(OpNorm, Values) {
  EXPECT_EQ(op_norm(generalized_wronskian_op({0, 1})), 1);
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(op_norm(classical_wronskian_op(n)), static_cast<long>(n * (n - 1) / 2));
  EXPECT_EQ(op_norm(wedge(generalized_wronskian_op({0, 1}), generalized_wronskian_op({0, 2}))), 3);
  EXPECT_THROW(op_norm(identity_op(Polynomial(1))), DomainError);
}

TEST(OpEqualOn, Examples) {
  const SkewOp w01 = generalized_wronskian_op({0, 1});
  const auto t = monomial_test_space(1, 3);
  EXPECT_TRUE(op_equal_on(w01, w01, t).equal);
  EXPECT_TRUE(op_equal_on(w01, wedge(derivation_power_op(0), derivation_power_op(1)), t).equal);

  const SkewOp w02 = generalized_wronskian_op({0, 2});
  const auto r = op_equal_on(w01, w02, t);
  ASSERT_FALSE(r.equal);
  ASSERT_TRUE(r.witness);
  // Lexicographically first differing pair of the basis (1, x, x^2, x^3).
  EXPECT_EQ(r.witness->indices, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.witness->lhs, P("1"));
  EXPECT_TRUE(r.witness->rhs.is_zero());
  EXPECT_EQ(w02({X(), X(2)}), P("2x"));
  EXPECT_EQ(w01({X(), X(2)}), X(2));

  EXPECT_THROW(op_equal_on(w01, classical_wronskian_op(3), t), DomainError);
  const auto vac = op_equal_on(classical_wronskian_op(5), classical_wronskian_op(5), monomial_test_space(1, 2));
  EXPECT_TRUE(vac.vacuous);
}

TEST(OpEqualOn, WitnessIndependentOfThreads) {
  const SkewOp a = action(generalized_wronskian_op({0, 2}), generalized_wronskian_op({0, 2}));
  const auto t = monomial_test_space(1, 5);
  const auto r1 = op_zero_on(a, t, SearchOptions{.threads = 1});
  const auto r4 = op_zero_on(a, t, SearchOptions{.threads = 4});
  ASSERT_FALSE(r1.equal);
  EXPECT_EQ(r1.witness->indices, r4.witness->indices);
  EXPECT_EQ(r1.tuples_checked, r4.tuples_checked);
}

TEST(OpEqualOn, BudgetRefusal) {
  const SkewOp a = classical_wronskian_op(5);
  EXPECT_THROW(op_zero_on(a, monomial_test_space(1, 30), SearchOptions{.budget = 10}), BudgetExceeded);
}

TEST(SkewOpProperties, AlternatingUnderTransposition) {
  Rng rng(8);
  const std::vector<SkewOp> ops{classical_wronskian_op(2),
                                classical_wronskian_op(3),
                                generalized_wronskian_op({0, 2, 3}),
                                wedge(derivation_power_op(1), generalized_wronskian_op({0, 2})),
                                action(classical_wronskian_op(2), generalized_wronskian_op({1, 2})),
                                rn_bracket(generalized_wronskian_op({0, 2}), classical_wronskian_op(2))};
  for (int trial = 0; trial < 100; ++trial) {
    const SkewOp& op = ops[static_cast<std::size_t>(trial) % ops.size()];
    auto args = random_args(rng, op.arity(), 5);
    const std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(op.arity()) - 1));
    std::size_t j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(op.arity()) - 2));
    if (j >= i) ++j;
    const Polynomial before = op(args);
    std::swap(args[i], args[j]);
    EXPECT_EQ(op(args), -before) << op.description();
    args[i] = args[j];
    EXPECT_TRUE(op(args).is_zero());
  }
}

TEST(SkewOpProperties, Multilinearity) {
  Rng rng(9);
  const SkewOp op = generalized_wronskian_op({0, 1, 3});
  for (int trial = 0; trial < 30; ++trial) {
    auto args = random_args(rng, 3, 5);
    const Polynomial extra = rng.polynomial(1, 5);
    const Rational c = rng.rational();
    auto mixed = args;
    mixed[1] = args[1] * c + extra;
    auto other = args;
    other[1] = extra;
    EXPECT_EQ(op(mixed), op(args) * c + op(other));
  }
}

// Inner product by a commutes with the RN bracket as
// [[D,D]]_a = (-1)^(N-1) [[D, D_a]] + [[D_a, D]].
TEST(SkewOpProperties, HeredityInteraction) {
  for (std::size_t n : {2u, 3u, 4u}) {
    const SkewOp d = classical_wronskian_op(n);
    const auto t = monomial_test_space(1, static_cast<int>(2 * n));
    for (const Polynomial& a : {X(), P("1 + x^2"), X(3)}) {
      const SkewOp da = inner_product(d, {a});
      const SkewOp lhs = inner_product(rn_bracket(d, d), {a});
      const int s = (n - 1) % 2 ? -1 : 1;
      const SkewOp rhs = linear_combination<Polynomial>({{Rational(s), rn_bracket(d, da)}, {Rational(1), rn_bracket(da, d)}});
      const auto r = op_equal_on(lhs, rhs, t);
      EXPECT_TRUE(r.equal) << n;
      EXPECT_FALSE(r.vacuous);
    }
  }
}

TEST(SkewOpProperties, SlotOrderBoundNeverExceeded) {
  // W^{0,2,3} differentiates each slot at most three times; on monomials the
  // output is homogeneous of degree (sum of input degrees) - |W|.
  const SkewOp op = generalized_wronskian_op({0, 2, 3});
  EXPECT_EQ(op.slot_order_bound(), 3);
  const std::vector<Polynomial> base{X(4), X(5)};
  for (int d = 0; d <= 8; ++d) {
    const Polynomial v = op({X(d), base[0], base[1]});
    if (!v.is_zero()) {
      EXPECT_EQ(v.degree(), d + 9 - op_norm(op));
      EXPECT_EQ(v.min_degree(), v.degree());
    }
    // Order <= 3 per slot: x^d with d <= 2 is killed by d^3 and d^2 rows only.
    if (d < 2) EXPECT_EQ(v, X(d) * (base[0].apply(MultiIndex::single(2)) * base[1].apply(MultiIndex::single(3)) -
                                    base[1].apply(MultiIndex::single(2)) * base[0].apply(MultiIndex::single(3))));
  }
}
