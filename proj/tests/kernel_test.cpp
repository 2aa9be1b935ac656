#include <gtest/gtest.h>

#include <random>

#include "pencil/bpoly.hpp"
#include "pencil/numberfield.hpp"
#include "pencil/ratfunc.hpp"
#include "pencil/upoly_q.hpp"

using namespace pencil;

namespace {

UPolyQ P(std::initializer_list<long> c) { return upoly_q_int(std::vector<long>(c)); }

UPolyQ expand(const FactorizationQ& f) {
  UPolyQ r = UPolyQ::constant(f.unit);
  for (auto& [q, e] : f.factors) r = r * q.pow(e);
  return r;
}

}  // namespace

TEST(Rational, ParseAndRound) {
  EXPECT_EQ(parse_rat(" -6/4 "), Rat(-3, 2));
  EXPECT_EQ(floor_rat(Rat(-3, 2)), -2);
  EXPECT_EQ(ceil_rat(Rat(-3, 2)), -1);
  EXPECT_THROW(parse_rat("1/0"), PreconditionError);
  EXPECT_TRUE(is_prime_u32(2147483647u));
  EXPECT_FALSE(is_prime_u32(561));
}

TEST(UnivariateQ, Gcd) {
  EXPECT_EQ(gcd_q(P({-1, 0, 1}), P({-1, 0, 0, 1})), P({-1, 1}));
  EXPECT_EQ(gcd_q(P({1, 1}), P({1, -1})), P({1}));
  EXPECT_EQ(gcd_q(UPolyQ(Rat(0)), P({2, 4})), upoly_q({Rat(1, 2), Rat(1)}));
}

TEST(UnivariateQ, SquarefreeDecomposition) {
  auto sf = squarefree_q(P({0, 0, 1, 1}));
  ASSERT_EQ(sf.size(), 2u);
  EXPECT_EQ(sf[0].first, P({1, 1}));
  EXPECT_EQ(sf[0].second, 1);
  EXPECT_EQ(sf[1].first, P({0, 1}));
  EXPECT_EQ(sf[1].second, 2);
  auto sf2 = squarefree_q(P({2, -3, 0, 1}));
  ASSERT_EQ(sf2.size(), 2u);
  EXPECT_EQ(sf2[0].first, P({2, 1}));
  EXPECT_EQ(sf2[1].first, P({-1, 1}));
}

TEST(UnivariateQ, Factorization) {
  auto f = factor_univariate_rationals(P({-1, 0, 0, 0, 1}));
  ASSERT_EQ(f.factors.size(), 3u);
  EXPECT_EQ(expand(f), P({-1, 0, 0, 0, 1}));
  auto g = factor_univariate_rationals(P({1, 0, 1}));
  ASSERT_EQ(g.factors.size(), 1u);
  EXPECT_TRUE(looks_irreducible_mod_primes(P({1, 0, 1})));
}

TEST(UnivariateQ, FactorizationRecoversRandomCubics) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-9, 9);
  for (int trial = 0; trial < 20; ++trial) {
    UPolyQ a = P({d(rng), d(rng), d(rng), 1 + (trial % 3)});
    UPolyQ b = P({d(rng), d(rng), d(rng), 2});
    UPolyQ prod = a * b;
    auto f = factor_univariate_rationals(prod);
    EXPECT_EQ(expand(f), prod);
    for (auto& [q, e] : f.factors) EXPECT_TRUE(looks_irreducible_mod_primes(q) || q.deg() <= 2);
    if (looks_irreducible_mod_primes(a) && looks_irreducible_mod_primes(b) && gcd_q(a, b).deg() == 0) {
      EXPECT_EQ(f.factors.size(), 2u);
    }
  }
}

TEST(UnivariateQ, FactorizationSwinnertonDyerLike) {
  // (x^2-2)(x^2-3) products and the irreducible x^4-10x^2+1.
  auto f = factor_univariate_rationals(P({1, 0, -10, 0, 1}));
  EXPECT_EQ(f.factors.size(), 1u);
  auto g = factor_univariate_rationals(P({-2, 0, 1}) * P({-3, 0, 1}) * P({1, 0, -10, 0, 1}));
  EXPECT_EQ(g.factors.size(), 3u);
}

TEST(UnivariateQ, ResultantAndCharpoly) {
  EXPECT_EQ(resultant_q(P({-1, 1}), P({1, 1})), Rat(2));
  // Res(x^2-2, x-1) = (1-2) ... = prod (a_i - 1) over roots of x^2-2 = -1
  EXPECT_EQ(resultant_q(P({-2, 0, 1}), P({-1, 1})), Rat(-1));
  // charpoly of x in Q[x]/(x^2-2) is T^2-2
  EXPECT_EQ(charpoly_mod(P({0, 1}), P({-2, 0, 1})), P({-2, 0, 1}));
  EXPECT_EQ(minpoly_mod(P({3}), P({-2, 0, 1})), P({-3, 1}));
}

TEST(UnivariateQ, Interpolation) {
  std::vector<Rat> xs{0, 1, 2, 3}, ys;
  UPolyQ p = P({5, -1, 0, 2});
  for (auto& x : xs) ys.push_back(p.eval(x));
  EXPECT_EQ(interpolate_q(xs, ys), p);
}

TEST(NumberField, Arithmetic) {
  auto K = make_number_field(P({-2, 0, 1}));
  NF t = NF::generator(K);
  NF one(K, Rat(1));
  EXPECT_EQ((one + t) * (one - t), NF(K, Rat(-1)));
  EXPECT_EQ(inv(t), NF(K, upoly_q({Rat(0), Rat(1, 2)})));
  EXPECT_EQ(norm(one + t), Rat(-1));
  EXPECT_EQ(minimal_polynomial(one + t), P({-1, -2, 1}));
  EXPECT_THROW(make_number_field(P({-1, 0, 1})), PreconditionError);
  EXPECT_THROW(inv(NF(K, Rat(0))), PreconditionError);
}

TEST(RationalFunctions, FieldOps) {
  RatFunc c = RatFunc::parameter();
  RatFunc one(Rat(1));
  RatFunc a = (c * c - one) / (c - one);
  EXPECT_EQ(a, c + one);
  EXPECT_EQ(a.eval(Rat(3)), Rat(4));
}

TEST(Bivariate, BasicOps) {
  BPolyQ X = BPolyQ::X(Rat(0)), Y = BPolyQ::Y(Rat(0));
  BPolyQ f = Y * Y - X * X * X;
  EXPECT_EQ(f.total_degree(), 3);
  EXPECT_EQ(f.deg_x(), 3);
  EXPECT_EQ(f.deg_y(), 2);
  EXPECT_EQ(f.dx(), Rat(-3) * (X * X));
  EXPECT_EQ(f.dy(), Rat(2) * Y);
  EXPECT_EQ(f.degree_form(), Rat(-1) * X * X * X);
  EXPECT_EQ(f.eval(Rat(1), Rat(1)), Rat(0));
  EXPECT_EQ(exact_div(f * (X + Y), X + Y), f);
  EXPECT_FALSE(divides(X + Y, f));
  EXPECT_EQ(to_string(f), "-X^3 + Y^2");
  BPolyQ g = (X + Y).shear_x(Rat(2));
  EXPECT_EQ(g, X + Rat(3) * Y);
}
