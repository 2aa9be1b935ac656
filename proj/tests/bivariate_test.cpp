#include <gtest/gtest.h>

#include <random>

#include "pencil/elimination.hpp"

using namespace pencil;

namespace {

BPolyQ X() { return BPolyQ::X(Rat(0)); }
BPolyQ Y() { return BPolyQ::Y(Rat(0)); }
BPolyQ C(long c) { return BPolyQ::constant(Rat(c)); }

BPolyQ random_poly(std::mt19937_64& rng, int deg, int range = 5) {
  std::uniform_int_distribution<long> d(-range, range);
  BPolyQ f(Rat(0));
  for (int a = 0; a <= deg; ++a)
    for (int b = 0; a + b <= deg; ++b) f.add_term(a, b, Rat(d(rng)));
  return f;
}

BPoly<Zp> reduce(const BPolyQ& f, std::uint32_t p) {
  return f.map_coeffs(Zp(p, 0), [&](const Rat& c) { return reduce_mod(c, p); });
}

UPoly<Zp> reduce(const UPolyQ& f, std::uint32_t p) { return UPoly<Zp>(reduce_poly_mod(f, p), Zp(p, 0)); }

}  // namespace

TEST(BivariateGcd, Examples) {
  EXPECT_EQ(poly_gcd(X() * X() - C(1), X() * X() * X() - C(1)), X() - C(1));
  EXPECT_EQ(poly_gcd(Y() * Y() - X() * X() * X(), C(2) * Y()), C(1));
  EXPECT_EQ(poly_gcd(C(3) * Y() * Y() - C(3), Y() * Y() - C(1)), Y() * Y() - C(1));
}

TEST(BivariateGcd, CommonFactorIsRecovered) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 15; ++t) {
    BPolyQ d = random_poly(rng, 2), g = random_poly(rng, 2), h = random_poly(rng, 2);
    if (d.is_constant()) continue;
    BPolyQ lhs = poly_gcd(g * d, h * d);
    BPolyQ rhs = normalize_lex(d * poly_gcd(g, h));
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(BivariateGcd, PrimeFieldCommonFactor) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 10; ++t) {
    std::uint32_t p = 1000003;
    BPoly<Zp> d = reduce(random_poly(rng, 2), p), g = reduce(random_poly(rng, 2), p), h = reduce(random_poly(rng, 2), p);
    EXPECT_EQ(poly_gcd(g * d, h * d), normalize_lex(d * poly_gcd(g, h)));
  }
}

TEST(BivariateGcd, HomogeneousForms) {
  BPolyQ a = (X() - Y()) * (X() + C(2) * Y()) * Y();
  BPolyQ b = (X() - Y()) * Y() * Y();
  EXPECT_EQ(poly_gcd(a, b), normalize_lex((X() - Y()) * Y()));
}

TEST(Squarefree, Examples) {
  auto d = squarefree_decompose(X() * X() * X() + X() * X());
  ASSERT_EQ(d.factors.size(), 2u);
  EXPECT_EQ(d.factors[0].first, X() + C(1));
  EXPECT_EQ(d.factors[1].first, X());
  EXPECT_EQ(d.factors[1].second, 2);
  auto e = squarefree_decompose(Y() * Y() * Y() - C(3) * Y() + C(2));
  ASSERT_EQ(e.factors.size(), 2u);
  EXPECT_EQ(e.factors[0].first, Y() + C(2));
  EXPECT_EQ(e.factors[1].first, Y() - C(1));
  BPolyQ g = Y() * Y() - X() * X() * X();
  auto s = squarefree_decompose(g);
  ASSERT_EQ(s.factors.size(), 1u);
  EXPECT_EQ(s.factors[0].second, 1);
}

TEST(Squarefree, ReconstructsRandomProducts) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 10; ++t) {
    BPolyQ a = random_poly(rng, 2), b = random_poly(rng, 1), c = random_poly(rng, 1);
    BPolyQ f = a * b * b * c * c * c;
    if (f.is_zero()) continue;
    auto d = squarefree_decompose(f);
    BPolyQ r = BPolyQ::constant(d.unit);
    for (auto& [q, m] : d.factors) {
      r = r * q.pow(m);
      EXPECT_TRUE(poly_gcd(q, q.dy()).is_constant() || q.deg_y() == 0);
    }
    EXPECT_EQ(r, f);
  }
}

TEST(Resultant, Examples) {
  EXPECT_EQ(resultant_y(Y() - X() * X(), Y()), upoly_q({Rat(0), Rat(0), Rat(1)}));
  EXPECT_EQ(resultant_y(Y() - C(1), Y() + C(1)), upoly_q({Rat(2)}));
  EXPECT_EQ(resultant_y(X() * Y() - C(1), X()), upoly_q({Rat(0), Rat(1)}));
}

TEST(Resultant, MatchesSylvesterDeterminant) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 10; ++t) {
    BPolyQ g = random_poly(rng, 3), h = random_poly(rng, 2);
    g.add_term(1, 2, Rat(0) + Rat(1, 3));
    EXPECT_EQ(resultant_y(g, h), resultant_y_generic(g, h));
  }
}

TEST(Resultant, CommutesWithReductionModP) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 10; ++t) {
    BPolyQ g = random_poly(rng, 3, 20), h = random_poly(rng, 3, 20);
    std::uint32_t p = 10007;
    UPolyQ r = resultant_y(g, h);
    EXPECT_EQ(reduce(r, p), resultant_y_generic(reduce(g, p), reduce(h, p)));
  }
}

TEST(Resultant, SubresultantDividesAtSharedRoot) {
  // g, h share the factor (Y - X) so S_1 is an associate of Y - X times a
  // polynomial in X.
  BPolyQ g = (Y() - X()) * (Y() + C(1)), h = (Y() - X()) * (Y() - C(2));
  BPolyQ s1 = subresultant_y(g, h, 1);
  EXPECT_TRUE(divides(Y() - X(), s1));
  EXPECT_EQ(resultant_y(g, h), UPolyQ(Rat(0)));
}

TEST(Resultant, ShiftedResultantInterpolates) {
  BPolyQ g = Y() * Y() - X(), h = Y();
  BPolyQ r = resultant_y_shifted(g, h);
  // Res_Y(Y^2 - X, Y - T) = T^2 - X
  EXPECT_EQ(r, Y() * Y() - X());
}
