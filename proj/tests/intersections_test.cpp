#include <gtest/gtest.h>

#include <random>

#include "pencil/intersections.hpp"

using namespace pencil;

namespace {

BPolyQ X() { return BPolyQ::X(Rat(0)); }
BPolyQ Y() { return BPolyQ::Y(Rat(0)); }
BPolyQ C(long c) { return BPolyQ::constant(Rat(c)); }

BPolyQ random_poly(std::mt19937_64& rng, int deg, int range = 3) {
  std::uniform_int_distribution<long> d(-range, range);
  BPolyQ f(Rat(0));
  for (int a = 0; a <= deg; ++a)
    for (int b = 0; a + b <= deg; ++b) f.add_term(a, b, Rat(d(rng)));
  return f;
}

PlanePoint origin() { return PlanePoint::rational(0, 0); }

}  // namespace

TEST(Fulton, Examples) {
  EXPECT_EQ(intersection_multiplicity(X(), Y(), origin()), 1);
  EXPECT_EQ(intersection_multiplicity(Y() - X() * X(), Y(), origin()), 2);
  EXPECT_EQ(intersection_multiplicity(C(-3) * X() * X(), C(2) * Y(), origin()), 2);
  EXPECT_EQ(intersection_multiplicity(Y() * Y() - X().pow(3), C(2) * Y(), origin()), 3);
  EXPECT_EQ(intersection_multiplicity(X() - C(1), Y(), origin()), 0);
  EXPECT_EQ(intersection_multiplicity(X() * Y(), Y() * (X() + C(1)), origin()), kInfinite);
}

TEST(Fulton, TranslatedPoint) {
  BPolyQ g = (Y() - C(1)) * (Y() - C(1)) - (X() - C(2)).pow(3);
  EXPECT_EQ(intersection_multiplicity(g, Y() - C(1), PlanePoint::rational(2, 1)), 3);
}

TEST(CommonZeros, SeparatesOrbits) {
  // X^2 = 2 and Y = X: two conjugate points with multiplicity 1.
  auto zs = common_zeros(X() * X() - C(2), Y() - X());
  ASSERT_EQ(zs.size(), 1u);
  EXPECT_EQ(zs[0].point.degree(), 2);
  EXPECT_EQ(zs[0].multiplicity, 1);
  EXPECT_TRUE(is_zero(eval_at(Y() - X(), zs[0].point)));
}

TEST(CommonZeros, SharedFiberNeedsShear) {
  // Two points over X = 0: (0, 1) and (0, -1).
  auto zs = common_zeros(X(), Y() * Y() - C(1));
  long total = 0;
  for (auto& z : zs) total += z.multiplicity * z.point.degree();
  EXPECT_EQ(total, 2);
}

TEST(AffineTotal, Examples) {
  EXPECT_EQ(affine_total(Y() * Y() - X().pow(3), C(2) * Y()), 3);
  EXPECT_EQ(affine_total(Y() - C(1), Y() + C(1)), 0);
  EXPECT_EQ(affine_total(Y() - X() * X(), Y() + X() * X()), 2);
  EXPECT_EQ(affine_total(Y() * Y(), C(2) * Y()), kInfinite);
}

TEST(AffineTotal, SumOfPointMultiplicities) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 8; ++t) {
    BPolyQ g = random_poly(rng, 3), h = random_poly(rng, 2);
    if (g.is_constant() || h.is_constant() || !poly_gcd(g, h).is_constant()) continue;
    long sum = 0;
    for (auto& z : common_zeros(g, h)) {
      EXPECT_EQ(intersection_multiplicity(g, h, z.point), z.multiplicity);
      sum += z.multiplicity * z.point.degree();
    }
    EXPECT_EQ(affine_total(g, h), sum);
  }
}

TEST(SplitTotals, Examples) {
  BPolyQ cusp = Y() * Y() - X().pow(3);
  auto a = split_totals(cusp.dx(), cusp.dy(), cusp);
  EXPECT_EQ(a.on_curve, 2);
  EXPECT_EQ(a.off_curve, 0);
  BPolyQ hyp = X() * Y() - C(1);
  auto b = split_totals(X() - C(1), Y() - C(1), hyp);
  EXPECT_EQ(b.on_curve, 1);
  EXPECT_EQ(b.off_curve, 0);
  auto c = split_totals(X() - C(2), Y() - C(1), hyp);
  EXPECT_EQ(c.on_curve, 0);
  EXPECT_EQ(c.off_curve, 1);
}

TEST(IHat, Examples) {
  auto a = i_hat(Y() * Y() - X().pow(3), C(2) * Y());
  EXPECT_EQ(a.value, 3);
  EXPECT_TRUE(a.alpha.empty());
  EXPECT_EQ(a.beta, 0);

  EXPECT_EQ(i_hat(Y() * Y(), C(2) * Y()).value, kInfinite);

  auto c = i_hat(X() * Y() - C(1), X());
  EXPECT_EQ(c.value, 1);
  EXPECT_EQ(to_string(c.alpha), "{0}");
  EXPECT_EQ(c.beta, 0);
}

TEST(IHat, DeficientNonzeroValuesCountInBeta) {
  // X - 3 - lambda misses XY = 1 only at lambda = -3.
  auto r = i_hat(X() * Y() - C(1), X() - C(3));
  EXPECT_EQ(r.value, 1);
  EXPECT_EQ(to_string(r.alpha), "{-3}");
  EXPECT_EQ(r.beta, 1);
}

TEST(IHat, ConstantSecondArgument) {
  auto r = i_hat(Y() * Y() - X(), C(3));
  EXPECT_EQ(r.value, 0);
  EXPECT_TRUE(r.alpha.empty());
  EXPECT_EQ(r.beta, 0);
}

TEST(LegacyRank, Examples) {
  EXPECT_EQ(legacy_rank_rho(Y() * Y() - X().pow(3)), 0);
  EXPECT_EQ(legacy_rank_rho(Y() * Y()), kInfinite);
  // f_Y = X shares a factor with f + 1 = XY, so beta(f_Y, f) is infinite.
  EXPECT_EQ(legacy_rank_rho(X() * Y() - C(1)), kInfinite);
  // The Y-monic shear of the same hyperbola.
  BPolyQ h = X() * Y() + Y() * Y() - C(1);
  EXPECT_EQ(legacy_rank_rho(h), 1);
  long formula = (1 - 2) + *affine_total(h, h.dy()) - split_totals(h.dx(), h.dy(), h).on_curve;
  EXPECT_EQ(formula, 1);
}

TEST(ResidueConstant, Examples) {
  auto a = residue_constant(Y().pow(3) - C(3) * Y(), Y() - C(1));
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(to_string(*a), "{-2}");
  EXPECT_FALSE(residue_constant(X(), Y()).has_value());
  BPolyQ circle = X() * X() + Y() * Y();
  auto c = residue_constant(circle, circle - C(5));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(to_string(*c), "{5}");
  auto d = residue_constant(Y(), Y() * Y() - C(2));
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->size(), 2u);
}

TEST(Branches, LocalExamples) {
  EXPECT_EQ(branch_count(Y() * Y() - X().pow(3), origin()), 1);
  EXPECT_EQ(branch_count(Y() * Y() - X() * X() - X().pow(3), origin()), 2);
  EXPECT_EQ(branch_count(Y() * Y() + X() * X(), origin()), 2);
  EXPECT_EQ(branch_count((Y() - X() * X()) * (Y() + X() * X()), origin()), 2);
  EXPECT_EQ(branch_count((Y() * Y() - X().pow(3)) * (Y() * Y() - C(2) * X().pow(3)), origin()), 2);
  EXPECT_EQ(branch_count(Y().pow(4) - X().pow(6), origin()), 2);
  EXPECT_EQ(branch_count(X() - C(1), origin()), 0);
}

TEST(Branches, IteratedTangent) {
  // (Y - X^2)^2 - X^5: one edge of slope 2 with a double root, then a
  // single branch after the transform.
  BPolyQ f = (Y() - X() * X()).pow(2) - X().pow(5);
  EXPECT_EQ(branch_count(f, origin()), 1);
  BPolyQ g = (Y() - X() * X()).pow(2) - X().pow(6);
  EXPECT_EQ(branch_count(g, origin()), 2);
}

TEST(Infinity, PointsAtInfinity) {
  auto a = points_at_infinity(X() * Y() - C(1));
  EXPECT_EQ(a.points.size(), 2u);
  EXPECT_EQ(a.geometric_count, 2);
  auto b = points_at_infinity(Y().pow(3) - C(3) * Y());
  ASSERT_EQ(b.points.size(), 1u);
  EXPECT_EQ(to_string(b.points[0]), "(1 : 0 : 0)");
  auto c = points_at_infinity(X() * X() + Y() * Y() - C(1));
  EXPECT_EQ(c.points.size(), 1u);
  EXPECT_EQ(c.geometric_count, 2);
}

TEST(Infinity, Tau) {
  EXPECT_EQ(tau_places_at_infinity(X() * Y() - C(1)), 2);
  // a(X) Y + X - z with a = X (X - 1), z = 2: an ordinary double point at
  // (0 : 1 : 0) plus one smooth point.
  BPolyQ ex1 = X() * (X() - C(1)) * Y() + X() - C(2);
  EXPECT_EQ(tau_places_at_infinity(ex1), 3);
  PlanePoint top = PlanePoint::rational(0, 1);
  top.at_infinity = true;
  EXPECT_EQ(branch_count(ex1, top), 2);
  // (X - Y)(X + Y) + 1: two smooth points at infinity.
  EXPECT_EQ(tau_places_at_infinity((X() - Y()) * (X() + Y()) + C(1)), 2);
  // Y^2 - X^3 has a single unibranch point at infinity.
  EXPECT_EQ(tau_places_at_infinity(Y() * Y() - X().pow(3)), 1);
}
