#include <gtest/gtest.h>

#include <random>

#include "pencil/absolute.hpp"

using namespace pencil;

namespace {

BPolyQ X() { return BPolyQ::X(Rat(0)); }
BPolyQ Y() { return BPolyQ::Y(Rat(0)); }
BPolyQ C(long c) { return BPolyQ::constant(Rat(c)); }

UPolyQ random_upoly(std::mt19937_64& rng, int deg) {
  std::uniform_int_distribution<long> d(-4, 4);
  UPolyQ p(Rat(0));
  for (int i = 0; i <= deg; ++i) p.set(i, Rat(d(rng)));
  return p;
}

}  // namespace

TEST(AbsoluteCount, Examples) {
  EXPECT_EQ(absolute_factor_count(X() * X() + Y() * Y()), 2);
  EXPECT_EQ(absolute_factor_count(Y() * Y() - X().pow(3)), 1);
  EXPECT_EQ(absolute_factor_count(X() * Y()), 2);
}

TEST(AbsoluteCount, NonHomogeneous) {
  // (X + i Y + 1)(X - i Y + 1)
  EXPECT_EQ(absolute_factor_count((X() + C(1)).pow(2) + Y() * Y()), 2);
  EXPECT_EQ(absolute_factor_count(X() * X() + Y() * Y() - C(1)), 1);
  EXPECT_EQ(absolute_factor_count(X() * Y() * (X() + Y() + C(1))), 3);
  EXPECT_EQ(absolute_factor_count(Y().pow(3) - C(3) * Y()), 3);
  EXPECT_EQ(absolute_factor_count(X() * X() - C(2)), 2);
}

TEST(AbsoluteCount, RejectsNonSquarefree) {
  EXPECT_THROW(absolute_factor_count((Y() - X() * X()).pow(2)), PreconditionError);
}

TEST(AbsoluteCount, ParityDemo) {
  for (long u : {1, 3, 5, 7}) EXPECT_EQ(absolute_irreducibility_parity_demo(u), 1) << u;
  for (long u : {2, 4, 6}) EXPECT_EQ(absolute_irreducibility_parity_demo(u), 2) << u;
}

TEST(AbsoluteCount, ProductsOfIrreducibles) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 6; ++t) {
    // Polynomials of Y-degree one with coprime coefficients are irreducible.
    BPolyQ g = BPolyQ::from_x(random_upoly(rng, 2)) * Y() + BPolyQ::from_x(random_upoly(rng, 3));
    BPolyQ h = X() + BPolyQ::from_y(random_upoly(rng, 2));
    if (g.deg_y() < 1) continue;
    UPolyQ a = g.y_coeffs()[1], b = g.y_coeffs()[0];
    if (gcd_q(a, b).deg() > 0 || !poly_gcd(g, h).is_constant()) continue;
    EXPECT_EQ(absolute_factor_count(g * h), 2);
    EXPECT_EQ(absolute_factor_count(g), 1);
  }
}

TEST(AbsoluteCount, ShearInvariant) {
  std::vector<BPolyQ> fs = {Y() * Y() - X().pow(3), X() * Y() * (X() + Y() + C(1)), (X() + C(1)).pow(2) + Y() * Y(),
                            X().pow(2) * Y() + X() - C(2)};
  for (auto& f : fs) {
    long s = absolute_factor_count(f);
    EXPECT_EQ(absolute_factor_count(f.shear_x(Rat(3))), s);
    EXPECT_EQ(absolute_factor_count(f.shear_y(Rat(-2)).shear_x(Rat(1))), s);
  }
}

TEST(AbsoluteCount, AtLeastRationalFactorCount) {
  BPolyQ f = (X() * X() + Y() * Y() - C(1)) * (Y() - X().pow(3)) * (X() + C(2));
  EXPECT_EQ(absolute_factor_count(f), 3);
}

TEST(AbsoluteCount, NumberField) {
  auto K = make_number_field(upoly_q({Rat(-2), Rat(0), Rat(1)}));
  NF t = NF::generator(K), one(K, Rat(1)), zero(K, Rat(0));
  BPoly<NF> x = BPoly<NF>::X(zero), y = BPoly<NF>::Y(zero), c1 = BPoly<NF>::constant(one);
  BPoly<NF> g = x - t * y - c1, h = x + t * y + c1;
  EXPECT_EQ(absolute_factor_count(g * h), 2);
  EXPECT_EQ(absolute_factor_count(x * x + y * y * y - t * c1), 1);
}

TEST(AbsoluteCount, PrimeField) {
  std::uint32_t p = 101;
  Zp z(p, 0), one(p, 1);
  BPoly<Zp> x = BPoly<Zp>::X(z), y = BPoly<Zp>::Y(z);
  EXPECT_EQ(absolute_factor_count(y * y - x * x * x), 1);
  EXPECT_EQ(absolute_factor_count((x + BPoly<Zp>::constant(one)) * (y - x * x)), 2);
  Zp z7(7, 0);
  BPoly<Zp> x7 = BPoly<Zp>::X(z7), y7 = BPoly<Zp>::Y(z7);
  EXPECT_THROW(absolute_factor_count(y7 * y7 - x7 * x7 * x7), PreconditionError);
}

TEST(Candidates, ExampleOne) {
  BPolyQ f = X() * Y() + X() - C(1);
  auto rc = pencil_reducibility_candidates(f, C(1));
  EXPECT_FALSE(rc.degenerate);
  EXPECT_TRUE(rc.candidates.contains(Rat(-1)));
}

TEST(Candidates, ConstructedProducts) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 4; ++t) {
    BPolyQ g = Y() + BPolyQ::from_x(random_upoly(rng, 2));
    BPolyQ h = Y() * Y() + X() * Y() + BPolyQ::from_x(random_upoly(rng, 1));
    long c0 = static_cast<long>(rng() % 7) - 3;
    auto rc = pencil_reducibility_candidates(g * h + C(c0), C(1));
    if (rc.degenerate) continue;
    EXPECT_TRUE(rc.candidates.contains(Rat(c0)));
  }
}

TEST(Candidates, GeneralPencil) {
  // f - c*w at c = 2 equals (X - 1)(Y + 1).
  BPolyQ w = X() * X() + Y();
  BPolyQ f = (X() - C(1)) * (Y() + C(1)) + C(2) * w;
  auto rc = pencil_reducibility_candidates(f, w);
  EXPECT_FALSE(rc.degenerate);
  EXPECT_TRUE(rc.candidates.contains(Rat(2)));
}

TEST(Candidates, CompositePencil) {
  BPolyQ u = X() * Y();
  auto rc = pencil_reducibility_candidates(u * u + u, C(1));
  EXPECT_TRUE(rc.degenerate);
  EXPECT_EQ(rc.generic_count, 2);
  EXPECT_EQ(generic_factor_count(Y() * Y() - X().pow(3), C(1)), 1);
  EXPECT_EQ(generic_factor_count((X() + Y()).pow(3) + C(5), C(1)), 3);
}

TEST(Candidates, MultipleFibersIncluded) {
  BPolyQ f = (Y() - X() * X()).pow(2) * (X() + C(1)) + C(3);
  auto rc = pencil_reducibility_candidates(f, C(1));
  EXPECT_FALSE(rc.degenerate);
  EXPECT_TRUE(rc.candidates.contains(Rat(3)));
  EXPECT_THROW(pencil_reducibility_candidates(X() * Y(), X()), PreconditionError);
}
