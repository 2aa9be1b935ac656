#include <gtest/gtest.h>

#include "pencil/sets.hpp"

using namespace pencil;

namespace {

BPolyQ X() { return BPolyQ::X(Rat(0)); }
BPolyQ Y() { return BPolyQ::Y(Rat(0)); }
BPolyQ C(long c) { return BPolyQ::constant(Rat(c)); }

PencilInput special(const BPolyQ& f) { return normalize(make_pencil(f)); }
PencilInput general(const BPolyQ& f, const BPolyQ& w) { return normalize(make_pencil(f, w)); }

}  // namespace

TEST(Normalize, Examples) {
  PencilInput a = special(X() * Y() + C(1));
  EXPECT_EQ(a.f, X() * Y() + Y() * Y() + C(1));
  EXPECT_EQ(a.lambda, 1);
  PencilInput b = special(Y().pow(3) - C(3) * Y());
  EXPECT_EQ(b.f, Y().pow(3) - C(3) * Y());
  EXPECT_FALSE(b.swapped);
  EXPECT_EQ(b.lambda, 0);
  PencilInput c = general(X() * X() + Y() * Y(), X());
  EXPECT_EQ(c.f.deg_y(), 2);
  EXPECT_EQ(c.w.deg_y(), 1);
  EXPECT_EQ(c.apply(X()), c.w);
}

TEST(Normalize, DependentPencil) {
  EXPECT_TRUE(make_pencil(C(2) * X() * Y() + C(3), X() * Y()).dependent);
  EXPECT_FALSE(make_pencil(X() * X() + Y(), X()).dependent);
}

TEST(Normalize, Preconditions) {
  EXPECT_THROW(make_pencil(C(3)), PreconditionError);
  EXPECT_THROW(make_pencil(X() * Y(), X()), PreconditionError);
  EXPECT_THROW(make_pencil(X(), X() * Y() + C(1)), PreconditionError);
}

TEST(Singset, Examples) {
  EXPECT_EQ(to_string(singset(special(Y().pow(3) - C(3) * Y())).set), "{-2, 2}");
  EXPECT_EQ(to_string(singset(special(X() * Y() + C(1))).set), "{1}");
  EXPECT_EQ(to_string(singset(general(Y() * Y(), X())).set), "{0}");
  EXPECT_TRUE(singset(special(Y() * Y() - X().pow(3))).set.contains(Rat(0)));
}

TEST(Singset, IrrationalCriticalValues) {
  // f = Y^2 + X^3 - 3X: critical points (+-1, 0) with values -+2, and the
  // Y^3 - 2X pencil is smooth everywhere.
  EXPECT_EQ(to_string(singset(special(Y() * Y() + X().pow(3) - C(3) * X())).set), "{-2, 2}");
  EXPECT_TRUE(singset(special(Y().pow(3) - C(2) * X())).set.empty());
  auto s = singset(special(Y() * Y() + X().pow(4) - C(2) * X() * X() + X()));
  EXPECT_EQ(s.set.size(), 3u);
}

TEST(Singset, GeneralPencilInfinity) {
  // w = X^2 is singular along X = 0, away from the base points.
  auto s = singset(general(Y().pow(3) + Y() + C(1), X() * X()));
  EXPECT_TRUE(s.infinity);
  EXPECT_FALSE(singset(general(Y() * Y() + X(), Y())).infinity);
}

TEST(Singset, PrimeField) {
  EXPECT_TRUE(singset_prime_field(X().pow(5) + Y().pow(5), 5).all_of_k);
  EXPECT_THROW(singset_prime_field(X().pow(5) + Y().pow(2), 5), PreconditionError);
}

TEST(Multset, Examples) {
  auto a = multset(special(Y().pow(3) - C(3) * Y()));
  EXPECT_EQ(to_string(a.set), "{-2, 2}");
  ASSERT_TRUE(a.product_identity.has_value());
  EXPECT_TRUE(*a.product_identity);
  EXPECT_EQ(normalize_lex(a.hhat), Y() * Y() - C(1));
  ASSERT_EQ(a.witnesses.size(), 2u);
  EXPECT_EQ(a.witnesses[0].second, Y() - C(1));

  auto b = multset(special(Y() * Y()));
  EXPECT_EQ(to_string(b.set), "{0}");
  EXPECT_EQ(b.witnesses[0].second, Y());

  auto c = multset(special(Y() * Y() - X().pow(3)));
  EXPECT_TRUE(c.set.empty());
  EXPECT_TRUE(*c.product_identity);
}

TEST(Multset, ProductIdentityWithConjugateValues) {
  // f' = 3(Y^2 + 1): double roots at Y = +-i with values +-2i.
  auto m = multset(special(Y().pow(3) + C(3) * Y()));
  EXPECT_EQ(m.set, AlgebraicSet::from_polynomial(upoly_q_int({4, 0, 1})));
  EXPECT_TRUE(m.witnesses.empty());
  EXPECT_TRUE(*m.product_identity);
  auto n = multset(special((Y() - X() * X()).pow(2) * (X() + C(1)) + C(3)));
  EXPECT_TRUE(n.set.contains(Rat(3)));
  EXPECT_TRUE(*n.product_identity);
}

TEST(Multset, GeneralPencil) {
  // f - c w = (Y - 1)^2 at c = 1 with w = X.
  auto m = multset(general((Y() - C(1)).pow(2) + X(), X()));
  EXPECT_TRUE(m.set.contains(Rat(1)));
  EXPECT_FALSE(m.product_identity.has_value());
  auto inf = multset(general(Y().pow(3) + Y() + C(1), X() * X()));
  EXPECT_TRUE(inf.infinity);
}

TEST(Redset, ExampleOne) {
  auto r = redset_refined(special(X() * (X() - C(1)) * Y() + X() - C(2)));
  EXPECT_FALSE(r.composite);
  EXPECT_EQ(to_string(r.set), "{-2, -1}");
  for (auto& fib : r.fibers) EXPECT_EQ(exponents_string(fib), "(1,1)");
}

TEST(Redset, ExampleFive) {
  auto r = redset_refined(special((X() - Y()) * (X() + Y()) + C(1)));
  EXPECT_EQ(to_string(r.set), "{1}");
}

TEST(Redset, ExampleFour) {
  auto r = redset_refined(special(X() * Y() * Y() + Y() + X() * X()));
  EXPECT_TRUE(r.set.empty());
}

TEST(Redset, HyperbolaProductIdentity) {
  auto r = redset_refined(special(X() * Y() + C(1)));
  EXPECT_EQ(to_string(r.set), "{1}");
  BPolyQ X1 = X(), X2 = Y();
  for (long g : {3L, -7L, 11L}) {
    Rat gamma(g, 5);
    BPolyQ lhs = (X1 * X2 - BPolyQ::constant(gamma)) * (X1 * X2 + C(1)) + BPolyQ::constant(gamma);
    BPolyQ rhs = X1 * (X1 * X2 * X2 + BPolyQ::constant(1 - gamma) * X2);
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Redset, IrrationalMembers) {
  // f - c = (Y - c)(X(Y + c) + 1) at c^2 = 2.
  auto r = redset_refined(special(X() * (Y() * Y() - C(2)) + Y()));
  EXPECT_FALSE(r.composite);
  ZVec q = canonical_factor(upoly_q_int({-2, 0, 1}));
  EXPECT_TRUE(r.set.contains_factor(q));
  for (auto& fib : r.fibers)
    if (fib.minpoly == q) EXPECT_EQ(exponents_string(fib), "(1,1)");
}

TEST(Redset, FiberInvariant) {
  BPolyQ f = X() * Y() * Y() - C(1);
  auto r = redset_refined(special(f));
  ASSERT_EQ(r.fibers.size(), 1u);
  int sum = 0;
  for (auto& L : r.fibers[0].layers) sum += L.e * L.y_degree;
  EXPECT_EQ(sum, special(f).f.deg_y());
  EXPECT_EQ(exponents_string(r.fibers[0]), "(1,2)");
}

TEST(Redset, PlacesAtInfinityBound) {
  for (const BPolyQ& f : {X() * (X() - C(1)) * Y() + X() - C(2), X() * Y() + C(1), X() * Y() * Y() - C(1),
                          (X() - Y()) * (X() + Y()) + C(1), X() * (X() - C(1)) * (X() + C(2)) * Y() + X()}) {
    PencilInput in = special(f);
    auto r = redset_refined(in);
    auto b = redset_places_bound(in, r);
    EXPECT_TRUE(b.stable);
    EXPECT_TRUE(b.holds) << to_string(f) << " tau " << b.tau << " redset " << to_string(r.set);
  }
  PencilInput ex1 = special(X() * (X() - C(1)) * Y() + X() - C(2));
  EXPECT_EQ(redset_places_bound(ex1, redset_refined(ex1)).tau, 3);
}

TEST(Redset, CompositeShortCircuit) {
  auto r = redset_refined(special((X() * Y()).pow(2) + X() * Y()));
  EXPECT_TRUE(r.composite);
  EXPECT_EQ(r.generic_count, 2);
}

TEST(Redset, GeneralPencilAtInfinity) {
  auto r = redset_refined(general(Y() * Y() * Y() + X() + C(1), X() * Y()));
  EXPECT_TRUE(r.infinity);
  ASSERT_TRUE(r.fiber_at_infinity.has_value());
  EXPECT_EQ(exponents_string(*r.fiber_at_infinity), "(1,1)");
}

TEST(Primset, Examples) {
  auto a = primset(special((X() + Y()).pow(3) + C(5)));
  EXPECT_EQ(to_string(a.primset), "{5}");
  ASSERT_EQ(a.members.size(), 1u);
  EXPECT_EQ(a.members[0].mu, 3);
  EXPECT_EQ(to_string(a.uniset), "{5}");
  EXPECT_TRUE(primset(special(Y() * Y() - X().pow(3))).primset.empty());
  auto b = primset(special(Y().pow(3) - C(3) * Y()));
  EXPECT_TRUE(b.primset.empty());
}

TEST(Primset, MaximalExponent) {
  auto a = primset(special((Y() - X() * X()).pow(4) + C(2)));
  ASSERT_EQ(a.members.size(), 1u);
  EXPECT_EQ(a.members[0].mu, 4);
}

TEST(Primset, KleinPencil) {
  BPolyQ x5y5 = X().pow(5) * Y().pow(5);
  BPolyQ H1 = X().pow(30) + Y().pow(30) - C(10005) * X().pow(10) * Y().pow(10) * (X().pow(10) + Y().pow(10)) +
              C(522) * x5y5 * (X().pow(20) - Y().pow(20));
  BPolyQ H2 = -(X().pow(20) + Y().pow(20) + C(494) * X().pow(10) * Y().pow(10)) + C(228) * x5y5 * (X().pow(10) - Y().pow(10));
  BPolyQ H3 = X() * Y() * (X().pow(10) - Y().pow(10) + C(11) * x5y5);
  BPolyQ f = H1 * H1, w = H2.pow(3);
  ASSERT_EQ(f + w, C(1728) * H3.pow(5));
  auto p = primset(general(f, w));
  EXPECT_EQ(to_string(p.primset), "{-1, 0}");
  EXPECT_TRUE(p.prim_infinity);
  EXPECT_EQ(p.plus_size(), 3);
  std::vector<int> mus;
  for (auto& m : p.members) mus.push_back(m.mu);
  std::sort(mus.begin(), mus.end());
  EXPECT_EQ(mus, (std::vector<int>{2, 3, 5}));
  // Every H_i splits into lines over the algebraic closure.
  EXPECT_TRUE(p.uniset.empty());
  EXPECT_FALSE(p.uni_infinity);
  EXPECT_LE(p.plus_size(), 4);
}

TEST(Primset, UnisetInsidePrimset) {
  for (const BPolyQ& f : {(X() + Y()).pow(3) + C(5), (Y() * Y() - X()).pow(2) + X() + Y() * Y() - X() + C(3),
                          (X() * Y() - C(1)).pow(2) * X() + C(1)}) {
    auto p = primset(special(f));
    EXPECT_TRUE(p.uniset.subset_of(p.primset));
    EXPECT_TRUE(p.primset.subset_of(multset(special(f)).set));
  }
}

TEST(Composite, Examples) {
  auto a = is_composite(special((X() * Y()).pow(2) + X() * Y()));
  EXPECT_TRUE(a.composite);
  EXPECT_EQ(a.generic_count, 2);
  EXPECT_TRUE(a.multset_check);
  EXPECT_FALSE(is_composite(special(Y() * Y() - X().pow(3))).composite);
  auto c = is_composite(special((X() + Y()).pow(3) + C(5)));
  EXPECT_TRUE(c.composite);
  EXPECT_EQ(c.generic_count, 3);
}

TEST(Refset, ExampleSix) {
  auto r = refset_equal(X() * Y() * Y() - C(1), X() * Y().pow(3) - C(1));
  EXPECT_FALSE(r.equal);
  EXPECT_EQ(r.left, (std::vector<std::string>{"(1,2)"}));
  EXPECT_EQ(r.right, (std::vector<std::string>{"(1,3)"}));
}

TEST(Refset, SelfAndHyperbolas) {
  BPolyQ f = X() * (X() - C(1)) * Y() + X() - C(2);
  auto a = refset_equal(f, f);
  EXPECT_TRUE(a.equal);
  ASSERT_EQ(a.bijection.size(), 2u);
  for (auto& [l, r] : a.bijection) EXPECT_EQ(l, r);
  auto b = refset_equal(X() * Y() - C(1), (X() + Y()) * Y() - C(1));
  EXPECT_TRUE(b.equal);
  EXPECT_EQ(b.left, (std::vector<std::string>{"(1,1)"}));
}

TEST(Refset, RejectsReducibleInput) {
  EXPECT_THROW(refset_equal(X() * Y(), X()), PreconditionError);
  EXPECT_THROW(refset_equal(X() * X() - C(2) * Y() * Y(), X()), PreconditionError);
}
