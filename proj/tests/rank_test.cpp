#include <gtest/gtest.h>

#include <random>

#include "pencil/rank.hpp"

using namespace pencil;

namespace {

BPolyQ X() { return BPolyQ::X(Rat(0)); }
BPolyQ Y() { return BPolyQ::Y(Rat(0)); }
BPolyQ C(long c) { return BPolyQ::constant(Rat(c)); }

// Y^N plus random terms of lower total degree.
BPolyQ random_star(std::mt19937_64& rng, int N, int range = 2) {
  std::uniform_int_distribution<long> d(-range, range);
  BPolyQ f = Y().pow(N);
  for (int a = 0; a < N; ++a)
    for (int b = 0; a + b < N; ++b) f.add_term(a, b, Rat(d(rng)));
  return f;
}

}  // namespace

TEST(RhoA, Examples) {
  EXPECT_EQ(rho_a(Y() * Y() - X().pow(3)), 0);
  EXPECT_EQ(rho_a(Y() * Y()), 0);
  EXPECT_EQ(rho_a(Y() * Y() - C(5)), -1);
  EXPECT_EQ(rho_a(Y() * Y() + C(3)), -1);
}

TEST(RhoA, SquarefreeFormulaAgrees) {
  for (const BPolyQ& f : {Y() * Y() - X().pow(3), Y() * Y() - C(5), Y().pow(3) - C(3) * Y(),
                          X() * Y() + Y() * Y() + C(1), Y().pow(3) + X() * Y() + X().pow(2)}) {
    EXPECT_EQ(rho_a(f), rho_a_squarefree(f)) << to_string(f);
  }
}

TEST(RhoA, Preconditions) {
  EXPECT_THROW(rho_a(X() * Y() - C(1)), PreconditionError);
  EXPECT_THROW(rho_a(X()), PreconditionError);
  EXPECT_THROW(rho_a_squarefree(Y() * Y()), PreconditionError);
}

TEST(RhoPi, Examples) {
  EXPECT_EQ(rho_pi(Y() * Y() - X().pow(3)), 2);
  EXPECT_EQ(rho_pi(Y().pow(3) - C(3) * Y()), -2);
  EXPECT_EQ(rho_pi(Y() * Y()), -1);
}

TEST(RhoPi, UnivariateFamily) {
  // f = h(Y): rho_pi = 1 - N and rho_a(f - c) = 1 - N + deg_Y [f - c].
  BPolyQ h = Y().pow(4) - C(2) * Y() * Y();
  EXPECT_EQ(rho_pi(h), -3);
  RankData rd(h);
  EXPECT_EQ(rd.at(Rat(0)), -3 + 1);
  EXPECT_EQ(rd.at(Rat(-1)), -3 + 2);
  EXPECT_EQ(rd.at(Rat(7)), -3);
}

TEST(Defset, Examples) {
  auto a = defset(Y() * Y() - X().pow(3));
  EXPECT_EQ(to_string(a.set), "{0}");
  ASSERT_EQ(a.members.size(), 1u);
  EXPECT_EQ(a.members[0].rho_a, 0);
  auto b = defset(Y().pow(3) - C(3) * Y());
  EXPECT_EQ(to_string(b.set), "{-2, 2}");
  for (auto& m : b.members) EXPECT_EQ(m.rho_a, -1);
  EXPECT_EQ(to_string(defset(Y() * Y()).set), "{0}");
}

TEST(Defset, TabulatedMatchesDirect) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 10; ++t) {
    BPolyQ f = random_star(rng, 3);
    RankData rd(f);
    for (long c : {-2L, 0L, 1L, 3L}) EXPECT_EQ(rd.at(Rat(c)), rho_a(f - C(c))) << to_string(f) << " at " << c;
    AlgebraicSet cands = rd.candidates();
    for (auto& q : cands.factors()) {
      if (q.size() != 2) continue;
      Rat c = Rat(-q[0]) / Rat(q[1]);
      EXPECT_EQ(rd.at(c), rho_a(f - BPolyQ::constant(c))) << to_string(f) << " at " << c;
    }
  }
}

TEST(Report, ZetaAndJungian) {
  auto a = rank_report(Y().pow(3) - C(3) * Y());
  EXPECT_EQ(a.rho_pi, -2);
  EXPECT_EQ(a.v_inf, 1);
  EXPECT_EQ(a.deficiency_sum, -2);
  EXPECT_EQ(a.jungian_residual, 0);
  EXPECT_EQ(a.zeta, -1);
  auto b = rank_report(Y() * Y() - X().pow(3));
  EXPECT_EQ(b.zeta, -1);
  EXPECT_EQ(b.deficiency_sum, 2);
  auto c = rank_report(Y() * Y());
  EXPECT_EQ(c.zeta, -1);
  EXPECT_EQ(c.deficiency_sum, -1);
}

TEST(Report, DefsetInclusionsAndBounds) {
  auto a = rank_report(Y().pow(3) - C(3) * Y());
  EXPECT_EQ(a.rho_a, -2);
  EXPECT_TRUE(a.singset_minus_multset_in_defset);
  EXPECT_TRUE(a.singset_bound_holds());
  EXPECT_TRUE(a.defset_off_multset_bound_holds());
  // Both defset members are multiple fibers, which the cardinality bound
  // 1 + rho_a + deg_Y h = 1 does not account for.
  EXPECT_EQ(a.defset_size, 2);
  EXPECT_EQ(a.defset_bound, 1);
  EXPECT_FALSE(a.defset_bound_holds());

  auto b = rank_report(Y() * Y() - X().pow(3));
  EXPECT_EQ(to_string(b.singset.minus(b.multset)), "{0}");
  EXPECT_TRUE(b.singset_minus_multset_in_defset);
  EXPECT_TRUE(b.defset_bound_holds());

  auto c = rank_report(X() * Y() + C(1));
  EXPECT_EQ(to_string(c.singset), "{1}");
  EXPECT_TRUE(c.defset.set.contains(Rat(1)));
  EXPECT_TRUE(c.singset_minus_multset_in_defset);
  EXPECT_TRUE(c.singset_bound_holds());
}

TEST(Report, RhoPiConventions) {
  auto a = rank_report(Y() * Y() - X().pow(3));
  ASSERT_TRUE(a.rho_pi_literal.has_value());
  EXPECT_EQ(*a.rho_pi_literal, a.rho_pi);
  EXPECT_EQ(a.rho_a_generic, (std::vector<long>{2, 2}));
  auto b = rank_report(Y() * Y());
  ASSERT_TRUE(b.rho_pi_literal.has_value());
  EXPECT_EQ(*b.rho_pi_literal, -1);
}

TEST(Properties, RandomStarPolynomials) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> deg(2, 4);
  for (int t = 0; t < 12; ++t) {
    BPolyQ f = random_star(rng, deg(rng));
    RankReport r = rank_report(f);
    EXPECT_TRUE(r.strict_star);
    EXPECT_EQ(r.zeta, -1) << to_string(f);
    EXPECT_EQ(r.jungian_residual, 0) << to_string(f);
    EXPECT_EQ(r.euler_residual, 0) << to_string(f);
    EXPECT_TRUE(r.fiber_lower_bound);
    EXPECT_TRUE(r.shear_stable);
    for (long g : r.rho_a_generic) EXPECT_EQ(g, r.rho_pi) << to_string(f);
    if (r.rho_a_squarefree) EXPECT_EQ(*r.rho_a_squarefree, r.rho_a);
    EXPECT_TRUE(r.singset_minus_multset_in_defset) << to_string(f);
    EXPECT_TRUE(r.singset_bound_holds()) << to_string(f);
    EXPECT_TRUE(r.defset_off_multset_bound_holds()) << to_string(f);
    RankData rd(r.f);
    for (long c = -2; c <= 2; ++c)
      if (!r.multset.contains(Rat(c))) EXPECT_GE(r.rho_pi, rd.at(Rat(c)));
  }
}

TEST(Properties, SeveralPointsAtInfinity) {
  // XY + 1 normalizes to Y^2 + XY + 1 with two points at infinity.
  auto r = rank_report(X() * Y() + C(1));
  EXPECT_FALSE(r.strict_star);
  EXPECT_EQ(r.v_inf, 2);
  EXPECT_EQ(r.euler_residual, 0);
  EXPECT_EQ(r.zeta, -2);
  EXPECT_EQ(r.jungian_residual, 1);
}
