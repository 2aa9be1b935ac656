#include <gtest/gtest.h>

#include <random>

#include "pencil/algebraic.hpp"
#include "pencil/linalg.hpp"

using namespace pencil;

namespace {

UPolyQ P(std::initializer_list<long> c) { return upoly_q_int(std::vector<long>(c)); }

// Exact sign of p at a rational point; used to confirm a real root lies
// strictly inside an interval.
int sign_at(const UPolyQ& p, const Rat& x) { return sgn(p.eval(x)); }

}  // namespace

TEST(RootIsolation, SquareRootOfTwo) {
  auto r = isolate_roots(P({-2, 0, 1}));
  ASSERT_EQ(r.size(), 2u);
  for (auto& a : r) {
    EXPECT_TRUE(a.is_real());
    EXPECT_EQ(sign_at(P({-2, 0, 1}), a.box.re_lo) * sign_at(P({-2, 0, 1}), a.box.re_hi), -1);
  }
  EXPECT_LT(r[0].approx_re(), 0);
  EXPECT_NEAR(r[1].approx_re(), 1.41421356, 0.5);
  EXPECT_NEAR(refine(r[1], 2).approx_re(), 1.41421356, 1e-6);
}

TEST(RootIsolation, ImaginaryUnit) {
  auto r = isolate_roots(P({1, 0, 1}));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_FALSE(r[0].is_real());
  EXPECT_FALSE(r[0].box.intersects(r[1].box));
  EXPECT_NEAR(r[0].approx_im(), -1.0, 1e-6);
  EXPECT_NEAR(r[1].approx_im(), 1.0, 1e-6);
  // the upper box does not meet the real axis and contains i
  EXPECT_GT(r[1].box.im_lo, 0);
  EXPECT_LE(r[1].box.im_lo, 1);
  EXPECT_GE(r[1].box.im_hi, 1);
}

TEST(RootIsolation, RationalFastPath) {
  auto r = isolate_roots(upoly_q({Rat(-3, 2), Rat(1)}));
  ASSERT_EQ(r.size(), 1u);
  ASSERT_TRUE(r[0].is_rational());
  EXPECT_EQ(*r[0].rational, Rat(3, 2));
  EXPECT_THROW(isolate_roots(P({1, 2, 1})), PreconditionError);
}

TEST(RootIsolation, MixedDegreesAndCount) {
  UPolyQ p = P({-2, 0, 0, 0, 0, 1}) * P({1, 1, 1}) * P({-5, 1});
  auto r = isolate_roots(p);
  EXPECT_EQ(static_cast<int>(r.size()), p.deg());
  for (size_t i = 0; i < r.size(); ++i)
    for (size_t j = i + 1; j < r.size(); ++j) {
      EXPECT_NE(r[i], r[j]);
      if (r[i].minpoly == r[j].minpoly) EXPECT_FALSE(r[i].box.intersects(r[j].box));
    }
  int real = 0;
  for (auto& a : r) real += a.is_real();
  EXPECT_EQ(real, 2);
}

TEST(RootIsolation, RefinementKeepsRoot) {
  auto r = isolate_roots(P({-1, -1, 0, 1}));
  for (auto& a : r) {
    for (int level = 1; level <= 3; ++level) {
      AlgebraicNumber b = refine(a, level);
      EXPECT_EQ(locate_root(a.minpoly, b.box), a.index);
      EXPECT_EQ(b, a);
    }
  }
}

TEST(RootIsolation, EqualityIsEquivalence) {
  auto a = isolate_roots(P({-3, 0, 1}));
  auto b = isolate_roots(P({-3, 0, 1}) * P({-2, 1}));
  int matches = 0;
  for (auto& x : a)
    for (auto& y : b) matches += (x == y);
  EXPECT_EQ(matches, 2);
  for (auto& x : b) {
    EXPECT_EQ(x, x);
    for (auto& y : b)
      for (auto& z : b)
        if (x == y && y == z) EXPECT_EQ(x, z);
  }
}

TEST(AlgebraicSets, Operations) {
  auto s = AlgebraicSet::from_polynomial(P({-2, 0, 1}) * P({1, 1}));
  EXPECT_EQ(s.size(), 3u);
  EXPECT_TRUE(s.contains(Rat(-1)));
  EXPECT_FALSE(s.contains(Rat(1)));
  auto t = AlgebraicSet::from_rationals({Rat(-1), Rat(5)});
  EXPECT_EQ(s.intersect(t), AlgebraicSet::from_rationals({Rat(-1)}));
  EXPECT_EQ(s.unite(t).size(), 4u);
  EXPECT_EQ(s.minus(t).size(), 2u);
  EXPECT_EQ(s.members().size(), 3u);
  EXPECT_EQ(to_string(AlgebraicSet::from_rationals({Rat(2), Rat(-2)})), "{-2, 2}");
}

TEST(LinearAlgebra, RankAndDeterminant) {
  Matrix<Rat> M{{1, 2, 3}, {2, 4, 6}, {Rat(1, 2), 0, 1}};
  EXPECT_EQ(matrix_rank_q(M), 2);
  EXPECT_EQ(matrix_rank_mod(M, 7), 2);
  EXPECT_EQ(determinant_q(M), 0);
  Matrix<Rat> N{{2, 1}, {1, Rat(1, 3)}};
  EXPECT_EQ(determinant_q(N), Rat(-1, 3));
  auto sel = select_minor_mod(M, 101);
  EXPECT_EQ(sel.rows.size(), 2u);
}
