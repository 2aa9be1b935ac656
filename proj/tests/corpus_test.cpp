#include <gtest/gtest.h>

#include <random>

#include "pencil/corpus.hpp"
#include "pencil/elimination.hpp"

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

BPolyQ random_monic(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<long> d(-3, 3);
  BPolyQ f = Y().pow(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; a + b < n; ++b) f.add_term(a, b, Rat(d(rng)));
  return f;
}

BPoly<Zp> mod(const BPolyQ& f, std::uint32_t p) {
  return f.map_coeffs(Zp(p, 0), [&](const Rat& c) {
    Zp num(p, static_cast<std::int64_t>(mpz_fdiv_ui(c.get_num().get_mpz_t(), p)));
    return num * Zp(p, static_cast<std::int64_t>(mpz_fdiv_ui(c.get_den().get_mpz_t(), p))).inverse();
  });
}

void expect_all_ok(const std::vector<Fact>& facts) {
  for (auto& f : facts) EXPECT_TRUE(f.ok) << f.item << " " << f.name << ": expected " << f.expected << " got " << f.actual;
}

}  // namespace

TEST(Corpus, GoldenFactsHold) {
  for (auto& item : golden_corpus()) {
    SCOPED_TRACE(item.id);
    expect_all_ok(check_item(item));
  }
}

TEST(Corpus, RankFactsHold) {
  for (auto& item : golden_corpus()) {
    if (!item.rank_checks) continue;
    SCOPED_TRACE(item.id);
    expect_all_ok(check_rank(item));
  }
}

TEST(Corpus, Example2CountsOnlyMatchedRoots) {
  CorpusItem it = gen_example2({Rat(0), Rat(1), Rat(2)}, {Rat(0), Rat(5), Rat(7)}, 1, Rat(2), Rat(4));
  EXPECT_EQ(to_string(*it.redset), to_string(AlgebraicSet::from_rationals({Rat(-4)})));
  expect_all_ok(check_item(it));
}

TEST(Corpus, GeneratorsRejectBadParameters) {
  EXPECT_THROW(gen_example1({Rat(0), Rat(0)}, Rat(1)), PreconditionError);
  EXPECT_THROW(gen_example1({Rat(1)}, Rat(1)), PreconditionError);
  EXPECT_THROW(gen_example2({Rat(0)}, {Rat(0)}, 1, Rat(1), Rat(2)), PreconditionError);
  EXPECT_THROW(gen_example5({Rat(0), Rat(1)}, Rat(0)), PreconditionError);
  EXPECT_THROW(gen_hyperbolas(2, 4, 1, 1), PreconditionError);
}

TEST(Corpus, Example8Parity) {
  for (int u = 1; u <= 8; ++u) expect_all_ok(check_item(gen_example8(u)));
}

TEST(Corpus, StructuredRandom) {
  for (std::uint64_t seed = 1; seed <= 12; ++seed)
    for (auto kind : {RandomKind::Product, RandomKind::Power, RandomKind::Smooth}) {
      CorpusItem it = gen_structured_random(seed, 4, kind);
      SCOPED_TRACE(it.id);
      expect_all_ok(check_item(it));
      if (it.rank_checks) expect_all_ok(check_rank(it));
    }
}

TEST(Oracle, LocalDimensionExamples) {
  PlanePoint o = PlanePoint::rational(0, 0);
  EXPECT_EQ(oracle_local_dimension(X(), Y(), o), 1);
  EXPECT_EQ(oracle_local_dimension(Y() - X() * X(), Y(), o), 2);
  EXPECT_EQ(oracle_local_dimension(C(-3) * X() * X(), C(2) * Y(), o), 2);
  EXPECT_EQ(oracle_local_dimension(X() * Y(), Y(), o, 12), std::nullopt);
}

TEST(Oracle, FultonAgreesWithLocalDimension) {
  std::mt19937_64 rng(2024);
  int compared = 0;
  for (int trial = 0; trial < 200; ++trial) {
    BPolyQ g = random_poly(rng, 2 + trial % 2), h = random_poly(rng, 2);
    if (g.is_constant() || h.is_constant() || !poly_gcd(g, h).is_constant()) continue;
    for (auto& orbit : common_zeros(g, h)) {
      if (orbit.point.degree() > 4 || orbit.multiplicity > 12) continue;
      EXPECT_EQ(oracle_local_dimension(g, h, orbit.point), orbit.multiplicity) << to_string(g) << " ; " << to_string(h);
      ++compared;
    }
  }
  EXPECT_GT(compared, 100);
}

TEST(Oracle, FultonAgreesOnTangentialContact) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    BPolyQ p = random_poly(rng, 2);
    p.add_term(0, 0, -p.coeff(0, 0));
    p.add_term(1, 0, -p.coeff(1, 0));
    int k = 2 + trial % 5;
    BPolyQ g = Y() - X().pow(k) + p * Y(), h = Y();
    PlanePoint o = PlanePoint::rational(0, 0);
    EXPECT_EQ(oracle_local_dimension(g, h, o), intersection_multiplicity(g, h, o));
  }
}

TEST(Oracle, PrimeFieldScanExamples) {
  PrimeFieldScan a = oracle_primefield_scan(Y().pow(3) - C(3) * Y(), 7);
  EXPECT_EQ(a.singular, (std::vector<std::uint32_t>{2, 5}));
  EXPECT_EQ(a.multiple, (std::vector<std::uint32_t>{2, 5}));
  PrimeFieldScan b = oracle_primefield_scan(X() * Y() + C(1), 5);
  EXPECT_EQ(b.singular, (std::vector<std::uint32_t>{1}));
  EXPECT_TRUE(b.multiple.empty());
  PrimeFieldScan c = oracle_primefield_scan(X().pow(5) + Y().pow(5), 5);
  EXPECT_TRUE(c.all_singular);
  EXPECT_EQ(c.multiple.size(), 5u);
  EXPECT_THROW(oracle_primefield_scan(X() * Y() * BPolyQ::constant(Rat(1, 5)) + C(1), 5), PreconditionError);
}

TEST(Oracle, CandidatesCoverPrimeFieldScans) {
  std::mt19937_64 rng(99);
  const std::uint32_t primes[] = {11, 13, 17, 19, 23, 29, 31, 37};
  int checked = 0;
  for (int trial = 0; trial < 50; ++trial) {
    BPolyQ f = random_monic(rng, 2 + trial % 3);
    CandidateCover cc = candidate_cover(f);
    for (auto p : primes) {
      if (!good_prime(f, cc, p)) continue;
      EXPECT_TRUE(covers(cc, oracle_primefield_scan(f, p))) << to_string(f) << " mod " << p;
      ++checked;
      break;
    }
  }
  EXPECT_GT(checked, 40);
}

TEST(Oracle, KernelMatchesModularArithmetic) {
  std::mt19937_64 rng(5);
  const std::uint32_t p = 1000003;
  for (int trial = 0; trial < 100; ++trial) {
    BPolyQ g = random_poly(rng, 3), h = random_poly(rng, 2), k = random_poly(rng, 1);
    if (g.deg_y() < 1 || h.deg_y() < 1) continue;
    UPolyQ r = resultant_y(g, h);
    BPoly<Zp> gm = mod(g, p), hm = mod(h, p);
    if (gm.deg_y() != g.deg_y() || hm.deg_y() != h.deg_y()) continue;
    UPoly<Zp> rm = resultant_y_generic(gm, hm);
    std::vector<Zp> expected = reduce_poly_mod(r, p);
    for (int i = 0; i <= std::max(rm.deg(), static_cast<int>(expected.size()) - 1); ++i) {
      std::uint32_t a = i < static_cast<int>(expected.size()) ? expected[i].v : 0;
      std::uint32_t b = i <= rm.deg() ? rm[i].v : 0;
      EXPECT_EQ(a, b) << "resultant coefficient " << i;
    }
    if (k.is_constant()) continue;
    BPolyQ d = poly_gcd(g * k, h * k);
    EXPECT_EQ(normalize_lex(mod(d, p)), normalize_lex(poly_gcd(mod(g * k, p), mod(h * k, p))));
  }
}
