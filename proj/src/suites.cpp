#include "pencil/suites.hpp"

#include <random>

#include "pencil/elimination.hpp"

namespace pencil {

namespace {

BPolyQ X() { return BPolyQ::X(Rat(0)); }
BPolyQ Y() { return BPolyQ::Y(Rat(0)); }

Fact fact(FactKind kind, const std::string& item, const std::string& name, const std::string& expected,
          const std::string& actual) {
  return Fact{kind, item, name, expected, actual, expected == actual};
}

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

// Agreement count over a batch, reported as "agreed/total" with the first
// disagreement appended.
struct Tally {
  long total = 0, agreed = 0;
  std::string first_miss;
  void record(bool ok, const std::string& what) {
    ++total;
    if (ok) ++agreed;
    else if (first_miss.empty()) first_miss = what;
  }
  Fact to_fact(const std::string& item, const std::string& name) const {
    std::string expected = std::to_string(total) + "/" + std::to_string(total);
    std::string actual = std::to_string(agreed) + "/" + std::to_string(total);
    if (!first_miss.empty()) actual += " first miss: " + first_miss;
    return Fact{FactKind::Golden, item, name, expected, actual, agreed == total && total > 0};
  }
};

}  // namespace

std::vector<Fact> suite_golden() {
  std::vector<Fact> out;
  for (auto& item : golden_corpus()) {
    for (auto& f : check_item(item)) out.push_back(f);
    if (item.rank_checks)
      for (auto& f : check_rank(item)) out.push_back(f);
  }
  return out;
}

std::vector<Fact> suite_identities(std::uint64_t seed, int count, int max_degree) {
  std::vector<Fact> out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> degree(2, max_degree);
  for (int i = 0; i < count; ++i) {
    int n = degree(rng);
    BPolyQ f = random_monic(rng, n);
    std::string item = "identities/" + std::to_string(seed) + "#" + std::to_string(i) + " " + to_string(f);
    RankReport r = rank_report(f);
    out.push_back(fact(FactKind::Rank, item, "zeta", "-1", std::to_string(r.zeta)));
    out.push_back(fact(FactKind::Rank, item, "jungian residual", "0", std::to_string(r.jungian_residual)));
    out.push_back(fact(FactKind::Rank, item, "euler residual", "0", std::to_string(r.euler_residual)));
    Mult crit = affine_total(f.dx(), f.dy());
    if (crit) {
      bool bezout = *crit <= static_cast<long>(n - 1) * (n - 1);
      out.push_back(fact(FactKind::Bound, item, "I(f_X, f_Y; A) <= (N-1)^2", "true", bezout ? "true" : "false"));
    }
  }
  return out;
}

std::vector<Fact> suite_oracles(std::uint64_t seed) {
  std::vector<Fact> out;
  const std::string item = "oracles/" + std::to_string(seed);
  PlanePoint o = PlanePoint::rational(0, 0);
  auto dim = [](std::optional<long> d) { return d ? std::to_string(*d) : std::string("over cap"); };
  out.push_back(fact(FactKind::Golden, item, "dim at origin of (X, Y)", "1", dim(oracle_local_dimension(X(), Y(), o))));
  out.push_back(fact(FactKind::Golden, item, "dim at origin of (Y - X^2, Y)", "2",
                     dim(oracle_local_dimension(Y() - X() * X(), Y(), o))));
  out.push_back(fact(FactKind::Golden, item, "dim at origin of (-3X^2, 2Y)", "2",
                     dim(oracle_local_dimension(BPolyQ::constant(Rat(-3)) * X() * X(), BPolyQ::constant(Rat(2)) * Y(), o))));

  std::mt19937_64 rng(seed);
  Tally fulton;
  for (int trial = 0; fulton.total < 200 && trial < 2000; ++trial) {
    BPolyQ g = random_poly(rng, 2 + trial % 2), h = random_poly(rng, 2);
    if (g.is_constant() || h.is_constant() || !poly_gcd(g, h).is_constant()) continue;
    for (auto& orbit : common_zeros(g, h)) {
      if (fulton.total >= 200) break;
      if (orbit.point.degree() > 4 || orbit.multiplicity > 12) continue;
      auto d = oracle_local_dimension(g, h, orbit.point);
      fulton.record(d == orbit.multiplicity, to_string(g) + " ; " + to_string(h) + " at " + to_string(orbit.point));
    }
  }
  out.push_back(fulton.to_fact(item, "Fulton = local quotient dimension"));

  Tally kernel;
  const std::uint32_t p = 1000003;
  while (kernel.total < 100) {
    BPolyQ g = random_poly(rng, 3), h = random_poly(rng, 2), k = random_poly(rng, 1);
    if (g.deg_y() < 1 || h.deg_y() < 1 || k.is_constant()) continue;
    BPoly<Zp> gm = mod(g, p), hm = mod(h, p);
    if (gm.deg_y() != g.deg_y() || hm.deg_y() != h.deg_y()) continue;
    std::vector<Zp> expected = reduce_poly_mod(resultant_y(g, h), p);
    UPoly<Zp> rm = resultant_y_generic(gm, hm);
    bool ok = true;
    for (int i = 0; i <= std::max(rm.deg(), static_cast<int>(expected.size()) - 1); ++i) {
      std::uint32_t a = i < static_cast<int>(expected.size()) ? expected[i].v : 0;
      std::uint32_t b = i <= rm.deg() ? rm[i].v : 0;
      ok = ok && a == b;
    }
    BPolyQ d = poly_gcd(g * k, h * k);
    ok = ok && normalize_lex(mod(d, p)) == normalize_lex(poly_gcd(mod(g * k, p), mod(h * k, p)));
    kernel.record(ok, to_string(g) + " ; " + to_string(h) + " ; " + to_string(k));
  }
  out.push_back(kernel.to_fact(item, "resultant and gcd = reduction mod p"));

  Tally cover;
  const std::uint32_t primes[] = {11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  for (int trial = 0; cover.total < 50 && trial < 500; ++trial) {
    BPolyQ f = random_monic(rng, 2 + trial % 3);
    CandidateCover cc = candidate_cover(f);
    for (auto q : primes) {
      if (!good_prime(f, cc, q)) continue;
      cover.record(covers(cc, oracle_primefield_scan(f, q)), to_string(f) + " mod " + std::to_string(q));
      break;
    }
  }
  out.push_back(cover.to_fact(item, "candidates cover prime-field scans"));

  auto list = [](const std::vector<std::uint32_t>& v) {
    std::string s = "{";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
  };
  PrimeFieldScan a = oracle_primefield_scan(Y().pow(3) - BPolyQ::constant(Rat(3)) * Y(), 7);
  out.push_back(fact(FactKind::Golden, item, "singular fibers of Y^3 - 3Y mod 7", "{2,5}", list(a.singular)));
  PrimeFieldScan b = oracle_primefield_scan(X() * Y() + BPolyQ::constant(Rat(1)), 5);
  out.push_back(fact(FactKind::Golden, item, "singular fibers of XY + 1 mod 5", "{1}", list(b.singular)));
  return out;
}

std::vector<Fact> suite_degenerate() {
  std::vector<Fact> out;
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    BPolyQ f = X().pow(static_cast<int>(p)) + Y().pow(static_cast<int>(p));
    std::string item = "X^" + std::to_string(p) + " + Y^" + std::to_string(p) + " mod " + std::to_string(p);
    out.push_back(fact(FactKind::Golden, item, "singset is all of k", "true", singset_prime_field(f, p).all_of_k ? "true" : "false"));
    PrimeFieldScan s = oracle_primefield_scan(f, p);
    out.push_back(fact(FactKind::Golden, item, "scan: every fiber multiple", std::to_string(p), std::to_string(s.multiple.size())));
  }
  RankReport r = rank_report(Y() * Y());
  out.push_back(fact(FactKind::Rank, "Y^2", "rho_pi", "-1", std::to_string(r.rho_pi)));
  out.push_back(fact(FactKind::Rank, "Y^2", "defset", to_string(AlgebraicSet::from_rationals({Rat(0)})), to_string(r.defset.set)));
  out.push_back(fact(FactKind::Rank, "Y^2", "zeta", "-1", std::to_string(r.zeta)));
  return out;
}

bool all_ok(const std::vector<Fact>& facts) {
  for (auto& f : facts)
    if (!f.ok) return false;
  return true;
}

std::string to_string(FactKind kind) {
  switch (kind) {
    case FactKind::Golden: return "golden";
    case FactKind::Rank: return "rank";
    case FactKind::Bound: return "bound";
  }
  return "";
}

}  // namespace pencil
