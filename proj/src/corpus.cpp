#include "pencil/corpus.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "pencil/absolute.hpp"
#include "pencil/elimination.hpp"

namespace pencil {

namespace {

BPolyQ X() { return BPolyQ::X(Rat(0)); }
BPolyQ Y() { return BPolyQ::Y(Rat(0)); }
BPolyQ C(const Rat& c) { return BPolyQ::constant(c); }

std::string rat_list(const std::vector<Rat>& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ")";
  return os.str();
}

void require_distinct(const std::vector<Rat>& a) {
  std::set<Rat> s(a.begin(), a.end());
  require(s.size() == a.size(), "parameters a_i must be pairwise distinct");
}

bool contains(const std::vector<Rat>& a, const Rat& x) { return std::find(a.begin(), a.end(), x) != a.end(); }

UPolyQ product_of_roots(const std::vector<Rat>& a) {
  UPolyQ p = UPolyQ::constant(Rat(1));
  for (auto& ai : a) p = p * upoly_q({-ai, Rat(1)});
  return p;
}

std::vector<Rat> shifted(const std::vector<Rat>& a, const Rat& z, size_t count) {
  std::vector<Rat> out;
  for (size_t i = 0; i < count; ++i) out.push_back(a[i] - z);
  return out;
}

Zp to_zp(const Rat& c, std::uint32_t p) {
  unsigned long den = mpz_fdiv_ui(c.get_den().get_mpz_t(), p);
  require(den != 0, "coefficient denominator divisible by p");
  Zp num(p, static_cast<std::int64_t>(mpz_fdiv_ui(c.get_num().get_mpz_t(), p)));
  return num * Zp(p, static_cast<std::int64_t>(den)).inverse();
}

bool unit_denominators(const BPolyQ& f, std::uint32_t p) {
  for (auto& [k, c] : f.terms())
    if (mpz_fdiv_ui(c.get_den().get_mpz_t(), p) == 0) return false;
  return true;
}

BPoly<Zp> reduce_mod(const BPolyQ& f, std::uint32_t p) {
  return f.map_coeffs(Zp(p, 0), [&](const Rat& c) { return to_zp(c, p); });
}

Zp eval_zp(const BPoly<Zp>& f, Zp x, Zp y) {
  Zp acc(x.p, 0);
  for (auto& [k, c] : f.terms()) acc += c * x.pow(k.first) * y.pow(k.second);
  return acc;
}

Fact make_fact(FactKind kind, const CorpusItem& item, const std::string& name, const std::string& expected,
               const std::string& actual) {
  return Fact{kind, item.id, name, expected, actual, expected == actual};
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string int_list(const std::vector<int>& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

BPolyQ random_xpoly(std::mt19937_64& rng, int deg, int range) {
  std::uniform_int_distribution<long> d(-range, range);
  BPolyQ p(Rat(0));
  for (int i = 0; i <= deg; ++i) p.add_term(i, 0, Rat(d(rng)));
  if (p.deg_x() < deg) p.add_term(deg, 0, Rat(1) - p.coeff(deg, 0));
  return p;
}

}  // namespace

CorpusItem gen_example1(const std::vector<Rat>& a, const Rat& z) {
  require_distinct(a);
  require(!contains(a, z), "z must differ from every a_i");
  CorpusItem it;
  it.id = "example1/m=" + std::to_string(a.size());
  it.parameters = "a=" + rat_list(a) + " z=" + z.get_str();
  it.f = BPolyQ::from_x(product_of_roots(a)) * Y() + X() - C(z);
  it.redset = AlgebraicSet::from_rationals(shifted(a, z, a.size()));
  it.tau = static_cast<long>(a.size()) + 1;
  it.composite = false;
  for (auto& c : shifted(a, z, a.size())) it.refined.push_back({c, "(1,1)"});
  it.rank_checks = true;
  return it;
}

CorpusItem gen_example2(const std::vector<Rat>& a, const std::vector<Rat>& b, int mu, const Rat& gamma, const Rat& z) {
  size_t m = a.size();
  require(m >= 1 && b.size() == m, "a and b need the same length m >= 1");
  require(mu >= 1 && mu <= static_cast<int>(m), "need 1 <= mu <= m");
  require_distinct(a);
  require_distinct(b);
  for (size_t i = 0; i < m; ++i) {
    if (static_cast<int>(i) < mu) require(b[i] == a[i], "b_i must equal a_i for i <= mu");
    else require(!contains(a, b[i]), "b_i must avoid the a_j for i > mu");
  }
  require(gamma != 0, "gamma must be nonzero");
  if (m == 1) {
    Rat disc = gamma * gamma - 4;
    require(disc > 0 && mpz_perfect_square_p(disc.get_num().get_mpz_t()) && mpz_perfect_square_p(disc.get_den().get_mpz_t()),
            "Z^2 + gamma Z + 1 must have distinct rational roots");
  }
  std::vector<Rat> head(a.begin(), a.begin() + mu);
  require(!contains(head, z), "z must differ from a_1, ..., a_mu");
  CorpusItem it;
  it.id = "example2/m=" + std::to_string(m) + ",mu=" + std::to_string(mu);
  it.parameters = "a=" + rat_list(a) + " b=" + rat_list(b) + " gamma=" + gamma.get_str() + " z=" + z.get_str();
  it.f = BPolyQ::from_x(product_of_roots(a)) * Y() * Y() + C(gamma) * BPolyQ::from_x(product_of_roots(b)) * Y() + X() - C(z);
  it.redset = AlgebraicSet::from_rationals(shifted(a, z, mu));
  it.tau = static_cast<long>(m) + 2;
  it.composite = false;
  it.rank_checks = true;
  return it;
}

CorpusItem gen_example3(const std::vector<Rat>& a, const Rat& beta1, const Rat& beta2, const Rat& betam, const Rat& z) {
  int m = static_cast<int>(a.size());
  require(m >= 2, "needs m >= 2");
  require_distinct(a);
  UPolyQ ap = product_of_roots(a);
  UPolyQ b = UPolyQ::x(Rat(0)).pow(m);
  b.set(m - 1, b[m - 1] + beta1);
  b.set(m - 2, b[m - 2] + beta2);
  if (m > 2) b.set(0, b[0] + betam);
  for (auto& ai : a) require(b.eval(ai) != 0, "b(a_i) must be nonzero");
  Rat alpha1 = ap[m - 1];
  if (m >= 3) require(beta1 != alpha1, "beta1 must differ from alpha1");
  else require(beta1 != 1 + alpha1, "beta1 must differ from 1 + alpha1");
  for (auto& ai : a) {
    UPolyQ q = exact_div(ap, upoly_q({-ai, Rat(1)}));
    Rat ai1 = q[m - 2];
    Rat ai2 = m >= 3 ? q[m - 3] : Rat(0);
    Rat bad = beta1 * ai1 - ai1 * ai1;
    if (m > 3) bad += ai2;
    else if (m == 3) bad += ai2 + 1;
    else bad -= ai1 + ai;
    require(beta2 != bad, "beta2 hits an excluded value");
  }
  CorpusItem it;
  it.id = "example3/m=" + std::to_string(m);
  it.parameters = "a=" + rat_list(a) + " beta=" + rat_list({beta1, beta2, betam}) + " z=" + z.get_str();
  it.f = BPolyQ::from_x(ap) * Y() * Y() + BPolyQ::from_x(b) * Y() + X() - C(z);
  it.redset = AlgebraicSet();
  it.tau = m + 2;
  it.composite = false;
  it.rank_checks = true;
  return it;
}

CorpusItem gen_example3_sampled(const std::vector<Rat>& a, const Rat& z) {
  for (int r = 0; r <= 4; ++r)
    for (int b1 = -r; b1 <= r; ++b1)
      for (int b2 = -r; b2 <= r; ++b2)
        for (int bm = -r; bm <= r; ++bm) {
          if (std::max({std::abs(b1), std::abs(b2), std::abs(bm)}) != r) continue;
          if (a.size() == 2 && bm != 0) continue;
          try {
            return gen_example3(a, Rat(b1), Rat(b2), Rat(bm), z);
          } catch (const PreconditionError&) {
          }
        }
  throw PreconditionError("no admissible small betas");
}

CorpusItem gen_example4(const std::vector<Rat>& a, const Rat& z) {
  require_distinct(a);
  int m = static_cast<int>(a.size());
  CorpusItem it;
  it.id = "example4/m=" + std::to_string(m);
  it.parameters = "a=" + rat_list(a) + " z=" + z.get_str();
  it.f = BPolyQ::from_x(product_of_roots(a)) * Y() * Y() + Y() + X().pow(m + 1) - C(z);
  it.redset = AlgebraicSet();
  it.tau = m + 1;
  it.composite = false;
  it.rank_checks = true;
  return it;
}

CorpusItem gen_example5(const std::vector<Rat>& a, const Rat& z) {
  require(a.size() >= 2, "needs m >= 2");
  require_distinct(a);
  require(z != 0, "z must be nonzero");
  CorpusItem it;
  it.id = "example5/m=" + std::to_string(a.size());
  it.parameters = "a=" + rat_list(a) + " z=" + z.get_str();
  BPolyQ f = C(Rat(1));
  for (auto& ai : a) f = f * (X() - C(ai) * Y());
  it.f = f + C(z);
  it.redset = AlgebraicSet::from_rationals({z});
  it.tau = static_cast<long>(a.size());
  it.composite = false;
  it.rank_checks = true;
  return it;
}

CorpusItem gen_example8(int u) {
  require(u >= 1, "needs u >= 1");
  CorpusItem it;
  it.id = "example8/u=" + std::to_string(u);
  it.parameters = "u=" + std::to_string(u);
  it.f = X() * X() + Y().pow(u);
  it.absolute_count = u % 2 ? 1 : 2;
  return it;
}

CorpusItem gen_klein() {
  BPolyQ x5y5 = X().pow(5) * Y().pow(5);
  BPolyQ H1 = X().pow(30) + Y().pow(30) - C(10005) * X().pow(10) * Y().pow(10) * (X().pow(10) + Y().pow(10)) +
              C(522) * x5y5 * (X().pow(20) - Y().pow(20));
  BPolyQ H2 = -(X().pow(20) + Y().pow(20) + C(494) * X().pow(10) * Y().pow(10)) + C(228) * x5y5 * (X().pow(10) - Y().pow(10));
  BPolyQ H3 = X() * Y() * (X().pow(10) - Y().pow(10) + C(11) * x5y5);
  CorpusItem it;
  it.id = "klein";
  it.parameters = "f=H1^2 w=H2^3";
  it.f = H1 * H1;
  it.w = H2.pow(3);
  it.identity = {it.f + it.w, C(1728) * H3.pow(5)};
  it.prim = {{Rat(0), 2}, {Rat(-1), 5}};
  it.prim_pattern = {2, 3, 5};
  return it;
}

CorpusItem gen_hyperbolas(int a1, int a2, int b1, int b2) {
  require(a1 >= 1 && a2 >= 1 && b1 >= 1 && b2 >= 1, "exponents must be positive");
  require(std::gcd(a1, a2) == 1 && std::gcd(b1, b2) == 1, "exponents must be coprime");
  CorpusItem it;
  it.id = "hyperbolas/" + std::to_string(a1) + "," + std::to_string(a2) + "|" + std::to_string(b1) + "," + std::to_string(b2);
  it.parameters = it.id.substr(11);
  it.f = X().pow(a1) * Y().pow(a2) - C(1);
  BPolyQ g = X().pow(b1) * Y().pow(b2) - C(1);
  it.redset = AlgebraicSet::from_rationals({Rat(-1)});
  it.refined = {{Rat(-1), int_list(a1 < a2 ? std::vector<int>{a1, a2} : std::vector<int>{a2, a1})}};
  bool same = std::minmax(a1, a2) == std::minmax(b1, b2);
  it.refset_partner = {g, same};
  it.composite = false;
  return it;
}

CorpusItem gen_structured_random(std::uint64_t seed, int degree_bound, RandomKind kind) {
  require(degree_bound >= 2, "degree bound must be at least 2");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> small(-4, 4);
  CorpusItem it;
  it.parameters = "seed=" + std::to_string(seed) + " degree<=" + std::to_string(degree_bound);
  Rat c0(small(rng), 1 + std::uniform_int_distribution<long>(0, 2)(rng));
  int dx = std::max(1, degree_bound - 2);
  if (kind == RandomKind::Product) {
    // (Y + p)^e (Y + q) + c0 with p - q nonconstant.
    BPolyQ p = random_xpoly(rng, dx, 3), q;
    do q = random_xpoly(rng, std::uniform_int_distribution<int>(0, dx)(rng), 3);
    while ((p - q).deg_x() < 1);
    int e = degree_bound >= 3 && std::uniform_int_distribution<int>(0, 2)(rng) == 0 ? 2 : 1;
    it.id = "random-product/" + std::to_string(seed);
    it.f = (Y() + p).pow(e) * (Y() + q) + C(c0);
    it.refined = {{c0, e == 1 ? "(1,1)" : "(1,2)"}};
    it.rank_checks = true;
  } else if (kind == RandomKind::Power) {
    int mu = std::uniform_int_distribution<int>(2, std::min(3, degree_bound))(rng);
    BPolyQ h = Y() + random_xpoly(rng, std::max(1, degree_bound / mu - 0), 3);
    Rat u(1 + std::uniform_int_distribution<long>(0, 3)(rng));
    it.id = "random-power/" + std::to_string(seed);
    it.f = C(u) * h.pow(mu) + C(c0);
    it.prim = {{c0, mu}};
    it.composite = true;
  } else {
    std::uniform_int_distribution<long> d(-3, 3);
    BPolyQ f = Y().pow(degree_bound);
    for (int a = 0; a < degree_bound; ++a)
      for (int b = 0; a + b < degree_bound; ++b) f.add_term(a, b, Rat(d(rng)));
    it.id = "random-smooth/" + std::to_string(seed);
    it.f = f;
    it.rank_checks = true;
  }
  return it;
}

std::vector<CorpusItem> golden_corpus() {
  std::vector<CorpusItem> out;
  out.push_back(gen_example1({}, Rat(0)));
  out.push_back(gen_example1({Rat(0)}, Rat(1)));
  out.push_back(gen_example1({Rat(0), Rat(1)}, Rat(2)));
  out.push_back(gen_example1({Rat(0), Rat(1), Rat(-1)}, Rat(3)));
  out.push_back(gen_example2({Rat(0), Rat(1)}, {Rat(0), Rat(2)}, 1, Rat(1), Rat(3)));
  out.push_back(gen_example2({Rat(0), Rat(1), Rat(2)}, {Rat(0), Rat(1), Rat(-1)}, 2, Rat(1), Rat(5)));
  out.push_back(gen_example3_sampled({Rat(0), Rat(1)}, Rat(2)));
  out.push_back(gen_example3_sampled({Rat(0), Rat(1), Rat(-1)}, Rat(1)));
  out.push_back(gen_example4({Rat(0)}, Rat(0)));
  out.push_back(gen_example4({Rat(0), Rat(2)}, Rat(1)));
  out.push_back(gen_example5({Rat(1), Rat(-1)}, Rat(1)));
  out.push_back(gen_example5({Rat(0), Rat(1), Rat(2)}, Rat(-2)));
  out.push_back(gen_hyperbolas(1, 2, 1, 3));
  out.push_back(gen_hyperbolas(1, 2, 2, 1));
  out.push_back(gen_hyperbolas(2, 3, 1, 6));
  for (int u = 1; u <= 7; ++u) out.push_back(gen_example8(u));
  out.push_back(gen_klein());
  return out;
}

std::vector<Fact> check_item(const CorpusItem& item) {
  std::vector<Fact> out;
  auto add = [&](const std::string& name, const std::string& expected, const std::string& actual) {
    out.push_back(make_fact(FactKind::Golden, item, name, expected, actual));
  };
  if (item.identity) add("identity", "holds", item.identity->first == item.identity->second ? "holds" : "fails");
  if (item.absolute_count) add("absolute factors", std::to_string(*item.absolute_count), std::to_string(absolute_factor_count(item.f)));
  PencilInput in = normalize(make_pencil(item.f, item.w));
  bool wants_redset = item.redset || item.tau || !item.refined.empty();
  if (item.composite) add("composite", bool_str(*item.composite), bool_str(is_composite(in).composite));
  if (wants_redset) {
    RedsetResult r = redset_refined(in);
    if (item.redset) add("redset", to_string(*item.redset), r.composite ? "composite" : to_string(r.set));
    for (auto& [c, seq] : item.refined) {
      std::string got = "absent";
      for (auto& fib : r.fibers)
        if (fib.minpoly.size() == 2 && AlgebraicSet::from_polynomial(from_zvec(fib.minpoly)).contains(c)) got = exponents_string(fib);
      add("e(" + c.get_str() + ")", seq, got);
    }
    if (item.tau) {
      add("places at infinity", std::to_string(*item.tau), std::to_string(tau_places_at_infinity(item.f)));
      if (!r.composite && in.special()) {
        PlacesBound b = redset_places_bound(in, r);
        add("generic places at infinity", std::to_string(*item.tau), std::to_string(b.tau));
        out.push_back(make_fact(FactKind::Bound, item, "|redset| <= tau - 1", "true", bool_str(b.holds && b.stable)));
      }
    }
  }
  if (!item.prim.empty() || !item.prim_pattern.empty()) {
    PrimsetResult p = primset(in);
    for (auto& [c, mu] : item.prim) {
      std::string got = "absent";
      for (auto& m : p.members)
        if (!m.at_infinity && m.minpoly.size() == 2 && AlgebraicSet::from_polynomial(from_zvec(m.minpoly)).contains(c))
          got = std::to_string(m.mu);
      add("mu(" + c.get_str() + ")", std::to_string(mu), got);
    }
    if (!item.prim_pattern.empty()) {
      std::vector<int> mus;
      for (auto& m : p.members) mus.push_back(m.mu);
      std::sort(mus.begin(), mus.end());
      add("primset_+ exponents", int_list(item.prim_pattern), int_list(mus));
      out.push_back(make_fact(FactKind::Bound, item, "|primset_+| <= 4", "true", bool_str(p.plus_size() <= 4)));
      out.push_back(make_fact(FactKind::Bound, item, "|primset_+|", std::to_string(item.prim_pattern.size()), std::to_string(p.plus_size())));
    }
  }
  if (item.refset_partner) {
    RefsetComparison rc = refset_equal(item.f, item.refset_partner->first);
    add("refset equal", bool_str(item.refset_partner->second), bool_str(rc.equal));
  }
  return out;
}

std::vector<Fact> check_rank(const CorpusItem& item) {
  std::vector<Fact> out;
  if (!item.w.is_constant()) return out;
  auto add = [&](FactKind kind, const std::string& name, const std::string& expected, const std::string& actual) {
    out.push_back(make_fact(kind, item, name, expected, actual));
  };
  RankReport r = rank_report(item.f);
  if (r.rho_a_squarefree) add(FactKind::Rank, "squarefree rho_a formula", std::to_string(r.rho_a), std::to_string(*r.rho_a_squarefree));
  for (size_t i = 0; i < r.rho_a_generic.size(); ++i)
    add(FactKind::Rank, "rho_a at generic c #" + std::to_string(i + 1), std::to_string(r.rho_pi), std::to_string(r.rho_a_generic[i]));
  RankData rd(r.f);
  std::mt19937_64 rng(std::hash<std::string>{}(item.id));
  std::uniform_int_distribution<long> num(-40, 40), den(1, 9);
  int tried = 0;
  bool dominated = true;
  while (tried < 5) {
    Rat c(num(rng), den(rng));
    c.canonicalize();
    if (r.multset.contains(c)) continue;
    ++tried;
    if (rd.at(c) > r.rho_pi) dominated = false;
  }
  add(FactKind::Rank, "rho_pi >= rho_a(f - c) at 5 values", "true", bool_str(dominated));
  add(FactKind::Rank, "euler residual", "0", std::to_string(r.euler_residual));
  add(FactKind::Rank, "zeta", std::to_string(r.strict_star ? -1 : -r.v_inf), std::to_string(r.zeta));
  add(FactKind::Rank, "fiber lower bound", "true", bool_str(r.fiber_lower_bound));
  add(FactKind::Bound, "singset \\ multset in defset", "true", bool_str(r.singset_minus_multset_in_defset));
  add(FactKind::Bound, "|defset| <= 1 + rho_a + deg h", "true", bool_str(r.defset_bound_holds()));
  add(FactKind::Bound, "|singset| <= 1 + rho_a + 2 deg h", "true", bool_str(r.singset_bound_holds()));
  return out;
}

std::optional<long> oracle_local_dimension(const BPolyQ& g, const BPolyQ& h, const PlanePoint& q, int cap) {
  require(!q.at_infinity, "local dimension at a point at infinity");
  BPoly<NF> G = lift(g, q.field).translate(q.x, q.y), H = lift(h, q.field).translate(q.x, q.y);
  NF zero(q.field, Rat(0));
  long previous = -1;
  for (int D = 0;; ++D) {
    std::vector<std::pair<int, int>> mons;
    for (int t = 0; t <= D; ++t)
      for (int i = 0; i <= t; ++i) mons.push_back({i, t - i});
    auto index = [&](int i, int j) { return (i + j) * (i + j + 1) / 2 + i; };
    Matrix<NF> M;
    for (const BPoly<NF>* P : {&G, &H})
      for (auto& [a, b] : mons) {
        std::vector<NF> row(mons.size(), zero);
        bool any = false;
        for (auto& [k, c] : P->terms()) {
          int i = k.first + a, j = k.second + b;
          if (i + j > D) continue;
          row[index(i, j)] = c;
          any = true;
        }
        if (any) M.push_back(std::move(row));
      }
    long dim = static_cast<long>(mons.size()) - (M.empty() ? 0 : matrix_rank(std::move(M)));
    if (dim == previous) return dim;
    if (dim > cap) return std::nullopt;
    previous = dim;
  }
}

PrimeFieldScan oracle_primefield_scan(const BPolyQ& f, std::uint32_t p) {
  require(is_prime_u32(p) && p <= 101, "scan needs a prime p <= 101");
  require(!f.is_constant(), "scan of a constant");
  require(unit_denominators(f, p), "bad prime: a denominator vanishes");
  BPoly<Zp> F = reduce_mod(f, p);
  require(!F.is_constant(), "bad prime: f is constant modulo p");
  require(F.deg_y() == f.deg_y() && F.deg_x() == f.deg_x(), "bad prime: a leading coefficient vanishes");
  BPoly<Zp> Fx = F.dx(), Fy = F.dy();
  PrimeFieldScan out;
  out.p = p;
  out.all_singular = Fx.is_zero() && Fy.is_zero();
  std::set<std::uint32_t> sing;
  for (std::uint32_t x = 0; x < p; ++x)
    for (std::uint32_t y = 0; y < p; ++y) {
      Zp X0(p, x), Y0(p, y);
      if (eval_zp(Fx, X0, Y0).v == 0 && eval_zp(Fy, X0, Y0).v == 0) sing.insert(eval_zp(F, X0, Y0).v);
    }
  out.singular.assign(sing.begin(), sing.end());
  for (std::uint32_t c = 0; c < p; ++c) {
    BPoly<Zp> Fc = F - BPoly<Zp>::constant(Zp(p, c));
    BPoly<Zp> g = poly_gcd(poly_gcd(Fc, Fc.dx()), Fc.dy());
    if (!g.is_constant()) out.multiple.push_back(c);
  }
  return out;
}

CandidateCover candidate_cover(const BPolyQ& f) {
  require(!f.is_constant() && f.deg_y() >= 1 && f.lc_y().deg() == 0, "cover needs a constant leading coefficient in Y");
  CandidateCover cc;
  cc.D = resultant_y_shifted(f.dy(), f);
  BPolyQ P = cc.D.swap_xy();
  cc.Phi = P.deg_y() >= 1 ? resultant_y(P, P.dy()) : UPolyQ::constant(Rat(1));
  return cc;
}

bool good_prime(const BPolyQ& f, const CandidateCover& cc, std::uint32_t p) {
  if (!unit_denominators(f, p) || !unit_denominators(cc.D, p) || !has_unit_denominators(cc.Phi, p)) return false;
  Rat lead = Rat(f.deg_y()) * f.lc_y()[0];
  if (to_zp(lead, p).v == 0) return false;
  for (auto& c : reduce_poly_mod(cc.Phi, p))
    if (c.v != 0) return true;
  return false;
}

bool covers(const CandidateCover& cc, const PrimeFieldScan& scan) {
  std::uint32_t p = scan.p;
  std::vector<Zp> phi = reduce_poly_mod(cc.Phi, p);
  BPoly<Zp> D = reduce_mod(cc.D, p);
  auto covered = [&](std::uint32_t c) {
    Zp acc(p, 0), cz(p, c);
    for (size_t i = phi.size(); i-- > 0;) acc = acc * cz + phi[i];
    if (acc.v == 0) return true;
    return D.eval_y(cz).is_zero();
  };
  for (auto c : scan.singular)
    if (!covered(c)) return false;
  for (auto c : scan.multiple)
    if (!covered(c)) return false;
  return true;
}

}  // namespace pencil
