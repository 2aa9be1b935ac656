#include "pencil/sets.hpp"

#include <algorithm>
#include <sstream>

#include "pencil/critical.hpp"
#include "pencil/intersections.hpp"

namespace pencil {

namespace {

constexpr int kMaxNormalizingShears = 64;

bool proper_in_y(const BPolyQ& g) { return g.is_constant() || g.deg_y() == g.total_degree(); }

// q(g) for a univariate q.
BPolyQ compose(const UPolyQ& q, const BPolyQ& g) {
  BPolyQ r(Rat(0));
  for (int i = q.deg(); i >= 0; --i) r = r * g + BPolyQ::constant(q[i]);
  return r;
}

bool same_up_to_unit(const BPolyQ& a, const BPolyQ& b) { return normalize_lex(a) == normalize_lex(b); }

// Minimal polynomial of an element of a number field.
ZVec element_minpoly(const NF& a) {
  return canonical_factor(minpoly_mod(a.v, a.K->minpoly));
}

template <class E>
RefinedFiber fiber_from(const BPoly<E>& F) {
  RefinedFiber r;
  for (auto& [layer, e] : squarefree_decompose(F).factors) {
    if (layer.is_constant()) continue;
    FiberLayer L;
    L.e = e;
    L.y_degree = layer.deg_y();
    L.count = factor_count_upper_bound(layer) == 1 ? 1 : absolute_factor_count(layer);
    r.layers.push_back(L);
  }
  return r;
}

std::string sequence_string(const std::vector<int>& e) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  os << ")";
  return os.str();
}

std::string member_label(const RefinedFiber& r) {
  if (r.at_infinity) return "inf";
  return to_string(AlgebraicSet::from_polynomial(from_zvec(r.minpoly)));
}

}  // namespace

BPolyQ PencilInput::apply(const BPolyQ& g) const {
  BPolyQ r = swapped ? g.swap_xy() : g;
  return lambda ? r.shear_x(Rat(lambda)) : r;
}

PencilInput make_pencil(const BPolyQ& f, const BPolyQ& w) {
  require(!f.is_constant(), "pencil needs a nonconstant f");
  require(!w.is_zero(), "pencil needs a nonzero w");
  require(f.total_degree() >= w.total_degree(), "pencil needs deg f >= deg w");
  require(poly_gcd(f, w).is_constant(), "f and w have a common factor");
  PencilInput in;
  if (w.is_constant()) {
    in.f = inv(w.constant_term()) * f;
    in.w = BPolyQ::constant(Rat(1));
    return in;
  }
  in.f = f;
  in.w = w;
  auto key = w.lex_lead_key();
  Rat a = f.coeff(key.first, key.second) / w.lex_lc();
  in.dependent = (f - a * w).is_constant();
  return in;
}

PencilInput make_pencil(const BPolyQ& f) { return make_pencil(f, BPolyQ::constant(Rat(1))); }

PencilInput normalize(const PencilInput& in) {
  if (in.normalized) return in;
  auto attempt = [&](bool swapped, long lambda) -> std::optional<PencilInput> {
    PencilInput out = in;
    out.swapped = swapped;
    out.lambda = lambda;
    out.f = out.apply(in.f);
    out.w = out.apply(in.w);
    if (!proper_in_y(out.f) || !proper_in_y(out.w)) return std::nullopt;
    out.normalized = true;
    return out;
  };
  if (auto r = attempt(false, 0)) return *r;
  if (auto r = attempt(true, 0)) return *r;
  for (long lambda = 1; lambda <= kMaxNormalizingShears; ++lambda)
    if (auto r = attempt(false, lambda)) return *r;
  throw InternalError("no shear makes the pencil proper in Y");
}

SingsetResult singset(const PencilInput& in) {
  SingsetResult out;
  CriticalGenerators cg = critical_generators(in.f, in.w);
  require(!cg.A.is_zero() || !cg.B.is_zero(), "critical ideal is zero");
  CurveValues curve = values_along(in.f, in.w, cg.G);
  UPolyQ values = curve.values;
  out.infinity = curve.infinity;
  BPolyQ A = cg.G.is_zero() ? cg.A : exact_div(cg.A, cg.G);
  BPolyQ B = cg.G.is_zero() ? cg.B : exact_div(cg.B, cg.G);
  for (auto& z : common_zeros(A, B)) {
    NF wv = eval_at(in.w, z.point), fv = eval_at(in.f, z.point);
    if (is_zero(wv)) {
      if (!is_zero(fv)) out.infinity = true;
      continue;
    }
    values = values * from_zvec(element_minpoly(fv * inv(wv)));
  }
  if (values.deg() > 0) out.set = AlgebraicSet::from_polynomial(squarefree_part_q(values));
  return out;
}

SingsetResult singset_prime_field(const BPolyQ& f, std::uint32_t p) {
  require(is_prime_u32(p), "modulus must be prime");
  auto vanishes_mod_p = [&](const BPolyQ& g) {
    for (auto& [k, c] : g.terms()) {
      Int num = c.get_num(), den = c.get_den();
      require(den % p != 0, "coefficient denominator divisible by p");
      if (num % p != 0) return false;
    }
    return true;
  };
  if (!vanishes_mod_p(f.dx()) || !vanishes_mod_p(f.dy()))
    throw PreconditionError("prime-field singset is only decided when both partials vanish");
  SingsetResult out;
  out.all_of_k = true;
  return out;
}

MultsetResult multset(const PencilInput& in) {
  MultsetResult out;
  CriticalGenerators cg = critical_generators(in.f, in.w);
  out.hhat = in.special() ? poly_gcd(in.f.dx(), in.f.dy()) : cg.G;
  CurveValues curve = values_along(in.f, in.w, out.hhat);
  out.infinity = curve.infinity;
  if (curve.values.deg() > 0) out.set = AlgebraicSet::from_polynomial(curve.values);
  for (const Rat& c : out.set.rational_members())
    out.witnesses.push_back({c, poly_gcd(out.hhat, in.f - c * in.w)});
  if (in.special()) {
    BPolyQ prod = BPolyQ::constant(Rat(1));
    for (auto& q : out.set.factors()) prod = prod * poly_gcd(out.hhat, compose(from_zvec(q), in.f));
    out.product_identity = same_up_to_unit(prod, out.hhat);
  }
  return out;
}

std::vector<int> RefinedFiber::exponents() const {
  std::vector<int> e;
  for (auto& L : layers)
    for (long i = 0; i < L.count; ++i) e.push_back(L.e);
  std::sort(e.begin(), e.end());
  return e;
}

long RefinedFiber::weighted_count() const {
  long s = 0;
  for (auto& L : layers) s += L.count * L.e;
  return s;
}

std::string exponents_string(const RefinedFiber& r) { return sequence_string(r.exponents()); }

std::string to_string(const RefinedFiber& r) { return member_label(r) + " e=" + exponents_string(r); }

RefinedFiber analyze_fiber(const BPolyQ& f, const BPolyQ& w, const ZVec& q) {
  RefinedFiber r;
  r.minpoly = q;
  UPolyQ qq = from_zvec(q);
  if (qq.deg() == 1) {
    Rat c = -qq[0] / qq[1];
    RefinedFiber s = fiber_from(f - c * w);
    r.layers = s.layers;
    return r;
  }
  auto K = make_number_field(qq);
  RefinedFiber s = fiber_from(lift(f, K) - NF::generator(K) * lift(w, K));
  r.layers = s.layers;
  return r;
}

RefinedFiber analyze_fiber_at_infinity(const BPolyQ& w) {
  RefinedFiber r = w.is_constant() ? RefinedFiber{} : fiber_from(w);
  r.at_infinity = true;
  return r;
}

RedsetResult redset_refined(const PencilInput& in) {
  RedsetResult out;
  ReducibilityCandidates rc = pencil_reducibility_candidates(in.f, in.w);
  out.generic_count = rc.generic_count;
  if (rc.degenerate) {
    out.composite = true;
    return out;
  }
  out.candidates = rc.candidates.unite(multset(in).set);
  std::vector<ZVec> members;
  for (auto& q : out.candidates.factors()) {
    RefinedFiber r = analyze_fiber(in.f, in.w, q);
    if (!r.reducible()) continue;
    members.push_back(q);
    out.fibers.push_back(r);
  }
  for (auto& q : members) out.set = out.set.unite(AlgebraicSet::from_polynomial(from_zvec(q)));
  if (!in.special()) {
    RefinedFiber r = analyze_fiber_at_infinity(in.w);
    out.infinity = r.reducible();
    out.fiber_at_infinity = r;
  }
  return out;
}

PlacesBound redset_places_bound(const PencilInput& in, const RedsetResult& r) {
  require(in.special(), "places bound for a special pencil");
  AlgebraicSet avoid = r.candidates.unite(multset(in).set);
  std::vector<long> taus;
  for (long k = 0; taus.size() < 2; ++k) {
    Rat c0(97 + 34 * k, 7);
    if (avoid.contains(c0)) continue;
    taus.push_back(tau_places_at_infinity(in.f - BPolyQ::constant(c0)));
  }
  PlacesBound out;
  out.tau = taus[0];
  out.stable = taus[0] == taus[1];
  out.holds = static_cast<long>(r.set.size()) <= out.tau - 1;
  return out;
}

PrimsetResult primset(const PencilInput& in) {
  PrimsetResult out;
  auto consider = [&](const RefinedFiber& r) {
    if (r.layers.size() != 1 || r.layers[0].e < 2) return;
    PrimMember m{r.minpoly, r.at_infinity, r.layers[0].e, r.layers[0].count};
    out.members.push_back(m);
    if (r.at_infinity) {
      out.prim_infinity = true;
      out.uni_infinity = m.count == 1;
      return;
    }
    AlgebraicSet one = AlgebraicSet::from_polynomial(from_zvec(r.minpoly));
    out.primset = out.primset.unite(one);
    if (m.count == 1) out.uniset = out.uniset.unite(one);
  };
  MultsetResult ms = multset(in);
  for (auto& q : ms.set.factors()) consider(analyze_fiber(in.f, in.w, q));
  if (!in.special() && ms.infinity) consider(analyze_fiber_at_infinity(in.w));
  return out;
}

CompositeResult is_composite(const PencilInput& in) {
  CompositeResult out;
  out.generic_count = generic_factor_count(in.f, in.w);
  out.composite = out.generic_count > 1;
  MultsetResult ms = multset(in);
  bool multset_empty = ms.set.empty() && !ms.infinity;
  out.multset_check = !(multset_empty && out.composite);
  return out;
}

RefsetComparison refset_equal(const BPolyQ& f, const BPolyQ& g) {
  RefsetComparison out;
  std::vector<std::pair<std::string, std::string>> sides[2];
  int i = 0;
  for (const BPolyQ* p : {&f, &g}) {
    require(!p->is_constant() && absolute_factor_count(*p) == 1, "refset comparison needs absolutely irreducible input");
    RedsetResult rr = redset_refined(normalize(make_pencil(*p)));
    require(!rr.composite, "refset comparison needs a noncomposite polynomial");
    for (auto& r : rr.fibers) {
      std::string seq = exponents_string(r);
      auto roots = AlgebraicSet::from_polynomial(from_zvec(r.minpoly)).members();
      for (auto& c : roots) sides[i].push_back({seq, to_string(c)});
    }
    std::sort(sides[i].begin(), sides[i].end());
    ++i;
  }
  for (auto& [seq, label] : sides[0]) out.left.push_back(seq);
  for (auto& [seq, label] : sides[1]) out.right.push_back(seq);
  out.equal = out.left == out.right;
  if (out.equal)
    for (size_t k = 0; k < sides[0].size(); ++k) out.bijection.push_back({sides[0][k].second, sides[1][k].second});
  return out;
}

}  // namespace pencil
