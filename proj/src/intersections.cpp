#include "pencil/intersections.hpp"

#include "pencil/elimination.hpp"

namespace pencil {

namespace {

constexpr int kMaxShears = 64;

// 0, 1, -1, 2, -2, ...
Rat shear_value(int i) { return i == 0 ? Rat(0) : (i % 2 ? Rat((i + 1) / 2) : Rat(-(i / 2))); }

bool coprime(const BPolyQ& g, const BPolyQ& h) { return poly_gcd(g, h).is_constant(); }

// Remainder of h modulo g, which is monic in Y.
BPolyQ rem_y_monic(const BPolyQ& h, const BPolyQ& g) {
  RecPoly<Rat> a = h.y_coeffs(), b = g.y_coeffs();
  int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db) {
    int da = static_cast<int>(a.size()) - 1;
    UPolyQ q = a.back();
    for (int i = 0; i <= db; ++i) a[da - db + i] = a[da - db + i] - q * b[i];
    while (!a.empty() && a.back().is_zero()) a.pop_back();
  }
  return BPolyQ::from_y_coeffs(a, Rat(0));
}

struct ShearedPair {
  Rat lambda;
  BPolyQ g, h;  // g monic in Y of Y-degree deg g, h reduced modulo g
};

// The i-th shear X -> X + lambda*Y making g monic in Y, if it does.
std::optional<ShearedPair> shear_pair(const BPolyQ& g, const BPolyQ& h, int i) {
  Rat lambda = shear_value(i);
  BPolyQ gs = g.shear_x(lambda);
  if (gs.deg_y() != g.total_degree()) return std::nullopt;
  gs = inv(gs.lc_y()[0]) * gs;
  return ShearedPair{lambda, gs, rem_y_monic(h.shear_x(lambda), gs)};
}

// Common zeros for one shear, or nullopt when some fiber over an
// x-coordinate holds more than one common zero.
std::optional<std::vector<CommonZeroOrbit>> zeros_for_shear(const ShearedPair& sp) {
  std::vector<CommonZeroOrbit> out;
  if (sp.h.is_constant()) return out;
  UPolyQ R = resultant_y(sp.g, sp.h);
  for (auto& [layer, k] : squarefree_q(R)) {
    for (auto& q : irreducible_factors_q(layer)) {
      auto K = make_number_field(q);
      NF t = NF::generator(K), zero(K, Rat(0));
      UPoly<NF> A = lift(sp.g, K).eval_x(t), B = lift(sp.h, K).eval_x(t);
      UPoly<NF> G = euclid_gcd(A, B);
      int j = G.deg();
      check(j >= 1, "resultant root without a common zero");
      NF eta = -G[j - 1] * inv(from_int_like(zero, j));
      UPoly<NF> lin({-eta, one_like(zero)}, zero);
      if (G != lin.pow(j)) return std::nullopt;
      PlanePoint pt;
      pt.field = K;
      pt.x = t + NF(K, sp.lambda) * eta;
      pt.y = eta;
      out.push_back({pt, k});
    }
  }
  return out;
}

bool trivially_disjoint(const BPolyQ& g, const BPolyQ& h) {
  return (!g.is_zero() && g.is_constant()) || (!h.is_zero() && h.is_constant());
}

}  // namespace

std::string to_string(const Mult& m) { return m ? std::to_string(*m) : "inf"; }

NumberFieldPtr rational_field() {
  static const NumberFieldPtr Q = make_number_field(upoly_q({Rat(0), Rat(1)}));
  return Q;
}

BPoly<NF> lift(const BPolyQ& f, const NumberFieldPtr& K) {
  return f.map_coeffs(NF(K, Rat(0)), [&](const Rat& c) { return NF(K, c); });
}

PlanePoint PlanePoint::rational(const Rat& x, const Rat& y) {
  PlanePoint p;
  p.field = rational_field();
  p.x = NF(p.field, x);
  p.y = NF(p.field, y);
  return p;
}

std::string to_string(const PlanePoint& q) {
  std::string s = "(" + to_string(q.x) + (q.at_infinity ? " : " : ", ") + to_string(q.y) + (q.at_infinity ? " : 0)" : ")");
  if (q.degree() > 1) s += " over " + q.field->name + " = root of " + to_string(q.field->minpoly, q.field->name);
  return s;
}

NF eval_at(const BPolyQ& f, const PlanePoint& q) {
  require(!q.at_infinity, "evaluation at a point at infinity");
  return lift(f, q.field).eval(q.x, q.y);
}

std::vector<CommonZeroOrbit> common_zeros(const BPolyQ& g, const BPolyQ& h) {
  if (trivially_disjoint(g, h)) return {};
  require(!g.is_zero() && !h.is_zero() && coprime(g, h), "common zeros of a pair with a common factor");
  if (g.is_homogeneous() && h.is_homogeneous())
    return {{PlanePoint::rational(0, 0), static_cast<long>(g.total_degree()) * h.total_degree()}};
  for (int i = 0; i < kMaxShears; ++i) {
    auto sp = shear_pair(g, h, i);
    if (!sp) continue;
    if (auto z = zeros_for_shear(*sp)) return *z;
  }
  throw InternalError("no shear separates the common zeros");
}

Mult intersection_multiplicity(const BPolyQ& g, const BPolyQ& h, const PlanePoint& q) {
  require(!q.at_infinity, "intersection multiplicity at infinity");
  BPoly<NF> F = lift(g, q.field).translate(q.x, q.y);
  BPoly<NF> G = lift(h, q.field).translate(q.x, q.y);
  return fulton_at_origin(std::move(F), std::move(G));
}

Mult affine_total(const BPolyQ& g, const BPolyQ& h) {
  if (trivially_disjoint(g, h)) return 0;
  if (g.is_zero() || h.is_zero() || !coprime(g, h)) return kInfinite;
  if (g.is_homogeneous() && h.is_homogeneous()) return static_cast<long>(g.total_degree()) * h.total_degree();
  std::vector<long> totals;
  for (int i = 0; i < kMaxShears && totals.size() < 2; ++i) {
    auto sp = shear_pair(g, h, i);
    if (!sp) continue;
    totals.push_back(sp->h.is_constant() ? 0 : resultant_y(sp->g, sp->h).deg());
  }
  check(totals.size() == 2 && totals[0] == totals[1], "affine intersection total depends on the shear");
  return totals[0];
}

SplitTotals split_totals(const BPolyQ& g, const BPolyQ& h, const BPolyQ& f) {
  SplitTotals st;
  for (auto& z : common_zeros(g, h)) {
    long m = z.multiplicity * z.point.degree();
    if (is_zero(eval_at(f, z.point))) st.on_curve += m;
    else st.off_curve += m;
  }
  return st;
}

IHat i_hat(const BPolyQ& g, const BPolyQ& h) {
  IHat r;
  if (g.is_zero()) return r;
  r.value = 0;
  r.beta = 0;
  if (g.is_constant() || h.is_constant()) return r;
  std::optional<ShearedPair> sp;
  for (int i = 0; i < kMaxShears && !sp; ++i) sp = shear_pair(g, BPolyQ(Rat(0)), i);
  check(sp.has_value(), "no shear makes g monic");
  BPolyQ R = resultant_y_shifted(sp->g, h.shear_x(sp->lambda));
  std::vector<UPolyQ> s = R.x_coeffs();
  UPolyQ common(Rat(0));
  for (auto& sk : s) common = gcd_q(common, sk);
  if (common.deg() >= 1) {
    r.value = kInfinite;
    r.beta = kInfinite;
    return r;
  }
  long D = static_cast<long>(s.size()) - 1;
  r.value = D;
  const UPolyQ& top = s[D];
  if (top.deg() < 1) return r;
  r.alpha = AlgebraicSet::from_polynomial(squarefree_part_q(top));
  long beta = 0;
  for (auto& q : irreducible_factors_q(top)) {
    long value = -1;
    for (long k = D - 1; k >= 0 && value < 0; --k)
      if (!divides(q, s[k])) value = k;
    check(value >= 0, "deficient value without a finite intersection number");
    r.deficient_values.push_back({primitive_int(q), value});
    bool is_zero_root = q.deg() == 1 && is_zero(q[0]);
    if (!is_zero_root) beta += q.deg() * (D - value);
  }
  r.beta = beta;
  return r;
}

Mult legacy_rank_rho(const BPolyQ& f) {
  require(!f.is_constant(), "rank of a constant polynomial");
  BPolyQ fx = f.dx(), fy = f.dy();
  IHat ih = i_hat(fy, f);
  if (!ih.value) return kInfinite;
  return split_totals(fx, fy, f).off_curve + *ih.beta;
}

std::optional<AlgebraicSet> residue_constant(const BPolyQ& f, const BPolyQ& p) {
  require(!p.is_constant(), "residue along a constant");
  BPolyQ pp = p, ff = f;
  if (p.deg_y() == 0) {
    pp = p.swap_xy();
    ff = f.swap_xy();
  }
  // Res_Y(p, f - T) = a(X) * M(T) exactly when f is constant along p.
  BPolyQ R = resultant_y_shifted(pp, ff);
  std::vector<UPolyQ> a = R.y_coeffs();  // coefficients of T^i in Q[X]
  const UPolyQ& lead = a.back();
  UPolyQ M(Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    auto [quo, rem] = divmod(a[i], lead);
    if (!rem.is_zero() || quo.deg() > 0) return std::nullopt;
    M.set(static_cast<int>(i), quo[0]);
  }
  UPolyQ sq = squarefree_part_q(M);
  if (irreducible_factors_q(sq).size() != 1) throw PreconditionError("residue constant along a reducible curve");
  return AlgebraicSet::from_polynomial(sq);
}

}  // namespace pencil
