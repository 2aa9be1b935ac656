#include <numeric>

#include "pencil/elimination.hpp"
#include "pencil/intersections.hpp"

namespace pencil {

namespace {

NF power(const NF& a, long e) {
  NF base = e < 0 ? inv(a) : a;
  NF r = one_like(a);
  for (long n = e < 0 ? -e : e; n > 0; n >>= 1) {
    if (n & 1) r = r * base;
    base = base * base;
  }
  return r;
}

// a(theta) for a in K, with theta an element of another field.
NF embed(const NF& a, const NF& theta) {
  NF r = zero_like(theta);
  for (int i = a.v.deg(); i >= 0; --i) r = r * theta + NF(theta.K, a.v[i]);
  return r;
}

BPoly<NF> embed(const BPoly<NF>& G, const NF& theta) {
  return G.map_coeffs(zero_like(theta), [&](const NF& c) { return embed(c, theta); });
}

// One irreducible factor over K of a polynomial, realized as a root in an
// extension field L = Q(beta) together with the image of K's generator.
struct Extension {
  NumberFieldPtr L;
  NF theta, root;
  int degree = 1;  // degree of the factor over K
  int multiplicity = 1;
};

// Irreducible factors over K of a squarefree monic psi, by Trager's norm
// method: psi(t - s*theta) has a squarefree norm for some small s.
std::vector<Extension> split_squarefree(const NumberFieldPtr& K, const UPoly<NF>& psi, int mult) {
  NF theta = NF::generator(K);
  if (psi.deg() == 1) return {{K, theta, -psi[0] * inv(psi[1]), 1, mult}};
  BPolyQ Phi(Rat(0));  // psi(t) with t in the X slot and theta in the Y slot
  for (int i = 0; i <= psi.deg(); ++i)
    for (int b = 0; b <= psi[i].v.deg(); ++b) Phi.add_term(i, b, psi[i].v[b]);
  BPolyQ m = BPolyQ::from_y(K->minpoly);
  int degK = K->minpoly.deg();
  for (int s = 0; s < 64; ++s) {
    BPolyQ Phis = Phi.shear_x(Rat(-s));
    UPolyQ N = resultant_y(m, Phis);
    if (N.deg() != degK * psi.deg() || gcd_q(N, N.derivative()).deg() > 0) continue;
    std::vector<Extension> out;
    for (auto& Ni : irreducible_factors_q(N)) {
      auto L = make_number_field(Ni, "b");
      NF beta = NF::generator(L), zero(L, Rat(0));
      UPoly<NF> mL = lift(m.swap_xy(), L).eval_y(zero);
      UPoly<NF> P = lift(Phis, L).eval_x(beta);
      UPoly<NF> G = euclid_gcd(mL, P);
      check(G.deg() == 1, "norm factor does not determine the generator");
      NF thetaL = -G[0];
      out.push_back({L, thetaL, beta - NF(L, Rat(s)) * thetaL, Ni.deg() / degK, mult});
    }
    return out;
  }
  throw InternalError("no shift gives a squarefree norm");
}

std::vector<Extension> split_over(const NumberFieldPtr& K, const UPoly<NF>& phi) {
  std::vector<Extension> out;
  for (auto& [layer, e] : yun_squarefree(phi)) {
    auto part = split_squarefree(K, layer, e);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

long mod_inverse(long a, long m) {
  for (long u = 0; u < m; ++u)
    if ((u * a) % m == 1 % m) return u;
  throw InternalError("no modular inverse");
}

// G(xi^v X^q, X^p (xi^u + Y)) / X^C with u q - v p = 1.
BPoly<NF> edge_transform(const BPoly<NF>& G, long p, long q, long C, const NF& xi) {
  long u = mod_inverse(q % p, p);
  long v = (u * q - 1) / p;
  NF z = zero_like(xi);
  BPoly<NF> Z = BPoly<NF>::constant(power(xi, u)) + BPoly<NF>::Y(z);
  std::vector<BPoly<NF>> zp{BPoly<NF>::constant(one_like(z))};
  BPoly<NF> out(z);
  for (auto& [k, c] : G.terms()) {
    auto [i, j] = k;
    while (static_cast<int>(zp.size()) <= j) zp.push_back(zp.back() * Z);
    long e = q * i + p * j - C;
    check(e >= 0, "term below the Newton polygon");
    out += BPoly<NF>::monomial(c * power(xi, v * i), static_cast<int>(e), 0) * zp[j];
  }
  return out;
}

// Number of branches at the origin of G over the algebraic closure.
long local_branches(BPoly<NF> G, const NumberFieldPtr& K, int depth, int bound) {
  if (depth > bound) throw DepthBoundError("Newton-Puiseux depth bound exceeded", 0);
  NF z(K, Rat(0));
  long count = 0;
  auto all_terms = [&](auto pred) {
    for (auto& [k, c] : G.terms())
      if (!pred(k)) return false;
    return true;
  };
  while (!G.is_zero() && all_terms([](auto k) { return k.second >= 1; })) {
    ++count;
    BPoly<NF> H(z);
    for (auto& [k, c] : G.terms()) H.add_term(k.first, k.second - 1, c);
    G = H;
  }
  while (!G.is_zero() && all_terms([](auto k) { return k.first >= 1; })) {
    ++count;
    BPoly<NF> H(z);
    for (auto& [k, c] : G.terms()) H.add_term(k.first - 1, k.second, c);
    G = H;
  }
  if (G.is_zero() || !is_zero(G.constant_term())) return count;
  long vi = 0, vj = -1;
  for (auto& [k, c] : G.terms())
    if (k.first == 0 && (vj < 0 || k.second < vj)) vj = k.second;
  while (vj > 0) {
    long wi = -1, wj = -1;
    for (auto& [k, c] : G.terms()) {
      long i = k.first, j = k.second;
      if (j >= vj) continue;
      if (wi < 0) {
        wi = i;
        wj = j;
        continue;
      }
      long lhs = (i - vi) * (vj - wj), rhs = (wi - vi) * (vj - j);
      if (lhs < rhs || (lhs == rhs && j < wj)) {
        wi = i;
        wj = j;
      }
    }
    long run = wi - vi, drop = vj - wj;
    long g = std::gcd(run, drop);
    long p = run / g, q = drop / g, C = q * vi + p * vj;
    UPoly<NF> phi(z);
    for (auto& [k, c] : G.terms())
      if (q * k.first + p * k.second == C) phi.set(static_cast<int>((k.second - wj) / q), c);
    for (auto& ext : split_over(K, phi)) {
      if (ext.multiplicity == 1) {
        count += ext.degree;
        continue;
      }
      BPoly<NF> G1 = edge_transform(embed(G, ext.theta), p, q, C, ext.root);
      try {
        count += ext.degree * local_branches(std::move(G1), ext.L, depth + 1, bound);
      } catch (const DepthBoundError& e) {
        throw DepthBoundError(e.what(), count + e.partial_count);
      }
    }
    vi = wi;
    vj = wj;
  }
  return count;
}

int default_bound(const BPolyQ& f) {
  int d = f.total_degree();
  return 2 * d * d;
}

// f_hom(1, Y, X): the chart at the line at infinity through the points (1 : b : 0).
BPolyQ chart_x(const BPolyQ& f) {
  int d = f.total_degree();
  BPolyQ r(Rat(0));
  for (auto& [k, c] : f.terms()) r.add_term(d - k.first - k.second, k.second, c);
  return r;
}

// f_hom(Y, 1, X): the chart at (0 : 1 : 0).
BPolyQ chart_y(const BPolyQ& f) {
  int d = f.total_degree();
  BPolyQ r(Rat(0));
  for (auto& [k, c] : f.terms()) r.add_term(d - k.first - k.second, k.first, c);
  return r;
}

}  // namespace

InfinityData points_at_infinity(const BPolyQ& f) {
  require(!f.is_constant(), "points at infinity of a constant");
  InfinityData data;
  BPolyQ fp = f.degree_form();
  UPolyQ u = fp.eval_x(Rat(1));
  for (auto& q : irreducible_factors_q(u)) {
    PlanePoint pt;
    pt.field = q.deg() == 1 ? rational_field() : make_number_field(q);
    pt.x = NF(pt.field, Rat(1));
    pt.y = q.deg() == 1 ? NF(pt.field, -q[0] / q[1]) : NF::generator(pt.field);
    pt.at_infinity = true;
    data.points.push_back(pt);
    data.geometric_count += q.deg();
  }
  if (u.deg() < f.total_degree()) {
    PlanePoint pt = PlanePoint::rational(0, 1);
    pt.at_infinity = true;
    data.points.push_back(pt);
    data.geometric_count += 1;
  }
  return data;
}

long branch_count(const BPolyQ& f, const PlanePoint& q, int depth_bound) {
  require(!f.is_constant(), "branches of a constant");
  int bound = depth_bound > 0 ? depth_bound : default_bound(f);
  BPoly<NF> G;
  NF zero(q.field, Rat(0));
  if (!q.at_infinity) {
    G = lift(f, q.field).translate(q.x, q.y);
  } else if (is_zero(q.x)) {
    G = lift(chart_y(f), q.field);
  } else {
    require(q.x == one_like(q.x), "infinite point must be normalized");
    G = lift(chart_x(f), q.field).translate(zero, q.y);
  }
  if (!is_zero(G.constant_term())) return 0;
  return local_branches(std::move(G), q.field, 0, bound);
}

InfinityData infinity_data(const BPolyQ& f) {
  InfinityData data = points_at_infinity(f);
  for (auto& pt : data.points) {
    data.branches.push_back(branch_count(f, pt));
    data.tau += pt.degree() * data.branches.back();
  }
  return data;
}

long tau_places_at_infinity(const BPolyQ& f) { return infinity_data(f).tau; }

}  // namespace pencil
