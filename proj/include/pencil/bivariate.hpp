#pragma once

#include <utility>
#include <vector>

#include "pencil/bpoly.hpp"

namespace pencil {

// Polynomials in Y with coefficients in E[X], lowest Y-power first.
template <class E>
using RecPoly = std::vector<UPoly<E>>;

namespace detail {

template <class E>
void rec_trim(RecPoly<E>& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

template <class E>
UPoly<E> rec_content(const RecPoly<E>& a, const E& z) {
  UPoly<E> g(z);
  for (auto& c : a) {
    g = field_gcd(g, c);
    if (g.deg() == 0) break;
  }
  return g;
}

template <class E>
RecPoly<E> rec_divide(const RecPoly<E>& a, const UPoly<E>& c) {
  RecPoly<E> r;
  for (auto& x : a) r.push_back(exact_div(x, c));
  return r;
}

// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
template <class E>
RecPoly<E> rec_prem(RecPoly<E> a, const RecPoly<E>& b) {
  int db = static_cast<int>(b.size()) - 1;
  const UPoly<E>& lb = b.back();
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    int da = static_cast<int>(a.size()) - 1;
    UPoly<E> la = a.back();
    for (auto& x : a) x = x * lb;
    for (int j = 0; j <= db; ++j) a[da - db + j] -= la * b[j];
    rec_trim(a);
  }
  return a;
}

}  // namespace detail

// Binary form of degree d from its dehomogenization p(X) = g(X, 1).
template <class E>
BPoly<E> homogenize_x(const UPoly<E>& p, int d) {
  BPoly<E> r(p.zero());
  for (int i = 0; i <= p.deg(); ++i) r.add_term(i, d - i, p[i]);
  return r;
}

// gcd normalized so that the leading coefficient in the (deg_Y, deg_X)
// order is 1; gcd(0, 0) = 0.
template <class E>
BPoly<E> poly_gcd(const BPoly<E>& g, const BPoly<E>& h) {
  E z = g.zero();
  if (g.is_zero()) return normalize_lex(h);
  if (h.is_zero()) return normalize_lex(g);
  if (g.is_constant() || h.is_constant()) return BPoly<E>::constant(one_like(z));
  if (g.is_homogeneous() && h.is_homogeneous()) {
    UPoly<E> g1 = g.eval_y(one_like(z)), h1 = h.eval_y(one_like(z));
    int eg = g.total_degree() - g1.deg(), eh = h.total_degree() - h1.deg();
    UPoly<E> c = field_gcd(g1, h1);
    return normalize_lex(homogenize_x(c, c.deg() + std::min(eg, eh)));
  }
  RecPoly<E> a = g.y_coeffs(), b = h.y_coeffs();
  UPoly<E> ca = detail::rec_content(a, z), cb = detail::rec_content(b, z);
  UPoly<E> cont = field_gcd(ca, cb);
  a = detail::rec_divide(a, ca);
  b = detail::rec_divide(b, cb);
  if (a.size() < b.size()) std::swap(a, b);
  while (true) {
    if (b.size() == 1) {
      a = {UPoly<E>::constant(one_like(z))};
      break;
    }
    RecPoly<E> r = detail::rec_prem(a, b);
    if (r.empty()) {
      a = b;
      break;
    }
    a = std::move(b);
    b = detail::rec_divide(r, detail::rec_content(r, z));
  }
  BPoly<E> prim = BPoly<E>::from_y_coeffs(a, z);
  return normalize_lex(BPoly<E>::from_x(cont) * prim);
}

// Squarefree decomposition with Y as main variable over a field of
// characteristic 0 (or larger than the degree): g = unit * prod f_i^{m_i}
// with f_i squarefree, pairwise coprime, lex-normalized, and m_i strictly
// increasing.
template <class E>
struct SquarefreeDecomposition {
  E unit;
  std::vector<std::pair<BPoly<E>, int>> factors;
};

template <class E>
SquarefreeDecomposition<E> squarefree_decompose(const BPoly<E>& g) {
  require(!g.is_zero(), "squarefree decomposition of zero");
  E z = g.zero();
  SquarefreeDecomposition<E> out{g.lex_lc(), {}};
  std::vector<std::pair<BPoly<E>, int>> parts;
  auto field_gcd_fn = +[](UPoly<E> a, UPoly<E> b) { return field_gcd(std::move(a), std::move(b)); };
  if (g.is_homogeneous()) {
    UPoly<E> g1 = g.eval_y(one_like(z));
    int ey = g.total_degree() - g1.deg();
    if (ey > 0) parts.push_back({BPoly<E>::Y(z), ey});
    for (auto& [q, m] : yun_squarefree<E>(g1, field_gcd_fn)) parts.push_back({homogenize_x(q, q.deg()), m});
  } else {
    RecPoly<E> a = g.y_coeffs();
    UPoly<E> c = detail::rec_content(a, z);
    for (auto& [q, m] : yun_squarefree<E>(c, field_gcd_fn)) parts.push_back({BPoly<E>::from_x(q), m});
    BPoly<E> f = BPoly<E>::from_y_coeffs(detail::rec_divide(a, c), z);
    if (f.deg_y() > 0) {
      BPoly<E> d = f.dy();
      BPoly<E> gg = poly_gcd(f, d);
      BPoly<E> b = exact_div(f, gg);
      BPoly<E> cc = exact_div(d, gg);
      BPoly<E> e = cc - b.dy();
      int i = 1;
      while (b.deg_y() > 0) {
        BPoly<E> h = poly_gcd(b, e);
        if (!h.is_constant()) parts.push_back({h, i});
        b = exact_div(b, h);
        cc = exact_div(e, h);
        e = cc - b.dy();
        ++i;
      }
    }
  }
  std::map<int, BPoly<E>> merged;
  for (auto& [q, m] : parts) {
    auto it = merged.find(m);
    if (it == merged.end()) merged.emplace(m, normalize_lex(q));
    else it->second = it->second * normalize_lex(q);
  }
  for (auto& [m, q] : merged) out.factors.push_back({q, m});
  return out;
}

// Product of the distinct squarefree factors (the radical up to a unit).
template <class E>
BPoly<E> squarefree_part(const BPoly<E>& g) {
  BPoly<E> r = BPoly<E>::constant(one_like(g.zero()));
  for (auto& [q, m] : squarefree_decompose(g).factors) r = r * q;
  return r;
}

// Determinant over an integral domain by fraction-free (Bareiss) elimination.
template <class R>
R bareiss_det(std::vector<std::vector<R>> M, const R& zero, const R& one) {
  int n = static_cast<int>(M.size());
  if (n == 0) return one;
  R prev = one;
  bool neg = false;
  for (int k = 0; k < n - 1; ++k) {
    int piv = k;
    while (piv < n && M[piv][k] == zero) ++piv;
    if (piv == n) return zero;
    if (piv != k) {
      std::swap(M[piv], M[k]);
      neg = !neg;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        R t = M[k][k] * M[i][j] - M[i][k] * M[k][j];
        M[i][j] = exact_div(t, prev);
      }
      M[i][k] = zero;
    }
    prev = M[k][k];
  }
  R d = M[n - 1][n - 1];
  return neg ? -d : d;
}

// Sylvester matrix of a (degree m) and b (degree n) over a ring R: n rows of
// a-coefficients above m rows of b-coefficients, columns from the highest
// power down to the constant term.
template <class R>
std::vector<std::vector<R>> sylvester_matrix(const std::vector<R>& a, const std::vector<R>& b, const R& zero) {
  int m = static_cast<int>(a.size()) - 1, n = static_cast<int>(b.size()) - 1;
  int s = m + n;
  std::vector<std::vector<R>> M(s, std::vector<R>(s, zero));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) M[r][r + m - i] = a[i];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) M[n + r][r + n - i] = b[i];
  return M;
}

// Res_Y(g, h) as a polynomial in X over any supported field, from the
// Sylvester determinant over E[X]. Formal degrees are deg_Y g and deg_Y h.
template <class E>
UPoly<E> resultant_y_generic(const BPoly<E>& g, const BPoly<E>& h) {
  E z = g.zero();
  require(!g.is_zero() && !h.is_zero(), "resultant of zero polynomial");
  RecPoly<E> a = g.y_coeffs(), b = h.y_coeffs();
  UPoly<E> zero(z), one = UPoly<E>::constant(one_like(z));
  return bareiss_det(sylvester_matrix(a, b, zero), zero, one);
}

}  // namespace pencil
