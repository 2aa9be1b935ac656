#include "pencil/elimination.hpp"

#include <functional>

#include "nmod.hpp"

namespace pencil {

using nmod::NP;
using nmod::u64;

namespace {

// Integer bivariate polynomial, rows indexed by Y-power, entries by X-power.
struct ZBi {
  std::vector<ZVec> rows;
  Rat scale;  // original = scale * this
  int deg_x = -1;
};

ZBi to_integer(const BPolyQ& g) {
  ZBi z;
  Int den = 1, num = 0;
  for (auto& [k, c] : g.terms()) den = lcm(den, Int(c.get_den()));
  for (auto& [k, c] : g.terms()) num = gcd(num, Int(c.get_num() * (den / c.get_den())));
  if (num == 0) num = 1;
  z.scale = Rat(num, den);
  z.scale.canonicalize();
  z.rows.assign(std::max(g.deg_y() + 1, 0), ZVec());
  for (auto& [k, c] : g.terms()) {
    auto& r = z.rows[k.second];
    if (static_cast<int>(r.size()) <= k.first) r.resize(k.first + 1, Int(0));
    r[k.first] = c.get_num() * (den / c.get_den()) / num;
    z.deg_x = std::max(z.deg_x, k.first);
  }
  return z;
}

u64 mod_int(const Int& a, u64 p) { return mpz_fdiv_ui(a.get_mpz_t(), p); }

// Coefficients in Y (formal length) of the reduction at X = x0 mod p.
std::vector<u64> eval_at(const ZBi& z, u64 x0, u64 p) {
  std::vector<u64> out(z.rows.size(), 0);
  for (size_t b = 0; b < z.rows.size(); ++b) {
    u64 acc = 0;
    const ZVec& r = z.rows[b];
    for (size_t i = r.size(); i-- > 0;) acc = (nmod::mulm(acc, x0, p) + mod_int(r[i], p)) % p;
    out[b] = acc;
  }
  return out;
}

u64 det_mod(std::vector<std::vector<u64>> M, u64 p) {
  size_t n = M.size();
  u64 det = 1;
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && M[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(M[piv], M[k]);
      det = (p - det) % p;
    }
    det = nmod::mulm(det, M[k][k], p);
    u64 iv = nmod::invm(M[k][k], p);
    for (size_t i = k + 1; i < n; ++i) {
      if (M[i][k] == 0) continue;
      u64 f = nmod::mulm(M[i][k], iv, p);
      for (size_t j = k; j < n; ++j) M[i][j] = (M[i][j] + p - nmod::mulm(f, M[k][j], p)) % p;
    }
  }
  return det;
}

// Coefficients of S_j (Y^0..Y^j) for univariate a, b of formal degrees
// da = a.size()-1, db = b.size()-1 over Z/p.
std::vector<u64> subres_mod(const std::vector<u64>& a, const std::vector<u64>& b, int j, u64 p) {
  int da = static_cast<int>(a.size()) - 1, db = static_cast<int>(b.size()) - 1;
  int rows = da + db - 2 * j;
  int width = da + db - j;
  std::vector<std::vector<u64>> full(rows, std::vector<u64>(width, 0));
  // column c holds the coefficient of Y^(width-1-c)
  int r = 0;
  for (int k = db - j - 1; k >= 0; --k, ++r)
    for (int i = 0; i <= da; ++i) full[r][width - 1 - (i + k)] = a[i];
  for (int k = da - j - 1; k >= 0; --k, ++r)
    for (int i = 0; i <= db; ++i) full[r][width - 1 - (i + k)] = b[i];
  std::vector<u64> out(j + 1, 0);
  int lead = rows - 1;
  for (int i = 0; i <= j; ++i) {
    std::vector<std::vector<u64>> M(rows, std::vector<u64>(rows));
    for (int rr = 0; rr < rows; ++rr) {
      for (int c = 0; c < lead; ++c) M[rr][c] = full[rr][c];
      M[rr][lead] = full[rr][width - 1 - i];
    }
    out[i] = det_mod(std::move(M), p);
  }
  return out;
}

NP interpolate_mod(const std::vector<u64>& xs, std::vector<u64> ys, u64 p) {
  size_t n = xs.size();
  // Newton divided differences
  for (size_t k = 1; k < n; ++k)
    for (size_t i = n - 1; i >= k; --i) {
      u64 num = (ys[i] + p - ys[i - 1]) % p;
      u64 den = (xs[i] + p - xs[i - k]) % p;
      ys[i] = nmod::mulm(num, nmod::invm(den, p), p);
    }
  NP r{ys[n - 1]};
  for (size_t i = n - 1; i-- > 0;) {
    NP lin{(p - xs[i]) % p, 1};
    r = nmod::add(nmod::mul(r, lin, p), NP{ys[i]}, p);
  }
  nmod::trim(r);
  return r;
}

Int symmetric_rep(const Int& v, const Int& m) {
  Int r = v % m;
  if (r < 0) r += m;
  if (2 * r > m) r -= m;
  return r;
}

// L integer polynomials in X of degree <= dx, given their reductions at
// points (x0 mod p). point() returns false for unusable points.
std::vector<ZVec> multimodular(int L, int dx, std::size_t bits, const std::function<bool(u64)>& prime_ok,
                               const std::function<bool(u64, u64, std::vector<u64>&)>& point) {
  std::vector<ZVec> acc(L, ZVec(dx + 1, Int(0)));
  Int M = 1;
  Int target = Int(1) << (bits + 2);
  for (std::size_t pi = 0; M < target; ++pi) {
    u64 p = large_prime(pi);
    if (!prime_ok(p)) continue;
    std::vector<u64> xs;
    std::vector<std::vector<u64>> vals(L);
    std::vector<u64> out;
    for (u64 x0 = 0; static_cast<int>(xs.size()) < dx + 1; ++x0) {
      check(x0 < p, "ran out of evaluation points");
      if (!point(p, x0, out)) continue;
      xs.push_back(x0);
      for (int l = 0; l < L; ++l) vals[l].push_back(out[l]);
    }
    Int Mp = M * Int(static_cast<unsigned long>(p));
    u64 Minv = nmod::invm(mod_int(M, p), p);
    for (int l = 0; l < L; ++l) {
      NP q = interpolate_mod(xs, vals[l], p);
      for (int i = 0; i <= dx; ++i) {
        u64 ri = i < static_cast<int>(q.size()) ? q[i] : 0;
        u64 cur = mod_int(acc[l][i], p);
        u64 t = nmod::mulm((ri + p - cur) % p, Minv, p);
        acc[l][i] += M * Int(static_cast<unsigned long>(t));
      }
    }
    M = Mp;
  }
  for (auto& v : acc) {
    for (auto& c : v) c = symmetric_rep(c, M);
    while (!v.empty() && v.back() == 0) v.pop_back();
  }
  return acc;
}

std::size_t log2_ceil(const Int& a) { return a <= 1 ? 0 : mpz_sizeinbase(Int(a - 1).get_mpz_t(), 2); }

Int sum_abs(const ZBi& z) {
  Int s = 0;
  for (auto& r : z.rows)
    for (auto& c : r) s += abs(c);
  return s;
}

}  // namespace

UPolyQ pencil_determinant(const Matrix<Int>& A, const Matrix<Int>& B) {
  std::size_t n = A.size();
  require(B.size() == n, "pencil determinant size mismatch");
  if (n == 0) return UPolyQ::constant(Rat(1));
  // Coefficients of det(A + cB) are bounded by its maximum on |c| = 1,
  // hence by the product of the row sums of |A| + |B|.
  std::size_t bits = 1;
  int dc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Int s = 0;
    bool moving = false;
    for (std::size_t j = 0; j < n; ++j) {
      s += abs(A[i][j]) + abs(B[i][j]);
      moving = moving || B[i][j] != 0;
    }
    bits += log2_ceil(s + 1);
    dc += moving;
  }
  auto prime_ok = [&](u64) { return true; };
  auto point = [&](u64 p, u64 c0, std::vector<u64>& out) {
    std::vector<std::vector<u64>> M(n, std::vector<u64>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) M[i][j] = (mod_int(A[i][j], p) + nmod::mulm(c0, mod_int(B[i][j], p), p)) % p;
    out = {det_mod(std::move(M), p)};
    return true;
  };
  ZVec c = multimodular(1, dc, bits, prime_ok, point)[0];
  UPolyQ r(Rat(0));
  for (std::size_t i = 0; i < c.size(); ++i) r.set(static_cast<int>(i), Rat(c[i]));
  return r;
}

Int sum_abs_coeffs(const BPolyQ& g) { return sum_abs(to_integer(g)); }

BPolyQ subresultant_y(const BPolyQ& g, const BPolyQ& h, int j) {
  require(!g.is_zero() && !h.is_zero(), "resultant of zero polynomial");
  int da = g.deg_y(), db = h.deg_y();
  require(da > 0 || db > 0, "resultant needs a polynomial of positive Y-degree");
  require(j >= 0 && (j == 0 || j < std::min(da, db)), "subresultant index out of range");
  ZBi G = to_integer(g), H = to_integer(h);
  int dx = std::max(G.deg_x, 0) * (db - j) + std::max(H.deg_x, 0) * (da - j);
  int total = g.total_degree() * h.total_degree();
  if (j == 0) dx = std::min(dx, total);
  std::size_t bits = (db - j) * log2_ceil(sum_abs(G) + 1) + (da - j) * log2_ceil(sum_abs(H) + 1) + 1;
  auto prime_ok = [&](u64) { return true; };
  auto point = [&](u64 p, u64 x0, std::vector<u64>& out) {
    auto a = eval_at(G, x0, p), b = eval_at(H, x0, p);
    if (j == 0 && a.back() != 0 && b.back() != 0) {
      NP na(a.begin(), a.end()), nb(b.begin(), b.end());
      out = {nmod::resultant(na, nb, p)};
    } else {
      out = subres_mod(a, b, j, p);
    }
    return true;
  };
  auto coeffs = multimodular(j + 1, dx, bits, prime_ok, point);
  Rat s = 1;
  for (int i = 0; i < db - j; ++i) s *= G.scale;
  for (int i = 0; i < da - j; ++i) s *= H.scale;
  BPolyQ out(Rat(0));
  for (int i = 0; i <= j; ++i)
    for (size_t a = 0; a < coeffs[i].size(); ++a) out.add_term(static_cast<int>(a), i, s * Rat(coeffs[i][a]));
  return out;
}

UPolyQ resultant_y(const BPolyQ& g, const BPolyQ& h) { return subresultant_y(g, h, 0).eval_y(Rat(0)); }

BPolyQ resultant_y_shifted(const BPolyQ& g, const BPolyQ& h) {
  require(!g.is_zero(), "resultant of zero polynomial");
  int dt = std::max(g.deg_y(), 0);
  std::vector<Rat> ts;
  std::vector<UPolyQ> vals;
  int maxdeg = -1;
  for (int t = 0; t <= dt; ++t) {
    ts.emplace_back(t);
    vals.push_back(resultant_y(g, h - BPolyQ::constant(Rat(t))));
    maxdeg = std::max(maxdeg, vals.back().deg());
  }
  BPolyQ out(Rat(0));
  for (int a = 0; a <= maxdeg; ++a) {
    std::vector<Rat> ys;
    for (auto& v : vals) ys.push_back(v[a]);
    UPolyQ q = interpolate_q(ts, ys);
    for (int b = 0; b <= q.deg(); ++b) out.add_term(a, b, q[b]);
  }
  return out;
}

}  // namespace pencil
