#include "pencil/upoly_q.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>

#include "nmod.hpp"

namespace pencil {

using nmod::NP;
using nmod::u64;

UPolyQ upoly_q(std::vector<Rat> c) { return UPolyQ(std::move(c), Rat(0)); }

UPolyQ upoly_q_int(const std::vector<long>& c) {
  std::vector<Rat> v;
  for (long x : c) v.emplace_back(x);
  return upoly_q(std::move(v));
}

UPolyQ from_zvec(const ZVec& v) {
  std::vector<Rat> c;
  for (const Int& x : v) c.emplace_back(x);
  return upoly_q(std::move(c));
}

Int content_int(const ZVec& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  return g;
}

namespace {

void ztrim(ZVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

ZVec zmul(const ZVec& a, const ZVec& b) {
  if (a.empty() || b.empty()) return {};
  ZVec c(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  ztrim(c);
  return c;
}

// Exact division over Z; returns false if b does not divide a.
bool zdiv_exact(const ZVec& a, const ZVec& b, ZVec& q) {
  if (b.empty()) return false;
  if (a.empty()) {
    q.clear();
    return true;
  }
  if (a.size() < b.size()) return false;
  ZVec r = a;
  q.assign(a.size() - b.size() + 1, Int(0));
  const Int& lb = b.back();
  int db = static_cast<int>(b.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), lb.get_mpz_t())) return false;
    Int t = r[i] / lb;
    q[i - db] = t;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= t * b[j];
  }
  for (int i = 0; i < db; ++i)
    if (r[i] != 0) return false;
  ztrim(q);
  return true;
}

NP zreduce(const ZVec& a, u64 p) {
  NP r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = mpz_fdiv_ui(a[i].get_mpz_t(), p);
  nmod::trim(r);
  return r;
}

Int symmetric(const Int& v, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

ZVec zmod(const ZVec& a, const Int& m) {
  ZVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) mpz_fdiv_r(r[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
  ztrim(r);
  return r;
}

ZVec zsub(const ZVec& a, const ZVec& b) {
  ZVec c(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  ztrim(c);
  return c;
}

ZVec zadd(const ZVec& a, const ZVec& b) {
  ZVec c(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  ztrim(c);
  return c;
}

// Division by a monic polynomial modulo m.
void zdivmod_monic(const ZVec& a, const ZVec& b, const Int& m, ZVec& q, ZVec& r) {
  r = zmod(a, m);
  int db = static_cast<int>(b.size()) - 1;
  if (static_cast<int>(r.size()) - 1 < db) {
    q.clear();
    return;
  }
  q.assign(r.size() - db, Int(0));
  for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
    Int t = r[i] % m;
    if (t < 0) t += m;
    if (t == 0) continue;
    q[i - db] = t;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= t * b[j];
  }
  r.resize(db);
  r = zmod(r, m);
  q = zmod(q, m);
}

ZVec from_np(const NP& a) {
  ZVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = Int(static_cast<unsigned long>(a[i]));
  return r;
}

ZVec to_zvec(const UPolyQ& p) {
  Int l = 1;
  for (const Rat& c : p.coeffs()) l = lcm(l, Int(c.get_den()));
  ZVec v;
  for (const Rat& c : p.coeffs()) v.push_back(Int(c.get_num() * (l / c.get_den())));
  return v;
}

std::vector<std::uint32_t>& prime_cache() {
  static std::vector<std::uint32_t> c;
  return c;
}

std::uint32_t small_prime(std::size_t i) {
  static std::vector<std::uint32_t> c;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  std::uint32_t n = c.empty() ? 2 : c.back();
  while (c.size() <= i) {
    ++n;
    if (is_prime_u32(n)) c.push_back(n);
  }
  return c[i];
}

}  // namespace

std::uint32_t large_prime(std::size_t i) {
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto& c = prime_cache();
  std::uint32_t n = c.empty() ? 2147483648u : c.back();
  while (c.size() <= i) {
    --n;
    while (!is_prime_u32(n)) --n;
    c.push_back(n);
  }
  return c[i];
}

ZVec primitive_int(const UPolyQ& p) {
  ZVec v = to_zvec(p);
  Int g = content_int(v);
  if (g == 0) return {};
  if (v.back() < 0) g = -g;
  for (Int& x : v) x /= g;
  return v;
}

UPolyQ primitive_q(const UPolyQ& p) { return from_zvec(primitive_int(p)); }

UPolyQ gcd_q(UPolyQ a, UPolyQ b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.deg() == 0 || b.deg() == 0) return UPolyQ::constant(Rat(1));
  ZVec A = primitive_int(a), B = primitive_int(b);
  Int lg = gcd(A.back(), B.back());
  int best = std::min(a.deg(), b.deg()) + 1;
  ZVec acc;
  Int mod = 0;
  ZVec prev;
  for (std::size_t k = 0;; ++k) {
    u64 p = large_prime(k);
    if (mpz_fdiv_ui(A.back().get_mpz_t(), p) == 0 || mpz_fdiv_ui(B.back().get_mpz_t(), p) == 0) continue;
    NP g = nmod::gcd(zreduce(A, p), zreduce(B, p), p);
    int dg = nmod::deg(g);
    if (dg == 0) return UPolyQ::constant(Rat(1));
    if (dg > best) continue;
    g = nmod::scale(g, mpz_fdiv_ui(lg.get_mpz_t(), p), p);
    g.resize(dg + 1, 0);
    if (dg < best) {
      best = dg;
      acc = from_np(g);
      mod = Int(static_cast<unsigned long>(p));
      prev.clear();
    } else {
      Int pp(static_cast<unsigned long>(p));
      Int minv;
      Int mm = mod % pp;
      mpz_invert(minv.get_mpz_t(), mm.get_mpz_t(), pp.get_mpz_t());
      for (int i = 0; i <= dg; ++i) {
        Int diff = (Int(static_cast<unsigned long>(g[i])) - acc[i]) % pp;
        if (diff < 0) diff += pp;
        Int t = diff * minv % pp;
        acc[i] += mod * t;
      }
      mod *= pp;
    }
    ZVec h(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) h[i] = symmetric(acc[i], mod);
    ztrim(h);
    if (h == prev) {
      Int c = content_int(h);
      ZVec hp = h;
      for (Int& x : hp) x /= c;
      ZVec q;
      if (zdiv_exact(A, hp, q) && zdiv_exact(B, hp, q)) return from_zvec(hp).monic();
    }
    prev = h;
  }
}

std::vector<std::pair<UPolyQ, int>> squarefree_q(const UPolyQ& a) { return yun_squarefree<Rat>(a, gcd_q); }

UPolyQ squarefree_part_q(const UPolyQ& a) { return squarefree_part<Rat>(a, gcd_q); }

namespace {

Rat rat_pow(const Rat& a, unsigned e) {
  Rat r(1);
  for (unsigned i = 0; i < e; ++i) r *= a;
  return r;
}

// log2 of an upper bound of |x|.
size_t bits_of(const Int& x) { return mpz_sizeinbase(x.get_mpz_t(), 2); }

}  // namespace

Rat resultant_q(const UPolyQ& a, const UPolyQ& b) {
  if (a.is_zero() || b.is_zero()) return Rat(0);
  int da = a.deg(), db = b.deg();
  if (da == 0) return rat_pow(a[0], db);
  if (db == 0) return rat_pow(b[0], da);
  ZVec A = to_zvec(a), B = to_zvec(b);
  // a = A / sa, b = B / sb
  Rat sa = Rat(A.back()) / a.lc(), sb = Rat(B.back()) / b.lc();
  Int na = 0, nb = 0;
  for (auto& x : A) na += x * x;
  for (auto& x : B) nb += x * x;
  // |Res(A,B)| <= |A|_2^db |B|_2^da, so bits <= (db*bits(na) + da*bits(nb))/2 + 1
  size_t bound_bits = (db * bits_of(na) + da * bits_of(nb)) / 2 + 2;
  Int mod = 1, acc = 0;
  for (std::size_t k = 0; bits_of(mod) <= bound_bits + 1; ++k) {
    u64 p = large_prime(k);
    if (mpz_fdiv_ui(A.back().get_mpz_t(), p) == 0 || mpz_fdiv_ui(B.back().get_mpz_t(), p) == 0) continue;
    u64 r = nmod::resultant(zreduce(A, p), zreduce(B, p), p);
    Int pp(static_cast<unsigned long>(p));
    Int minv, mm = mod % pp;
    mpz_invert(minv.get_mpz_t(), mm.get_mpz_t(), pp.get_mpz_t());
    Int diff = (Int(static_cast<unsigned long>(r)) - acc) % pp;
    if (diff < 0) diff += pp;
    acc += mod * (diff * minv % pp);
    mod *= pp;
  }
  Rat res(symmetric(acc, mod));
  return res / (rat_pow(sa, db) * rat_pow(sb, da));
}

UPolyQ interpolate_q(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  size_t n = xs.size();
  std::vector<Rat> d = ys;
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n - 1; i >= j; --i) {
      d[i] = (d[i] - d[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  UPolyQ r(Rat(0));
  for (size_t i = n; i-- > 0;) {
    r = r * upoly_q({-xs[i], Rat(1)}) + UPolyQ::constant(d[i]);
  }
  return r;
}

UPolyQ charpoly_mod(const UPolyQ& phi, const UPolyQ& r) {
  require(r.deg() >= 1, "charpoly modulus must be nonconstant");
  UPolyQ f = phi % r;
  int n = r.deg();
  if (f.deg() <= 0) {
    UPolyQ lin = upoly_q({-f[0], Rat(1)});
    return lin.pow(n);
  }
  std::vector<Rat> xs, ys;
  Rat lr = rat_pow(r.lc(), f.deg());
  for (int k = 0; k <= n; ++k) {
    Rat t(k);
    UPolyQ h = UPolyQ::constant(t) - f;
    xs.push_back(t);
    ys.push_back(resultant_q(r, h) / lr);
  }
  return interpolate_q(xs, ys);
}

UPolyQ minpoly_mod(const UPolyQ& phi, const UPolyQ& r) {
  require(r.deg() >= 1, "minpoly modulus must be nonconstant");
  int n = r.deg();
  UPolyQ f = phi % r;
  // Rows: reduced echelon basis of span{f^0..f^k}, tracking combinations.
  std::vector<std::vector<Rat>> basis;   // vectors in Q^n
  std::vector<std::vector<Rat>> combos;  // coefficients on powers
  std::vector<int> pivots;
  UPolyQ pw = UPolyQ::constant(Rat(1));
  for (int k = 0; k <= n; ++k) {
    std::vector<Rat> v(n, Rat(0));
    for (int i = 0; i <= pw.deg(); ++i) v[i] = pw[i];
    std::vector<Rat> comb(k + 1, Rat(0));
    comb[k] = 1;
    for (size_t b = 0; b < basis.size(); ++b) {
      Rat c = v[pivots[b]];
      if (c == 0) continue;
      for (int i = 0; i < n; ++i) v[i] -= c * basis[b][i];
      for (size_t i = 0; i < combos[b].size(); ++i) comb[i] -= c * combos[b][i];
    }
    int piv = -1;
    for (int i = 0; i < n; ++i)
      if (v[i] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return upoly_q(comb).monic();
    Rat iv = 1 / v[piv];
    for (auto& x : v) x *= iv;
    for (auto& x : comb) x *= iv;
    for (size_t b = 0; b < basis.size(); ++b) {
      Rat c = basis[b][piv];
      if (c == 0) continue;
      for (int i = 0; i < n; ++i) basis[b][i] -= c * v[i];
      combos[b].resize(comb.size(), Rat(0));
      for (size_t i = 0; i < comb.size(); ++i) combos[b][i] -= c * comb[i];
    }
    basis.push_back(v);
    combos.push_back(comb);
    pivots.push_back(piv);
    pw = (pw * f) % r;
  }
  throw InternalError("minimal polynomial search exceeded dimension");
}

int multiplicity_of(const UPolyQ& q, const UPolyQ& a) {
  require(q.deg() >= 1, "multiplicity of constant polynomial");
  if (a.is_zero()) throw PreconditionError("multiplicity in zero polynomial");
  int m = 0;
  UPolyQ t = a;
  while (true) {
    auto [qq, r] = divmod(t, q);
    if (!r.is_zero()) return m;
    t = qq;
    ++m;
  }
}

bool has_unit_denominators(const UPolyQ& a, std::uint32_t p) {
  for (const Rat& c : a.coeffs())
    if (divisible_by(c, p)) return false;
  return true;
}

std::vector<Zp> reduce_poly_mod(const UPolyQ& a, std::uint32_t p) {
  std::vector<Zp> r;
  for (const Rat& c : a.coeffs()) r.push_back(reduce_mod(c, p));
  while (!r.empty() && r.back().v == 0) r.pop_back();
  return r;
}

// ---------------------------------------------------------------------------
// Factorization over Z: Cantor-Zassenhaus modulo p, Hensel lifting,
// subset recombination.

namespace {

std::vector<std::pair<NP, int>> distinct_degree(NP f, u64 p) {
  std::vector<std::pair<NP, int>> out;
  NP x{0, 1};
  NP h = x;
  for (int d = 1; 2 * d <= nmod::deg(f); ++d) {
    h = nmod::powmod(h, Int(static_cast<unsigned long>(p)), f, p);
    NP g = nmod::gcd(nmod::sub(h, x, p), f, p);
    if (nmod::deg(g) > 0) {
      out.push_back({g, d});
      f = nmod::divmod(f, g, p).first;
      h = nmod::rem(h, f, p);
    }
  }
  if (nmod::deg(f) > 0) out.push_back({nmod::monic(f, p), nmod::deg(f)});
  return out;
}

void equal_degree(const NP& g, int d, u64 p, std::mt19937_64& rng, std::vector<NP>& out) {
  int n = nmod::deg(g);
  if (n == d) {
    out.push_back(nmod::monic(g, p));
    return;
  }
  Int e(static_cast<unsigned long>(p));
  mpz_pow_ui(e.get_mpz_t(), e.get_mpz_t(), d);
  e = (e - 1) / 2;
  while (true) {
    NP a(n);
    for (int i = 0; i < n; ++i) a[i] = rng() % p;
    nmod::trim(a);
    if (nmod::deg(a) <= 0) continue;
    NP b = nmod::sub(nmod::powmod(a, e, g, p), NP{1}, p);
    NP u = nmod::gcd(b, g, p);
    int du = nmod::deg(u);
    if (du > 0 && du < n) {
      equal_degree(u, d, p, rng, out);
      equal_degree(nmod::divmod(g, u, p).first, d, p, rng, out);
      return;
    }
  }
}

std::vector<NP> factor_mod_p(const NP& f, u64 p) {
  std::mt19937_64 rng(0x5eed ^ p);
  std::vector<NP> out;
  for (auto& [g, d] : distinct_degree(nmod::monic(f, p), p)) equal_degree(g, d, p, rng, out);
  std::sort(out.begin(), out.end(), [](const NP& a, const NP& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

// One quadratic Hensel step (f = g h mod m, s g + t h = 1 mod m) to modulus m2.
void hensel_step(const ZVec& f, ZVec& g, ZVec& h, ZVec& s, ZVec& t, const Int& m2) {
  ZVec e = zmod(zsub(f, zmul(g, h)), m2);
  ZVec q, r;
  zdivmod_monic(zmul(s, e), h, m2, q, r);
  ZVec g2 = zmod(zadd(g, zadd(zmul(t, e), zmul(q, g))), m2);
  ZVec h2 = zmod(zadd(h, r), m2);
  ZVec b = zmod(zsub(zadd(zmul(s, g2), zmul(t, h2)), ZVec{Int(1)}), m2);
  ZVec c, d;
  zdivmod_monic(zmul(s, b), h2, m2, c, d);
  s = zmod(zsub(s, d), m2);
  t = zmod(zsub(t, zadd(zmul(t, b), zmul(c, g2))), m2);
  g = g2;
  h = h2;
}

NP np_product(const std::vector<NP>& fs, size_t lo, size_t hi, u64 p) {
  NP r{1};
  for (size_t i = lo; i < hi; ++i) r = nmod::mul(r, fs[i], p);
  return r;
}

// Lifts the monic factorization fs (mod p) of monic F (mod target) to mod target.
void multifactor_lift(const ZVec& F, const std::vector<NP>& fs, size_t lo, size_t hi, u64 p, const Int& target,
                      std::vector<ZVec>& out) {
  if (hi - lo == 1) {
    out.push_back(zmod(F, target));
    return;
  }
  size_t mid = (lo + hi) / 2;
  NP g0 = np_product(fs, lo, mid, p), h0 = np_product(fs, mid, hi, p);
  NP gg, s0, t0;
  nmod::xgcd(g0, h0, p, gg, s0, t0);
  check(gg.size() == 1 && gg[0] == 1, "Hensel factors not coprime");
  ZVec g = from_np(g0), h = from_np(h0), s = from_np(s0), t = from_np(t0);
  Int m(static_cast<unsigned long>(p));
  while (m < target) {
    m *= m;
    hensel_step(F, g, h, s, t, m);
  }
  multifactor_lift(zmod(g, target), fs, lo, mid, p, target, out);
  multifactor_lift(zmod(h, target), fs, mid, hi, p, target, out);
}

ZVec symmetric_vec(const ZVec& a, const Int& m) {
  ZVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = symmetric(a[i], m);
  ztrim(r);
  return r;
}

ZVec zprimitive(ZVec v) {
  Int g = content_int(v);
  if (g == 0) return v;
  if (v.back() < 0) g = -g;
  for (Int& x : v) x /= g;
  return v;
}

void factor_squarefree_z(ZVec F, std::vector<ZVec>& out) {
  F = zprimitive(F);
  int n = static_cast<int>(F.size()) - 1;
  if (n <= 0) return;
  if (n == 1) {
    out.push_back(F);
    return;
  }
  if (F[0] == 0) {
    out.push_back(ZVec{Int(0), Int(1)});
    F.erase(F.begin());
    factor_squarefree_z(F, out);
    return;
  }
  // choose a prime with few modular factors
  u64 best_p = 0;
  size_t best_count = SIZE_MAX;
  int tried = 0;
  for (size_t k = 1; tried < 4 && k < 4000; ++k) {
    u64 p = small_prime(k);
    if (mpz_fdiv_ui(F.back().get_mpz_t(), p) == 0) continue;
    NP fp = zreduce(F, p);
    NP g = nmod::gcd(fp, nmod::derivative(fp, p), p);
    if (nmod::deg(g) > 0) continue;
    size_t cnt = 0;
    for (auto& [gg, d] : distinct_degree(nmod::monic(fp, p), p)) cnt += nmod::deg(gg) / d;
    ++tried;
    if (cnt < best_count) {
      best_count = cnt;
      best_p = p;
    }
    if (cnt == 1) break;
  }
  check(best_p != 0, "no good prime for factorization");
  if (best_count == 1) {
    out.push_back(F);
    return;
  }
  u64 p = best_p;
  std::vector<NP> fs = factor_mod_p(zreduce(F, p), p);
  // coefficient bound for lc(F) * (factor / lc(factor))
  Int norm2 = 0;
  for (auto& x : F) norm2 += x * x;
  Int norm = sqrt(norm2) + 1;
  Int lcF = abs(F.back());
  Int bound = 2 * lcF * norm;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n);
  Int target = static_cast<unsigned long>(p);
  while (target <= bound) target *= static_cast<unsigned long>(p);
  // monic version of F modulo target
  Int linv;
  Int lcmod = F.back() % target;
  if (lcmod < 0) lcmod += target;
  mpz_invert(linv.get_mpz_t(), lcmod.get_mpz_t(), target.get_mpz_t());
  ZVec Fm = F;
  for (auto& x : Fm) x = x * linv;
  Fm = zmod(Fm, target);
  std::vector<ZVec> lifted;
  multifactor_lift(Fm, fs, 0, fs.size(), p, target, lifted);
  // recombination
  std::vector<size_t> T(lifted.size());
  for (size_t i = 0; i < T.size(); ++i) T[i] = i;
  ZVec Fr = F;
  size_t s = 1;
  while (2 * s <= T.size()) {
    bool found = false;
    std::vector<size_t> idx(s);
    for (size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      ZVec G{Fr.back()}, H{Fr.back()};
      std::vector<bool> in(T.size(), false);
      for (size_t i : idx) in[i] = true;
      for (size_t i = 0; i < T.size(); ++i) {
        if (in[i]) G = zmod(zmul(G, lifted[T[i]]), target);
        else H = zmod(zmul(H, lifted[T[i]]), target);
      }
      ZVec Gp = zprimitive(symmetric_vec(G, target));
      ZVec Hp = zprimitive(symmetric_vec(H, target));
      ZVec prod = zmul(Gp, Hp);
      if (prod == Fr || prod == zsub(ZVec{}, Fr)) {
        out.push_back(Gp);
        Fr = Hp;
        std::vector<size_t> T2;
        for (size_t i = 0; i < T.size(); ++i)
          if (!in[i]) T2.push_back(T[i]);
        T = T2;
        found = true;
        break;
      }
      // next combination
      int i = static_cast<int>(s) - 1;
      while (i >= 0 && idx[i] == T.size() - s + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (Fr.size() > 1) out.push_back(zprimitive(Fr));
}

bool zvec_less(const ZVec& a, const ZVec& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

}  // namespace

FactorizationQ factor_univariate_rationals(const UPolyQ& a) {
  require(!a.is_zero(), "factorization of zero polynomial");
  FactorizationQ res;
  std::vector<std::pair<ZVec, int>> fac;
  for (auto& [s, e] : squarefree_q(a)) {
    std::vector<ZVec> parts;
    factor_squarefree_z(primitive_int(s), parts);
    for (auto& f : parts) fac.push_back({f, e});
  }
  std::sort(fac.begin(), fac.end(), [](const auto& x, const auto& y) {
    if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
    if (x.first != y.first) return zvec_less(x.first, y.first);
    return x.second < y.second;
  });
  Rat lcprod = 1;
  for (auto& [f, e] : fac) {
    res.factors.push_back({from_zvec(f), e});
    for (int i = 0; i < e; ++i) lcprod *= Rat(f.back());
  }
  res.unit = a.lc() / lcprod;
  return res;
}

std::vector<UPolyQ> irreducible_factors_q(const UPolyQ& a) {
  std::vector<UPolyQ> out;
  if (a.deg() <= 0) return out;
  for (auto& [f, e] : factor_univariate_rationals(a).factors) out.push_back(f);
  return out;
}

bool looks_irreducible_mod_primes(const UPolyQ& a) {
  if (a.deg() <= 0) return false;
  if (a.deg() == 1) return true;
  ZVec F = primitive_int(a);
  if (a.deg() <= 3) {
    // degree <= 3: irreducible iff no rational root
    auto fac = factor_univariate_rationals(a);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
  }
  // the gcd of the factor-degree sets mod two primes must admit only deg a
  int used = 0;
  std::vector<bool> possible(a.deg() + 1, true);
  for (size_t k = 1; used < 2 && k < 4000; ++k) {
    u64 p = small_prime(k);
    if (mpz_fdiv_ui(F.back().get_mpz_t(), p) == 0) continue;
    NP fp = zreduce(F, p);
    if (nmod::deg(nmod::gcd(fp, nmod::derivative(fp, p), p)) > 0) continue;
    ++used;
    std::vector<int> degs;
    for (auto& g : factor_mod_p(fp, p)) degs.push_back(nmod::deg(g));
    std::vector<bool> sums(a.deg() + 1, false);
    sums[0] = true;
    for (int d : degs)
      for (int s = a.deg(); s >= d; --s)
        if (sums[s - d]) sums[s] = true;
    for (int s = 0; s <= a.deg(); ++s) possible[s] = possible[s] && sums[s];
  }
  for (int s = 1; s < a.deg(); ++s)
    if (possible[s]) return false;
  return true;
}

}  // namespace pencil
