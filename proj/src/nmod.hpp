#pragma once

// Dense polynomials over Z/pZ with machine-word coefficients.

#include <cstdint>
#include <utility>
#include <vector>

#include "pencil/rational.hpp"

namespace pencil::nmod {

using u64 = std::uint64_t;
using NP = std::vector<u64>;

inline void trim(NP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
inline int deg(const NP& a) { return static_cast<int>(a.size()) - 1; }

inline u64 mulm(u64 a, u64 b, u64 p) { return static_cast<u64>((__uint128_t)a * b % p); }
inline u64 powm(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulm(r, a, p);
    a = mulm(a, a, p);
    e >>= 1;
  }
  return r;
}
inline u64 invm(u64 a, u64 p) {
  check(a % p != 0, "inverse of zero mod p");
  return powm(a, p - 2, p);
}

inline NP add(const NP& a, const NP& b, u64 p) {
  NP c(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) {
    c[i] += b[i];
    if (c[i] >= p) c[i] -= p;
  }
  trim(c);
  return c;
}
inline NP sub(const NP& a, const NP& b, u64 p) {
  NP c(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] = (c[i] + p - b[i]) % p;
  trim(c);
  return c;
}
inline NP mul(const NP& a, const NP& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  std::vector<__uint128_t> acc(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      acc[i + j] += (__uint128_t)a[i] * b[j];
      if (acc[i + j] >> 120) acc[i + j] %= p;
    }
  }
  NP c(acc.size());
  for (size_t i = 0; i < acc.size(); ++i) c[i] = static_cast<u64>(acc[i] % p);
  trim(c);
  return c;
}
inline NP scale(const NP& a, u64 s, u64 p) {
  NP c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = mulm(a[i], s, p);
  trim(c);
  return c;
}
inline NP monic(const NP& a, u64 p) {
  if (a.empty()) return a;
  return scale(a, invm(a.back(), p), p);
}
inline std::pair<NP, NP> divmod(const NP& a, const NP& b, u64 p) {
  check(!b.empty(), "nmod division by zero");
  if (a.size() < b.size()) return {NP{}, a};
  NP r = a;
  NP q(a.size() - b.size() + 1, 0);
  u64 il = invm(b.back(), p);
  int db = deg(b);
  for (int i = deg(a); i >= db; --i) {
    u64 c = r[i];
    if (!c) continue;
    u64 t = mulm(c, il, p);
    q[i - db] = t;
    for (int j = 0; j <= db; ++j) r[i - db + j] = (r[i - db + j] + p - mulm(t, b[j], p)) % p;
  }
  r.resize(db);
  trim(r);
  trim(q);
  return {q, r};
}
inline NP rem(const NP& a, const NP& b, u64 p) { return divmod(a, b, p).second; }
inline NP gcd(NP a, NP b, u64 p) {
  while (!b.empty()) {
    NP r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}
// (g, s, t) with s a + t b = g monic.
inline void xgcd(const NP& a, const NP& b, u64 p, NP& g, NP& s, NP& t) {
  NP r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    NP s2 = sub(s0, mul(q, s1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    NP t2 = sub(t0, mul(q, t1, p), p);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  u64 il = r0.empty() ? 1 : invm(r0.back(), p);
  g = scale(r0, il, p);
  s = scale(s0, il, p);
  t = scale(t0, il, p);
}
inline NP derivative(const NP& a, u64 p) {
  if (a.size() <= 1) return {};
  NP d(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) d[i - 1] = mulm(a[i], i % p, p);
  trim(d);
  return d;
}
inline NP mulmod(const NP& a, const NP& b, const NP& m, u64 p) { return rem(mul(a, b, p), m, p); }
inline NP powmod(NP base, Int e, const NP& m, u64 p) {
  NP r{1};
  base = rem(base, m, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = mulmod(r, base, m, p);
    e >>= 1;
    if (e > 0) base = mulmod(base, base, m, p);
  }
  return r;
}
inline u64 eval(const NP& a, u64 x, u64 p) {
  u64 r = 0;
  for (size_t i = a.size(); i-- > 0;) r = (mulm(r, x, p) + a[i]) % p;
  return r;
}
// Resultant with formal degrees given by the sizes (leading coefficients nonzero).
inline u64 resultant(NP a, NP b, u64 p) {
  if (a.empty() || b.empty()) return 0;
  u64 res = 1;
  while (true) {
    int da = deg(a), db = deg(b);
    if (db == 0) return mulm(res, powm(b[0], da, p), p);
    if (da == 0) return mulm(res, powm(a[0], db, p), p);
    if (da < db) {
      if ((da % 2) && (db % 2)) res = (p - res) % p;
      std::swap(a, b);
      continue;
    }
    NP r = rem(a, b, p);
    if (r.empty()) return 0;
    // Res(a,b) = (-1)^{da db} lc(b)^{da - dr} Res(b, r)
    int dr = deg(r);
    if ((da % 2) && (db % 2)) res = (p - res) % p;
    res = mulm(res, powm(b.back(), da - dr, p), p);
    a = std::move(b);
    b = std::move(r);
  }
}

}  // namespace pencil::nmod
