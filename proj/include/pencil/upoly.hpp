#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "pencil/rational.hpp"

namespace pencil {


// Dense univariate polynomial over a field, lowest degree first.
// The zero polynomial has an empty coefficient list and degree -1, which
// stands in for -infinity.
template <class E>
class UPoly {
 public:
  UPoly() : z_(E()) {}
  explicit UPoly(E zero) : z_(zero_like(zero)) {}
  UPoly(std::vector<E> c, E zero) : c_(std::move(c)), z_(zero_like(zero)) { trim(); }

  static UPoly constant(const E& a) { return UPoly(std::vector<E>{a}, a); }
  static UPoly monomial(const E& a, int k) {
    std::vector<E> c(k + 1, zero_like(a));
    c[k] = a;
    return UPoly(std::move(c), a);
  }
  static UPoly x(const E& like) { return monomial(one_like(like), 1); }

  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const E& zero() const { return z_; }
  E one() const { return one_like(z_); }
  const std::vector<E>& coeffs() const { return c_; }
  E operator[](int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : z_; }
  E lc() const { return c_.empty() ? z_ : c_.back(); }

  void set(int i, const E& a) {
    if (i >= static_cast<int>(c_.size())) c_.resize(i + 1, z_);
    c_[i] = a;
    trim();
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<E> c(std::max(a.c_.size(), b.c_.size()), a.z_);
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
    return UPoly(std::move(c), a.z_);
  }
  friend UPoly operator-(const UPoly& a) {
    std::vector<E> c(a.c_.size(), a.z_);
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] = -a.c_[i];
    return UPoly(std::move(c), a.z_);
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly(a.z_);
    std::vector<E> c(a.c_.size() + b.c_.size() - 1, a.z_);
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::elem_is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(c), a.z_);
  }
  friend UPoly operator*(const E& s, const UPoly& a) {
    std::vector<E> c(a.c_.size(), a.z_);
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] = s * a.c_[i];
    return UPoly(std::move(c), a.z_);
  }
  UPoly& operator+=(const UPoly& b) { return *this = *this + b; }
  UPoly& operator-=(const UPoly& b) { return *this = *this - b; }
  UPoly& operator*=(const UPoly& b) { return *this = *this * b; }

  friend bool operator==(const UPoly& a, const UPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  E eval(const E& x) const {
    E r = z_;
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return UPoly(z_);
    std::vector<E> c(c_.size() - 1, z_);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = from_int_like(z_, static_cast<long>(i)) * c_[i];
    return UPoly(std::move(c), z_);
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    return inv(lc()) * *this;
  }

  // Multiplication by x^k.
  UPoly shift(int k) const {
    if (is_zero()) return *this;
    std::vector<E> c(k, z_);
    c.insert(c.end(), c_.begin(), c_.end());
    return UPoly(std::move(c), z_);
  }

  // p(q(x)) by Horner.
  UPoly compose(const UPoly& q) const {
    UPoly r(z_);
    for (size_t i = c_.size(); i-- > 0;) r = r * q + constant(c_[i]);
    return r;
  }

  UPoly pow(unsigned e) const {
    UPoly r = constant(one());
    UPoly b = *this;
    while (e) {
      if (e & 1) r = r * b;
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }

  // Number of leading zero coefficients (order of vanishing at 0).
  int ord() const {
    for (size_t i = 0; i < c_.size(); ++i)
      if (!detail::elem_is_zero(c_[i])) return static_cast<int>(i);
    return -1;
  }

 private:
  void trim() {
    while (!c_.empty() && detail::elem_is_zero(c_.back())) c_.pop_back();
  }
  std::vector<E> c_;
  E z_;
};

template <class E>
std::pair<UPoly<E>, UPoly<E>> divmod(const UPoly<E>& a, const UPoly<E>& b) {
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  E z = a.zero();
  if (a.deg() < b.deg()) return {UPoly<E>(z), a};
  std::vector<E> r = a.coeffs();
  std::vector<E> q(a.deg() - b.deg() + 1, z);
  E il = inv(b.lc());
  int db = b.deg();
  for (int i = a.deg(); i >= db; --i) {
    if (is_zero(r[i])) continue;
    E t = r[i] * il;
    q[i - db] = t;
    for (int j = 0; j <= db; ++j) r[i - db + j] = r[i - db + j] - t * b[j];
  }
  r.resize(db);
  return {UPoly<E>(std::move(q), z), UPoly<E>(std::move(r), z)};
}

template <class E>
UPoly<E> operator%(const UPoly<E>& a, const UPoly<E>& b) {
  return divmod(a, b).second;
}

template <class E>
UPoly<E> exact_div(const UPoly<E>& a, const UPoly<E>& b) {
  auto [q, r] = divmod(a, b);
  check(r.is_zero(), "inexact univariate division");
  return q;
}

template <class E>
bool divides(const UPoly<E>& b, const UPoly<E>& a) {
  if (b.is_zero()) return a.is_zero();
  return divmod(a, b).second.is_zero();
}

// Monic gcd by the Euclidean algorithm; gcd(0,0) = 0.
template <class E>
UPoly<E> euclid_gcd(UPoly<E> a, UPoly<E> b) {
  while (!b.is_zero()) {
    UPoly<E> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
template <class E>
struct XGcd {
  UPoly<E> g, s, t;
};

template <class E>
XGcd<E> xgcd(const UPoly<E>& a, const UPoly<E>& b) {
  E z = a.zero();
  UPoly<E> r0 = a, r1 = b;
  UPoly<E> s0 = UPoly<E>::constant(one_like(z)), s1(z);
  UPoly<E> t0(z), t1 = UPoly<E>::constant(one_like(z));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly<E> s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    UPoly<E> t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  E il = inv(r0.lc());
  return {il * r0, il * s0, il * t0};
}

// Inverse of a modulo m (gcd must be 1).
template <class E>
UPoly<E> inverse_mod(const UPoly<E>& a, const UPoly<E>& m) {
  auto g = xgcd(a % m, m);
  if (g.g.deg() != 0) throw PreconditionError("element not invertible modulo polynomial");
  return g.s % m;
}

// Squarefree decomposition over a field of characteristic 0 or larger than
// deg a (Yun's algorithm). Returns (factor, multiplicity) with strictly
// increasing multiplicities, factors monic and nonconstant.
template <class E>
std::vector<std::pair<UPoly<E>, int>> yun_squarefree(const UPoly<E>& a, UPoly<E> (*gcd)(UPoly<E>, UPoly<E>) = euclid_gcd<E>) {
  std::vector<std::pair<UPoly<E>, int>> out;
  if (a.deg() <= 0) return out;
  UPoly<E> f = a.monic();
  UPoly<E> d = f.derivative();
  UPoly<E> g = gcd(f, d);
  UPoly<E> b = exact_div(f, g);
  UPoly<E> c = exact_div(d, g);
  UPoly<E> e = c - b.derivative();
  int i = 1;
  while (b.deg() > 0) {
    UPoly<E> h = gcd(b, e);
    if (h.deg() > 0) out.push_back({h.monic(), i});
    b = exact_div(b, h);
    c = exact_div(e, h);
    e = c - b.derivative();
    ++i;
  }
  return out;
}

template <class E>
UPoly<E> squarefree_part(const UPoly<E>& a, UPoly<E> (*gcd)(UPoly<E>, UPoly<E>) = euclid_gcd<E>) {
  if (a.deg() <= 0) return UPoly<E>::constant(one_like(a.zero()));
  return exact_div(a.monic(), gcd(a, a.derivative()));
}

template <class E>
std::string to_string(const UPoly<E>& p, const std::string& var = "x") {
  if (p.is_zero()) return "0";
  std::string s;
  for (int i = p.deg(); i >= 0; --i) {
    if (is_zero(p[i])) continue;
    std::string c = to_string(p[i]);
    bool neg = !c.empty() && c[0] == '-';
    if (!s.empty()) s += neg ? " - " : " + ";
    else if (neg) s += "-";
    if (neg) c = c.substr(1);
    bool unit = (c == "1");
    if (i == 0 || !unit) s += c;
    if (i > 0) {
      if (!unit) s += "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace pencil
