#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pencil/numberfield.hpp"
#include "pencil/upoly_q.hpp"

namespace pencil {

template <class E>
UPoly<E> field_gcd(UPoly<E> a, UPoly<E> b) {
  return euclid_gcd(std::move(a), std::move(b));
}
inline UPolyQ field_gcd(UPolyQ a, UPolyQ b) { return gcd_q(std::move(a), std::move(b)); }

// Sparse polynomial in X and Y; the key (a, b) stands for X^a Y^b.
template <class E>
class BPoly {
 public:
  using Key = std::pair<int, int>;
  using Terms = std::map<Key, E>;

  BPoly() : z_(E()) {}
  explicit BPoly(E zero) : z_(zero_like(zero)) {}

  static BPoly constant(const E& c) {
    BPoly r(c);
    r.add_term(0, 0, c);
    return r;
  }
  static BPoly monomial(const E& c, int a, int b) {
    BPoly r(c);
    r.add_term(a, b, c);
    return r;
  }
  static BPoly X(const E& like) { return monomial(one_like(like), 1, 0); }
  static BPoly Y(const E& like) { return monomial(one_like(like), 0, 1); }
  // p(X) or p(Y) viewed as a bivariate polynomial.
  static BPoly from_x(const UPoly<E>& p) {
    BPoly r(p.zero());
    for (int i = 0; i <= p.deg(); ++i) r.add_term(i, 0, p[i]);
    return r;
  }
  static BPoly from_y(const UPoly<E>& p) {
    BPoly r(p.zero());
    for (int i = 0; i <= p.deg(); ++i) r.add_term(0, i, p[i]);
    return r;
  }
  // sum_j c_j(X) Y^j
  static BPoly from_y_coeffs(const std::vector<UPoly<E>>& cs, const E& like) {
    BPoly r(like);
    for (size_t j = 0; j < cs.size(); ++j)
      for (int i = 0; i <= cs[j].deg(); ++i) r.add_term(i, static_cast<int>(j), cs[j][i]);
    return r;
  }

  const Terms& terms() const { return t_; }
  const E& zero() const { return z_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == Key{0, 0}); }
  E coeff(int a, int b) const {
    auto it = t_.find({a, b});
    return it == t_.end() ? z_ : it->second;
  }
  E constant_term() const { return coeff(0, 0); }

  int deg_x() const {
    int d = -1;
    for (auto& [k, c] : t_) d = std::max(d, k.first);
    return d;
  }
  int deg_y() const {
    int d = -1;
    for (auto& [k, c] : t_) d = std::max(d, k.second);
    return d;
  }
  int total_degree() const {
    int d = -1;
    for (auto& [k, c] : t_) d = std::max(d, k.first + k.second);
    return d;
  }

  void add_term(int a, int b, const E& c) {
    if (is_zero_e(c)) return;
    auto it = t_.find({a, b});
    if (it == t_.end()) {
      t_.emplace(Key{a, b}, c);
    } else {
      it->second = it->second + c;
      if (is_zero_e(it->second)) t_.erase(it);
    }
  }

  friend BPoly operator+(const BPoly& a, const BPoly& b) {
    BPoly r = a;
    for (auto& [k, c] : b.t_) r.add_term(k.first, k.second, c);
    return r;
  }
  friend BPoly operator-(const BPoly& a) {
    BPoly r(a.z_);
    for (auto& [k, c] : a.t_) r.t_.emplace(k, -c);
    return r;
  }
  friend BPoly operator-(const BPoly& a, const BPoly& b) {
    BPoly r = a;
    for (auto& [k, c] : b.t_) r.add_term(k.first, k.second, -c);
    return r;
  }
  friend BPoly operator*(const BPoly& a, const BPoly& b) {
    BPoly r(a.z_);
    for (auto& [ka, ca] : a.t_)
      for (auto& [kb, cb] : b.t_) r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
  }
  friend BPoly operator*(const E& s, const BPoly& a) {
    BPoly r(a.z_);
    if (is_zero_e(s)) return r;
    for (auto& [k, c] : a.t_) r.add_term(k.first, k.second, s * c);
    return r;
  }
  BPoly& operator+=(const BPoly& b) { return *this = *this + b; }
  BPoly& operator-=(const BPoly& b) { return *this = *this - b; }
  BPoly& operator*=(const BPoly& b) { return *this = *this * b; }
  friend bool operator==(const BPoly& a, const BPoly& b) {
    if (a.t_.size() != b.t_.size()) return false;
    auto i = a.t_.begin();
    auto j = b.t_.begin();
    for (; i != a.t_.end(); ++i, ++j)
      if (i->first != j->first || !(i->second == j->second)) return false;
    return true;
  }
  friend bool operator!=(const BPoly& a, const BPoly& b) { return !(a == b); }

  BPoly pow(unsigned e) const {
    BPoly r = constant(one_like(z_));
    BPoly b = *this;
    while (e) {
      if (e & 1) r = r * b;
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }

  BPoly dx() const {
    BPoly r(z_);
    for (auto& [k, c] : t_)
      if (k.first > 0) r.add_term(k.first - 1, k.second, from_int_like(z_, k.first) * c);
    return r;
  }
  BPoly dy() const {
    BPoly r(z_);
    for (auto& [k, c] : t_)
      if (k.second > 0) r.add_term(k.first, k.second - 1, from_int_like(z_, k.second) * c);
    return r;
  }

  // Coefficients of Y^j as polynomials in X (index j = 0..deg_y).
  std::vector<UPoly<E>> y_coeffs() const {
    std::vector<std::vector<E>> raw(std::max(deg_y() + 1, 0));
    for (auto& [k, c] : t_) {
      auto& v = raw[k.second];
      if (static_cast<int>(v.size()) <= k.first) v.resize(k.first + 1, z_);
      v[k.first] = c;
    }
    std::vector<UPoly<E>> out;
    for (auto& v : raw) out.emplace_back(std::move(v), z_);
    return out;
  }
  // Coefficients of X^i as polynomials in Y.
  std::vector<UPoly<E>> x_coeffs() const { return swap_xy().y_coeffs(); }

  UPoly<E> lc_y() const {
    auto cs = y_coeffs();
    return cs.empty() ? UPoly<E>(z_) : cs.back();
  }

  // Coefficient of the leading term in the order (deg_Y, deg_X).
  E lex_lc() const {
    if (t_.empty()) return z_;
    Key best{-1, -1};
    E c = z_;
    for (auto& [k, v] : t_)
      if (k.second > best.second || (k.second == best.second && k.first > best.first)) {
        best = k;
        c = v;
      }
    return c;
  }
  Key lex_lead_key() const {
    Key best{-1, -1};
    for (auto& [k, v] : t_)
      if (k.second > best.second || (k.second == best.second && k.first > best.first)) best = k;
    return best;
  }

  BPoly swap_xy() const {
    BPoly r(z_);
    for (auto& [k, c] : t_) r.t_.emplace(Key{k.second, k.first}, c);
    return r;
  }

  UPoly<E> eval_x(const E& x0) const {
    std::vector<E> v(std::max(deg_y() + 1, 0), z_);
    std::vector<E> pw;
    for (auto& [k, c] : t_) {
      while (static_cast<int>(pw.size()) <= k.first) pw.push_back(pw.empty() ? one_like(z_) : pw.back() * x0);
      v[k.second] = v[k.second] + c * pw[k.first];
    }
    return UPoly<E>(std::move(v), z_);
  }
  UPoly<E> eval_y(const E& y0) const { return swap_xy().eval_x(y0); }
  E eval(const E& x0, const E& y0) const { return eval_x(x0).eval(y0); }

  // f(P, Q) for bivariate P, Q.
  BPoly substitute(const BPoly& P, const BPoly& Q) const {
    std::vector<BPoly> pp{constant(one_like(z_))}, qq{constant(one_like(z_))};
    BPoly r(z_);
    for (auto& [k, c] : t_) {
      while (static_cast<int>(pp.size()) <= k.first) pp.push_back(pp.back() * P);
      while (static_cast<int>(qq.size()) <= k.second) qq.push_back(qq.back() * Q);
      r += c * (pp[k.first] * qq[k.second]);
    }
    return r;
  }
  // f(X + a, Y + b)
  BPoly translate(const E& a, const E& b) const {
    return substitute(X(z_) + constant(a), Y(z_) + constant(b));
  }
  // f(X + lambda*Y, Y)
  BPoly shear_x(const E& lambda) const { return substitute(X(z_) + lambda * Y(z_), Y(z_)); }
  // f(X, Y + lambda*X)
  BPoly shear_y(const E& lambda) const { return substitute(X(z_), Y(z_) + lambda * X(z_)); }

  BPoly homogeneous_part(int d) const {
    BPoly r(z_);
    for (auto& [k, c] : t_)
      if (k.first + k.second == d) r.t_.emplace(k, c);
    return r;
  }
  // The degree form f^+ (sum of the terms of highest total degree).
  BPoly degree_form() const { return homogeneous_part(total_degree()); }
  bool is_homogeneous() const {
    int d = total_degree();
    for (auto& [k, c] : t_)
      if (k.first + k.second != d) return false;
    return true;
  }

  template <class F, class Fn>
  BPoly<F> map_coeffs(const F& zero, Fn fn) const {
    BPoly<F> r(zero);
    for (auto& [k, c] : t_) r.add_term(k.first, k.second, fn(c));
    return r;
  }

 private:
  static bool is_zero_e(const E& c) { return detail::elem_is_zero(c); }
  Terms t_;
  E z_;
};

using BPolyQ = BPoly<Rat>;

// Exact division a / b; returns false if b does not divide a.
template <class E>
bool try_divide(const BPoly<E>& a, const BPoly<E>& b, BPoly<E>& q) {
  if (b.is_zero()) throw PreconditionError("bivariate division by zero");
  q = BPoly<E>(a.zero());
  BPoly<E> r = a;
  auto lk = b.lex_lead_key();
  E il = inv(b.lex_lc());
  while (!r.is_zero()) {
    auto rk = r.lex_lead_key();
    if (rk.first < lk.first || rk.second < lk.second) return false;
    E c = r.lex_lc() * il;
    auto m = BPoly<E>::monomial(c, rk.first - lk.first, rk.second - lk.second);
    q += m;
    r -= m * b;
  }
  return true;
}

template <class E>
BPoly<E> exact_div(const BPoly<E>& a, const BPoly<E>& b) {
  BPoly<E> q;
  check(try_divide(a, b, q), "inexact bivariate division");
  return q;
}

template <class E>
bool divides(const BPoly<E>& b, const BPoly<E>& a) {
  BPoly<E> q;
  return try_divide(a, b, q);
}

// Scales so that the leading coefficient in the (deg_Y, deg_X) order is 1.
template <class E>
BPoly<E> normalize_lex(const BPoly<E>& a) {
  if (a.is_zero()) return a;
  return inv(a.lex_lc()) * a;
}

template <class E>
std::string to_string(const BPoly<E>& p, const std::string& xn = "X", const std::string& yn = "Y") {
  if (p.is_zero()) return "0";
  // order by total degree descending, then by Y-degree ascending
  std::vector<std::pair<std::pair<int, int>, E>> ts(p.terms().begin(), p.terms().end());
  std::sort(ts.begin(), ts.end(), [](const auto& u, const auto& v) {
    int du = u.first.first + u.first.second, dv = v.first.first + v.first.second;
    if (du != dv) return du > dv;
    return u.first.first > v.first.first;
  });
  std::string s;
  for (auto& [k, c] : ts) {
    std::string cs = to_string(c);
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (!s.empty()) s += neg ? " - " : " + ";
    else if (neg) s += "-";
    std::string mono;
    auto factor = [&](const std::string& v, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += v;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    factor(xn, k.first);
    factor(yn, k.second);
    bool unit = (cs == "1");
    if (mono.empty()) s += cs;
    else if (unit) s += mono;
    else s += cs + "*" + mono;
  }
  return s;
}

}  // namespace pencil
