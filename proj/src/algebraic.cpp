#include "pencil/algebraic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

namespace pencil {

namespace {

// ---------- integer polynomial helpers ----------

void taylor_shift_one(ZVec& a) {
  int n = static_cast<int>(a.size()) - 1;
  for (int i = 0; i < n; ++i)
    for (int j = n - 1; j >= i; --j) a[j] += a[j + 1];
}

int sign_variations(const ZVec& a) {
  int v = 0, last = 0;
  for (auto& c : a) {
    int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

// Descartes bound for roots of q in (0, 1).
int descartes_01(const ZVec& q) {
  ZVec r(q.rbegin(), q.rend());
  taylor_shift_one(r);
  return sign_variations(r);
}

void make_primitive(ZVec& a) {
  Int g = 0;
  for (auto& c : a) g = gcd(g, c);
  if (g > 1)
    for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

Rat eval_z(const ZVec& p, const Rat& x) {
  Rat r = 0;
  for (size_t i = p.size(); i-- > 0;) r = r * x + Rat(p[i]);
  return r;
}

// Positive power of two bounding the absolute value of every root.
Int root_bound(const ZVec& p) {
  Rat m = 0;
  Rat lc = abs(Rat(p.back()));
  for (size_t i = 0; i + 1 < p.size(); ++i) m = std::max(m, Rat(abs(Rat(p[i])) / lc));
  Int b = 1;
  while (Rat(b) <= m + 1) b *= 2;
  return b;
}

// Roots of p in (0, bound) as open intervals.
void isolate_positive(const ZVec& p, const Int& bound, bool negate, std::vector<std::pair<Rat, Rat>>& out) {
  int n = static_cast<int>(p.size()) - 1;
  ZVec q(p.size());
  Int pw = 1;
  for (int i = 0; i <= n; ++i) {
    q[i] = p[i] * pw;
    if (negate && (i % 2)) q[i] = -q[i];
    pw *= bound;
  }
  make_primitive(q);
  struct Item {
    ZVec q;
    Int c;
    unsigned k;
  };
  std::vector<Item> stack{{q, 0, 0}};
  std::vector<std::pair<Rat, Rat>> found;
  while (!stack.empty()) {
    Item it = std::move(stack.back());
    stack.pop_back();
    int v = descartes_01(it.q);
    if (v == 0) continue;
    Rat lo = Rat(it.c) / Rat(Int(1) << it.k), hi = Rat(it.c + 1) / Rat(Int(1) << it.k);
    if (v == 1) {
      found.push_back({lo * Rat(bound), hi * Rat(bound)});
      continue;
    }
    ZVec l(it.q.size());
    for (int i = 0; i <= n; ++i) l[i] = it.q[i] << (n - i);
    Rat mid = (lo + hi) / 2;
    check(eval_z(p, (negate ? -mid : mid) * Rat(bound)) != 0, "rational root inside Descartes isolation");
    ZVec r = l;
    taylor_shift_one(r);
    make_primitive(l);
    make_primitive(r);
    stack.push_back({std::move(l), it.c * 2, it.k + 1});
    stack.push_back({std::move(r), it.c * 2 + 1, it.k + 1});
  }
  for (auto& [lo, hi] : found) {
    if (negate) out.push_back({-hi, -lo});
    else out.push_back({lo, hi});
  }
}

std::vector<std::pair<Rat, Rat>> isolate_real_irreducible(const ZVec& p) {
  std::vector<std::pair<Rat, Rat>> out;
  if (p.size() == 2) {
    Rat r = Rat(-p[0]) / Rat(p[1]);
    r.canonicalize();
    out.push_back({r, r});
    return out;
  }
  Int b = root_bound(p);
  isolate_positive(p, b, true, out);
  isolate_positive(p, b, false, out);
  std::sort(out.begin(), out.end(), [](auto& a, auto& c) { return a.first < c.first; });
  return out;
}

void refine_real(const ZVec& p, Rat& lo, Rat& hi, const Rat& width) {
  if (lo == hi) return;
  int slo = sgn(eval_z(p, lo));
  while (hi - lo > width) {
    Rat mid = (lo + hi) / 2;
    int s = sgn(eval_z(p, mid));
    if (s == 0) {
      lo = hi = mid;
      return;
    }
    if (s == slo) lo = mid;
    else hi = mid;
  }
}

// ---------- complex approximation (Aberth) ----------

struct Cx {
  mpf_class re, im;
};

Cx cx(mp_bitcnt_t prec) { return {mpf_class(0, prec), mpf_class(0, prec)}; }

Cx mul(const Cx& a, const Cx& b, mp_bitcnt_t prec) {
  Cx r = cx(prec);
  r.re = a.re * b.re - a.im * b.im;
  r.im = a.re * b.im + a.im * b.re;
  return r;
}

Cx divide(const Cx& a, const Cx& b, mp_bitcnt_t prec) {
  Cx r = cx(prec);
  mpf_class d(b.re * b.re + b.im * b.im, prec);
  r.re = (a.re * b.re + a.im * b.im) / d;
  r.im = (a.im * b.re - a.re * b.im) / d;
  return r;
}

void horner(const ZVec& p, const Cx& z, mp_bitcnt_t prec, Cx& val, Cx& der) {
  val = cx(prec);
  der = cx(prec);
  for (size_t i = p.size(); i-- > 0;) {
    der = mul(der, z, prec);
    der.re += val.re;
    der.im += val.im;
    val = mul(val, z, prec);
    val.re += mpf_class(p[i], prec);
  }
}

std::vector<Cx> aberth(const ZVec& p, mp_bitcnt_t prec) {
  int n = static_cast<int>(p.size()) - 1;
  double bound = mpz_get_d(root_bound(p).get_mpz_t());
  std::vector<Cx> z;
  for (int k = 0; k < n; ++k) {
    double ang = 2 * M_PI * k / n + 0.4;
    Cx c = cx(prec);
    c.re = 0.7 * bound * std::cos(ang);
    c.im = 0.7 * bound * std::sin(ang);
    z.push_back(c);
  }
  mpf_class tol(1, prec);
  mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), prec - 8);
  Cx val, der;
  for (int iter = 0; iter < 4000; ++iter) {
    mpf_class worst(0, prec);
    for (int i = 0; i < n; ++i) {
      horner(p, z[i], prec, val, der);
      if (der.re == 0 && der.im == 0) {
        z[i].re += tol;
        continue;
      }
      Cx w = divide(val, der, prec);
      Cx s = cx(prec);
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        Cx d = cx(prec);
        d.re = z[i].re - z[j].re;
        d.im = z[i].im - z[j].im;
        Cx one = cx(prec);
        one.re = 1;
        Cx q = divide(one, d, prec);
        s.re += q.re;
        s.im += q.im;
      }
      Cx ws = mul(w, s, prec);
      Cx den = cx(prec);
      den.re = 1 - ws.re;
      den.im = -ws.im;
      Cx step = divide(w, den, prec);
      z[i].re -= step.re;
      z[i].im -= step.im;
      mpf_class mag = abs(step.re) + abs(step.im);
      if (mag > worst) worst = mag;
    }
    if (worst < tol) break;
  }
  return z;
}

// ---------- exact certification ----------

struct GQ {
  Rat re, im;
};

void eval_gq(const ZVec& p, const GQ& z, GQ& val, GQ& der) {
  val = {0, 0};
  der = {0, 0};
  for (size_t i = p.size(); i-- > 0;) {
    GQ nd{der.re * z.re - der.im * z.im + val.re, der.re * z.im + der.im * z.re + val.im};
    der = nd;
    GQ nv{val.re * z.re - val.im * z.im + Rat(p[i]), val.re * z.im + val.im * z.re};
    val = nv;
  }
}

Rat sqrt_upper(const Rat& x) {
  if (x == 0) return 0;
  mpf_class f(x, 128);
  mpf_class s = sqrt(f);
  s *= mpf_class(1.0000001, 128);
  Rat r(s);
  while (r * r < x) r *= 2;
  return r;
}

Rat dyadic(const mpf_class& f) { return Rat(f); }

// Boxes for the non-real roots, certified disjoint and away from the real
// axis; empty on failure.
std::vector<Box> certify_complex(const ZVec& p, const std::vector<Cx>& approx, int nonreal) {
  std::vector<std::pair<Rat, const Cx*>> by_im;
  for (auto& z : approx) by_im.push_back({abs(dyadic(z.im)), &z});
  std::stable_sort(by_im.begin(), by_im.end(), [](auto& a, auto& b) { return a.first > b.first; });
  int n = static_cast<int>(p.size()) - 1;
  std::vector<Box> boxes;
  for (int i = 0; i < nonreal; ++i) {
    GQ z{dyadic(by_im[i].second->re), dyadic(by_im[i].second->im)};
    GQ val, der;
    eval_gq(p, z, val, der);
    Rat d2 = der.re * der.re + der.im * der.im;
    if (d2 == 0) return {};
    Rat r2 = Rat(n * n) * (val.re * val.re + val.im * val.im) / d2;
    Rat R = sqrt_upper(r2);
    if (!(R < abs(z.im))) return {};
    boxes.push_back({z.re - R, z.re + R, z.im - R, z.im + R});
  }
  for (size_t i = 0; i < boxes.size(); ++i)
    for (size_t j = i + 1; j < boxes.size(); ++j)
      if (boxes[i].intersects(boxes[j])) return {};
  return boxes;
}

std::vector<Box> compute_boxes(const ZVec& p, int level, mp_bitcnt_t min_prec) {
  std::vector<Box> out;
  auto reals = isolate_real_irreducible(p);
  // neighbouring Descartes intervals may share an endpoint; shrink them apart
  for (size_t i = 0; i + 1 < reals.size(); ++i) {
    auto& a = reals[i];
    auto& b = reals[i + 1];
    if (a.second < b.first) continue;
    Rat e = a.second;
    while (a.second >= e) {
      Rat mid = (a.first + a.second) / 2;
      if (sgn(eval_z(p, mid)) == sgn(eval_z(p, a.first))) a.first = mid;
      else a.second = mid;
    }
    while (b.first <= e) {
      Rat mid = (b.first + b.second) / 2;
      if (sgn(eval_z(p, mid)) == sgn(eval_z(p, b.first))) b.first = mid;
      else b.second = mid;
    }
  }
  Rat width = Rat(1) / Rat(Int(1) << (16 * level));
  for (auto& [lo, hi] : reals) {
    Rat a = lo, b = hi;
    if (level > 0) refine_real(p, a, b, width);
    out.push_back({a, b, 0, 0});
  }
  int n = static_cast<int>(p.size()) - 1;
  int nonreal = n - static_cast<int>(reals.size());
  if (nonreal > 0) {
    for (mp_bitcnt_t prec = min_prec;; prec *= 2) {
      check(prec <= (1u << 16), "complex root certification did not converge");
      auto approx = aberth(p, prec);
      auto boxes = certify_complex(p, approx, nonreal);
      if (boxes.empty()) continue;
      out.insert(out.end(), boxes.begin(), boxes.end());
      break;
    }
  }
  return out;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}
std::map<std::pair<ZVec, int>, std::vector<Box>>& box_cache() {
  static std::map<std::pair<ZVec, int>, std::vector<Box>> c;
  return c;
}

bool box_order(const Box& a, const Box& b) {
  Rat ar = a.re_mid(), br = b.re_mid();
  if (ar != br) return ar < br;
  return a.im_mid() < b.im_mid();
}

std::string decimal(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

ZVec canonical_factor(const UPolyQ& q) { return primitive_int(q); }

bool zvec_less(const ZVec& a, const ZVec& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

std::vector<std::pair<Rat, Rat>> isolate_real_roots(const UPolyQ& p) {
  require(!p.is_zero(), "root isolation of zero polynomial");
  require(gcd_q(p, p.derivative()).deg() == 0, "root isolation needs a squarefree polynomial");
  std::vector<std::pair<Rat, Rat>> out;
  for (auto& q : irreducible_factors_q(p)) {
    auto r = isolate_real_irreducible(canonical_factor(q));
    out.insert(out.end(), r.begin(), r.end());
  }
  std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.first < b.first; });
  return out;
}

std::vector<Box> canonical_boxes(const ZVec& minpoly, int level) {
  {
    std::lock_guard<std::mutex> lk(cache_mutex());
    auto it = box_cache().find({minpoly, level});
    if (it != box_cache().end()) return it->second;
  }
  std::vector<Box> boxes;
  if (level == 0) {
    boxes = compute_boxes(minpoly, 0, 96);
    std::sort(boxes.begin(), boxes.end(), box_order);
  } else {
    auto base = canonical_boxes(minpoly, 0);
    for (mp_bitcnt_t prec = 96u << std::min(level, 6);; prec *= 2) {
      auto fine = compute_boxes(minpoly, level, prec);
      std::vector<Box> ordered(base.size());
      std::vector<int> hits(base.size(), 0);
      bool ok = fine.size() == base.size();
      for (auto& b : fine) {
        int which = -1, count = 0;
        for (size_t j = 0; j < base.size(); ++j)
          if (b.intersects(base[j])) {
            which = static_cast<int>(j);
            ++count;
          }
        if (count != 1) {
          ok = false;
          break;
        }
        ordered[which] = b;
        hits[which]++;
      }
      for (int h : hits) ok = ok && h == 1;
      if (ok) {
        boxes = ordered;
        break;
      }
      check(prec <= (1u << 16), "root refinement did not separate boxes");
    }
  }
  std::lock_guard<std::mutex> lk(cache_mutex());
  box_cache()[{minpoly, level}] = boxes;
  return boxes;
}

int locate_root(const ZVec& minpoly, const Box& box) {
  for (int level = 0; level < 12; ++level) {
    auto boxes = canonical_boxes(minpoly, level);
    int which = -1, count = 0;
    for (size_t j = 0; j < boxes.size(); ++j)
      if (boxes[j].intersects(box)) {
        which = static_cast<int>(j);
        ++count;
      }
    if (count == 1) return which;
    if (count == 0) throw PreconditionError("box contains no root of the polynomial");
  }
  throw PreconditionError("box does not isolate a root");
}

AlgebraicNumber AlgebraicNumber::from_rational(const Rat& r) {
  AlgebraicNumber a;
  Rat c = r;
  c.canonicalize();
  a.minpoly = {Int(-c.get_num()), Int(c.get_den())};
  a.box = {c, c, 0, 0};
  a.index = 0;
  a.rational = c;
  return a;
}

double AlgebraicNumber::approx_re() const { return box.re_mid().get_d(); }
double AlgebraicNumber::approx_im() const { return box.im_mid().get_d(); }

AlgebraicNumber refine(const AlgebraicNumber& a, int level) {
  if (a.is_rational()) return a;
  AlgebraicNumber r = a;
  r.box = canonical_boxes(a.minpoly, level)[a.index];
  return r;
}

bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  return a.minpoly == b.minpoly && a.index == b.index;
}

bool operator<(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.minpoly != b.minpoly) return zvec_less(a.minpoly, b.minpoly);
  return a.index < b.index;
}

std::string to_string(const AlgebraicNumber& a) {
  if (a.is_rational()) return to_string(*a.rational);
  std::string s = "root(" + to_string(from_zvec(a.minpoly), "x") + "; ";
  double re = a.approx_re(), im = a.approx_im();
  s += decimal(re);
  if (!a.is_real()) s += (im < 0 ? " - " : " + ") + decimal(std::fabs(im)) + "i";
  return s + ")";
}

std::vector<AlgebraicNumber> isolate_roots(const UPolyQ& p) {
  require(!p.is_zero(), "root isolation of zero polynomial");
  require(gcd_q(p, p.derivative()).deg() == 0, "root isolation needs a squarefree polynomial");
  std::vector<AlgebraicNumber> out;
  for (auto& q : irreducible_factors_q(p)) {
    ZVec m = canonical_factor(q);
    if (m.size() == 2) {
      out.push_back(AlgebraicNumber::from_rational(Rat(-m[0]) / Rat(m[1])));
      continue;
    }
    auto boxes = canonical_boxes(m, 0);
    for (size_t i = 0; i < boxes.size(); ++i) {
      AlgebraicNumber a;
      a.minpoly = m;
      a.box = boxes[i];
      a.index = static_cast<int>(i);
      out.push_back(a);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------- AlgebraicSet ----------

void AlgebraicSet::add_factor(const ZVec& q) {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), q, zvec_less);
  if (it != factors_.end() && *it == q) return;
  factors_.insert(it, q);
}

AlgebraicSet AlgebraicSet::from_polynomial(const UPolyQ& p) {
  AlgebraicSet s;
  if (p.deg() <= 0) return s;
  for (auto& q : irreducible_factors_q(p)) s.add_factor(canonical_factor(q));
  return s;
}

AlgebraicSet AlgebraicSet::from_rationals(const std::vector<Rat>& values) {
  AlgebraicSet s;
  for (auto& v : values) s.add_factor(AlgebraicNumber::from_rational(v).minpoly);
  return s;
}

UPolyQ AlgebraicSet::defining() const {
  UPolyQ r = UPolyQ::constant(Rat(1));
  for (auto& q : factors_) r = r * from_zvec(q);
  return r;
}

std::vector<AlgebraicNumber> AlgebraicSet::members() const {
  std::vector<AlgebraicNumber> out;
  for (auto& q : factors_) {
    auto r = isolate_roots(from_zvec(q));
    out.insert(out.end(), r.begin(), r.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rat> AlgebraicSet::rational_members() const {
  std::vector<Rat> out;
  for (auto& q : factors_)
    if (q.size() == 2) {
      Rat r(-q[0], q[1]);
      r.canonicalize();
      out.push_back(r);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t AlgebraicSet::size() const {
  std::size_t n = 0;
  for (auto& q : factors_) n += q.size() - 1;
  return n;
}

bool AlgebraicSet::contains(const Rat& c) const { return contains_factor(AlgebraicNumber::from_rational(c).minpoly); }

bool AlgebraicSet::contains_factor(const ZVec& q) const {
  return std::binary_search(factors_.begin(), factors_.end(), q, zvec_less);
}

AlgebraicSet AlgebraicSet::unite(const AlgebraicSet& o) const {
  AlgebraicSet r = *this;
  for (auto& q : o.factors_) r.add_factor(q);
  return r;
}

AlgebraicSet AlgebraicSet::intersect(const AlgebraicSet& o) const {
  AlgebraicSet r;
  for (auto& q : factors_)
    if (o.contains_factor(q)) r.add_factor(q);
  return r;
}

AlgebraicSet AlgebraicSet::minus(const AlgebraicSet& o) const {
  AlgebraicSet r;
  for (auto& q : factors_)
    if (!o.contains_factor(q)) r.add_factor(q);
  return r;
}

bool AlgebraicSet::subset_of(const AlgebraicSet& o) const {
  for (auto& q : factors_)
    if (!o.contains_factor(q)) return false;
  return true;
}

std::string to_string(const AlgebraicSet& s) {
  std::string out = "{";
  bool first = true;
  auto ms = s.members();
  std::stable_sort(ms.begin(), ms.end(), [](const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (a.is_rational() != b.is_rational()) return a.is_rational();
    return a.is_rational() && *a.rational < *b.rational;
  });
  for (auto& m : ms) {
    if (!first) out += ", ";
    out += to_string(m);
    first = false;
  }
  return out + "}";
}

}  // namespace pencil
