#include "pencil/rational.hpp"

#include <cctype>

#include "pencil/zp.hpp"

namespace pencil {

Rat parse_rat(const std::string& s0) {
  std::string s;
  for (char ch : s0)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw PreconditionError("empty rational literal");
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto to_int = [](std::string t) {
    if (!t.empty() && t[0] == '+') t = t.substr(1);
    return Int(t, 10);
  };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw PreconditionError("malformed rational literal: " + s0);
    return Rat(to_int(s));
  }
  std::string n = s.substr(0, slash), d = s.substr(slash + 1);
  if (!valid_int(n) || !valid_int(d)) throw PreconditionError("malformed rational literal: " + s0);
  return make_rat(to_int(n), to_int(d));
}

Int floor_rat(const Rat& a) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
  return q;
}

Int ceil_rat(const Rat& a) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
  return q;
}

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  auto powm = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t res = 1;
    a %= n;
    while (e) {
      if (e & 1) res = res * a % n;
      a = a * a % n;
      e >>= 1;
    }
    return res;
  };
  for (std::uint64_t a : {2ull, 7ull, 61ull}) {
    std::uint64_t x = powm(a, d);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int i = 1; i < r; ++i) {
      x = x * x % n;
      if (x == n - 1) {
        comp = false;
        break;
      }
    }
    if (comp) return false;
  }
  return true;
}

Zp reduce_mod(const Rat& a, std::uint32_t p) {
  std::uint64_t n = mpz_fdiv_ui(a.get_num_mpz_t(), p);
  std::uint64_t d = mpz_fdiv_ui(a.get_den_mpz_t(), p);
  if (d == 0) throw PreconditionError("denominator not invertible modulo p");
  return Zp::raw(p, n) / Zp::raw(p, d);
}

bool divisible_by(const Rat& a, std::uint32_t p) { return mpz_fdiv_ui(a.get_den_mpz_t(), p) == 0; }

}  // namespace pencil
