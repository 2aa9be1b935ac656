#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pencil/intersections.hpp"
#include "pencil/rank.hpp"
#include "pencil/sets.hpp"

namespace pencil {

// One exact fact about an item and whether the pipeline reproduced it.
enum class FactKind { Golden, Rank, Bound };

struct Fact {
  FactKind kind = FactKind::Golden;
  std::string item;
  std::string name;
  std::string expected;
  std::string actual;
  bool ok = false;
};

struct CorpusItem {
  std::string id;
  std::string parameters;
  BPolyQ f;
  BPolyQ w = BPolyQ::constant(Rat(1));

  std::optional<AlgebraicSet> redset;
  // Places at infinity of f and of the generic member f - c.
  std::optional<long> tau;
  std::optional<bool> composite;
  // Rational members with their expected exponent sequence, e.g. "(1,2)".
  std::vector<std::pair<Rat, std::string>> refined;
  // Rational primset members with their exponent.
  std::vector<std::pair<Rat, int>> prim;
  // Sorted exponents over primset_+, including infinity.
  std::vector<int> prim_pattern;
  std::optional<std::pair<BPolyQ, bool>> refset_partner;
  std::optional<long> absolute_count;
  // lhs == rhs as polynomials.
  std::optional<std::pair<BPolyQ, BPolyQ>> identity;
  // Run the rank and bound checks on this item.
  bool rank_checks = false;
};

// a(X) = prod (X - a_i); the a_i must be pairwise distinct.
CorpusItem gen_example1(const std::vector<Rat>& a, const Rat& z);
// b_i = a_i for i <= mu, b_i not among the a_j otherwise.
CorpusItem gen_example2(const std::vector<Rat>& a, const std::vector<Rat>& b, int mu, const Rat& gamma, const Rat& z);
// b(X) = X^m + beta1 X^(m-1) + beta2 X^(m-2) + betam; m >= 2.
CorpusItem gen_example3(const std::vector<Rat>& a, const Rat& beta1, const Rat& beta2, const Rat& betam, const Rat& z);
// Smallest integer betas (by rejection) meeting the admissibility conditions.
CorpusItem gen_example3_sampled(const std::vector<Rat>& a, const Rat& z);
CorpusItem gen_example4(const std::vector<Rat>& a, const Rat& z);
CorpusItem gen_example5(const std::vector<Rat>& a, const Rat& z);
CorpusItem gen_example8(int u);
CorpusItem gen_klein();
CorpusItem gen_hyperbolas(int a1, int a2, int b1, int b2);

enum class RandomKind { Product, Power, Smooth };
CorpusItem gen_structured_random(std::uint64_t seed, int degree_bound, RandomKind kind);

// Deterministic golden corpus.
std::vector<CorpusItem> golden_corpus();

// Golden facts and the places-at-infinity and primset bounds.
std::vector<Fact> check_item(const CorpusItem& item);
// Rank cross-checks and the deficiency-set bounds of a special pencil.
std::vector<Fact> check_rank(const CorpusItem& item);

// dim O_Q / (g, h) by linear algebra on truncations modulo powers of the
// maximal ideal; nullopt when the dimension exceeds cap.
std::optional<long> oracle_local_dimension(const BPolyQ& g, const BPolyQ& h, const PlanePoint& q, int cap = 40);

struct PrimeFieldScan {
  std::uint32_t p = 0;
  bool all_singular = false;
  std::vector<std::uint32_t> singular;  // values with a singular F_p-point
  std::vector<std::uint32_t> multiple;  // values with a multiple factor over F_p
};
PrimeFieldScan oracle_primefield_scan(const BPolyQ& f, std::uint32_t p);

// Candidate critical values of f (constant leading coefficient in Y):
// c is critical only if D(X, c) = Res_Y(f_Y, f - c) vanishes identically or
// has a multiple root, i.e. Phi(c) = disc_X D(X, c) = 0, in any
// characteristic where the leading coefficient survives.
struct CandidateCover {
  BPolyQ D;
  UPolyQ Phi;
};
CandidateCover candidate_cover(const BPolyQ& f);
// Primes where the cover is meaningful: denominators and N * lc_Y(f) units
// and Phi nonzero modulo p.
bool good_prime(const BPolyQ& f, const CandidateCover& cc, std::uint32_t p);
// Every scanned singular or multiple value is covered by the candidates.
bool covers(const CandidateCover& cc, const PrimeFieldScan& scan);

}  // namespace pencil
