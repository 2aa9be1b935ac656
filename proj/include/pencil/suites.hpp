#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pencil/corpus.hpp"

namespace pencil {

// Golden facts of the corpus, plus rank facts for items that support them.
std::vector<Fact> suite_golden();

// Random f = Y^N + lower-degree terms with N <= max_degree: zeta = -1, the
// jungian and Euler residuals vanish, and I(f_X, f_Y; A) <= (N - 1)^2.
std::vector<Fact> suite_identities(std::uint64_t seed, int count = 100, int max_degree = 5);

// Differential oracles: Fulton against the local quotient dimension, kernel
// resultants and gcds against reductions mod p, and candidate covers of
// prime-field scans.
std::vector<Fact> suite_oracles(std::uint64_t seed);

// Prime-field and zero-dimensional corner cases.
std::vector<Fact> suite_degenerate();

bool all_ok(const std::vector<Fact>& facts);
std::string to_string(FactKind kind);

}  // namespace pencil
