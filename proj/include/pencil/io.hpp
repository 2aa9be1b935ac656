#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "pencil/bpoly.hpp"
#include "pencil/corpus.hpp"

namespace pencil {

using Json = nlohmann::ordered_json;
using VarNames = std::array<std::string, 2>;

inline constexpr const char* kSchema = "pencil-lab/1";

struct ParseError : std::runtime_error {
  enum class Kind { Syntax, UnknownVariable, ZeroDenominator };
  Kind kind;
  std::size_t offset;
  ParseError(Kind k, std::size_t at, const std::string& what);
};

// expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
// factor := '-' factor | base ('^' nat)?;
// base := nat | nat '/' nat | var | '(' expr ')'.
BPolyQ parse_polynomial(const std::string& text, const VarNames& vars = {"X", "Y"});
std::string unparse(const BPolyQ& f, const VarNames& vars = {"X", "Y"});

// {vars: [x, y], terms: [[[i, j], "num/den"], ...]} in increasing (i, j).
Json poly_to_json(const BPolyQ& f, const VarNames& vars = {"X", "Y"});
BPolyQ poly_from_json(const Json& j);

// Expression text, or a JSON polynomial object when the text starts with '{'.
BPolyQ read_polynomial(const std::string& text, const VarNames& vars = {"X", "Y"});

Json coefficients_to_json(const UPolyQ& p);
Json algebraic_to_json(const AlgebraicNumber& a);
// Sorted members of the set with its defining polynomial.
Json set_to_json(const AlgebraicSet& s, bool infinity);

struct AnalyzeOptions {
  std::string f;
  std::optional<std::string> w;
  VarNames vars = {"X", "Y"};
  std::vector<std::string> sets = {"all"};
  bool rank = false;
  std::uint64_t seed = 0;
  bool timing = false;
};

inline const std::vector<std::string>& set_names() {
  static const std::vector<std::string> names = {"singset", "multset", "redset", "refset", "primset", "uniset", "composite"};
  return names;
}

// The report document. Raises ParseError, PreconditionError (coprimality,
// degrees) and InternalError (a failed identity).
Json analyze(const AnalyzeOptions& opt);
std::string render_text(const Json& report);

Json fact_to_json(const Fact& f);
Json corpus_item_to_json(const CorpusItem& item);

}  // namespace pencil
