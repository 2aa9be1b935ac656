#include "pencil/io.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>

#include "pencil/rank.hpp"
#include "pencil/sets.hpp"
#include "pencil/suites.hpp"

namespace pencil {

ParseError::ParseError(Kind k, std::size_t at, const std::string& what)
    : std::runtime_error(what + " at byte " + std::to_string(at)), kind(k), offset(at) {}

namespace {

class Parser {
 public:
  Parser(const std::string& s, const VarNames& vars) : s_(s), vars_(vars) {}

  BPolyQ parse() {
    BPolyQ r = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) { throw ParseError(ParseError::Kind::Syntax, i_, what); }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }

  BPolyQ expr() {
    BPolyQ r = term();
    while (true) {
      if (peek('+')) {
        ++i_;
        r = r + term();
      } else if (peek('-')) {
        ++i_;
        r = r - term();
      } else {
        return r;
      }
    }
  }

  BPolyQ term() {
    BPolyQ r = factor();
    while (true) {
      skip();
      if (peek('*')) {
        ++i_;
        r = r * factor();
      } else if (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '(' || s_[i_] == '_')) {
        fail("expected an operator (implicit multiplication is not allowed)");
      } else {
        return r;
      }
    }
  }

  BPolyQ factor() {
    if (peek('-')) {
      ++i_;
      return -factor();
    }
    BPolyQ b = base();
    if (peek('^')) {
      ++i_;
      skip();
      std::size_t at = i_;
      Int e = nat();
      if (e > 100000) throw ParseError(ParseError::Kind::Syntax, at, "exponent too large");
      return b.pow(static_cast<int>(e.get_si()));
    }
    return b;
  }

  Int nat() {
    skip();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected a natural number");
    return Int(s_.substr(start, i_ - start));
  }

  BPolyQ base() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int num = nat();
      if (peek('/')) {
        ++i_;
        skip();
        std::size_t at = i_;
        Int den = nat();
        if (den == 0) throw ParseError(ParseError::Kind::ZeroDenominator, at, "zero denominator");
        Rat q(num, den);
        q.canonicalize();
        return BPolyQ::constant(q);
      }
      return BPolyQ::constant(Rat(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      std::string name = s_.substr(start, i_ - start);
      if (name == vars_[0]) return BPolyQ::X(Rat(0));
      if (name == vars_[1]) return BPolyQ::Y(Rat(0));
      throw ParseError(ParseError::Kind::UnknownVariable, start, "unknown variable '" + name + "'");
    }
    if (c == '(') {
      ++i_;
      BPolyQ r = expr();
      if (!peek(')')) fail("expected ')'");
      ++i_;
      return r;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  const VarNames& vars_;
  std::size_t i_ = 0;
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

Json zvec_to_json(const ZVec& v) {
  Json a = Json::array();
  for (auto& c : v) a.push_back(c.get_str());
  return a;
}

Json fiber_to_json(const RefinedFiber& r) {
  Json j;
  j["member"] = r.at_infinity ? Json("infinity") : zvec_to_json(r.minpoly);
  j["e"] = r.exponents();
  Json layers = Json::array();
  for (auto& l : r.layers) layers.push_back({{"e", l.e}, {"count", l.count}, {"y_degree", l.y_degree}});
  j["layers"] = layers;
  return j;
}

Json bound(const std::string& name, long lhs, long rhs) {
  return {{"name", name}, {"lhs", lhs}, {"rhs", rhs}, {"holds", lhs <= rhs}};
}

std::string member_text(const Json& set) {
  std::string s = set.at("text").get<std::string>();
  if (set.at("infinity").get<bool>()) s = s.size() == 2 ? "{infinity}" : s.substr(0, s.size() - 1) + ", infinity}";
  return s;
}

std::string member_equation(const Json& member) {
  if (member.is_string()) return "c = infinity";
  ZVec v;
  for (auto& c : member) v.push_back(Int(c.get<std::string>()));
  return to_string(from_zvec(v), "c") + " = 0";
}

}  // namespace

BPolyQ parse_polynomial(const std::string& text, const VarNames& vars) {
  require(vars[0] != vars[1], "variable names must differ");
  return Parser(text, vars).parse();
}

std::string unparse(const BPolyQ& f, const VarNames& vars) { return to_string(f, vars[0], vars[1]); }

Json poly_to_json(const BPolyQ& f, const VarNames& vars) {
  Json terms = Json::array();
  for (auto& [k, c] : f.terms()) terms.push_back(Json::array({Json::array({k.first, k.second}), c.get_str()}));
  return {{"vars", Json::array({vars[0], vars[1]})}, {"terms", terms}};
}

BPolyQ poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw ParseError(ParseError::Kind::Syntax, 0, "polynomial object needs a terms array");
  BPolyQ f(Rat(0));
  for (auto& t : j["terms"]) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_array() || t[0].size() != 2 || !t[1].is_string())
      throw ParseError(ParseError::Kind::Syntax, 0, "malformed term " + t.dump());
    int a = t[0][0].get<int>(), b = t[0][1].get<int>();
    if (a < 0 || b < 0) throw ParseError(ParseError::Kind::Syntax, 0, "negative exponent in " + t.dump());
    Rat c;
    try {
      c = parse_rat(t[1].get<std::string>());
    } catch (const PreconditionError& e) {
      throw ParseError(ParseError::Kind::ZeroDenominator, 0, e.what());
    }
    f.add_term(a, b, c);
  }
  return f;
}

BPolyQ read_polynomial(const std::string& text, const VarNames& vars) {
  std::string t = trim(text);
  if (!t.empty() && t[0] == '{') {
    Json j;
    try {
      j = Json::parse(t);
    } catch (const Json::parse_error& e) {
      throw ParseError(ParseError::Kind::Syntax, e.byte, "invalid JSON");
    }
    return poly_from_json(j);
  }
  return parse_polynomial(text, vars);
}

Json coefficients_to_json(const UPolyQ& p) {
  Json a = Json::array();
  for (int i = 0; i <= p.deg(); ++i) a.push_back(p[i].get_str());
  return a;
}

Json algebraic_to_json(const AlgebraicNumber& a) {
  Json j;
  j["minpoly"] = zvec_to_json(a.minpoly);
  j["box"] = Json::array({a.box.re_lo.get_str(), a.box.re_hi.get_str(), a.box.im_lo.get_str(), a.box.im_hi.get_str()});
  j["rational"] = a.is_rational();
  if (a.rational) j["value"] = a.rational->get_str();
  return j;
}

Json set_to_json(const AlgebraicSet& s, bool infinity) {
  auto ms = s.members();
  std::sort(ms.begin(), ms.end());
  Json members = Json::array();
  for (auto& m : ms) members.push_back(algebraic_to_json(m));
  Json j;
  j["defining"] = coefficients_to_json(s.defining());
  j["members"] = members;
  j["infinity"] = infinity;
  j["size"] = s.size() + (infinity ? 1 : 0);
  j["text"] = to_string(s);
  return j;
}

Json analyze(const AnalyzeOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  BPolyQ f = read_polynomial(opt.f, opt.vars);
  std::optional<BPolyQ> w;
  if (opt.w) w = read_polynomial(*opt.w, opt.vars);
  std::vector<std::string> wanted;
  for (auto& s : opt.sets) {
    if (s == "all") {
      wanted = set_names();
      break;
    }
    if (std::find(set_names().begin(), set_names().end(), s) == set_names().end())
      throw PreconditionError("unknown set '" + s + "'");
    wanted.push_back(s);
  }
  auto want = [&](const std::string& s) { return std::find(wanted.begin(), wanted.end(), s) != wanted.end(); };

  PencilInput raw = w ? make_pencil(f, *w) : make_pencil(f);
  PencilInput in = normalize(raw);
  bool special = in.special();
  std::string args = special ? "(f)" : "(f,w)";

  Json doc;
  doc["schema"] = kSchema;
  Json input;
  input["vars"] = Json::array({opt.vars[0], opt.vars[1]});
  input["original"] = {{"f", unparse(f, opt.vars)}, {"w", w ? Json(unparse(*w, opt.vars)) : Json(nullptr)}};
  input["normalized"] = {{"f", poly_to_json(in.f, opt.vars)},
                         {"w", poly_to_json(in.w, opt.vars)},
                         {"swapped", in.swapped},
                         {"lambda", in.lambda}};
  doc["input"] = input;
  doc["seed"] = opt.seed;

  Json sets = Json::object();
  Json bounds = Json::array();
  std::optional<CompositeResult> comp;
  if (want("composite")) comp = is_composite(in);
  if (want("singset")) {
    SingsetResult s = singset(in);
    Json j = set_to_json(s.set, s.infinity);
    j["annotations"] = {{"all_of_k", s.all_of_k}};
    sets["singset"] = j;
  }
  if (want("multset")) {
    MultsetResult m = multset(in);
    Json j = set_to_json(m.set, m.infinity);
    Json wit = Json::array();
    for (auto& [c, g] : m.witnesses) wit.push_back({{"c", c.get_str()}, {"multiple_factor", unparse(g, opt.vars)}});
    j["annotations"] = {{"hhat", unparse(m.hhat, opt.vars)}, {"witnesses", wit}};
    if (m.product_identity) j["annotations"]["product_identity"] = *m.product_identity;
    sets["multset"] = j;
  }
  if (want("redset") || want("refset")) {
    RedsetResult r = redset_refined(in);
    Json fibers = Json::array();
    for (auto& fib : r.fibers) fibers.push_back(fiber_to_json(fib));
    if (r.fiber_at_infinity) fibers.push_back(fiber_to_json(*r.fiber_at_infinity));
    if (want("redset")) {
      Json j = set_to_json(r.set, r.infinity);
      j["annotations"] = {{"composite", r.composite}, {"generic_count", r.generic_count}};
      sets["redset"] = j;
    }
    if (want("refset")) {
      Json j = set_to_json(r.set, r.infinity);
      j["annotations"] = {{"fibers", fibers}};
      sets["refset"] = j;
    }
    if (special && !r.composite) {
      PlacesBound b = redset_places_bound(in, r);
      Json jb = bound("|redset| <= tau - 1", static_cast<long>(r.set.size()), b.tau - 1);
      jb["tau_stable"] = b.stable;
      bounds.push_back(jb);
    }
  }
  if (want("primset") || want("uniset")) {
    PrimsetResult p = primset(in);
    Json members = Json::array();
    for (auto& m : p.members)
      members.push_back({{"member", m.at_infinity ? Json("infinity") : zvec_to_json(m.minpoly)}, {"mu", m.mu}, {"count", m.count}});
    if (want("primset")) {
      Json j = set_to_json(p.primset, p.prim_infinity);
      j["annotations"] = {{"powers", members}};
      sets["primset"] = j;
    }
    if (want("uniset")) {
      Json j = set_to_json(p.uniset, p.uni_infinity);
      j["annotations"] = Json::object();
      sets["uniset"] = j;
    }
    if (!special) bounds.push_back(bound("|primset_+| <= 4", p.plus_size(), 4));
  }
  if (want("composite")) sets["composite"] = {{"composite", comp->composite}, {"generic_count", comp->generic_count}};
  doc["sets"] = sets;

  if (opt.rank && special) {
    RankReport r = rank_report(raw.f);
    check(r.euler_residual == 0, "Euler residual is nonzero");
    check(r.zeta == (r.strict_star ? -1 : -r.v_inf), "zeta identity fails");
    Json rank;
    rank["N"] = r.N;
    rank["rho_a"] = r.rho_a;
    rank["rho_pi"] = r.rho_pi;
    Json defset = set_to_json(r.defset.set, false);
    Json per = Json::array();
    for (auto& m : r.defset.members)
      per.push_back({{"member", zvec_to_json(m.minpoly)}, {"rho_a", m.rho_a}, {"fiber_gcd_degree", m.fiber_gcd_degree}});
    defset["annotations"] = {{"rho_a", per}};
    rank["defset"] = defset;
    rank["zeta"] = r.zeta;
    rank["jungian_residual"] = r.jungian_residual;
    rank["euler_residual"] = r.euler_residual;
    rank["points_at_infinity"] = r.v_inf;
    rank["single_point_at_infinity"] = r.strict_star;
    doc["rank"] = rank;
    bounds.push_back(bound("|defset| <= 1 + rho_a + deg_Y hhat", r.defset_size, r.defset_bound));
    bounds.push_back(bound("|defset \\ multset| <= 1 + rho_a + deg_Y hhat", r.defset_off_multset_size, r.defset_bound));
    bounds.push_back(bound("|singset| <= 1 + rho_a + 2 deg_Y hhat", r.singset_size, r.singset_bound));
    bounds.push_back({{"name", "singset \\ multset in defset"}, {"holds", r.singset_minus_multset_in_defset}});
  } else {
    doc["rank"] = nullptr;
  }
  doc["bounds"] = bounds;
  if (opt.timing) {
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    doc["timing"] = {{"total_ms", ms}};
  }
  return doc;
}

std::string render_text(const Json& report) {
  std::string out;
  bool special = report["input"]["original"]["w"].is_null();
  std::string args = special ? "(f)" : "(f,w)";
  out += "f = " + report["input"]["original"]["f"].get<std::string>() + "\n";
  if (!special) out += "w = " + report["input"]["original"]["w"].get<std::string>() + "\n";
  for (auto& [name, s] : report["sets"].items()) {
    if (name == "composite") {
      out += "composite" + args + " = " + std::string(s["composite"].get<bool>() ? "true" : "false") + "\n";
      continue;
    }
    out += name + args + " = " + member_text(s) + "\n";
    if (name == "refset")
      for (auto& fib : s["annotations"]["fibers"]) {
        std::string e;
        for (auto& x : fib["e"]) e += (e.empty() ? "" : ",") + std::to_string(x.get<int>());
        out += "  e(c) = (" + e + ") at " + member_equation(fib["member"]) + "\n";
      }
    if (name == "primset")
      for (auto& m : s["annotations"]["powers"])
        out += "  mu = " + std::to_string(m["mu"].get<int>()) + " at " + member_equation(m["member"]) + "\n";
  }
  if (!report["rank"].is_null()) {
    auto& r = report["rank"];
    out += "rho_a" + args + " = " + std::to_string(r["rho_a"].get<long>()) + "\n";
    out += "rho_pi" + args + " = " + std::to_string(r["rho_pi"].get<long>()) + "\n";
    out += "defset" + args + " = " + member_text(r["defset"]) + "\n";
    out += "zeta" + args + " = " + std::to_string(r["zeta"].get<long>()) + "\n";
    out += "jungian residual = " + std::to_string(r["jungian_residual"].get<long>()) + "\n";
  }
  for (auto& b : report["bounds"]) {
    out += std::string(b["holds"].get<bool>() ? "holds " : "FAILS ") + b["name"].get<std::string>();
    if (b.contains("lhs")) out += " (" + std::to_string(b["lhs"].get<long>()) + " <= " + std::to_string(b["rhs"].get<long>()) + ")";
    out += "\n";
  }
  if (report.contains("timing")) out += "time " + std::to_string(report["timing"]["total_ms"].get<double>()) + " ms\n";
  return out;
}

Json fact_to_json(const Fact& f) {
  return {{"kind", to_string(f.kind)}, {"item", f.item}, {"name", f.name}, {"expected", f.expected}, {"actual", f.actual}, {"ok", f.ok}};
}

Json corpus_item_to_json(const CorpusItem& item) {
  Json j;
  j["id"] = item.id;
  j["parameters"] = item.parameters;
  j["f"] = poly_to_json(item.f);
  j["w"] = poly_to_json(item.w);
  Json e = Json::object();
  if (item.redset) e["redset"] = set_to_json(*item.redset, false);
  if (item.tau) e["tau"] = *item.tau;
  if (item.composite) e["composite"] = *item.composite;
  if (!item.refined.empty()) {
    Json r = Json::array();
    for (auto& [c, s] : item.refined) r.push_back({{"c", c.get_str()}, {"e", s}});
    e["refset"] = r;
  }
  if (!item.prim.empty()) {
    Json r = Json::array();
    for (auto& [c, mu] : item.prim) r.push_back({{"c", c.get_str()}, {"mu", mu}});
    e["primset"] = r;
  }
  if (!item.prim_pattern.empty()) e["primset_exponents"] = item.prim_pattern;
  if (item.refset_partner) e["refset_partner"] = {{"g", poly_to_json(item.refset_partner->first)}, {"equal", item.refset_partner->second}};
  if (item.absolute_count) e["absolute_factors"] = *item.absolute_count;
  if (item.identity) e["identity"] = {{"lhs", poly_to_json(item.identity->first)}, {"rhs", poly_to_json(item.identity->second)}};
  j["expected"] = e;
  return j;
}

}  // namespace pencil
