#include <chrono>
#include <functional>
#include <iostream>

#include "pencil/suites.hpp"

using namespace pencil;

namespace {

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

std::vector<Fact> corpus_facts(const std::function<bool(const CorpusItem&)>& keep_item, bool rank,
                               const std::function<bool(const Fact&)>& keep_fact) {
  std::vector<Fact> out;
  for (auto& item : golden_corpus()) {
    if (!keep_item(item)) continue;
    std::vector<Fact> facts = check_item(item);
    if (rank && item.rank_checks)
      for (auto& f : check_rank(item)) facts.push_back(f);
    for (auto& f : facts)
      if (keep_fact(f)) out.push_back(f);
  }
  return out;
}

bool report(int index, const std::string& title, const std::function<std::vector<Fact>()>& run) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<Fact> facts;
  std::string error;
  try {
    facts = run();
  } catch (const std::exception& e) {
    error = e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  long passed = 0;
  for (auto& f : facts) passed += f.ok;
  bool ok = error.empty() && !facts.empty() && passed == static_cast<long>(facts.size());
  std::printf("%s %d %s (%ld/%zu checks, %.2f s)\n", ok ? "PASS" : "FAIL", index, title.c_str(), passed, facts.size(), secs);
  if (!error.empty()) std::printf("    error: %s\n", error.c_str());
  for (auto& f : facts)
    if (!f.ok)
      std::printf("    %s | %s: expected %s, got %s\n", f.item.c_str(), f.name.c_str(), f.expected.c_str(), f.actual.c_str());
  return ok;
}

}  // namespace

int main() {
  auto any = [](const auto&) { return true; };
  bool ok = true;
  ok &= report(1, "Klein identity f + w = 1728 H3^5", [&] {
    return corpus_facts([](const CorpusItem& i) { return i.id == "klein"; }, false,
                        [](const Fact& f) { return f.name == "identity"; });
  });
  ok &= report(2, "golden redset and places at infinity", [&] {
    return corpus_facts(
        [](const CorpusItem& i) {
          return starts_with(i.id, "example1/") || starts_with(i.id, "example2/") || starts_with(i.id, "example4/") ||
                 starts_with(i.id, "example5/");
        },
        false, [](const Fact& f) { return f.kind == FactKind::Golden; });
  });
  ok &= report(3, "zeta = -1 and jungian residual 0 on 100 random Y-monic f", [] {
    std::vector<Fact> out;
    for (auto& f : suite_identities(1, 100, 5))
      if (f.name == "zeta" || f.name == "jungian residual") out.push_back(f);
    return out;
  });
  ok &= report(4, "rank cross-checks", [&] {
    return corpus_facts(any, true, [](const Fact& f) { return f.kind == FactKind::Rank; });
  });
  ok &= report(5, "bound suite", [&] {
    return corpus_facts(any, true, [](const Fact& f) { return f.kind == FactKind::Bound; });
  });
  ok &= report(6, "oracle agreement", [] { return suite_oracles(1); });
  ok &= report(7, "degenerate inputs", [] { return suite_degenerate(); });
  ok &= report(8, "absolute factors of X^2 + Y^u", [&] {
    return corpus_facts([](const CorpusItem& i) { return starts_with(i.id, "example8/"); }, false, any);
  });
  return ok ? 0 : 1;
}
