#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "pencil/io.hpp"
#include "pencil/suites.hpp"

using namespace pencil;

namespace {

std::string load(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw PreconditionError("cannot read " + arg.substr(1));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

VarNames parse_vars(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw PreconditionError("--vars expects two names such as X,Y");
  return {s.substr(0, comma), s.substr(comma + 1)};
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, ',');)
    if (!part.empty()) out.push_back(part);
  return out;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw PreconditionError("cannot write " + path);
  out << text;
}

std::vector<Fact> run_suite(const std::string& suite, std::uint64_t seed) {
  std::vector<Fact> facts;
  auto append = [&](std::vector<Fact> more) { facts.insert(facts.end(), more.begin(), more.end()); };
  if (suite == "paper-examples" || suite == "all") append(suite_golden());
  if (suite == "identities" || suite == "all") append(suite_identities(seed));
  if (suite == "oracles" || suite == "all") {
    append(suite_oracles(seed));
    append(suite_degenerate());
  }
  return facts;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of polynomial pencils f - c*w over Q"};
  app.require_subcommand(1);

  AnalyzeOptions opt;
  std::string vars = "X,Y", sets = "all", rank = "off", format = "json", out;
  auto* analyze_cmd = app.add_subcommand("analyze", "Special sets, rank and bounds of one pencil");
  analyze_cmd->add_option("--f", opt.f, "Polynomial f, or @file with an expression or a JSON polynomial")->required();
  analyze_cmd->add_option("--w", opt.w, "Polynomial w of a general pencil, or @file");
  analyze_cmd->add_option("--vars", vars, "Variable names")->capture_default_str();
  analyze_cmd->add_option("--sets", sets, "all, or a comma list of singset,multset,redset,refset,primset,uniset,composite")
      ->capture_default_str();
  analyze_cmd->add_option("--rank", rank, "Rank and defset for special pencils")->check(CLI::IsMember({"on", "off"}))->capture_default_str();
  analyze_cmd->add_option("--seed", opt.seed, "Seed recorded in the report");
  analyze_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  analyze_cmd->add_option("--out", out, "Output path");
  analyze_cmd->add_flag("--timing", opt.timing, "Add wall-clock timing to the report");

  std::string suite;
  std::uint64_t verify_seed = 1;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"paper-examples", "identities", "oracles", "all"}));
  verify_cmd->add_option("--seed", verify_seed, "Seed for random instances")->capture_default_str();
  verify_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  verify_cmd->add_option("--out", out, "Output path");

  std::uint64_t corpus_seed = 1;
  int random_count = 0;
  auto* corpus_cmd = app.add_subcommand("corpus", "Emit corpus items as JSON");
  corpus_cmd->add_option("--random", random_count, "Also emit this many structured random items");
  corpus_cmd->add_option("--seed", corpus_seed, "Seed for random items")->capture_default_str();
  corpus_cmd->add_option("--out", out, "Output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*analyze_cmd) {
      opt.vars = parse_vars(vars);
      opt.f = load(opt.f);
      if (opt.w) opt.w = load(*opt.w);
      opt.sets = split(sets);
      opt.rank = rank == "on";
      Json report = analyze(opt);
      emit(format == "json" ? report.dump(2) + "\n" : render_text(report), out);
      return 0;
    }
    if (*verify_cmd) {
      std::vector<Fact> facts = run_suite(suite, verify_seed);
      if (format == "json") {
        Json j = {{"schema", kSchema}, {"suite", suite}, {"seed", verify_seed}, {"ok", all_ok(facts)}};
        Json list = Json::array();
        for (auto& f : facts) list.push_back(fact_to_json(f));
        j["facts"] = list;
        emit(j.dump(2) + "\n", out);
      } else {
        std::ostringstream os;
        long failed = 0;
        for (auto& f : facts) {
          failed += !f.ok;
          os << (f.ok ? "PASS " : "FAIL ") << to_string(f.kind) << " | " << f.item << " | " << f.name << " | expected " << f.expected
             << " | got " << f.actual << "\n";
        }
        os << facts.size() - failed << "/" << facts.size() << " checks passed\n";
        emit(os.str(), out);
      }
      return all_ok(facts) ? 0 : 1;
    }
    if (*corpus_cmd) {
      Json items = Json::array();
      for (auto& item : golden_corpus()) items.push_back(corpus_item_to_json(item));
      const RandomKind kinds[] = {RandomKind::Product, RandomKind::Power, RandomKind::Smooth};
      for (int i = 0; i < random_count; ++i)
        items.push_back(corpus_item_to_json(gen_structured_random(corpus_seed + i, 4, kinds[i % 3])));
      emit(Json({{"schema", kSchema}, {"items", items}}).dump(2) + "\n", out);
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 4;
}
