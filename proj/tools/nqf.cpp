#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nqf/verify.hpp"

namespace {

std::vector<int> parseWord(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size() || v < 1) throw nqf::EngineError("bad word letter: " + tok);
    out.push_back(v - 1);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for quantized Weyl-orbit algebras"};
  app.get_formatter()->column_width(28);

  std::string command, arg;
  app.add_option("command", command,
                 "basis | hilbert | schubert | invariants | verify | dump")
      ->required();
  app.add_option("arg", arg, "check name or 'all' for verify; table name for dump");

  std::string type = "A";
  int rank = 2;
  int maxDegree = 64;
  std::string cLong = "1", cShort = "1";
  uint64_t seed = 1;
  std::string cacheDir, format = "json", wordArg;
  bool timings = false;

  app.add_option("--type", type, "root system type")->check(CLI::IsMember({"A", "B", "C", "D"}));
  app.add_option("--rank", rank, "root system rank")->check(CLI::PositiveNumber);
  app.add_option("--max-degree", maxDegree, "truncation bound for the construction")
      ->check(CLI::PositiveNumber);
  app.add_option("--c-long", cLong, "coefficient on the long-root orbit (rational)");
  app.add_option("--c-short", cShort, "coefficient on the short-root orbit (rational)");
  app.add_option("--seed", seed, "seed for randomized checks");
  app.add_option("--cache", cacheDir, "cache directory (NQF_CACHE is the default)");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--w", wordArg, "reduced word, comma-separated 1-based simple indices");
  app.add_flag("--timings", timings, "include wall-clock times in reports");

  CLI11_PARSE(app, argc, argv);

  try {
    nqf::EngineConfig cfg;
    cfg.type = type[0];
    cfg.rank = rank;
    cfg.maxDegree = maxDegree;
    cfg.cLong = nqf::ratFromString(cLong);
    cfg.cShort = nqf::ratFromString(cShort);
    cfg.seed = seed;
    cfg.format = format;
    cfg.timings = timings;
    if (!cacheDir.empty()) {
      cfg.cacheDir = cacheDir;
    } else if (const char* env = std::getenv("NQF_CACHE")) {
      cfg.cacheDir = env;
    }

    std::vector<int> word;
    if (!wordArg.empty()) word = parseWord(wordArg);

    if (command == "verify") {
      std::string which = arg.empty() ? "all" : arg;
      nqf::Engine eng(cfg);
      std::vector<std::string> checks =
          which == "all" ? nqf::suiteChecks(cfg.type) : std::vector<std::string>{which};
      auto reports = nqf::runSuite(eng, checks);
      for (const auto& r : reports)
        std::cout << nqf::renderReport(r, cfg.format, cfg.timings) << "\n";
      return nqf::anyFailed(reports) ? 1 : 0;
    }

    std::string what;
    if (command == "dump") {
      if (arg.empty()) throw nqf::EngineError("dump needs a table name");
      what = arg;
    } else if (command == "basis" || command == "hilbert" || command == "schubert" ||
               command == "invariants") {
      what = command;
    } else {
      throw nqf::EngineError("unknown command: " + command);
    }
    nqf::Engine eng(cfg);
    std::cout << nqf::dumpTable(eng, what, word, cfg.format);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "nqf: error: " << e.what() << "\n";
    return 2;
  }
}
