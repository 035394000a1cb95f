#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nqf/verify.hpp"

using namespace nqf;
namespace fs = std::filesystem;

namespace {

EngineConfig cfgFor(char type, int rank, int maxDegree = 64) {
  EngineConfig c;
  c.type = type;
  c.rank = rank;
  c.maxDegree = maxDegree;
  return c;
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string renderAll(const std::vector<CheckReport>& rs, const std::string& fmt, bool t) {
  std::string out;
  for (const auto& r : rs) out += renderReport(r, fmt, t) + "\n";
  return out;
}

}  // namespace

TEST_CASE("suite lists are canonical and sorted") {
  auto a = suiteChecks('A');
  CHECK(a == std::vector<std::string>{"corollary", "dbar", "hilbert", "lemma2", "prop1",
                                      "prop1-sets", "prop2", "prop3", "theorem1"});
  auto b = suiteChecks('B');
  CHECK(b.size() == 10);
  CHECK(b.front() == "bn-relations");
  CHECK(std::is_sorted(b.begin(), b.end()));
  CHECK(suiteChecks('C') == a);
}

TEST_CASE("the full suite passes on the smallest type A instance") {
  Engine eng(cfgFor('A', 2));
  auto reports = runSuite(eng, suiteChecks('A'));
  REQUIRE(reports.size() == 9);
  for (size_t i = 0; i + 1 < reports.size(); ++i) CHECK(reports[i].check < reports[i + 1].check);
  for (const auto& r : reports) {
    CAPTURE(r.check);
    CAPTURE(r.counterexample);
    CHECK(r.status == "pass");
    CHECK(r.instance == "A2");
    CHECK(r.truncation == 4);
    CHECK(r.complete);
    if (r.check == "lemma2") CHECK(r.seed == "1");
    else CHECK(r.seed.empty());
  }
}

TEST_CASE("the type B suite passes with the extra relation check") {
  Engine eng(cfgFor('B', 2));
  auto reports = runSuite(eng, suiteChecks('B'));
  REQUIRE(reports.size() == 10);
  for (const auto& r : reports) {
    CAPTURE(r.check);
    CAPTURE(r.counterexample);
    CHECK(r.status == "pass");
    CHECK(r.truncation == 8);
  }
}

TEST_CASE("reports and cache files reproduce byte for byte") {
  fs::remove_all("vtest_cache_a");
  fs::remove_all("vtest_cache_b");
  EngineConfig ca = cfgFor('A', 2);
  ca.cacheDir = "vtest_cache_a";
  EngineConfig cb = ca;
  cb.cacheDir = "vtest_cache_b";

  Engine ea(ca);
  auto ra = runSuite(ea, suiteChecks('A'));
  Engine eb(cb);
  auto rb = runSuite(eb, suiteChecks('A'));
  CHECK(renderAll(ra, "json", false) == renderAll(rb, "json", false));

  REQUIRE(fs::exists(ea.cachePath()));
  REQUIRE(fs::exists(eb.cachePath()));
  std::string bytesA = readFile(ea.cachePath());
  CHECK(bytesA == readFile(eb.cachePath()));
  CHECK(!bytesA.empty());

  SUBCASE("a warm start reuses the cache and reports identically") {
    Engine warm(ca);
    CHECK(!warm.cacheRebuilt());
    auto rw = runSuite(warm, suiteChecks('A'));
    CHECK(renderAll(rw, "json", false) == renderAll(ra, "json", false));
  }

  SUBCASE("a corrupt cache is rebuilt and rewritten") {
    {
      std::ofstream out(ea.cachePath(), std::ios::binary | std::ios::trunc);
      out << "not a cache\n";
    }
    Engine again(ca);
    CHECK(again.cacheRebuilt());
    CHECK(readFile(again.cachePath()) == bytesA);
    auto rr = runSuite(again, suiteChecks('A'));
    CHECK(renderAll(rr, "json", false) == renderAll(ra, "json", false));
  }

  fs::remove_all("vtest_cache_a");
  fs::remove_all("vtest_cache_b");
}

TEST_CASE("empty check lists and unknown names") {
  Engine eng(cfgFor('A', 1));
  CHECK(runSuite(eng, {}).empty());
  CHECK_THROWS_AS(runSuite(eng, {"nope"}), EngineError);
  CHECK_THROWS_AS(runSuite(eng, {"bn-relations"}), EngineError);
}

TEST_CASE("rank one gives the single quantized square") {
  Engine eng(cfgFor('A', 1));
  auto reports = runSuite(eng, {"prop3", "prop2", "corollary", "hilbert"});
  REQUIRE(reports.size() == 4);
  for (const auto& r : reports) {
    CAPTURE(r.check);
    CAPTURE(r.counterexample);
    CHECK(r.status == "pass");
  }
}

TEST_CASE("truncated instances skip what they cannot certify") {
  Engine eng(cfgFor('A', 2, 2));
  CHECK(!eng.algebra().complete());
  auto reports = runSuite(eng, {"theorem1", "prop2", "corollary", "hilbert", "prop3"});
  std::map<std::string, CheckReport> by;
  for (auto& r : reports) by[r.check] = r;
  CHECK(by["theorem1"].status == "skipped");
  CHECK(by["prop2"].status == "skipped");
  CHECK(by["corollary"].status == "pass");
  CHECK(by["corollary"].note == "elements of length <= 2 only");
  CHECK(by["hilbert"].status == "pass");
  CHECK(by["prop3"].status == "pass");
}

TEST_CASE("report lines parse as json and keep the field contract") {
  Engine eng(cfgFor('A', 2));
  auto reports = runSuite(eng, {"lemma2", "hilbert"});
  for (const auto& r : reports) {
    auto j = nlohmann::json::parse(renderReport(r, "json", false));
    CHECK(j.at("check").get<std::string>() == r.check);
    CHECK(j.at("instance").get<std::string>() == "A2");
    CHECK(j.at("truncation").get<int>() == 4);
    CHECK(j.at("complete").get<bool>());
    CHECK(j.at("status").get<std::string>() == "pass");
    CHECK(!j.contains("wall_ms"));
    CHECK(!j.contains("counterexample"));
    auto jt = nlohmann::json::parse(renderReport(r, "json", true));
    CHECK(jt.contains("wall_ms"));
    std::string line = renderReport(r, "text", false);
    CHECK(line.find("check=" + r.check) == 0);
    CHECK(line.find("status=pass") != std::string::npos);
  }
  auto l2 = std::find_if(reports.begin(), reports.end(),
                         [](const CheckReport& r) { return r.check == "lemma2"; });
  auto j = nlohmann::json::parse(renderReport(*l2, "json", false));
  CHECK(j.at("seed").get<long>() == 1);
}

TEST_CASE("tables dump in both formats") {
  Engine eng(cfgFor('B', 2));
  auto j = nlohmann::json::parse(dumpTable(eng, "hilbert", {}, "json"));
  CHECK(j.at("dims") == nlohmann::json::parse("[1,4,8,12,14,12,8,4,1]"));
  CHECK(j.at("total").get<int>() == 64);
  std::string txt = dumpTable(eng, "hilbert", {}, "text");
  CHECK(txt.find("total: 64") != std::string::npos);

  Engine ea(cfgFor('A', 2));
  auto js = nlohmann::json::parse(dumpTable(ea, "schubert", {0, 1, 0}, "json"));
  REQUIRE(js.at("rows").size() == 1);
  CHECK(js.at("rows")[0].at("word") == nlohmann::json::parse("[1,2,1]"));
  CHECK(js.at("rows")[0].at("length").get<int>() == 3);
  auto jall = nlohmann::json::parse(dumpTable(ea, "schubert", {}, "json"));
  CHECK(jall.at("rows").size() == 6);
  CHECK(jall.at("rows")[0].at("classical").get<std::string>() == "1");

  auto ji = nlohmann::json::parse(dumpTable(ea, "invariants", {}, "json"));
  REQUIRE(ji.at("rows").size() == 2);
  CHECK(ji.at("rows")[0].at("degree").get<int>() == 2);
  CHECK(ji.at("rows")[1].at("degree").get<int>() == 3);

  auto jb = nlohmann::json::parse(dumpTable(ea, "basis", {}, "json"));
  CHECK(jb.at("levels").size() == 5);
  CHECK(jb.at("levels")[0].at("classes")[0].at("words")[0].get<std::string>() == "1");

  CHECK_THROWS_AS(dumpTable(ea, "nope", {}, "json"), EngineError);
}
