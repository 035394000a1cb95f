// Acceptance gate: one line per criterion, nonzero exit when any fails.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "nqf/verify.hpp"

using namespace nqf;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

double secsSince(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

EngineConfig cfgFor(char type, int rank, int maxDegree = 64) {
  EngineConfig c;
  c.type = type;
  c.rank = rank;
  c.maxDegree = maxDegree;
  return c;
}

std::string dimsStr(const std::vector<int>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

// pass only: a skipped check does not satisfy a criterion
bool allPass(const std::vector<CheckReport>& rs, std::string& why) {
  for (const auto& r : rs)
    if (r.status != "pass") {
      why = r.check + " on " + r.instance + ": " + r.status;
      if (!r.counterexample.empty()) why += " " + r.counterexample;
      return false;
    }
  return true;
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, bool ok, const std::string& detail) {
    std::printf("criterion %2d: %s  %s\n", id, ok ? "pass" : "FAIL", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  };
  auto crit = [&](int id, auto&& fn) {
    std::string detail;
    bool ok = false;
    auto t0 = Clock::now();
    try {
      ok = fn(detail);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, " [%.2fs]", secsSince(t0));
    report(id, ok, detail + buf);
  };

  // shared engines; the rank-3 ones carry the heavy construction cost
  std::unique_ptr<Engine> engA2, engA3, engB2, engB2c, engB3;
  double buildA2 = 0, buildA3 = 0;
  {
    auto t0 = Clock::now();
    engA2 = std::make_unique<Engine>(cfgFor('A', 2));
    buildA2 = secsSince(t0);
    t0 = Clock::now();
    engA3 = std::make_unique<Engine>(cfgFor('A', 3));
    buildA3 = secsSince(t0);
    engB2 = std::make_unique<Engine>(cfgFor('B', 2));
    EngineConfig mixed = cfgFor('B', 2);
    mixed.cLong = Rat(1);
    mixed.cShort = Rat(2);
    engB2c = std::make_unique<Engine>(mixed);
    engB3 = std::make_unique<Engine>(cfgFor('B', 3, 6));
  }

  crit(1, [&](std::string& d) {
    auto t0 = Clock::now();
    auto rs = runSuite(*engA2, {"hilbert"});
    double el = buildA2 + secsSince(t0);
    std::string why;
    if (!allPass(rs, why)) { d = why; return false; }
    if (!rs[0].note.empty()) { d = "oracle coverage incomplete: " + rs[0].note; return false; }
    auto dims = engA2->algebra().hilbert();
    if (dims != std::vector<int>{1, 3, 4, 3, 1}) { d = "dims " + dimsStr(dims); return false; }
    if (el >= 5.0) { d = "too slow"; return false; }
    d = "A2 dimensions (" + dimsStr(dims) + ") certified against the word pairing oracle";
    return true;
  });

  crit(2, [&](std::string& d) {
    // totals recorded from the independent oracle run of the same builder
    const std::vector<int> recorded{1, 6, 19, 42, 71, 96, 106, 96, 71, 42, 19, 6, 1};
    if (buildA3 >= 600.0) { d = "construction too slow"; return false; }
    auto rs = runSuite(*engA3, {"hilbert"});
    std::string why;
    if (!allPass(rs, why)) { d = why; return false; }
    if (!engA3->algebra().complete()) { d = "construction did not terminate"; return false; }
    auto dims = engA3->algebra().hilbert();
    long total = 0;
    for (int k : dims) total += k;
    if (dims != recorded || total != 576) { d = "dims " + dimsStr(dims); return false; }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2fs", buildA3);
    d = "A3 sealed at top degree 12, symmetric, total 576, built in " + std::string(buf);
    return true;
  });

  crit(3, [&](std::string& d) {
    std::string why;
    for (Engine* e : {engA2.get(), engA3.get(), engB2.get()})
      if (!allPass(runSuite(*e, {"lemma2"}), why)) { d = why; return false; }
    d = "derivations intertwine the polynomial image for 100 seeded samples on A2, A3, B2";
    return true;
  });

  crit(4, [&](std::string& d) {
    std::string why;
    for (Engine* e : {engA2.get(), engB2.get(), engA3.get(), engB3.get()})
      if (!allPass(runSuite(*e, {"prop1"}), why)) { d = why; return false; }
    d = "operator families commute on A2, B2, A3 (full) and B3 (degree <= 6)";
    return true;
  });

  crit(5, [&](std::string& d) {
    std::string why;
    for (Engine* e : {engA2.get(), engA3.get(), engB2.get()})
      if (!allPass(runSuite(*e, {"prop1-sets"}), why)) { d = why; return false; }
    d = "length-set bijections with matching coroot sums on A2, A3, B2";
    return true;
  });

  crit(6, [&](std::string& d) {
    std::string why;
    for (Engine* e : {engA2.get(), engA3.get(), engB2.get(), engB2c.get()})
      if (!allPass(runSuite(*e, {"prop3"}), why)) { d = why; return false; }
    d = "quantized squares match on A2, A3, B2 and on B2 with c = (1, 2)";
    return true;
  });

  crit(7, [&](std::string& d) {
    std::string why;
    for (Engine* e : {engA2.get(), engB2.get(), engA3.get()})
      if (!allPass(runSuite(*e, {"prop2"}), why)) { d = why; return false; }
    d = "searched invariants annihilate the module on A2, B2, A3 and agree with the determinant recursion";
    return true;
  });

  crit(8, [&](std::string& d) {
    std::string why;
    for (Engine* e : {engA2.get(), engA3.get(), engB2.get()}) {
      auto rs = runSuite(*e, {"corollary"});
      if (!allPass(rs, why)) { d = why; return false; }
      if (!rs[0].note.empty()) { d = "partial coverage on " + rs[0].instance; return false; }
    }
    d = "class evaluations match their classical images on A2 (6), A3 (24), B2 (8)";
    return true;
  });

  crit(9, [&](std::string& d) {
    std::string why;
    for (Engine* e : {engB2.get(), engB3.get()})
      if (!allPass(runSuite(*e, {"bn-relations"}), why)) { d = why; return false; }
    d = "presentation relations and display strings hold on B2 (full) and B3 (degree <= 6)";
    return true;
  });

  crit(10, [&](std::string& d) {
    std::string why;
    for (Engine* e : {engA2.get(), engB2.get()})
      if (!allPass(runSuite(*e, {"theorem1"}), why)) { d = why; return false; }
    d = "filtration ranks equal the length histograms on A2, B2";
    return true;
  });

  crit(11, [&](std::string& d) {
    fs::remove_all("acc_cache_1");
    fs::remove_all("acc_cache_2");
    auto render = [](const std::vector<CheckReport>& rs) {
      std::string out;
      for (const auto& r : rs) out += renderReport(r, "json", false) + "\n";
      return out;
    };
    EngineConfig c1 = cfgFor('A', 2);
    c1.cacheDir = "acc_cache_1";
    EngineConfig c2 = cfgFor('A', 2);
    c2.cacheDir = "acc_cache_2";
    Engine e1(c1), e2(c2);
    std::string r1 = render(runSuite(e1, suiteChecks('A')));
    std::string r2 = render(runSuite(e2, suiteChecks('A')));
    if (r1 != r2 || r1.empty()) { d = "reports differ"; return false; }
    std::string b1 = readFile(e1.cachePath()), b2 = readFile(e2.cachePath());
    bool ok = !b1.empty() && b1 == b2;
    fs::remove_all("acc_cache_1");
    fs::remove_all("acc_cache_2");
    if (!ok) { d = "cache files differ"; return false; }
    d = "two cold runs produced byte-identical reports and cache files";
    return true;
  });

  std::printf("acceptance: %d/11 passed\n", 11 - failures);
  return failures == 0 ? 0 : 1;
}
