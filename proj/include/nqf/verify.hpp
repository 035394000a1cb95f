#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nqf/quantum.hpp"

namespace nqf {

// One engine run: a root-system instance, a truncation bound, per-orbit
// coefficients, and reporting options.
struct EngineConfig {
  char type = 'A';
  int rank = 2;
  int maxDegree = 64;
  Rat cLong = Rat(1);
  Rat cShort = Rat(1);
  uint64_t seed = 1;
  std::string cacheDir;         // empty disables the cache
  std::string format = "json";  // json | text
  bool timings = false;         // include wall_ms in rendered reports

  std::string instance() const;  // "A2", "B3", ...
};

// Outcome of one check on one instance. A failing report always carries a
// counterexample payload with the operands needed to replay the failure.
struct CheckReport {
  std::string check;
  std::string instance;
  int truncation = 0;  // top degree of the algebra the check ran on
  bool complete = false;
  std::string status;          // pass | fail | skipped
  std::string note;            // skip reason or partial-coverage note
  std::string seed;            // echoed by randomized checks, else empty
  std::string counterexample;  // JSON object, empty unless failing
  long long wallMs = 0;
};

// canonical check list for a type, sorted by name
std::vector<std::string> suiteChecks(char type);

// Algebra plus quantized operator layer for one configuration, built through
// the cache directory when one is set. A corrupt cache file is reported on
// stderr and rebuilt from scratch.
class Engine {
 public:
  explicit Engine(const EngineConfig& cfg);

  const EngineConfig& config() const { return cfg_; }
  const RootSystem& rootSystem() const { return rs_; }
  const NicholsAlgebra& algebra() const { return alg_; }
  QuantumOps& ops() { return qo_; }
  bool cacheRebuilt() const { return cacheRebuilt_; }
  std::string cachePath() const;

 private:
  EngineConfig cfg_;
  RootSystem rs_;
  NicholsAlgebra alg_;
  QuantumOps qo_;
  bool cacheRebuilt_ = false;
};

// Runs the named checks and returns reports sorted by check name then
// instance; deterministic for a fixed config. Unknown names throw.
std::vector<CheckReport> runSuite(Engine& eng, const std::vector<std::string>& checks);
std::vector<CheckReport> runSuite(const EngineConfig& cfg, const std::vector<std::string>& checks);

bool anyFailed(const std::vector<CheckReport>& reports);

// one line per report: a JSON object or a key=value row
std::string renderReport(const CheckReport& r, const std::string& format, bool timings);

// Table dumps for the CLI; `what` is basis, hilbert, schubert or invariants.
// `word` restricts the schubert table to one element (0-based simple indices).
std::string dumpTable(Engine& eng, const std::string& what, const std::vector<int>& word,
                      const std::string& format);

}  // namespace nqf
