#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mincoal/corpus.hpp"
#include "mincoal/graph.hpp"

namespace mincoal {

// Named groups of property checks run over a corpus.
enum class Suite {
  Definitions,  // c-partition / coalition / minimality basics
  Bounds,       // 2 <= cmin <= n and cmin <= coalition number
  Reduction,    // universal-vertex stripping preserves cmin - #stripped
  FamilyM,      // membership <=> star property <=> cmin == n (connected)
  FamilyF,      // membership <=> (min degree 2, no universal, cmin == 4)
  Thresholds,   // the ==2 / >=3 / >=4 tests against exhaustive search
  Formulas,     // cycle and tree closed forms against exhaustive search
  All,
};

Suite suite_from_name(const std::string& name);  // throws std::invalid_argument
const char* suite_name(Suite s);
std::vector<std::string> suite_names();

struct Counterexample {
  std::uint64_t index = 0;  // position in the corpus
  std::string graph6;
  std::string check;
  std::string expected;
  std::string actual;
};

struct CheckReport {
  std::string name;
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
  std::vector<Counterexample> counterexamples;  // ordered by corpus index
};

struct VerificationReport {
  std::string suite;
  std::string corpus;
  std::uint64_t graphs_checked = 0;
  double wall_ms = 0;
  std::vector<CheckReport> checks;

  bool ok() const;
  nlohmann::json to_json() const;  // {"schema":1,"suite":...,"checks":[...]}
  std::string to_text() const;     // one line per check
};

// A single property: returns nullopt when the graph passes, otherwise
// (expected, actual) strings for the counterexample record.
struct VerifyCheck {
  std::string name;
  std::function<std::optional<std::pair<std::string, std::string>>(const Graph&)> run;
};

// Runs the checks over every graph the corpus yields, with `jobs` worker
// threads. Reports are deterministic for fixed inputs regardless of jobs
// (timing fields aside); counterexamples are capped per check but counted
// fully.
VerificationReport run_checks(const std::vector<VerifyCheck>& checks, const Corpus& corpus,
                              int jobs, const std::string& suite_label);

std::vector<VerifyCheck> checks_for_suite(Suite s);
VerificationReport run_verification(Suite s, const Corpus& corpus, int jobs = 1);

inline constexpr int kMaxCounterexamplesPerCheck = 5;

}  // namespace mincoal
