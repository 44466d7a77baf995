#include "mincoal/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "mincoal/coalition.hpp"
#include "mincoal/domination.hpp"
#include "mincoal/recognize.hpp"

namespace mincoal {

Suite suite_from_name(const std::string& name) {
  if (name == "definitions") return Suite::Definitions;
  if (name == "bounds") return Suite::Bounds;
  if (name == "reduction") return Suite::Reduction;
  if (name == "familyM") return Suite::FamilyM;
  if (name == "familyF") return Suite::FamilyF;
  if (name == "thresholds") return Suite::Thresholds;
  if (name == "formulas") return Suite::Formulas;
  if (name == "all") return Suite::All;
  throw std::invalid_argument("unknown suite: " + name);
}

const char* suite_name(Suite s) {
  switch (s) {
    case Suite::Definitions: return "definitions";
    case Suite::Bounds: return "bounds";
    case Suite::Reduction: return "reduction";
    case Suite::FamilyM: return "familyM";
    case Suite::FamilyF: return "familyF";
    case Suite::Thresholds: return "thresholds";
    case Suite::Formulas: return "formulas";
    case Suite::All: return "all";
  }
  return "?";
}

std::vector<std::string> suite_names() {
  return {"definitions", "bounds", "reduction", "familyM",
          "familyF",     "thresholds", "formulas", "all"};
}

namespace {

using Failure = std::optional<std::pair<std::string, std::string>>;

Failure pass() { return std::nullopt; }
Failure failed(std::string expected, std::string actual) {
  return std::make_pair(std::move(expected), std::move(actual));
}

std::string show(const std::optional<int>& v) { return v ? std::to_string(*v) : "none"; }

// Treats "no c-partition" as larger than every finite threshold.
bool at_least(const std::optional<int>& v, int k) { return !v || *v >= k; }

std::vector<VerifyCheck> definition_checks() {
  return {
      {"empty-set-never-dominates",
       [](const Graph& g) {
         return is_dominating_set(g, VertexSet()) ? failed("false", "true") : pass();
       }},
      {"full-set-dominates",
       [](const Graph& g) {
         return is_dominating_set(g, g.vertices()) ? pass() : failed("true", "false");
       }},
      {"domination-is-superhereditary",
       [](const Graph& g) -> Failure {
         // Growing any dominating closed neighborhood by one vertex must
         // keep it dominating.
         for (int v = 0; v < g.order(); ++v) {
           const VertexSet base = g.closed_neighborhood(v);
           if (!is_dominating_set(g, base)) continue;
           for (int u = 0; u < g.order(); ++u)
             if (!is_dominating_set(g, base | VertexSet::single(u)))
               return failed("superset of N[" + std::to_string(v) + "] dominates",
                             "adding " + std::to_string(u) + " broke it");
         }
         return pass();
       }},
      {"search-certificate-validates",
       [](const Graph& g) -> Failure {
         CminResult r = cmin_bruteforce(g);
         if (!r.value) return r.certificate ? failed("no certificate", "certificate") : pass();
         if (!r.certificate) return failed("certificate", "none");
         if (!r.certificate->validate(g)) return failed("valid certificate", "invalid");
         if (r.certificate->partition.block_count() != *r.value)
           return failed(show(r.value) + " blocks",
                         std::to_string(r.certificate->partition.block_count()));
         return pass();
       }},
      {"search-result-is-minimal",
       [](const Graph& g) -> Failure {
         CminResult r = cmin_bruteforce(g);
         if (!r.value) return pass();
         return is_minimal_c_partition(g, r.certificate->partition)
                    ? pass()
                    : failed("minimal", "a proper coarsening is still a c-partition");
       }},
  };
}

std::vector<VerifyCheck> bounds_checks() {
  return {
      {"cmin-at-least-2",
       [](const Graph& g) -> Failure {
         CminResult r = cmin_bruteforce(g);
         if (g.order() < 2 || !r.value) return pass();
         return *r.value >= 2 ? pass() : failed(">=2", show(r.value));
       }},
      {"cmin-at-most-order",
       [](const Graph& g) -> Failure {
         CminResult r = cmin_bruteforce(g);
         if (!r.value) return pass();
         return *r.value <= g.order() ? pass() : failed("<=" + std::to_string(g.order()),
                                                        show(r.value));
       }},
      {"cmin-at-most-coalition-number",
       [](const Graph& g) -> Failure {
         CminResult lo = cmin_bruteforce(g);
         CminResult hi = coalition_number_bruteforce(g);
         if (lo.value.has_value() != hi.value.has_value())
           return failed("both or neither defined", show(lo.value) + " vs " + show(hi.value));
         if (lo.value && *lo.value > *hi.value)
           return failed("cmin <= coalition number", show(lo.value) + " > " + show(hi.value));
         return pass();
       }},
  };
}

std::vector<VerifyCheck> reduction_checks() {
  return {
      {"strip-shifts-cmin",
       [](const Graph& g) -> Failure {
         if (!g.has_universal_vertex() || g.is_complete()) return pass();
         ReductionTrace t = strip_universal(g);
         CminResult whole = cmin_bruteforce(g);
         CminResult rest = cmin_bruteforce(t.residual);
         if (whole.value.has_value() != rest.value.has_value())
           return failed("both or neither defined", show(whole.value) + " vs " + show(rest.value));
         if (whole.value && *whole.value != *rest.value + t.stripped)
           return failed(show(whole.value),
                         show(rest.value) + " + " + std::to_string(t.stripped));
         return pass();
       }},
      {"lifted-certificate-validates",
       [](const Graph& g) -> Failure {
         if (!g.has_universal_vertex()) return pass();
         CminResult r = cmin_dispatch(g);
         if (!r.value) return pass();
         if (!r.certificate || !r.certificate->validate(g))
           return failed("valid lifted certificate", "missing or invalid");
         return pass();
       }},
  };
}

std::vector<VerifyCheck> family_m_checks() {
  return {
      {"member-iff-star-property",
       [](const Graph& g) -> Failure {
         if (!g.is_connected() || g.order() < 3) return pass();
         const bool member = is_family_M(g).has_value();
         const bool star = property_star(g);
         return member == star ? pass()
                               : failed(member ? "star property" : "no star property",
                                        star ? "star property" : "no star property");
       }},
      {"member-iff-cmin-equals-order",
       [](const Graph& g) -> Failure {
         if (!g.is_connected() || g.order() < 3) return pass();
         const bool member = is_family_M(g).has_value();
         CminResult r = cmin_bruteforce(g);
         const bool maximal = r.value && *r.value == g.order();
         return member == maximal ? pass()
                                  : failed(member ? "cmin == n" : "cmin < n", show(r.value));
       }},
      {"derivation-replays-to-isomorph",
       [](const Graph& g) -> Failure {
         auto d = is_family_M(g);
         if (!d) return pass();
         Graph h = d->replay();
         // Members are determined up to isomorphism by order and edge count.
         if (h.order() != g.order() || h.edge_count() != g.edge_count())
           return failed(std::to_string(g.order()) + "v/" + std::to_string(g.edge_count()) + "e",
                         std::to_string(h.order()) + "v/" + std::to_string(h.edge_count()) + "e");
         if (!is_family_M(h)) return failed("replayed graph is a member", "not a member");
         return pass();
       }},
  };
}

std::vector<VerifyCheck> family_f_checks() {
  return {
      {"member-iff-cmin-4-when-mindeg-2",
       [](const Graph& g) -> Failure {
         if (g.min_degree() != 2 || g.has_universal_vertex()) return pass();
         const bool member = is_family_F(g).has_value();
         CminResult r = cmin_bruteforce(g);
         const bool four = r.value && *r.value == 4;
         return member == four ? pass()
                               : failed(member ? "cmin == 4" : "cmin != 4", show(r.value));
       }},
      {"witness-shape",
       [](const Graph& g) -> Failure {
         auto w = is_family_F(g);
         if (!w) return pass();
         if (g.degree(w->apex) != 2) return failed("apex degree 2", std::to_string(g.degree(w->apex)));
         if (g.has_edge(w->hub_a, w->hub_b)) return failed("hubs nonadjacent", "adjacent");
         const VertexSet need = w->core | VertexSet::single(w->apex);
         if (!need.subset_of(g.neighbors(w->hub_a)) || !need.subset_of(g.neighbors(w->hub_b)))
           return failed("hubs adjacent to apex and whole core", "missing edges");
         if (w->core.empty()) return failed("nonempty core", "empty");
         return pass();
       }},
  };
}

std::vector<VerifyCheck> threshold_checks() {
  return {
      {"two-block-test-matches-search",
       [](const Graph& g) -> Failure {
         if (g.has_universal_vertex()) return pass();
         const bool witness = test_cmin_eq_2(g).has_value();
         CminResult r = cmin_bruteforce(g);
         const bool two = r.value && *r.value == 2;
         return witness == two ? pass()
                               : failed(witness ? "cmin == 2" : "cmin != 2", show(r.value));
       }},
      {"three-block-bound-matches-search",
       [](const Graph& g) -> Failure {
         if (g.has_universal_vertex()) return pass();
         const bool ge3 = test_cmin_ge_3(g);
         CminResult r = cmin_bruteforce(g);
         return ge3 == at_least(r.value, 3)
                    ? pass()
                    : failed(ge3 ? "cmin >= 3" : "cmin < 3", show(r.value));
       }},
      {"four-block-bound-matches-search",
       [](const Graph& g) -> Failure {
         if (g.has_universal_vertex()) return pass();
         const bool ge4 = test_cmin_ge_4(g);
         CminResult r = cmin_bruteforce(g);
         return ge4 == at_least(r.value, 4)
                    ? pass()
                    : failed(ge4 ? "cmin >= 4" : "cmin < 4", show(r.value));
       }},
  };
}

std::vector<VerifyCheck> formula_checks() {
  return {
      {"cycle-formula-matches-search",
       [](const Graph& g) -> Failure {
         if (!g.is_cycle()) return pass();
         const int f = cmin_formula_cycle(g.order());
         CminResult r = cmin_bruteforce(g);
         return r.value && *r.value == f ? pass() : failed(std::to_string(f), show(r.value));
       }},
      {"tree-formula-matches-search",
       [](const Graph& g) -> Failure {
         if (!g.is_tree() || g.order() < 2) return pass();
         const int f = cmin_formula_tree(g);
         CminResult r = cmin_bruteforce(g);
         return r.value && *r.value == f ? pass() : failed(std::to_string(f), show(r.value));
       }},
      {"dispatch-matches-search",
       [](const Graph& g) -> Failure {
         CminResult fast = cmin_dispatch(g);
         CminResult slow = cmin_bruteforce(g);
         if (fast.value != slow.value)
           return failed(show(slow.value), show(fast.value) + " via " + method_name(fast.method));
         if (fast.value && (!fast.certificate || !fast.certificate->validate(g)))
           return failed("valid certificate", "missing or invalid");
         return pass();
       }},
  };
}

}  // namespace

std::vector<VerifyCheck> checks_for_suite(Suite s) {
  switch (s) {
    case Suite::Definitions: return definition_checks();
    case Suite::Bounds: return bounds_checks();
    case Suite::Reduction: return reduction_checks();
    case Suite::FamilyM: return family_m_checks();
    case Suite::FamilyF: return family_f_checks();
    case Suite::Thresholds: return threshold_checks();
    case Suite::Formulas: return formula_checks();
    case Suite::All: {
      std::vector<VerifyCheck> all;
      for (Suite part : {Suite::Definitions, Suite::Bounds, Suite::Reduction, Suite::FamilyM,
                         Suite::FamilyF, Suite::Thresholds, Suite::Formulas}) {
        auto chunk = checks_for_suite(part);
        all.insert(all.end(), std::make_move_iterator(chunk.begin()),
                   std::make_move_iterator(chunk.end()));
      }
      return all;
    }
  }
  throw std::logic_error("unhandled suite");
}

VerificationReport run_checks(const std::vector<VerifyCheck>& checks, const Corpus& corpus,
                              int jobs, const std::string& suite_label) {
  if (jobs < 1) throw std::invalid_argument("jobs must be at least 1");
  const auto t0 = std::chrono::steady_clock::now();

  struct WorkerState {
    std::uint64_t graphs = 0;
    std::vector<std::uint64_t> pass, fail;
    std::vector<std::vector<Counterexample>> ces;
  };
  std::vector<WorkerState> states(jobs);
  std::atomic<std::uint64_t> cursor{0};

  auto work = [&](int w) {
    WorkerState& st = states[w];
    st.pass.assign(checks.size(), 0);
    st.fail.assign(checks.size(), 0);
    st.ces.resize(checks.size());
    for (;;) {
      const std::uint64_t i = cursor.fetch_add(1, std::memory_order_relaxed);
      if (i >= corpus.raw_size) break;
      const std::optional<Graph> g = corpus.at(i);
      if (!g) continue;
      ++st.graphs;
      for (std::size_t c = 0; c < checks.size(); ++c) {
        Failure bad;
        try {
          bad = checks[c].run(*g);
        } catch (const std::exception& e) {
          bad = failed("no exception", std::string("exception: ") + e.what());
        }
        if (!bad) {
          ++st.pass[c];
          continue;
        }
        ++st.fail[c];
        // Each worker sees increasing indices, so its first few failures are
        // its smallest; that is all the merge below needs.
        if (st.ces[c].size() < kMaxCounterexamplesPerCheck)
          st.ces[c].push_back(
              {i, graph6_encode(*g), checks[c].name, bad->first, bad->second});
      }
    }
  };

  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  VerificationReport report;
  report.suite = suite_label;
  report.corpus = corpus.id;
  for (const WorkerState& st : states) report.graphs_checked += st.graphs;
  for (std::size_t c = 0; c < checks.size(); ++c) {
    CheckReport cr;
    cr.name = checks[c].name;
    for (const WorkerState& st : states) {
      cr.pass += st.pass[c];
      cr.fail += st.fail[c];
      cr.counterexamples.insert(cr.counterexamples.end(), st.ces[c].begin(), st.ces[c].end());
    }
    std::sort(cr.counterexamples.begin(), cr.counterexamples.end(),
              [](const Counterexample& a, const Counterexample& b) { return a.index < b.index; });
    if (cr.counterexamples.size() > kMaxCounterexamplesPerCheck)
      cr.counterexamples.resize(kMaxCounterexamplesPerCheck);
    report.checks.push_back(std::move(cr));
  }
  report.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

VerificationReport run_verification(Suite s, const Corpus& corpus, int jobs) {
  return run_checks(checks_for_suite(s), corpus, jobs, suite_name(s));
}

bool VerificationReport::ok() const {
  for (const CheckReport& c : checks)
    if (c.fail > 0) return false;
  return true;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json out{{"schema", 1},
                     {"suite", suite},
                     {"corpus", corpus},
                     {"graphs", graphs_checked},
                     {"wall_ms", wall_ms}};
  nlohmann::json cj = nlohmann::json::array();
  for (const CheckReport& c : checks) {
    nlohmann::json ces = nlohmann::json::array();
    for (const Counterexample& ce : c.counterexamples)
      ces.push_back({{"index", ce.index},
                     {"graph6", ce.graph6},
                     {"check", ce.check},
                     {"expected", ce.expected},
                     {"actual", ce.actual}});
    cj.push_back({{"name", c.name}, {"pass", c.pass}, {"fail", c.fail}, {"counterexamples", ces}});
  }
  out["checks"] = cj;
  return out;
}

std::string VerificationReport::to_text() const {
  std::string out = "suite " + suite + " on " + corpus + " (" +
                    std::to_string(graphs_checked) + " graphs)\n";
  for (const CheckReport& c : checks) {
    out += "  " + c.name + ": pass=" + std::to_string(c.pass) +
           " fail=" + std::to_string(c.fail) + "\n";
    for (const Counterexample& ce : c.counterexamples)
      out += "    counterexample [" + std::to_string(ce.index) + "] " + ce.graph6 +
             ": expected " + ce.expected + ", got " + ce.actual + "\n";
  }
  out += ok() ? "OK\n" : "FAILURES\n";
  return out;
}

}  // namespace mincoal
