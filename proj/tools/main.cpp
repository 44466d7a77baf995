#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "mincoal/coalition.hpp"
#include "mincoal/corpus.hpp"
#include "mincoal/domination.hpp"
#include "mincoal/graph.hpp"
#include "mincoal/recognize.hpp"
#include "mincoal/verify.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNoResult = 3;

mincoal::Graph read_graph_arg(const std::string& arg) {
  if (arg != "-") return mincoal::graph6_decode(arg);
  std::string line;
  while (std::getline(std::cin, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line == ">>graph6<<") continue;
    return mincoal::graph6_decode(line);
  }
  throw std::invalid_argument("no graph6 line on stdin");
}

std::string value_or_none(const std::optional<int>& v) {
  return v ? std::to_string(*v) : "none";
}

struct Options {
  std::string graph_arg;
  std::string method = "auto";
  bool certificate = false;
  bool witness = false;
  std::string predicate;
  std::string family;
  std::string suite;
  std::string corpus;
  int jobs = 1;
  bool json = false;
  std::string gen_kind;
  std::vector<int> gen_params;
  std::string gen_core_edges;
};

std::vector<std::pair<int, int>> parse_edge_list(const std::string& text) {
  // "0-1,2-3" -> {(0,1), (2,3)}
  std::vector<std::pair<int, int>> edges;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::size_t dash = item.find('-');
    if (dash == std::string::npos)
      throw std::invalid_argument("expected A-B edge pairs, got \"" + item + "\"");
    edges.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
  }
  return edges;
}

int run_cmin(const Options& opt) {
  const mincoal::Graph g = read_graph_arg(opt.graph_arg);
  mincoal::CminResult r;
  if (opt.method == "brute")
    r = mincoal::cmin_bruteforce(g);
  else
    r = mincoal::cmin_dispatch(g, opt.method == "fast");
  if (opt.certificate)
    std::cout << r.to_json().dump(2) << "\n";
  else
    std::cout << value_or_none(r.value) << "\n";
  if (r.inconclusive) {
    std::cerr << "fast methods were inconclusive for this graph\n";
    return kExitNoResult;
  }
  if (!r.value) {
    std::cerr << "the graph admits no c-partition\n";
    return kExitNoResult;
  }
  return 0;
}

int run_cnum(const Options& opt) {
  const mincoal::Graph g = read_graph_arg(opt.graph_arg);
  mincoal::CminResult r = mincoal::coalition_number_bruteforce(g);
  if (opt.certificate)
    std::cout << r.to_json().dump(2) << "\n";
  else
    std::cout << value_or_none(r.value) << "\n";
  if (!r.value) {
    std::cerr << "the graph admits no c-partition\n";
    return kExitNoResult;
  }
  return 0;
}

int run_gamma(const Options& opt) {
  const mincoal::Graph g = read_graph_arg(opt.graph_arg);
  const mincoal::VertexSet best = mincoal::minimum_dominating_set(g);
  std::cout << best.size() << "\n";
  if (opt.witness) std::cout << best.to_string() << "\n";
  return 0;
}

int run_test(const Options& opt) {
  const mincoal::Graph g = read_graph_arg(opt.graph_arg);
  bool result = false;
  std::optional<std::string> extra;
  if (opt.predicate == "cmin2") {
    auto v = mincoal::test_cmin_eq_2(g);
    result = v.has_value();
    if (v && opt.witness) extra = "witness " + std::to_string(*v);
  } else if (opt.predicate == "ge3") {
    result = mincoal::test_cmin_ge_3(g);
  } else if (opt.predicate == "ge4") {
    result = mincoal::test_cmin_ge_4(g);
  } else if (opt.predicate == "star") {
    result = mincoal::property_star(g);
  } else {
    throw std::invalid_argument("unknown predicate: " + opt.predicate);
  }
  std::cout << (result ? "true" : "false") << "\n";
  if (extra) std::cout << *extra << "\n";
  return 0;
}

int run_recognize(const Options& opt) {
  const mincoal::Graph g = read_graph_arg(opt.graph_arg);
  if (opt.family == "M") {
    auto d = mincoal::is_family_M(g);
    std::cout << (d ? "true" : "false") << "\n";
    if (d && opt.witness) std::cout << d->to_json().dump(2) << "\n";
  } else if (opt.family == "F") {
    auto w = mincoal::is_family_F(g);
    std::cout << (w ? "true" : "false") << "\n";
    if (w && opt.witness) std::cout << w->to_json().dump(2) << "\n";
  } else {
    throw std::invalid_argument("unknown family: " + opt.family);
  }
  return 0;
}

int run_gen(const Options& opt) {
  const auto need = [&](std::size_t count) {
    if (opt.gen_params.size() != count)
      throw std::invalid_argument(opt.gen_kind + " needs " + std::to_string(count) +
                                  " numeric parameter(s)");
  };
  mincoal::Graph g;
  if (opt.gen_kind == "path") {
    need(1);
    g = mincoal::path_graph(opt.gen_params[0]);
  } else if (opt.gen_kind == "cycle") {
    need(1);
    g = mincoal::cycle_graph(opt.gen_params[0]);
  } else if (opt.gen_kind == "complete") {
    need(1);
    g = mincoal::complete_graph(opt.gen_params[0]);
  } else if (opt.gen_kind == "empty") {
    need(1);
    g = mincoal::empty_graph(opt.gen_params[0]);
  } else if (opt.gen_kind == "star") {
    need(1);
    g = mincoal::star_graph(opt.gen_params[0]);
  } else if (opt.gen_kind == "complete-multipartite") {
    if (opt.gen_params.empty())
      throw std::invalid_argument("complete-multipartite needs part sizes");
    g = mincoal::complete_multipartite_graph(opt.gen_params);
  } else if (opt.gen_kind == "petersen") {
    need(0);
    g = mincoal::petersen_graph();
  } else if (opt.gen_kind == "heawood") {
    need(0);
    g = mincoal::heawood_graph();
  } else if (opt.gen_kind == "family-f") {
    need(1);
    g = mincoal::generate_family_F(opt.gen_params[0], parse_edge_list(opt.gen_core_edges));
  } else {
    throw std::invalid_argument("unknown generator: " + opt.gen_kind);
  }
  std::cout << mincoal::graph6_encode(g) << "\n";
  return 0;
}

int run_verify(const Options& opt) {
  const mincoal::Suite suite = mincoal::suite_from_name(opt.suite);
  const mincoal::Corpus corpus = mincoal::parse_corpus(opt.corpus);
  const mincoal::VerificationReport report = mincoal::run_verification(suite, corpus, opt.jobs);
  if (opt.json)
    std::cout << report.to_json().dump(2) << "\n";
  else
    std::cout << report.to_text();
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coalition partitions of small graphs: smallest c-partition order, "
               "coalition number, domination number, recognizers and corpus sweeps"};
  app.require_subcommand(1);
  Options opt;

  auto add_graph_arg = [&](CLI::App* sub) {
    sub->add_option("graph", opt.graph_arg, "graph6 string, or - to read one line from stdin")
        ->required();
  };

  CLI::App* cmin = app.add_subcommand("cmin", "smallest c-partition order");
  add_graph_arg(cmin);
  cmin->add_option("--method", opt.method, "auto, brute or fast (no exhaustive fallback)")
      ->check(CLI::IsMember({"auto", "brute", "fast"}));
  cmin->add_flag("--certificate", opt.certificate, "print the result as JSON with a certificate");

  CLI::App* cnum = app.add_subcommand("cnum", "largest c-partition order (coalition number)");
  add_graph_arg(cnum);
  cnum->add_flag("--certificate", opt.certificate, "print the result as JSON with a certificate");

  CLI::App* gamma = app.add_subcommand("gamma", "domination number");
  add_graph_arg(gamma);
  gamma->add_flag("--witness", opt.witness, "also print a minimum dominating set");

  CLI::App* test = app.add_subcommand("test", "evaluate a structural predicate");
  add_graph_arg(test);
  test->add_option("--predicate", opt.predicate, "cmin2, ge3, ge4 or star")
      ->required()
      ->check(CLI::IsMember({"cmin2", "ge3", "ge4", "star"}));
  test->add_flag("--witness", opt.witness, "print the witness vertex for cmin2");

  CLI::App* recognize = app.add_subcommand("recognize", "graph family membership");
  add_graph_arg(recognize);
  recognize->add_option("--family", opt.family, "M or F")
      ->required()
      ->check(CLI::IsMember({"M", "F"}));
  recognize->add_flag("--witness", opt.witness, "print the membership witness as JSON");

  CLI::App* gen = app.add_subcommand("gen", "emit a generated graph as graph6");
  gen->add_option("kind", opt.gen_kind,
                  "path, cycle, complete, empty, star, complete-multipartite, petersen, "
                  "heawood or family-f")
      ->required();
  gen->add_option("params", opt.gen_params, "numeric parameters for the generator");
  gen->add_option("--core-edges", opt.gen_core_edges,
                  "family-f core edges as A-B pairs, e.g. 0-1,1-2");

  CLI::App* verify = app.add_subcommand("verify", "run a property suite over a corpus");
  verify->add_option("--suite", opt.suite, "one of: definitions, bounds, reduction, familyM, "
                                           "familyF, thresholds, formulas, all")
      ->required();
  verify->add_option("--corpus", opt.corpus,
                     "labeled:n=K, labeled:n<=K (optionally :connected, :no-universal, "
                     ":min-degree>=D), cycles:A..B, paths:A..B, stars:A..B, trees:n=K, file:PATH")
      ->required();
  verify->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--json", opt.json, "print the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (cmin->parsed()) return run_cmin(opt);
    if (cnum->parsed()) return run_cnum(opt);
    if (gamma->parsed()) return run_gamma(opt);
    if (test->parsed()) return run_test(opt);
    if (recognize->parsed()) return run_recognize(opt);
    if (gen->parsed()) return run_gen(opt);
    if (verify->parsed()) return run_verify(opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
