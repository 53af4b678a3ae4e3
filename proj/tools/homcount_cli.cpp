#include <algorithm>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "homcount/adaptive.hpp"
#include "homcount/count.hpp"
#include "homcount/enumerate.hpp"
#include "homcount/errors.hpp"
#include "homcount/expressive.hpp"
#include "homcount/forge.hpp"
#include "homcount/graph6.hpp"
#include "homcount/parallel.hpp"
#include "homcount/right_hom.hpp"
#include "homcount/structure.hpp"
#include "homcount/verify.hpp"

using namespace homcount;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitCheck = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

// Thrown for bad flag combinations detected after CLI11 has parsed.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FamilyFlags {
  std::vector<std::string> graphs;
  std::size_t max_vertices = 0;
  std::size_t prefix = 0;

  void attach(CLI::App* app, bool with_prefix) {
    app->add_option("--family", graphs, "family members as graph6");
    app->add_option("--family-max-vertices", max_vertices, "all graphs with at most this many vertices");
    if (with_prefix) app->add_option("--family-prefix", prefix, "the first N connected graphs in enumeration order");
  }

  std::vector<Graph> resolve() const {
    const int given = !graphs.empty() + (max_vertices > 0) + (prefix > 0);
    if (given != 1) throw UsageError("give exactly one of --family, --family-max-vertices, --family-prefix");
    if (max_vertices > 0) return enumerate_graphs_upto(max_vertices);
    if (prefix > 0) return enumerate_connected_prefix(prefix);
    std::vector<Graph> out;
    for (const auto& s : graphs) out.push_back(from_graph6(s));
    return out;
  }
};

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

std::vector<Graph> parse_graphs(const std::vector<std::string>& args) {
  std::vector<Graph> out;
  for (const auto& s : args.empty() ? read_lines(std::cin) : args) out.push_back(from_graph6(s));
  return out;
}

Json strings(const std::vector<CountValue>& values) {
  Json a = Json::array();
  for (const auto& v : values) a.push_back(v.get_str());
  return a;
}

Json graph_list(std::span<const Graph> gs) {
  Json a = Json::array();
  for (const auto& g : gs) a.push_back(to_graph6(g));
  return a;
}

void emit_vectors(MorphismKind kind, Orientation orientation, const std::vector<Graph>& family,
                  const std::vector<Graph>& graphs, unsigned jobs) {
  for (const auto& g : graphs) {
    Json j;
    j["graph"] = to_graph6(g);
    j["counts"] = strings(count_vector(kind, family, g, orientation, jobs).values);
    std::cout << j.dump() << '\n';
  }
}

// Large witnesses are printed as sums "c*g6 + ..." instead of one graph6 line.
std::string witness_text(const GraphSum& s, std::size_t limit) {
  if (const auto g = s.to_graph(limit)) return to_graph6(*g);
  return "sum:" + s.describe();
}

// ---- subcommands -----------------------------------------------------------

int cmd_verify(const std::string& suite, const VerifyOptions& options, bool json, bool timings) {
  std::vector<std::string> names;
  if (suite == "all")
    names = suite_names();
  else if (is_suite(suite))
    names.push_back(suite);
  else
    throw UsageError("unknown verify suite '" + suite + "'");

  std::vector<SuiteReport> reports(names.size());
  VerifyOptions inner = options;
  if (names.size() > 1) inner.jobs = 1;
  parallel_for(names.size(), names.size() > 1 ? options.jobs : 1,
               [&](std::size_t i) { reports[i] = run_suite(names[i], inner); });

  bool all = true;
  for (const auto& r : reports) {
    all = all && r.passed();
    if (json) {
      std::cout << r.to_json(timings) << '\n';
      continue;
    }
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name;
    if (timings) std::cout << " (" << r.seconds << " s)";
    std::cout << '\n';
    for (const auto& c : r.checks) {
      std::cout << "  " << (c.passed ? "ok   " : "FAIL ") << c.name;
      if (!c.detail.empty()) std::cout << ": " << c.detail;
      if (timings) std::cout << " (" << c.seconds << " s)";
      std::cout << '\n';
    }
  }
  return all ? 0 : kExitCheck;
}

std::unique_ptr<HomOracle> make_oracle(const std::string& hidden, const std::string& command, Orientation o) {
  if (!command.empty() && !hidden.empty()) throw UsageError("give either a hidden graph or --oracle-cmd, not both");
  if (!command.empty()) return std::make_unique<ProcessOracle>(command, o);
  if (hidden.empty()) throw UsageError("a hidden graph or --oracle-cmd is required");
  return std::make_unique<GraphOracle>(from_graph6(hidden), o);
}

Json transcript_json(const std::string& strategy, const HomOracle& oracle) {
  Json j;
  j["strategy"] = strategy;
  Json q = Json::array();
  for (const auto& e : oracle.log()) {
    Json entry;
    entry["kind"] = std::string(kind_name(e.kind));
    entry["query"] = e.query;
    entry["answer"] = e.answer;
    q.push_back(std::move(entry));
  }
  j["queries"] = std::move(q);
  j["query_count"] = oracle.query_count();
  return j;
}

struct AdaptiveFlags {
  std::string strategy, hidden, oracle_cmd, reference, radix = "valuation-bound";
  std::vector<std::string> forbidden;
  std::size_t n = 0, k = 3;
  FamilyFlags family;
};

int cmd_adaptive(AdaptiveFlags& a) {
  auto oracle = make_oracle(a.hidden, a.oracle_cmd, Orientation::left);
  Json j;
  bool decision = false;
  if (a.strategy == "isolated-vertex") {
    const Transcript t = run_strategy(isolated_vertex_strategy(), *oracle);
    decision = t.decision;
    j = transcript_json(a.strategy, *oracle);
    const auto& n = std::get<CountValue>(t.answers[0]);
    const auto hist = histogram_from_single_count(std::get<CountValue>(t.answers[1]), n.get_ui());
    j["degree_histogram"] = hist;
    j["decision"] = decision ? "no isolated vertex" : "has isolated vertex";
  } else if (a.strategy == "odd-order") {
    AdaptiveStrategy s;
    s.name = a.strategy;
    s.start = Graph();
    s.accept = [](std::span<const Answer> ans) { return mpz_odd_p(std::get<CountValue>(ans[0]).get_mpz_t()) != 0; };
    decision = run_strategy(s, *oracle).decision;
    j = transcript_json(a.strategy, *oracle);
    j["decision"] = decision;
  } else if (a.strategy == "reconstruct") {
    const Graph g = reconstruct_graph(*oracle);
    decision = true;
    j = transcript_json(a.strategy, *oracle);
    j["graph"] = to_graph6(g);
  } else if (a.strategy == "three-adaptive") {
    if (a.reference.empty()) throw UsageError("three-adaptive needs --reference");
    const Graph ref = from_graph6(a.reference);
    const std::vector<Graph> fam = a.family.resolve();
    const std::size_t n = a.n ? a.n : ref.order();
    const RadixRule rule = a.radix == "vertex-power" ? RadixRule::vertex_power : RadixRule::valuation_bound;
    if (a.radix != "vertex-power" && a.radix != "valuation-bound") throw UsageError("unknown radix rule");
    const ThreeQueryGraphs q = three_query_graphs(n, fam, rule);
    const auto expected = three_adaptive_answers(q, ref);
    auto accept = [expected](std::span<const Answer> ans) {
      return std::equal(ans.begin(), ans.end(), expected.begin(), expected.end());
    };
    decision = run_strategy(three_adaptive_strategy(n, fam, accept, rule), *oracle).decision;
    j = transcript_json(a.strategy, *oracle);
    j["reference"] = a.reference;
    j["decision"] = decision;
  } else if (a.strategy == "forb") {
    if (a.forbidden.empty()) throw UsageError("forb needs --forbidden");
    std::vector<Graph> forbidden;
    for (const auto& s : a.forbidden) forbidden.push_back(from_graph6(s));
    decision = forb_membership(forbidden, *oracle);
    j = transcript_json(a.strategy, *oracle);
    j["decision"] = decision;
  } else if (a.strategy == "regular") {
    decision = is_k_regular_by_counts(a.k, *oracle);
    j = transcript_json(a.strategy, *oracle);
    j["k"] = a.k;
    j["decision"] = decision;
  } else {
    throw UsageError("unknown strategy '" + a.strategy + "'");
  }
  std::cout << j.dump() << '\n';
  return 0;
}

struct ForgeFlags {
  std::string property;
  std::size_t colors = 2, k = 5, limit = 20000;
  FamilyFlags family;
  unsigned jobs = 1;
};

int cmd_forge(ForgeFlags& f) {
  Json j;
  if (f.property == "two-adaptive") {
    const CycleTriple t = forge_two_adaptive_triple(f.k, f.jobs);
    std::cout << to_graph6(t.g) << '\n' << to_graph6(t.h1) << '\n' << to_graph6(t.h2) << '\n';
    j["property"] = f.property;
    j["k"] = t.k;
    j["ell"] = t.ell;
    j["verified_upto"] = t.verified_upto;
    j["verified"] = true;
    std::cout << j.dump() << '\n';
    return 0;
  }
  std::vector<Graph> family = f.family.resolve();
  Witness w;
  bool reduced = false;
  if (f.property == "isolated") {
    for (const auto& g : family) reduced = reduced || !g.is_connected();
    ExpressiveLedger ledger;
    if (reduced) {
      const auto conn = connected_reduction(family);
      w = forge_isolated_vertex(conn, ledger);
      // The reduction promises hom agreement on the original graphs; check it.
      for (const auto& g : family)
        if (hom(g, w.g) != hom(g, w.h)) throw VerificationError("hom agreement failed after connected reduction");
    } else {
      w = forge_isolated_vertex(family, ledger);
    }
  } else if (f.property == "planar") {
    w = forge_planarity(family);
  } else if (f.property == "colorable") {
    w = forge_colorability(family, f.colors);
  } else {
    throw UsageError("unknown forge property '" + f.property + "'");
  }
  std::cout << witness_text(w.g, f.limit) << '\n' << witness_text(w.h, f.limit) << '\n';
  j["property"] = std::string(property_name(w.property));
  if (w.property == ForgeProperty::colorable) j["colors"] = w.colors;
  j["kind"] = std::string(kind_name(w.kind));
  j["family"] = graph_list(family);
  if (reduced) j["connected_reduction"] = graph_list(w.family);
  j["g_counts"] = strings(w.g_counts);
  j["h_counts"] = strings(w.h_counts);
  j["g_in_class"] = w.g_in_class;
  j["h_in_class"] = w.h_in_class;
  j["g_order"] = w.g.order().get_str();
  j["h_order"] = w.h.order().get_str();
  j["verified"] = true;
  std::cout << j.dump() << '\n';
  return 0;
}

struct RightFlags {
  std::string predicate = "edges", hidden;
  std::vector<std::string> graphs;
  std::size_t k = 1, s = 3;
  std::optional<std::size_t> cap;
  std::string demo = "triangle";
  FamilyFlags family;
};

int cmd_right_membership(RightFlags& r) {
  const Graph g = from_graph6(r.hidden);
  std::function<bool(const Graph&)> predicate;
  if (r.predicate == "edges")
    predicate = [k = r.k](const Graph& h) { return h.edge_count() <= k; };
  else if (r.predicate == "edgeless")
    predicate = [](const Graph& h) { return h.edge_count() == 0; };
  else
    throw UsageError("unknown predicate '" + r.predicate + "'");
  const RightFamily family = bounded_edge_family(r.k, r.cap);
  if (family.reduced) std::cerr << "warning: " << family.warning << '\n';
  GraphOracle oracle(g, Orientation::right);
  const RightDecision d = right_membership(predicate, family, oracle);
  Json j;
  j["graph"] = r.hidden;
  j["predicate"] = r.predicate;
  j["k"] = r.k;
  j["member"] = d.member;
  j["edgeless"] = d.edgeless;
  j["isolated"] = d.isolated;
  if (d.without_isolated) j["without_isolated"] = to_graph6(*d.without_isolated);
  j["queries"] = d.queries;
  j["family_size"] = family.graphs.size();
  j["reduced"] = family.reduced;
  std::cout << j.dump() << '\n';
  return 0;
}

int cmd_right_demo(RightFlags& r) {
  Json j;
  if (r.demo == "triangle") {
    const FailureDemo d = right_failure_demo(r.s);
    j["s"] = d.s;
    j["g0"] = to_graph6(d.g0);
    j["chromatic"] = d.chromatic;
    j["g0_triangle_free"] = d.g0_triangle_free;
    j["clique_has_triangle"] = d.clique_has_triangle;
    j["probes"] = graph_list(d.probes);
    j["g0_counts"] = strings(d.g0_counts);
    j["clique_counts"] = strings(d.clique_counts);
  } else if (r.demo == "clique-isolated") {
    const auto fam = r.family.graphs.empty() && !r.family.max_vertices ? enumerate_graphs_upto(3) : r.family.resolve();
    const CliqueIsolatedDemo d = clique_isolated_demo(fam);
    j["m"] = d.m;
    j["family"] = graph_list(fam);
    j["clique_counts"] = strings(d.clique_counts);
    j["clique_plus_k1_counts"] = strings(d.clique_plus_k1_counts);
  } else {
    throw UsageError("unknown demo '" + r.demo + "'");
  }
  std::cout << j.dump() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact graph morphism counting and the constructions built on it"};
  app.require_subcommand(1);
  unsigned jobs = 1;
  app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  std::string kind_text = "hom", f_text, g_text;
  auto* count_cmd = app.add_subcommand("count", "print count(kind, F, G)");
  count_cmd->add_option("kind", kind_text)->required();
  count_cmd->add_option("F", f_text)->required();
  count_cmd->add_option("G", g_text)->required();

  FamilyFlags vector_family;
  std::vector<std::string> vector_graphs;
  std::string vector_kind = "hom";
  bool vector_right = false;
  auto* vector_cmd = app.add_subcommand("vector", "JSON lines of count vectors");
  vector_cmd->add_option("--kind", vector_kind);
  vector_cmd->add_flag("--right", vector_right, "count G -> F instead of F -> G");
  vector_family.attach(vector_cmd, true);
  vector_cmd->add_option("graphs", vector_graphs, "graph6 inputs (stdin when absent)");

  std::size_t enum_max = 0;
  bool enum_connected = false, enum_exact = false;
  auto* enum_cmd = app.add_subcommand("enumerate", "graph6 lines in enumeration order");
  enum_cmd->add_option("--max-vertices", enum_max)->required();
  enum_cmd->add_flag("--connected", enum_connected);
  enum_cmd->add_flag("--exact", enum_exact, "only graphs with exactly --max-vertices vertices");

  ForgeFlags forge;
  auto* forge_cmd = app.add_subcommand("forge", "build a verified counterexample pair");
  forge_cmd->add_option("property", forge.property, "isolated | planar | colorable | two-adaptive")->required();
  forge_cmd->add_option("--colors", forge.colors);
  forge_cmd->add_option("--k", forge.k, "first-query order bound for two-adaptive");
  forge_cmd->add_option("--materialize-limit", forge.limit, "largest witness printed as a single graph6");
  forge.family.attach(forge_cmd, true);

  AdaptiveFlags adaptive;
  auto* adaptive_cmd = app.add_subcommand("adaptive", "run a query strategy and print the transcript");
  adaptive_cmd->add_option("strategy", adaptive.strategy,
                           "isolated-vertex | odd-order | reconstruct | three-adaptive | forb | regular")
      ->required();
  adaptive_cmd->add_option("hidden", adaptive.hidden, "hidden graph as graph6");
  adaptive_cmd->add_option("--oracle-cmd", adaptive.oracle_cmd, "external process answering count queries");
  adaptive_cmd->add_option("--reference", adaptive.reference, "three-adaptive: graph to compare against");
  adaptive_cmd->add_option("--n", adaptive.n, "three-adaptive: order bound");
  adaptive_cmd->add_option("--radix", adaptive.radix, "three-adaptive: vertex-power | valuation-bound");
  adaptive_cmd->add_option("--forbidden", adaptive.forbidden, "forb: forbidden induced subgraphs");
  adaptive_cmd->add_option("--k", adaptive.k, "regular: degree");
  adaptive.family.attach(adaptive_cmd, false);

  RightFlags right;
  auto* right_cmd = app.add_subcommand("right", "right homomorphism counts and algorithms");
  right_cmd->require_subcommand(1);
  auto* right_count = right_cmd->add_subcommand("count", "print count(kind, G, F)");
  right_count->add_option("kind", kind_text)->required();
  right_count->add_option("G", g_text)->required();
  right_count->add_option("F", f_text)->required();
  auto* right_vector = right_cmd->add_subcommand("vector", "JSON lines of right count vectors");
  right_vector->add_option("--kind", vector_kind);
  right.family.attach(right_vector, false);
  right_vector->add_option("graphs", right.graphs);
  auto* right_quotient = right_cmd->add_subcommand("quotient", "graph6 of the quotient");
  right_quotient->add_option("G", right.hidden)->required();
  right.family.attach(right_quotient, false);
  bool quotient_json = false;
  right_quotient->add_flag("--json", quotient_json, "also print a JSON report");
  auto* right_member = right_cmd->add_subcommand("membership", "decide a bounded-edge class from right counts");
  right_member->add_option("G", right.hidden)->required();
  right_member->add_option("--predicate", right.predicate, "edges (at most k edges) | edgeless");
  right_member->add_option("--k", right.k);
  right_member->add_option("--cap", right.cap, "reduced family cap");
  auto* right_demo = right_cmd->add_subcommand("demo", "failure demonstrations");
  right_demo->add_option("demo", right.demo, "triangle | clique-isolated");
  right_demo->add_option("--s", right.s);
  right.family.attach(right_demo, false);

  std::size_t expr_count = 0, expr_max = 5;
  std::string expr_cache;
  auto* expr_cmd = app.add_subcommand("expressive", "index, graph6 and expressive flag per connected graph");
  expr_cmd->add_option("--max-vertices", expr_max);
  expr_cmd->add_option("--count", expr_count, "first N connected graphs instead");
  expr_cmd->add_option("--cache", expr_cache, "ledger cache file");

  std::string suite;
  VerifyOptions vopts;
  bool verify_json = false, verify_timings = false;
  auto* verify_cmd = app.add_subcommand("verify", "rerun the desk-scale checks");
  verify_cmd->add_option("suite", suite, "suite name or all")->required();
  verify_cmd->add_option("--n", vopts.n, "size parameter (0 keeps the suite default)");
  verify_cmd->add_flag("--json", verify_json);
  verify_cmd->add_flag("--timings", verify_timings);

  std::string serve_hidden;
  bool serve_right = false;
  auto* serve_cmd = app.add_subcommand("oracle-serve", "answer count queries on stdin for a hidden graph");
  serve_cmd->add_option("hidden", serve_hidden)->required();
  serve_cmd->add_flag("--right", serve_right);
  serve_cmd->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*count_cmd) {
      std::cout << count(parse_kind(kind_text), from_graph6(f_text), from_graph6(g_text)).get_str() << '\n';
    } else if (*right_count) {
      std::cout << count(parse_kind(kind_text), from_graph6(g_text), from_graph6(f_text)).get_str() << '\n';
    } else if (*vector_cmd) {
      emit_vectors(parse_kind(vector_kind), vector_right ? Orientation::right : Orientation::left,
                   vector_family.resolve(), parse_graphs(vector_graphs), jobs);
    } else if (*enum_cmd) {
      if (enum_max == 0) throw UsageError("--max-vertices must be positive");
      std::vector<Graph> gs;
      if (enum_connected)
        gs = enumerate_connected(enum_max);
      else
        gs = enumerate_graphs_upto(enum_max);
      for (const auto& g : gs)
        if (!enum_exact || g.order() == enum_max) std::cout << to_graph6(g) << '\n';
    } else if (*forge_cmd) {
      forge.jobs = jobs;
      return cmd_forge(forge);
    } else if (*adaptive_cmd) {
      return cmd_adaptive(adaptive);
    } else if (*right_vector) {
      emit_vectors(parse_kind(vector_kind), Orientation::right, right.family.resolve(), parse_graphs(right.graphs),
                   jobs);
    } else if (*right_quotient) {
      const Graph g = from_graph6(right.hidden);
      const auto family = right.family.resolve();
      const Quotient q = quotient_graph(g, family);
      std::cout << to_graph6(q.graph) << '\n';
      if (quotient_json) {
        Json j;
        static const char* regimes[] = {"single_vertex_family", "all_zero", "general"};
        j["regime"] = regimes[static_cast<int>(q.regime)];
        j["counts"] = strings(q.counts);
        j["maps_enumerated"] = q.maps_enumerated;
        if (q.size_bound) j["size_bound"] = q.size_bound->get_str();
        j["verified"] = true;
        std::cout << j.dump() << '\n';
      }
    } else if (*right_member) {
      return cmd_right_membership(right);
    } else if (*right_demo) {
      return cmd_right_demo(right);
    } else if (*expr_cmd) {
      const std::size_t upto = expr_count ? expr_count : connected_count_upto(expr_max);
      ExpressiveLedger ledger(std::max<EnumerationIndex>(upto, ExpressiveLedger::kDefaultBudget));
      if (!expr_cache.empty()) ledger.load(expr_cache);
      for (EnumerationIndex i = 1; i <= upto; ++i)
        std::cout << i << ' ' << to_graph6(connected_graph(i)) << ' ' << (ledger.is_expressive(i) ? "true" : "false")
                  << '\n';
      if (!expr_cache.empty()) ledger.save(expr_cache);
    } else if (*verify_cmd) {
      vopts.jobs = jobs;
      return cmd_verify(suite, vopts, verify_json, verify_timings);
    } else if (*serve_cmd) {
      serve_oracle(from_graph6(serve_hidden), serve_right ? Orientation::right : Orientation::left, stdin, stdout);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheck;
  }
  return 0;
}
