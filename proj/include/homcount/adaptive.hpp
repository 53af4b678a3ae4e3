#ifndef HOMCOUNT_ADAPTIVE_HPP
#define HOMCOUNT_ADAPTIVE_HPP

#include <cstddef>
#include <cstdio>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "homcount/count.hpp"
#include "homcount/factored.hpp"
#include "homcount/graph.hpp"
#include "homcount/graph_sum.hpp"

namespace homcount {

/// A query is a graph or a (possibly astronomically large) sum of components.
using Query = std::variant<Graph, GraphSum>;
/// Plain queries are answered with integers, sums in factored form.
using Answer = std::variant<CountValue, FactoredCount>;

std::string describe(const Query& q);
std::string describe(const Answer& a);

/// Counts of the hidden graph against query graphs, with a query log.
/// Left orientation answers count(F, hidden), right orientation count(hidden, F).
class HomOracle {
 public:
  struct LogEntry {
    MorphismKind kind;
    std::string query;   // graph6, or "c*g6 + ..." for sums
    std::string answer;  // decimal, or "p^e * ..." for huge factored values
  };

  explicit HomOracle(Orientation orientation = Orientation::left) : orientation_(orientation) {}
  virtual ~HomOracle() = default;
  HomOracle(const HomOracle&) = delete;
  HomOracle& operator=(const HomOracle&) = delete;

  Orientation orientation() const noexcept { return orientation_; }

  CountValue query(const Graph& f, MorphismKind kind = MorphismKind::hom);
  /// hom(sum, hidden); left orientation only.
  FactoredCount query(const GraphSum& f);
  Answer query(const Query& q);

  const std::vector<LogEntry>& log() const noexcept { return log_; }
  std::size_t query_count() const noexcept { return log_.size(); }

 protected:
  virtual CountValue answer(MorphismKind kind, const Graph& f) = 0;
  virtual FactoredCount answer_sum(const GraphSum& f) = 0;

 private:
  Orientation orientation_;
  std::vector<LogEntry> log_;
};

/// Oracle over an in-process hidden graph; answers are always recomputed.
class GraphOracle : public HomOracle {
 public:
  explicit GraphOracle(Graph hidden, Orientation orientation = Orientation::left)
      : HomOracle(orientation), hidden_(std::move(hidden)) {}
  const Graph& hidden() const noexcept { return hidden_; }

 protected:
  CountValue answer(MorphismKind kind, const Graph& f) override;
  FactoredCount answer_sum(const GraphSum& f) override;

 private:
  Graph hidden_;
};

/// Oracle answered by an external process started with `sh -c command`.
/// Requests are single lines "<kind> <graph6>" (or "<kind> sum:<c>*<g6>,..."
/// for sums); each response is one line holding a decimal count, or for sums
/// a factored count "p^e * ...". Any other response raises Error.
class ProcessOracle : public HomOracle {
 public:
  explicit ProcessOracle(const std::string& command, Orientation orientation = Orientation::left);
  ~ProcessOracle() override;

 protected:
  CountValue answer(MorphismKind kind, const Graph& f) override;
  FactoredCount answer_sum(const GraphSum& f) override;

 private:
  std::string round_trip(const std::string& request);
  int to_child_ = -1, from_child_ = -1;
  int pid_ = -1;
  std::string buffer_;
};

/// Serves the ProcessOracle protocol for `hidden` on the given descriptors
/// until end of input. Returns the number of requests answered.
std::size_t serve_oracle(const Graph& hidden, Orientation orientation, std::FILE* in, std::FILE* out);

/// The request line for a query, and its parsed form.
std::string oracle_request(MorphismKind kind, const Query& q);
std::pair<MorphismKind, Query> parse_oracle_request(std::string_view line);

struct AdaptiveStrategy {
  std::string name;
  std::size_t depth = 1;
  MorphismKind kind = MorphismKind::hom;
  Query start;
  /// Called with the answers so far (1..depth-1 of them).
  std::function<Query(std::span<const Answer>)> next;
  std::function<bool(std::span<const Answer>)> accept;
};

struct Transcript {
  bool decision = false;
  std::vector<Query> queries;
  std::vector<Answer> answers;
};

/// Runs the strategy with exactly `depth` oracle queries.
Transcript run_strategy(const AdaptiveStrategy& s, HomOracle& oracle);

// ---- degree statistics from stars ------------------------------------------

/// (d_0, ..., d_{n-1}) from values[j-1] = hom(S_j, G), j = 1..n, n = |V(G)|.
/// Error("inconsistent star vector") unless the solution is a non-negative
/// integer vector.
std::vector<std::size_t> histogram_from_star_vector(std::span<const CountValue> values);

/// Smallest L >= n·log2(n) (that is 2^L >= n^n) with n·(i-1)^(L-1) < i^(L-1) for 2 <= i <= n-1.
std::size_t star_exponent(std::size_t n);
/// The smallest L with 2^L >= n^n.
std::size_t star_exponent_unrefined(std::size_t n);

/// Greedy decode of m = hom(S_L, G) for an n-vertex G, L = star_exponent(max(n, 2)).
/// Error("not a valid star count for n") on a nonzero residue or too many vertices.
std::vector<std::size_t> histogram_from_single_count(const CountValue& m, std::size_t n);

/// Two queries: K_1 for n, then S_L; accepts iff d_0 = 0 (no isolated vertex).
AdaptiveStrategy isolated_vertex_strategy();

// ---- family encoding -------------------------------------------------------

enum class RadixRule {
  vertex_power,     // r = n^{|V(partial)|}
  valuation_bound,  // r = bit length of n^{|V(partial)|}, which still exceeds every p-adic valuation
};

struct EncodedFamily {
  GraphSum composite;
  std::vector<Graph> fold_order;
  std::vector<mpz_class> radices;  // radices[i] multiplies fold_order[i+1]
  std::size_t n = 1;
  RadixRule rule = RadixRule::vertex_power;
};

/// Left fold F_K = (((K_1 ⊔ r_1 K_2) ⊔ r_2 K_3) ...) over K sorted into
/// enumeration order. BudgetError if a radix would exceed 2^26 bits.
EncodedFamily encode_family(std::span<const Graph> k, std::size_t n, RadixRule rule = RadixRule::vertex_power);

/// Per-graph counts in fold order, or nullopt when z = 0 (some graph of the
/// family has count zero: condition (a)).
/// DecodeError("input not a valid encoded count") if a decoded count exceeds
/// n^{|V(K_i)|}.
std::optional<std::vector<CountValue>> decode_counts(const FactoredCount& z, const EncodedFamily& e);
/// Same from a plain integer; prime factors are found by trial division up to
/// the largest bound n^{|V(K_i)|}, and any leftover factor is a DecodeError.
std::optional<std::vector<CountValue>> decode_counts(const CountValue& z, const EncodedFamily& e);

// ---- three queries for isomorphism -----------------------------------------

struct ThreeQueryGraphs {
  std::size_t n = 1;
  EncodedFamily f1;                 // bipartite part
  std::optional<EncodedFamily> f2;  // non-bipartite part; K_1 is queried when absent
};

/// Splits the family into its bipartite part (must be non-empty and contain
/// a graph with an edge) and the rest, and encodes both for n.
ThreeQueryGraphs three_query_graphs(std::size_t n, std::span<const Graph> family,
                                    RadixRule rule = RadixRule::vertex_power);

/// Depth-3 strategy: K_1, then F_1(n), then F_2(n). `accept` sees the three answers.
AdaptiveStrategy three_adaptive_strategy(std::size_t n, std::span<const Graph> family,
                                         std::function<bool(std::span<const Answer>)> accept,
                                         RadixRule rule = RadixRule::vertex_power);

/// The three answers the strategy would see for `g`, computed directly.
std::vector<Answer> three_adaptive_answers(const ThreeQueryGraphs& q, const Graph& g);

// ---- non-adaptive helpers --------------------------------------------------

/// Queries K_1, then hom(F, hidden) for every F with at most n vertices
/// (n <= 6), and returns the unique matching n-vertex graph.
Graph reconstruct_graph(HomOracle& oracle);

/// True iff s-emb(F, G) = 0 for every forbidden F.
bool forb_membership(std::span<const Graph> forbidden, HomOracle& oracle);
bool forb_membership(std::span<const Graph> forbidden, const Graph& g);

/// Graphs on k+2 vertices with a vertex adjacent to all others (k + 1 <= 8).
std::vector<Graph> dominated_family(std::size_t k);

/// k-regularity from counts: hom(P_2, G) = k·n and no strong embedding of a
/// graph from dominated_family(k).
bool is_k_regular_by_counts(std::size_t k, HomOracle& oracle);

}  // namespace homcount

#endif  // HOMCOUNT_ADAPTIVE_HPP
