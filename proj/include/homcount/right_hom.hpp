#ifndef HOMCOUNT_RIGHT_HOM_HPP
#define HOMCOUNT_RIGHT_HOM_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "homcount/adaptive.hpp"
#include "homcount/count.hpp"
#include "homcount/graph.hpp"

namespace homcount {

/// Every map in Hom(g, f), as the image of vertex 0, 1, ... of g. Calls
/// `visit` once per map; stops early when it returns false.
void for_each_hom(const Graph& g, const Graph& f, const std::function<bool(std::span<const Vertex>)>& visit);

struct Quotient {
  enum class Regime { single_vertex_family, all_zero, general };
  Graph graph;
  Regime regime = Regime::general;
  std::vector<CountValue> counts;  // hom(G, F) = hom(quotient, F), family order
  std::size_t maps_enumerated = 0;
  /// Π |V(F)|^hom(G,F), set in the general regime.
  std::optional<mpz_class> size_bound;
};

/// Quotient of g by "no homomorphism into a family graph separates u and v".
/// Special regimes: a single one-vertex family graph against a g with an
/// edge gives P_2; all counts zero gives K_{1+max |V(F)|}. The right vector
/// over the family is re-verified on the result. BudgetError beyond
/// `max_maps` materialized maps.
Quotient quotient_graph(const Graph& g, std::span<const Graph> family, std::size_t max_maps = 10'000'000);

struct RightFamily {
  std::vector<Graph> graphs;  // F^0 in enumeration order, then each F ⊔ K_1 in the same order
  std::size_t base_size = 0;  // |F^0|
  std::size_t k = 0;
  std::size_t cap = 0;        // largest order in F^0
  bool reduced = false;       // cap below (2k)^3
  std::string warning;
};

/// F^0 = one graph per isomorphism type on at most (2k)^3 vertices, plus
/// every F ⊔ K_1. Exact only for k = 1 (cap 8); larger k (or an explicit
/// smaller cap) run in reduced mode with a warning.
RightFamily bounded_edge_family(std::size_t k, std::optional<std::size_t> reduced_cap = std::nullopt);

struct RightDecision {
  bool member = false;
  bool edgeless = false;
  std::size_t isolated = 0;                  // i(G)
  std::optional<Graph> without_isolated;     // G^wi when identified (nullopt for edgeless G)
  std::size_t queries = 0;
};

/// Decides membership in a class whose graphs have at most k edges, reading
/// only right hom counts hom(G, F) for F in bounded_edge_family(k). The
/// predicate is consulted on G^wi ⊔ i(G)·K_1 once G^wi is identified among
/// the graphs on at most 2k vertices without isolated vertices.
RightDecision right_membership(const std::function<bool(const Graph&)>& predicate, const RightFamily& family,
                               HomOracle& oracle);
RightDecision right_membership(const std::function<bool(const Graph&)>& predicate, std::size_t k, const Graph& g);

/// i(G) from hom(G, F_0) and hom(G, F_0 ⊔ K_1) with hom(G, F_0) > 0.
std::size_t isolated_from_ratio(const CountValue& on_f0, const CountValue& on_f0_plus_k1, std::size_t f0_order);

struct PowRightReport {
  std::size_t k = 0;
  bool k_colorable = false;
  CountValue hom_big;     // hom(H, K_{k^3})
  CountValue threshold;   // k^{3k}
  CountValue chain_bound; // (k^3 - k)^{k^2 - 1}
  bool holds = false;     // vacuous when not k-colourable
};

/// hom(H, K_k) > 0 implies hom(H, K_{k^3}) >= (k^3-k)^{k^2-1} > k^{3k}, for |V(H)| > k^3.
PowRightReport powright_inequality_check(const Graph& h, std::size_t k);
/// Largest hom(G, K_{k^3}) over G with at most k vertices; at most k^{3k}.
CountValue powright_small_side_max(std::size_t k);

struct FailureDemo {
  std::size_t s = 0;
  Graph g0;                  // triangle-free, χ = s
  std::size_t chromatic = 0;
  bool g0_triangle_free = false;
  bool clique_has_triangle = false;
  std::vector<Graph> probes;
  std::vector<CountValue> g0_counts, clique_counts;  // all zero
};

/// G_0 = iterated Mycielskian of K_2 with χ(G_0) = s (3 <= s <= 4) against
/// K_s on probes with fewer than s vertices (all such graphs when empty).
FailureDemo right_failure_demo(std::size_t s, std::span<const Graph> probes = {});

struct CliqueIsolatedDemo {
  std::size_t m = 0;
  std::vector<CountValue> clique_counts, clique_plus_k1_counts;  // all zero
};

/// K_m and K_m ⊔ K_1 with m = 1 + max |V(F)| have the same (zero) right
/// vector over the family but differ on isolated vertices.
CliqueIsolatedDemo clique_isolated_demo(std::span<const Graph> family);

}  // namespace homcount

#endif  // HOMCOUNT_RIGHT_HOM_HPP
