#ifndef HOMCOUNT_FORGE_HPP
#define HOMCOUNT_FORGE_HPP

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "homcount/count.hpp"
#include "homcount/expressive.hpp"
#include "homcount/graph.hpp"
#include "homcount/graph_sum.hpp"

namespace homcount {

enum class ForgeProperty { no_isolated_vertex, planar, colorable };

std::string_view property_name(ForgeProperty p);

/// A pair (G, H) with identical emb counts over `family` that disagree on
/// membership in the class named by `property` (with `colors` = ℓ for the
/// colourability class). For planar and colourable, G is in the class and
/// H is not; for no-isolated-vertex it is the other way round (G has an
/// isolated vertex, H has none).
///
/// Witnesses are only handed out after verify_witness succeeded, which also
/// fills in the counts and membership flags.
struct Witness {
  GraphSum g, h;
  std::vector<Graph> family;
  MorphismKind kind = MorphismKind::emb;
  ForgeProperty property = ForgeProperty::no_isolated_vertex;
  std::size_t colors = 0;

  std::vector<CountValue> g_counts, h_counts;
  bool g_in_class = false, h_in_class = false;
};

/// Recomputes every count and both memberships; throws VerificationError on
/// any disagreement.
void verify_witness(Witness& w, unsigned jobs = 1);

/// All connected graphs with at most max |V(F)| vertices (F in k), one per
/// isomorphism type, in enumeration order.
std::vector<Graph> connected_reduction(std::span<const Graph> k);

Witness forge_isolated_vertex(std::span<const Graph> family, ExpressiveLedger& ledger);
Witness forge_planarity(std::span<const Graph> family);

struct ProviderBudget {
  std::size_t max_vertices = 64;
};

/// A graph with odd girth > min_odd_girth (bipartite counts as infinite odd
/// girth) and chromatic number > min_chromatic. Tries iterated Mycielskians
/// of K_2, C_5, C_7, ... first, then generalized Mycielskians of long odd
/// cycles. BudgetError("provider budget exhausted") when nothing qualifies
/// within the vertex budget.
Graph high_chromatic_provider(std::size_t min_odd_girth, std::size_t min_chromatic,
                              const ProviderBudget& budget = {});

Witness forge_colorability(std::span<const Graph> family, std::size_t colors,
                           const ProviderBudget& budget = {});

/// G = C_{12ℓ+6}, H1 = 3·C_{4ℓ+2}, H2 = 2·C_{6ℓ+3} with ℓ = max(1, least ℓ with 4ℓ+2 > k).
struct CycleTriple {
  std::size_t k = 0;
  std::size_t ell = 1;
  Graph g, h1, h2;
  /// Largest pattern order the agreement was checked for (min(k, 8)).
  std::size_t verified_upto = 0;
};

/// Builds the triple and checks hom(F,G) = hom(F,H1) = hom(F,H2) for every
/// graph F on at most min(k, 8) vertices.
CycleTriple forge_two_adaptive_triple(std::size_t k, unsigned jobs = 1);

}  // namespace homcount

#endif  // HOMCOUNT_FORGE_HPP
