#ifndef HOMCOUNT_CANONICAL_HPP
#define HOMCOUNT_CANONICAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "homcount/graph.hpp"

namespace homcount {

/// Default largest connected component that canonicalization accepts.
inline constexpr std::size_t kCanonicalBudget = 24;

/// Upper triangle of the canonically relabelled adjacency matrix, in graph6
/// (column-major) order, packed most significant bit first so that comparing
/// the word vectors compares the bit strings lexicographically.
struct CanonicalForm {
  std::uint32_t n = 1;
  std::vector<std::uint64_t> bits;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend std::strong_ordering operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
    if (auto c = a.n <=> b.n; c != 0) return c;
    return a.bits <=> b.bits;
  }
  /// The bit string as '0'/'1' characters.
  std::string bit_string() const;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const noexcept;
};

/// Vertex order realising the canonical form: result[p] is the original
/// vertex placed at position p. Throws BudgetError ("canonicalization
/// budget exceeded") when a connected component has more than `budget`
/// vertices.
std::vector<Vertex> canonical_labeling(const Graph& g, std::size_t budget = kCanonicalBudget);

CanonicalForm canonical_form(const Graph& g, std::size_t budget = kCanonicalBudget);

/// The graph relabelled by canonical_labeling.
Graph canonical_graph(const Graph& g, std::size_t budget = kCanonicalBudget);

/// Sorted canonical forms of the connected components.
std::vector<CanonicalForm> component_forms(const Graph& g, std::size_t budget = kCanonicalBudget);

/// Exact isomorphism test via the multiset of component canonical forms.
bool is_isomorphic(const Graph& g, const Graph& h, std::size_t budget = kCanonicalBudget);

}  // namespace homcount

#endif  // HOMCOUNT_CANONICAL_HPP
