#ifndef HOMCOUNT_GRAPH_SUM_HPP
#define HOMCOUNT_GRAPH_SUM_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "homcount/canonical.hpp"
#include "homcount/count.hpp"
#include "homcount/factored.hpp"
#include "homcount/graph.hpp"

namespace homcount {

/// A graph given as a multiset of connected components with arbitrary
/// precision multiplicities, e.g. emb(F, K_k)·F ⊔ d·K_1. Constructions whose
/// multiplicities are far too large to materialize stay in this form and
/// are counted component-wise.
class GraphSum {
 public:
  struct Part {
    Graph component;
    mpz_class copies;
  };

  GraphSum() = default;  // the empty sum, not yet a graph
  explicit GraphSum(const Graph& g);

  /// Adds `copies` copies of g (split into components). Zero copies is a no-op.
  GraphSum& add(const Graph& g, const mpz_class& copies = 1);
  GraphSum& add(const GraphSum& other, const mpz_class& copies = 1);

  /// copies · *this.
  GraphSum scaled(const mpz_class& copies) const;

  const std::vector<Part>& parts() const noexcept { return parts_; }
  bool empty() const noexcept { return parts_.empty(); }
  mpz_class order() const;
  mpz_class edge_count() const;

  bool has_isolated_vertex() const;
  bool is_planar() const;
  bool is_k_colorable(std::size_t k) const;

  /// The materialized graph, or nullopt above `max_vertices`.
  std::optional<Graph> to_graph(std::size_t max_vertices = 100000) const;

  /// "3*Bw + 1*@" style summary with components in graph6.
  std::string describe() const;

 private:
  std::vector<Part> parts_;
  std::vector<std::optional<CanonicalForm>> forms_;  // parallel to parts_, set within the budget
};

/// Counts for connected f against a sum (component-wise, sum rule).
CountValue emb(const Graph& f, const GraphSum& g);
/// hom(f, sum): product over the components A of f of Σ copies·hom(A, part).
CountValue hom(const Graph& f, const GraphSum& g);
/// hom or emb into a sum; other kinds throw std::invalid_argument.
CountValue count(MorphismKind kind, const Graph& f, const GraphSum& g);

/// hom(sum, g) = Π hom(part, g)^copies, kept in factored form.
FactoredCount hom_factored(const GraphSum& f, const Graph& g);
/// Same value materialized; BudgetError if it exceeds `max_bits`.
CountValue hom(const GraphSum& f, const Graph& g, std::size_t max_bits = std::size_t{1} << 24);

}  // namespace homcount

#endif  // HOMCOUNT_GRAPH_SUM_HPP
