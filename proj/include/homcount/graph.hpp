#ifndef HOMCOUNT_GRAPH_HPP
#define HOMCOUNT_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace homcount {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable finite simple undirected graph on the vertices 0..n-1 (n >= 1).
///
/// Neighbourhoods are kept both as sorted lists and, for graphs up to
/// kDenseLimit vertices, as bit rows. The connected-component split is
/// computed once at construction. Copies share the same storage.
class Graph {
 public:
  static constexpr std::size_t kDenseLimit = 4096;

  /// K_1.
  Graph();

  /// Builds a graph from an edge list. Duplicate edges are merged;
  /// self-loops and out-of-range endpoints throw std::invalid_argument.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const noexcept;
  std::size_t edge_count() const noexcept;

  bool adjacent(Vertex u, Vertex v) const;
  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  /// Bit row of v: word w holds vertices 64w..64w+63, least significant
  /// bit first. Empty span when order() > kDenseLimit.
  std::span<const std::uint64_t> row(Vertex v) const;
  std::size_t row_words() const noexcept;

  /// Connected components, each a sorted vertex list, ordered by smallest
  /// vertex.
  const std::vector<std::vector<Vertex>>& components() const noexcept;
  bool is_connected() const noexcept { return components().size() == 1; }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Subgraph induced on `vertices`; vertex i of the result is vertices[i].
  Graph induced(std::span<const Vertex> vertices) const;

  /// Labelled equality (same n, same edge set). Use is_isomorphic for the
  /// unlabelled comparison.
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  struct Impl;
  explicit Graph(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  static std::shared_ptr<const Impl> build(std::size_t n, std::vector<std::vector<Vertex>> adj);
  std::shared_ptr<const Impl> impl_;
};

enum class NamedGraph { clique, path, cycle, star };

/// K_n, P_n (n vertices), C_n (n >= 3) and S_n (n vertices, centre 0 of
/// degree n-1).
Graph make_named(NamedGraph kind, std::size_t n);
Graph clique(std::size_t n);
Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph star(std::size_t n);
/// n isolated vertices.
Graph edgeless(std::size_t n);

NamedGraph parse_named_graph(std::string_view name);

/// Vertices of `h` are shifted by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);
/// l disjoint copies of g; l = 0 throws std::invalid_argument.
Graph replicate(std::size_t copies, const Graph& g);
Graph complement(const Graph& g);
/// Categorical product; vertex (u, v) is numbered u * h.order() + v.
Graph tensor_product(const Graph& g, const Graph& h);
/// Replaces every edge by a path with `segments` edges (segments >= 1).
Graph subdivide_edges(const Graph& g, std::size_t segments);
/// Mycielski construction: v_i (0..n-1), shadows u_i (n..2n-1), apex 2n.
Graph mycielskian(const Graph& g);
/// Generalized Mycielskian with `levels` shadow layers: vertex (v, k) is
/// numbered k*n + v for k = 0..levels, the apex is (levels+1)*n. Layer 0
/// keeps E(g); (u,k)-(v,k+1) for every edge uv; the apex sees the top layer.
/// levels = 1 is mycielskian(g).
Graph generalized_mycielskian(const Graph& g, std::size_t levels);

/// (d_0, ..., d_{n-1}) where d_i counts vertices of degree i.
std::vector<std::size_t> degree_histogram(const Graph& g);
std::size_t isolated_vertex_count(const Graph& g);
/// (G without isolated vertices, number of isolated vertices). An edgeless
/// graph on n vertices maps to (K_1, n - 1).
std::pair<Graph, std::size_t> strip_isolated(const Graph& g);

}  // namespace homcount

#endif  // HOMCOUNT_GRAPH_HPP
