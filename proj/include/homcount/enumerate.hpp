#ifndef HOMCOUNT_ENUMERATE_HPP
#define HOMCOUNT_ENUMERATE_HPP

#include <cstddef>
#include <vector>

#include "homcount/graph.hpp"

namespace homcount {

inline constexpr std::size_t kMaxEnumerationOrder = 8;
inline constexpr std::size_t kMaxConnectedOrder = 7;

/// One canonically labelled representative per isomorphism type on exactly
/// n vertices (1 <= n <= 8), ordered by edge count, then canonical form.
/// Results are computed once and shared; BudgetError beyond 8 vertices.
const std::vector<Graph>& enumerate_graphs(std::size_t n);

/// All graphs with 1..n vertices in (|V|, |E|, canonical form) order.
std::vector<Graph> enumerate_graphs_upto(std::size_t n);

/// 1-based position in the fixed enumeration F_1, F_2, ... of connected graphs.
using EnumerationIndex = std::size_t;

/// Connected graphs with at most `max_vertices` (<= 7) vertices, ordered by
/// |V|, then |E|, then canonical form.
std::vector<Graph> enumerate_connected(std::size_t max_vertices);

/// F_1, ..., F_length. BudgetError if that needs more than 7 vertices.
std::vector<Graph> enumerate_connected_prefix(std::size_t length);

/// F_index.
const Graph& connected_graph(EnumerationIndex index);

/// Number of connected types with at most `max_vertices` vertices.
std::size_t connected_count_upto(std::size_t max_vertices);

/// Inverse of the enumeration. Error for disconnected input, BudgetError
/// beyond 7 vertices.
EnumerationIndex connected_index_of(const Graph& f);

}  // namespace homcount

#endif  // HOMCOUNT_ENUMERATE_HPP
