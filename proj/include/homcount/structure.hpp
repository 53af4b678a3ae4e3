#ifndef HOMCOUNT_STRUCTURE_HPP
#define HOMCOUNT_STRUCTURE_HPP

#include <cstddef>
#include <optional>

#include "homcount/graph.hpp"

namespace homcount {

bool is_bipartite(const Graph& g);

/// Length of a shortest odd cycle; nullopt for bipartite graphs.
std::optional<std::size_t> odd_girth(const Graph& g);

bool has_triangle(const Graph& g);

/// Exact planarity, decided component by component.
bool is_planar(const Graph& g);

/// Exact k-colourability by backtracking, component by component.
bool is_k_colorable(const Graph& g, std::size_t k);

std::size_t chromatic_number(const Graph& g);

}  // namespace homcount

#endif  // HOMCOUNT_STRUCTURE_HPP
