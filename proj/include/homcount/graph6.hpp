#ifndef HOMCOUNT_GRAPH6_HPP
#define HOMCOUNT_GRAPH6_HPP

#include <string>
#include <string_view>

#include "homcount/graph.hpp"

namespace homcount {

/// Standard graph6 text (no header, no trailing newline).
std::string to_graph6(const Graph& g);

/// Parses one graph6 string. An optional ">>graph6<<" prefix and trailing
/// whitespace are accepted. Malformed input throws ParseError carrying the
/// offending byte offset.
Graph from_graph6(std::string_view text);

}  // namespace homcount

#endif  // HOMCOUNT_GRAPH6_HPP
