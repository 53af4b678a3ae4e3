#include "homcount/graph6.hpp"

#include <cstdint>

#include "homcount/errors.hpp"

namespace homcount {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr std::uint64_t kMaxOrder = 68719476735ULL;  // 2^36 - 1

void put_order(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
    return;
  }
  int groups = 3;
  out.push_back(126);
  if (n > 258047) {
    out.push_back(126);
    groups = 6;
  }
  for (int k = groups - 1; k >= 0; --k) out.push_back(static_cast<char>(((n >> (6 * k)) & 63) + 63));
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  put_order(out, n);
  int filled = 0;
  unsigned chunk = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kHeader)) {
    text.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
    text.remove_suffix(1);

  std::size_t pos = 0;
  auto sixbits = [&](std::size_t at) -> std::uint64_t {
    if (at >= text.size()) throw ParseError("graph6 input truncated", base + at);
    const auto c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126) throw ParseError("invalid graph6 character", base + at);
    return c - 63U;
  };

  if (text.empty()) throw ParseError("empty graph6 input", base);
  std::uint64_t n = sixbits(0);
  pos = 1;
  if (n == 63) {
    int groups = 3;
    if (sixbits(1) == 63) {
      groups = 6;
      pos = 2;
    }
    n = 0;
    for (int k = 0; k < groups; ++k) n = (n << 6) | sixbits(pos++);
    if (n > kMaxOrder) throw ParseError("graph6 order out of range", base);
  }
  if (n == 0) throw ParseError("graph6 graph has no vertices", base);
  if (n > (std::uint64_t{1} << 20)) throw ParseError("graph6 order too large for this library", base);

  const std::uint64_t bit_count = n * (n - 1) / 2;
  const std::uint64_t byte_count = (bit_count + 5) / 6;
  if (text.size() - pos < byte_count) throw ParseError("graph6 input truncated", base + text.size());
  if (text.size() - pos > byte_count) throw ParseError("trailing data after graph6 graph", base + pos + byte_count);

  std::vector<Edge> edges;
  std::uint64_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const std::uint64_t chunk = sixbits(pos + bit / 6);
      if ((chunk >> (5 - bit % 6)) & 1U) edges.emplace_back(i, j);
    }
  }
  if (bit_count % 6 != 0) {
    const std::uint64_t last = sixbits(pos + byte_count - 1);
    const unsigned pad = static_cast<unsigned>(6 - bit_count % 6);
    if ((last & ((1U << pad) - 1)) != 0) throw ParseError("nonzero graph6 padding bits", base + pos + byte_count - 1);
  }
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

}  // namespace homcount
