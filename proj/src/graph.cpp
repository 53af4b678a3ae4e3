#include "homcount/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace homcount {

struct Graph::Impl {
  std::size_t n = 1;
  std::size_t m = 0;
  std::vector<std::vector<Vertex>> adj;
  std::size_t words = 0;
  std::vector<std::uint64_t> bits;  // n * words, empty above kDenseLimit
  std::vector<std::vector<Vertex>> components;
};

Graph::Graph() : impl_(build(1, std::vector<std::vector<Vertex>>(1))) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) throw std::invalid_argument("a graph needs at least one vertex");
  std::vector<std::vector<Vertex>> adj(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return Graph(build(n, std::move(adj)));
}

std::size_t Graph::order() const noexcept { return impl_->n; }
std::size_t Graph::edge_count() const noexcept { return impl_->m; }

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& impl = *impl_;
  if (!impl.bits.empty()) return (impl.bits[u * impl.words + v / 64] >> (v % 64)) & 1U;
  const auto& nu = impl.adj[u];
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::span<const Vertex> Graph::neighbors(Vertex v) const { return impl_->adj[v]; }

std::span<const std::uint64_t> Graph::row(Vertex v) const {
  if (impl_->bits.empty()) return {};
  return std::span<const std::uint64_t>(impl_->bits).subspan(v * impl_->words, impl_->words);
}

std::size_t Graph::row_words() const noexcept { return impl_->words; }

const std::vector<std::vector<Vertex>>& Graph::components() const noexcept {
  return impl_->components;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(impl_->m);
  for (Vertex u = 0; u < impl_->n; ++u)
    for (Vertex v : impl_->adj[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<Vertex> index(impl_->n, static_cast<Vertex>(-1));
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<Vertex>(i);
  std::vector<std::vector<Vertex>> adj(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (Vertex w : impl_->adj[vertices[i]])
      if (index[w] != static_cast<Vertex>(-1)) adj[i].push_back(index[w]);
  return Graph(build(vertices.size(), std::move(adj)));
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.impl_ == b.impl_) return true;
  return a.impl_->n == b.impl_->n && a.impl_->adj == b.impl_->adj;
}

std::shared_ptr<const Graph::Impl> Graph::build(std::size_t n,
                                                std::vector<std::vector<Vertex>> adj) {
  auto impl = std::make_shared<Graph::Impl>();
  impl->n = n;
  std::size_t degree_sum = 0;
  for (auto& nb : adj) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    degree_sum += nb.size();
  }
  impl->m = degree_sum / 2;
  impl->words = (n + 63) / 64;
  if (n <= Graph::kDenseLimit) {
    impl->bits.assign(n * impl->words, 0);
    for (std::size_t u = 0; u < n; ++u)
      for (Vertex v : adj[u]) impl->bits[u * impl->words + v / 64] |= std::uint64_t{1} << (v % 64);
  }
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = true;
    stack.push_back(static_cast<Vertex>(s));
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex w : adj[u])
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    impl->components.push_back(std::move(comp));
  }
  impl->adj = std::move(adj);
  return impl;
}

Graph clique(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  return Graph::from_edges(n, e);
}

Graph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u) e.emplace_back(u, static_cast<Vertex>((u + 1) % n));
  return Graph::from_edges(n, e);
}

Graph star(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(0, v);
  return Graph::from_edges(n, e);
}

Graph edgeless(std::size_t n) { return Graph::from_edges(n, {}); }

Graph make_named(NamedGraph kind, std::size_t n) {
  if (n == 0) throw std::invalid_argument("a graph needs at least one vertex");
  switch (kind) {
    case NamedGraph::clique: return clique(n);
    case NamedGraph::path: return path(n);
    case NamedGraph::cycle: return cycle(n);
    case NamedGraph::star: return star(n);
  }
  throw std::invalid_argument("unknown graph kind");
}

NamedGraph parse_named_graph(std::string_view name) {
  if (name == "clique") return NamedGraph::clique;
  if (name == "path") return NamedGraph::path;
  if (name == "cycle") return NamedGraph::cycle;
  if (name == "star") return NamedGraph::star;
  throw std::invalid_argument("unknown graph kind: " + std::string(name));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  auto e = g.edges();
  const auto shift = static_cast<Vertex>(g.order());
  for (auto [u, v] : h.edges()) e.emplace_back(u + shift, v + shift);
  return Graph::from_edges(g.order() + h.order(), e);
}

Graph replicate(std::size_t copies, const Graph& g) {
  if (copies == 0) throw std::invalid_argument("replicate needs at least one copy");
  const auto base = g.edges();
  std::vector<Edge> e;
  e.reserve(base.size() * copies);
  for (std::size_t c = 0; c < copies; ++c) {
    const auto shift = static_cast<Vertex>(c * g.order());
    for (auto [u, v] : base) e.emplace_back(u + shift, v + shift);
  }
  return Graph::from_edges(g.order() * copies, e);
}

Graph complement(const Graph& g) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) e.emplace_back(u, v);
  return Graph::from_edges(g.order(), e);
}

Graph tensor_product(const Graph& g, const Graph& h) {
  const auto hn = static_cast<Vertex>(h.order());
  std::vector<Edge> e;
  const auto he = h.edges();
  for (auto [u, u2] : g.edges())
    for (auto [v, v2] : he) {
      e.emplace_back(u * hn + v, u2 * hn + v2);
      e.emplace_back(u * hn + v2, u2 * hn + v);
    }
  return Graph::from_edges(g.order() * h.order(), e);
}

Graph subdivide_edges(const Graph& g, std::size_t segments) {
  if (segments == 0) throw std::invalid_argument("subdivision needs at least one segment");
  std::vector<Edge> e;
  auto next = static_cast<Vertex>(g.order());
  for (auto [u, v] : g.edges()) {
    Vertex prev = u;
    for (std::size_t k = 1; k < segments; ++k) {
      e.emplace_back(prev, next);
      prev = next++;
    }
    e.emplace_back(prev, v);
  }
  return Graph::from_edges(next, e);
}

Graph mycielskian(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  std::vector<Edge> e;
  for (auto [u, v] : g.edges()) {
    e.emplace_back(u, v);
    e.emplace_back(n + u, v);
    e.emplace_back(u, n + v);
  }
  for (Vertex u = 0; u < n; ++u) e.emplace_back(n + u, 2 * n);
  return Graph::from_edges(2 * n + 1, e);
}

Graph generalized_mycielskian(const Graph& g, std::size_t levels) {
  if (levels == 0) throw std::invalid_argument("generalized Mycielskian needs at least one layer");
  const auto n = static_cast<Vertex>(g.order());
  std::vector<Edge> e;
  for (auto [u, v] : g.edges()) {
    e.emplace_back(u, v);
    for (Vertex k = 0; k < levels; ++k) {
      e.emplace_back(k * n + u, (k + 1) * n + v);
      e.emplace_back(k * n + v, (k + 1) * n + u);
    }
  }
  const auto apex = static_cast<Vertex>((levels + 1) * n);
  for (Vertex u = 0; u < n; ++u) e.emplace_back(static_cast<Vertex>(levels * n) + u, apex);
  return Graph::from_edges(apex + 1, e);
}

std::vector<std::size_t> degree_histogram(const Graph& g) {
  std::vector<std::size_t> d(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) ++d[g.degree(v)];
  return d;
}

std::size_t isolated_vertex_count(const Graph& g) {
  std::size_t c = 0;
  for (Vertex v = 0; v < g.order(); ++v) c += g.degree(v) == 0;
  return c;
}

std::pair<Graph, std::size_t> strip_isolated(const Graph& g) {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) > 0) keep.push_back(v);
  const std::size_t isolated = g.order() - keep.size();
  if (keep.empty()) return {Graph(), isolated - 1};
  return {g.induced(keep), isolated};
}

}  // namespace homcount
