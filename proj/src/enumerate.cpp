#include "homcount/enumerate.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "homcount/canonical.hpp"
#include "homcount/errors.hpp"

namespace homcount {

namespace {

struct Keyed {
  CanonicalForm form;
  Graph graph;
};

std::vector<Graph> generate(std::size_t n, const std::vector<Graph>& smaller) {
  // Every n-vertex graph arises from an (n-1)-vertex one by adding a vertex
  // with some neighbourhood; canonical forms remove the repeats.
  std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
  std::vector<Keyed> found;
  const auto last = static_cast<Vertex>(n - 1);
  for (const auto& base : smaller) {
    const auto base_edges = base.edges();
    for (std::uint32_t mask = 0; mask < (1U << (n - 1)); ++mask) {
      std::vector<Edge> edges = base_edges;
      for (Vertex v = 0; v < last; ++v)
        if ((mask >> v) & 1U) edges.emplace_back(v, last);
      Graph g = Graph::from_edges(n, edges);
      CanonicalForm form = canonical_form(g);
      if (seen.insert(form).second) found.push_back({std::move(form), canonical_graph(g)});
    }
  }
  std::sort(found.begin(), found.end(), [](const Keyed& a, const Keyed& b) {
    if (a.graph.edge_count() != b.graph.edge_count()) return a.graph.edge_count() < b.graph.edge_count();
    return a.form < b.form;
  });
  std::vector<Graph> out;
  out.reserve(found.size());
  for (auto& k : found) out.push_back(std::move(k.graph));
  return out;
}

struct Store {
  std::mutex mutex;
  std::array<std::vector<Graph>, kMaxEnumerationOrder + 1> by_order;
  std::array<bool, kMaxEnumerationOrder + 1> ready{};

  std::vector<Graph> connected;  // all connected types up to kMaxConnectedOrder
  std::array<std::size_t, kMaxConnectedOrder + 1> connected_upto{};
  std::unordered_map<CanonicalForm, EnumerationIndex, CanonicalFormHash> connected_index;
  bool connected_ready = false;
};

Store& store() {
  static Store s;
  return s;
}

const std::vector<Graph>& graphs_locked(Store& s, std::size_t n) {
  if (!s.ready[n]) {
    s.by_order[n] = n == 1 ? std::vector<Graph>{Graph()} : generate(n, graphs_locked(s, n - 1));
    s.ready[n] = true;
  }
  return s.by_order[n];
}

void build_connected_locked(Store& s) {
  if (s.connected_ready) return;
  for (std::size_t n = 1; n <= kMaxConnectedOrder; ++n) {
    for (const auto& g : graphs_locked(s, n))
      if (g.is_connected()) {
        s.connected.push_back(g);
        s.connected_index.emplace(canonical_form(g), s.connected.size());
      }
    s.connected_upto[n] = s.connected.size();
  }
  s.connected_ready = true;
}

}  // namespace

const std::vector<Graph>& enumerate_graphs(std::size_t n) {
  if (n == 0) throw std::invalid_argument("enumeration needs at least one vertex");
  if (n > kMaxEnumerationOrder)
    throw BudgetError("enumeration budget exceeded: " + std::to_string(n) + " > " +
                      std::to_string(kMaxEnumerationOrder) + " vertices");
  auto& s = store();
  std::lock_guard lock(s.mutex);
  return graphs_locked(s, n);
}

std::vector<Graph> enumerate_graphs_upto(std::size_t n) {
  std::vector<Graph> out;
  for (std::size_t k = 1; k <= n; ++k) {
    const auto& level = enumerate_graphs(k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::size_t connected_count_upto(std::size_t max_vertices) {
  if (max_vertices > kMaxConnectedOrder)
    throw BudgetError("connected enumeration budget exceeded: " + std::to_string(max_vertices) + " > " +
                      std::to_string(kMaxConnectedOrder) + " vertices");
  if (max_vertices == 0) return 0;
  auto& s = store();
  std::lock_guard lock(s.mutex);
  build_connected_locked(s);
  return s.connected_upto[max_vertices];
}

std::vector<Graph> enumerate_connected(std::size_t max_vertices) {
  const std::size_t count = connected_count_upto(max_vertices);
  auto& s = store();
  std::lock_guard lock(s.mutex);
  return {s.connected.begin(), s.connected.begin() + static_cast<std::ptrdiff_t>(count)};
}

std::vector<Graph> enumerate_connected_prefix(std::size_t length) {
  const std::size_t total = connected_count_upto(kMaxConnectedOrder);
  if (length > total)
    throw BudgetError("connected enumeration budget exceeded: prefix " + std::to_string(length) + " > " +
                      std::to_string(total));
  auto& s = store();
  std::lock_guard lock(s.mutex);
  return {s.connected.begin(), s.connected.begin() + static_cast<std::ptrdiff_t>(length)};
}

const Graph& connected_graph(EnumerationIndex index) {
  const std::size_t total = connected_count_upto(kMaxConnectedOrder);
  if (index == 0 || index > total)
    throw BudgetError("enumeration index " + std::to_string(index) + " outside 1.." + std::to_string(total));
  auto& s = store();
  std::lock_guard lock(s.mutex);
  return s.connected[index - 1];
}

EnumerationIndex connected_index_of(const Graph& f) {
  if (!f.is_connected()) throw Error("connected_index_of needs a connected graph");
  if (f.order() > kMaxConnectedOrder)
    throw BudgetError("connected enumeration budget exceeded: graph with " + std::to_string(f.order()) +
                      " vertices");
  connected_count_upto(kMaxConnectedOrder);
  auto& s = store();
  const CanonicalForm form = canonical_form(f);
  std::lock_guard lock(s.mutex);
  return s.connected_index.at(form);
}

}  // namespace homcount
