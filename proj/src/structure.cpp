#include "homcount/structure.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace homcount {

bool is_bipartite(const Graph& g) { return !odd_girth(g).has_value(); }

std::optional<std::size_t> odd_girth(const Graph& g) {
  const std::size_t n = g.order();
  // A 2-colouring attempt settles the bipartite case in linear time.
  {
    std::vector<int> side(n, -1);
    bool bipartite = true;
    for (Vertex s = 0; s < n && bipartite; ++s) {
      if (side[s] >= 0) continue;
      side[s] = 0;
      std::queue<Vertex> q;
      q.push(s);
      while (!q.empty() && bipartite) {
        Vertex u = q.front();
        q.pop();
        for (Vertex w : g.neighbors(u)) {
          if (side[w] < 0) {
            side[w] = 1 - side[u];
            q.push(w);
          } else if (side[w] == side[u]) {
            bipartite = false;
            break;
          }
        }
      }
    }
    if (bipartite) return std::nullopt;
  }
  // Shortest closed walk of odd length through s, found as the distance from
  // (s, even) to (s, odd) in the parity cover. The minimum over s is an odd cycle.
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  std::size_t best = kInf;
  std::vector<std::size_t> dist(2 * n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kInf);
    dist[2 * s] = 0;
    std::queue<std::size_t> q;
    q.push(2 * s);
    while (!q.empty()) {
      const std::size_t x = q.front();
      q.pop();
      if (dist[x] + 1 >= best) break;
      const Vertex u = static_cast<Vertex>(x / 2);
      const std::size_t parity = x % 2;
      for (Vertex w : g.neighbors(u)) {
        const std::size_t y = 2 * w + (1 - parity);
        if (dist[y] == kInf) {
          dist[y] = dist[x] + 1;
          q.push(y);
        }
      }
    }
    if (dist[2 * s + 1] < best) best = dist[2 * s + 1];
  }
  return best;
}

bool has_triangle(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    auto a = g.neighbors(u);
    auto b = g.neighbors(v);
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) return true;
      if (a[i] < b[j]) ++i;
      else ++j;
    }
  }
  return false;
}

namespace {

bool component_planar(const Graph& g, const std::vector<Vertex>& comp) {
  const std::size_t n = comp.size();
  if (n <= 4) return true;
  std::vector<Vertex> local(g.order(), 0);
  for (std::size_t i = 0; i < n; ++i) local[comp[i]] = static_cast<Vertex>(i);
  std::size_t m = 0;
  for (Vertex u : comp) m += g.degree(u);
  m /= 2;
  if (m > 3 * n - 6) return false;
  if (m < 9) return true;  // K_5 and K_{3,3} both need at least 9 edges

  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(n);
  for (Vertex u : comp)
    for (Vertex w : g.neighbors(u))
      if (u < w) boost::add_edge(local[u], local[w], bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

// Backtracking k-colouring of one component with a most-constrained-vertex
// rule (fewest remaining colours, then highest degree).
class Colorer {
 public:
  Colorer(const Graph& g, const std::vector<Vertex>& comp, std::size_t k)
      : g_(g), comp_(comp), k_(k), color_(g.order(), -1) {}

  bool run() {
    if (k_ == 0) return false;
    return extend(0);
  }

 private:
  bool extend(std::size_t placed) {
    if (placed == comp_.size()) return true;
    Vertex pick = 0;
    std::size_t best_free = k_ + 1, best_deg = 0;
    bool found = false;
    for (Vertex v : comp_) {
      if (color_[v] >= 0) continue;
      const std::size_t free = free_colors(v);
      if (free == 0) return false;
      if (!found || free < best_free || (free == best_free && g_.degree(v) > best_deg)) {
        pick = v;
        best_free = free;
        best_deg = g_.degree(v);
        found = true;
      }
    }
    // Colours beyond the first unused one are interchangeable.
    int used_max = -1;
    for (Vertex v : comp_) used_max = std::max(used_max, color_[v]);
    const int limit = std::min<int>(static_cast<int>(k_) - 1, used_max + 1);
    for (int c = 0; c <= limit; ++c) {
      if (conflicts(pick, c)) continue;
      color_[pick] = c;
      if (extend(placed + 1)) return true;
      color_[pick] = -1;
    }
    return false;
  }

  bool conflicts(Vertex v, int c) const {
    for (Vertex w : g_.neighbors(v))
      if (color_[w] == c) return true;
    return false;
  }

  std::size_t free_colors(Vertex v) const {
    std::vector<bool> blocked(k_, false);
    for (Vertex w : g_.neighbors(v))
      if (color_[w] >= 0) blocked[static_cast<std::size_t>(color_[w])] = true;
    return static_cast<std::size_t>(std::count(blocked.begin(), blocked.end(), false));
  }

  const Graph& g_;
  const std::vector<Vertex>& comp_;
  std::size_t k_;
  std::vector<int> color_;
};

}  // namespace

bool is_planar(const Graph& g) {
  for (const auto& comp : g.components())
    if (!component_planar(g, comp)) return false;
  return true;
}

bool is_k_colorable(const Graph& g, std::size_t k) {
  if (k == 0) return false;
  if (g.edge_count() == 0) return true;
  if (k == 1) return false;
  if (k == 2) return is_bipartite(g);
  for (const auto& comp : g.components()) {
    if (comp.size() <= k) continue;
    if (!Colorer(g, comp, k).run()) return false;
  }
  return true;
}

std::size_t chromatic_number(const Graph& g) {
  if (g.edge_count() == 0) return 1;
  if (is_bipartite(g)) return 2;
  std::size_t k = 3;
  while (!is_k_colorable(g, k)) ++k;
  return k;
}

}  // namespace homcount
