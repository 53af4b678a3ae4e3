// Brute-force reference implementations. Everything here is deliberately
// naive and shares no code with the library beyond the Graph container.
#ifndef HOMCOUNT_TESTS_ORACLE_HPP
#define HOMCOUNT_TESTS_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "homcount/graph.hpp"

namespace oracle {

using homcount::Edge;
using homcount::Graph;
using homcount::Vertex;

enum class Kind { hom, emb, strong_hom, strong_emb, epi, strong_epi };

// Visits every map V(F) -> V(G).
inline void for_each_map(std::size_t nf, std::size_t ng, const std::function<void(const std::vector<Vertex>&)>& fn) {
  std::vector<Vertex> m(nf, 0);
  while (true) {
    fn(m);
    std::size_t i = 0;
    while (i < nf && ++m[i] == ng) m[i++] = 0;
    if (i == nf) return;
  }
}

inline bool map_is(Kind kind, const Graph& f, const Graph& g, const std::vector<Vertex>& m) {
  const std::size_t nf = f.order(), ng = g.order();
  const bool injective = kind == Kind::emb || kind == Kind::strong_emb;
  const bool strong = kind == Kind::strong_hom || kind == Kind::strong_emb || kind == Kind::strong_epi;
  const bool onto = kind == Kind::epi || kind == Kind::strong_epi;
  for (Vertex u = 0; u < nf; ++u)
    for (Vertex v = u + 1; v < nf; ++v) {
      if (injective && m[u] == m[v]) return false;
      const bool e = f.adjacent(u, v);
      if (e && (m[u] == m[v] || !g.adjacent(m[u], m[v]))) return false;
      // strong: a non-edge of F must not land on an edge of G
      if (strong && !e && m[u] != m[v] && g.adjacent(m[u], m[v])) return false;
    }
  if (onto) {
    std::vector<bool> hit(ng, false);
    for (Vertex x : m) hit[x] = true;
    if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) return false;
    for (const auto& [a, b] : g.edges()) {
      bool covered = false;
      for (const auto& [u, v] : f.edges())
        if ((m[u] == a && m[v] == b) || (m[u] == b && m[v] == a)) covered = true;
      if (!covered) return false;
    }
  }
  return true;
}

inline mpz_class count(Kind kind, const Graph& f, const Graph& g) {
  mpz_class total = 0;
  for_each_map(f.order(), g.order(), [&](const std::vector<Vertex>& m) {
    if (map_is(kind, f, g, m)) ++total;
  });
  return total;
}

// Injective homomorphisms by pruned search; usable on targets with hundreds
// of vertices as long as F is small.
inline mpz_class emb_search(const Graph& f, const Graph& g) {
  std::vector<Vertex> image(f.order());
  std::vector<bool> used(g.order(), false);
  mpz_class total = 0;
  std::function<void(std::size_t)> go = [&](std::size_t v) {
    if (v == f.order()) {
      ++total;
      return;
    }
    for (Vertex x = 0; x < g.order(); ++x) {
      if (used[x]) continue;
      bool ok = true;
      for (Vertex w = 0; w < v && ok; ++w)
        if (f.adjacent(w, static_cast<Vertex>(v)) && !g.adjacent(image[w], x)) ok = false;
      if (!ok) continue;
      used[x] = true;
      image[v] = x;
      go(v + 1);
      used[x] = false;
    }
  };
  go(0);
  return total;
}

inline mpz_class hom_search(const Graph& f, const Graph& g) {
  std::vector<Vertex> image(f.order());
  mpz_class total = 0;
  std::function<void(std::size_t)> go = [&](std::size_t v) {
    if (v == f.order()) {
      ++total;
      return;
    }
    for (Vertex x = 0; x < g.order(); ++x) {
      bool ok = true;
      for (Vertex w = 0; w < v && ok; ++w)
        if (f.adjacent(w, static_cast<Vertex>(v)) && !g.adjacent(image[w], x)) ok = false;
      if (!ok) continue;
      image[v] = x;
      go(v + 1);
    }
  };
  go(0);
  return total;
}

// Adjacency bits of the relabelled graph under every permutation; the
// lexicographically largest string is the form.
inline std::string canonical(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::string best;
  do {
    std::string s;
    s.reserve(n * (n - 1) / 2);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) s.push_back(g.adjacent(p[u], p[v]) ? '1' : '0');
    if (s > best) best = s;
  } while (std::next_permutation(p.begin(), p.end()));
  return std::to_string(n) + ":" + best;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.edge_count() == b.edge_count() && canonical(a) == canonical(b);
}

inline mpz_class automorphisms(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  mpz_class c = 0;
  do {
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u)
      for (std::size_t v = u + 1; v < n && ok; ++v) ok = g.adjacent(u, v) == g.adjacent(p[u], p[v]);
    if (ok) ++c;
  } while (std::next_permutation(p.begin(), p.end()));
  return c;
}

// One representative per isomorphism class among all labelled graphs on n
// vertices (n <= 6).
inline std::vector<Graph> graphs_by_mask(std::size_t n) {
  std::vector<Edge> slots;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::set<std::string> seen;
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1U) e.push_back(slots[i]);
    Graph g = Graph::from_edges(n, e);
    if (seen.insert(canonical(g)).second) out.push_back(g);
  }
  return out;
}

// Number of isomorphism classes on n vertices by Burnside's lemma: average
// over permutations of 2^(number of orbits on unordered pairs).
inline mpz_class graph_count_burnside(std::size_t n) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  mpz_class total = 0, perms = 0;
  do {
    std::set<std::pair<Vertex, Vertex>> seen;
    unsigned long orbits = 0;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) {
        if (seen.count({u, v})) continue;
        ++orbits;
        Vertex a = u, b = v;
        do {
          seen.insert({std::min(a, b), std::max(a, b)});
          a = p[a];
          b = p[b];
        } while (!((a == u && b == v) || (a == v && b == u)));
      }
    mpz_class term;
    mpz_ui_pow_ui(term.get_mpz_t(), 2, orbits);
    total += term;
    ++perms;
  } while (std::next_permutation(p.begin(), p.end()));
  return total / perms;
}

inline bool connected(const Graph& g) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w = 0; w < g.order(); ++w)
      if (!seen[w] && g.adjacent(u, w)) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == g.order();
}

// Backtracking colourer: vertex v takes a colour unused by earlier
// neighbours, and colour c > 0 is only tried once c-1 has appeared.
inline bool colorable(const Graph& g, std::size_t k) {
  if (k == 0) return false;
  std::vector<std::size_t> c(g.order(), 0);
  std::function<bool(std::size_t, std::size_t)> go = [&](std::size_t v, std::size_t used) {
    if (v == g.order()) return true;
    for (std::size_t x = 0; x < std::min(k, used + 1); ++x) {
      bool ok = true;
      for (Vertex w = 0; w < v && ok; ++w)
        if (g.adjacent(w, static_cast<Vertex>(v)) && c[w] == x) ok = false;
      if (!ok) continue;
      c[v] = x;
      if (go(v + 1, std::max(used, x + 1))) return true;
    }
    return false;
  };
  return go(0, 0);
}

inline std::size_t chromatic(const Graph& g) {
  std::size_t k = 1;
  while (!colorable(g, k)) ++k;
  return k;
}

inline bool triangle_free(const Graph& g) {
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b = a + 1; b < g.order(); ++b)
      for (Vertex c = b + 1; c < g.order(); ++c)
        if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)) return false;
  return true;
}

// Wagner: planar iff no K5 or K3,3 minor. Searches all minors (n <= 6).
inline Graph contract(const Graph& g, Vertex a, Vertex b) {
  std::vector<Vertex> index(g.order());
  Vertex next = 0;
  for (Vertex v = 0; v < g.order(); ++v) index[v] = v == b ? 0 : next++;
  index[b] = index[a];
  std::vector<Edge> e;
  for (const auto& [u, v] : g.edges())
    if (index[u] != index[v]) e.emplace_back(index[u], index[v]);
  return Graph::from_edges(g.order() - 1, e);
}

inline Graph drop_vertex(const Graph& g, Vertex x) {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v)
    if (v != x) keep.push_back(v);
  return g.induced(keep);
}

inline Graph drop_edge(const Graph& g, Edge d) {
  std::vector<Edge> e;
  for (const auto& x : g.edges())
    if (x != d) e.push_back(x);
  return Graph::from_edges(g.order(), e);
}

inline bool planar(const Graph& g) {
  std::vector<Edge> k33;
  for (Vertex u = 0; u < 3; ++u)
    for (Vertex v = 3; v < 6; ++v) k33.emplace_back(u, v);
  std::vector<Edge> k5;
  for (Vertex u = 0; u < 5; ++u)
    for (Vertex v = u + 1; v < 5; ++v) k5.emplace_back(u, v);
  const std::string bad1 = canonical(Graph::from_edges(5, k5)), bad2 = canonical(Graph::from_edges(6, k33));
  std::set<std::string> seen;
  std::function<bool(const Graph&)> has_minor = [&](const Graph& h) {
    if (h.order() < 5 || h.edge_count() < 9) return false;
    const std::string c = canonical(h);
    if (c == bad1 || c == bad2) return true;
    if (!seen.insert(c).second) return false;
    for (const auto& e : h.edges()) {
      if (has_minor(drop_edge(h, e))) return true;
      if (has_minor(contract(h, e.first, e.second))) return true;
    }
    for (Vertex v = 0; v < h.order(); ++v)
      if (has_minor(drop_vertex(h, v))) return true;
    return false;
  };
  return !has_minor(g);
}

// Laplace expansion along the first row.
inline mpq_class cofactor_determinant(const std::vector<std::vector<mpq_class>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  mpq_class det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<mpq_class>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<mpq_class> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[i][c]);
      minor.push_back(std::move(row));
    }
    const mpq_class term = m[0][j] * cofactor_determinant(minor);
    det += j % 2 == 0 ? term : mpq_class(-term);
  }
  return det;
}

// Rank as the largest non-vanishing square minor (small matrices only).
inline std::size_t minor_rank(const std::vector<std::vector<mpq_class>>& m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t r = std::min(rows, cols); r > 0; --r) {
    std::vector<bool> rsel(rows, false), csel(cols, false);
    std::fill(rsel.begin(), rsel.begin() + r, true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + r, true);
      do {
        std::vector<std::vector<mpq_class>> sub;
        for (std::size_t i = 0; i < rows; ++i) {
          if (!rsel[i]) continue;
          std::vector<mpq_class> row;
          for (std::size_t j = 0; j < cols; ++j)
            if (csel[j]) row.push_back(m[i][j]);
          sub.push_back(std::move(row));
        }
        if (cofactor_determinant(sub) != 0) return r;
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
  }
  return 0;
}

// ---- generators ------------------------------------------------------------

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

inline Graph random_sized(std::mt19937_64& rng, std::size_t min_n, std::size_t max_n) {
  std::uniform_int_distribution<std::size_t> size(min_n, max_n);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  const std::size_t n = size(rng);
  return random_graph(rng, n, density(rng));
}

inline Graph relabel(const Graph& g, std::mt19937_64& rng) {
  std::vector<Vertex> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  std::vector<Edge> e;
  for (const auto& [u, v] : g.edges()) e.emplace_back(p[u], p[v]);
  return Graph::from_edges(g.order(), e);
}

inline Graph random_connected(std::mt19937_64& rng, std::size_t n, double p) {
  while (true) {
    Graph g = random_graph(rng, n, p);
    if (connected(g)) return g;
  }
}

}  // namespace oracle

#endif  // HOMCOUNT_TESTS_ORACLE_HPP
