#include "homcount/forge.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "homcount/canonical.hpp"
#include "homcount/enumerate.hpp"
#include "homcount/errors.hpp"
#include "homcount/graph6.hpp"
#include "homcount/parallel.hpp"
#include "homcount/structure.hpp"

namespace homcount {

namespace {

using Pair = std::pair<GraphSum, GraphSum>;

GraphSum single(const Graph& g, const mpz_class& copies = 1) {
  GraphSum s;
  s.add(g, copies);
  return s;
}

void require_connected(std::span<const Graph> family) {
  if (family.empty()) throw std::invalid_argument("forge needs a non-empty family");
  for (const auto& f : family)
    if (!f.is_connected()) throw std::invalid_argument("forge families must consist of connected graphs: " + to_graph6(f));
}

// One representative per isomorphism type, in enumeration order.
std::vector<Graph> distinct_sorted(std::span<const Graph> family) {
  std::vector<std::pair<CanonicalForm, Graph>> keyed;
  for (const auto& f : family) keyed.emplace_back(canonical_form(f), f);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.second.order() != b.second.order()) return a.second.order() < b.second.order();
    if (a.second.edge_count() != b.second.edge_count()) return a.second.edge_count() < b.second.edge_count();
    return a.first < b.first;
  });
  keyed.erase(std::unique(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  std::vector<Graph> out;
  for (auto& [form, g] : keyed) out.push_back(std::move(g));
  return out;
}

bool in_class(const GraphSum& g, ForgeProperty property, std::size_t colors) {
  switch (property) {
    case ForgeProperty::no_isolated_vertex: return !g.has_isolated_vertex();
    case ForgeProperty::planar: return g.is_planar();
    case ForgeProperty::colorable: return g.is_k_colorable(colors);
  }
  return false;
}

bool graph_in_class(const Graph& g, ForgeProperty property, std::size_t colors) {
  switch (property) {
    case ForgeProperty::no_isolated_vertex: return isolated_vertex_count(g) == 0;
    case ForgeProperty::planar: return is_planar(g);
    case ForgeProperty::colorable: return is_k_colorable(g, colors);
  }
  return false;
}

Witness finish(Pair pair, std::span<const Graph> family, ForgeProperty property, std::size_t colors) {
  Witness w;
  w.g = std::move(pair.first);
  w.h = std::move(pair.second);
  w.family.assign(family.begin(), family.end());
  w.property = property;
  w.colors = colors;
  verify_witness(w);
  return w;
}

// ---- isolated vertices -----------------------------------------------------

// Splits Σ p_j F_j into the positive part and the negated negative part.
Pair split_combination(const Coefficients& c) {
  Pair out;
  for (std::size_t k = 0; k < c.indices.size(); ++k) {
    if (c.p[k] > 0) out.first.add(connected_graph(c.indices[k]), c.p[k]);
    if (c.p[k] < 0) out.second.add(connected_graph(c.indices[k]), -c.p[k]);
  }
  return out;
}

Pair isolated_recursive(std::vector<EnumerationIndex> k, ExpressiveLedger& ledger) {
  if (k.size() == 1) {
    if (k.front() == 1) return {single(Graph(), 2), single(path(2))};
    GraphSum g;
    g.add(Graph()).add(path(2));
    return {g, single(path(2))};
  }

  std::optional<EnumerationIndex> non_expressive;
  for (EnumerationIndex i : k)
    if (!ledger.is_expressive(i)) {
      non_expressive = i;
      break;
    }

  if (!non_expressive) {
    // Case 1: balance an expressive graph beyond K, then pad with isolated vertices.
    const EnumerationIndex s = ledger.next_expressive_after(k.back());
    auto [g0, h0] = split_combination(case1_coefficients(s, ledger));
    mpz_class d = h0.order() - g0.order();
    if (d > 0) {
      g0.add(Graph(), d);
      return {g0, h0};
    }
    h0.add(Graph(), -d);
    return {h0, g0};
  }

  // Case 2: drop the least non-expressive graph, recurse, then repair its count.
  const EnumerationIndex s = *non_expressive;
  std::vector<EnumerationIndex> rest;
  for (EnumerationIndex i : k)
    if (i != s) rest.push_back(i);
  auto [g0, h0] = isolated_recursive(rest, ledger);
  const Graph& fs = connected_graph(s);
  const CountValue g = emb(fs, g0), h = emb(fs, h0);
  if (g == h) return {g0, h0};

  Coefficients c = dependency_coefficients(s, ledger);
  if (c.p.back() < 0)
    for (auto& x : c.p) x = -x;
  auto [g1, h1] = split_combination(c);
  const CountValue e = emb(fs, g1);

  GraphSum g_out = g0.scaled(e), h_out = h0.scaled(e);
  if (g > h) {
    g_out.add(h1, g - h);
    h_out.add(g1, g - h);
  } else {
    g_out.add(g1, h - g);
    h_out.add(h1, h - g);
  }
  return {g_out, h_out};
}

// ---- planarity and colourability --------------------------------------------

template <class Base>
Pair balance_recursive(std::vector<Graph> family, ForgeProperty property, std::size_t colors, Base&& base) {
  std::optional<std::size_t> chosen;
  for (std::size_t i = 0; i < family.size() && !chosen; ++i)
    if (graph_in_class(family[i], property, colors)) chosen = i;  // family is sorted, so this is minimal
  if (family.size() == 1 || !chosen) return base(family, chosen.has_value());

  const Graph f = family[*chosen];
  family.erase(family.begin() + static_cast<std::ptrdiff_t>(*chosen));
  auto [g0, h0] = balance_recursive(std::move(family), property, colors, base);
  const CountValue g = emb(f, g0), h = emb(f, h0);
  if (g == h) return {g0, h0};
  const CountValue a = aut(f);
  GraphSum g_out = g0.scaled(a), h_out = h0.scaled(a);
  if (g < h)
    g_out.add(f, h - g);
  else
    h_out.add(f, g - h);
  return {g_out, h_out};
}

std::size_t max_order(std::span<const Graph> family) {
  std::size_t n = 0;
  for (const auto& f : family) n = std::max(n, f.order());
  return n;
}

// Whether odd girth exceeds `bound`; bipartite graphs have none.
bool odd_girth_exceeds(const Graph& g, std::size_t bound) {
  const auto og = odd_girth(g);
  return !og || *og > bound;
}

}  // namespace

std::string_view property_name(ForgeProperty p) {
  switch (p) {
    case ForgeProperty::no_isolated_vertex: return "no-isolated-vertex";
    case ForgeProperty::planar: return "planar";
    case ForgeProperty::colorable: return "colorable";
  }
  return "?";
}

void verify_witness(Witness& w, unsigned jobs) {
  if (w.g.empty() || w.h.empty()) throw VerificationError("witness graph is empty");
  w.g_counts.assign(w.family.size(), 0);
  w.h_counts.assign(w.family.size(), 0);
  parallel_for(w.family.size(), jobs, [&](std::size_t i) {
    w.g_counts[i] = count(w.kind, w.family[i], w.g);
    w.h_counts[i] = count(w.kind, w.family[i], w.h);
  });
  for (std::size_t i = 0; i < w.family.size(); ++i)
    if (w.g_counts[i] != w.h_counts[i])
      throw VerificationError("witness counts differ on " + to_graph6(w.family[i]) + ": " + w.g_counts[i].get_str() +
                              " vs " + w.h_counts[i].get_str());
  w.g_in_class = in_class(w.g, w.property, w.colors);
  w.h_in_class = in_class(w.h, w.property, w.colors);
  const bool expected_g = w.property != ForgeProperty::no_isolated_vertex;
  if (w.g_in_class != expected_g || w.h_in_class == expected_g)
    throw VerificationError(std::string("witness does not separate the class ") + std::string(property_name(w.property)));
}

std::vector<Graph> connected_reduction(std::span<const Graph> k) {
  if (k.empty()) throw std::invalid_argument("empty family");
  return enumerate_connected(max_order(k));
}

Witness forge_isolated_vertex(std::span<const Graph> family, ExpressiveLedger& ledger) {
  require_connected(family);
  std::vector<EnumerationIndex> k;
  for (const auto& f : family) k.push_back(connected_index_of(f));
  std::sort(k.begin(), k.end());
  k.erase(std::unique(k.begin(), k.end()), k.end());
  return finish(isolated_recursive(k, ledger), family, ForgeProperty::no_isolated_vertex, 0);
}

Witness forge_planarity(std::span<const Graph> family) {
  require_connected(family);
  const std::size_t k = max_order(family) + 4;
  auto base = [&](const std::vector<Graph>& rest, bool has_planar) -> Pair {
    if (has_planar) {
      const Graph& f = rest.front();
      const Graph kk = clique(f.order() + 4);
      return {single(f, emb(f, kk)), single(kk, aut(f))};
    }
    return {single(Graph()), single(subdivide_edges(clique(k), 1 + max_order(rest)))};
  };
  return finish(balance_recursive(distinct_sorted(family), ForgeProperty::planar, 0, base), family,
                ForgeProperty::planar, 0);
}

Witness forge_colorability(std::span<const Graph> family, std::size_t colors, const ProviderBudget& budget) {
  require_connected(family);
  if (colors < 2) throw std::invalid_argument("colourability forge needs at least 2 colours");
  auto base = [&](const std::vector<Graph>& rest, bool has_colorable) -> Pair {
    if (has_colorable) {
      const Graph& f = rest.front();
      const Graph kk = clique(colors + f.order());
      return {single(f, emb(f, kk)), single(kk, aut(f))};
    }
    std::size_t m = 0;
    for (const auto& f : rest) m = std::max(m, *odd_girth(f));
    return {single(Graph()), single(high_chromatic_provider(m, colors, budget))};
  };
  return finish(balance_recursive(distinct_sorted(family), ForgeProperty::colorable, colors, base), family,
                ForgeProperty::colorable, colors);
}

Graph high_chromatic_provider(std::size_t min_odd_girth, std::size_t min_chromatic, const ProviderBudget& budget) {
  auto qualifies = [&](const Graph& g) {
    return odd_girth_exceeds(g, min_odd_girth) && !is_k_colorable(g, min_chromatic);
  };

  // Iterated Mycielskians keep odd girth at most 5 after the first step, so a
  // chain is abandoned as soon as its odd girth drops to the bound.
  std::vector<Graph> seeds{path(2)};
  for (std::size_t len = 5; len <= budget.max_vertices; len += 2) seeds.push_back(cycle(len));
  for (const auto& seed : seeds) {
    Graph g = seed;
    while (g.order() <= budget.max_vertices && odd_girth_exceeds(g, min_odd_girth)) {
      if (qualifies(g)) return g;
      g = mycielskian(g);
    }
  }

  // Generalized Mycielskians of odd cycles: μ_r(C_{2q+1}) has odd girth
  // min(2q+1, 2r+3) and one more colour than its base. Iterate on the result
  // for higher chromatic numbers.
  std::size_t q = 1;
  while (2 * q + 1 <= min_odd_girth) ++q;
  std::size_t r = 1;
  while (2 * r + 3 <= min_odd_girth) ++r;
  Graph g = cycle(2 * q + 1);
  while (true) {
    const std::size_t next_order = g.order() * (r + 1) + 1;
    if (next_order > budget.max_vertices) break;
    g = generalized_mycielskian(g, r);
    if (!odd_girth_exceeds(g, min_odd_girth)) break;
    if (qualifies(g)) return g;
  }
  throw BudgetError("provider budget exhausted: no graph with odd girth > " + std::to_string(min_odd_girth) +
                    " and chromatic number > " + std::to_string(min_chromatic) + " within " +
                    std::to_string(budget.max_vertices) + " vertices");
}

CycleTriple forge_two_adaptive_triple(std::size_t k, unsigned jobs) {
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  CycleTriple t;
  t.k = k;
  t.ell = 1;
  while (4 * t.ell + 2 <= k) ++t.ell;
  t.g = cycle(12 * t.ell + 6);
  t.h1 = replicate(3, cycle(4 * t.ell + 2));
  t.h2 = replicate(2, cycle(6 * t.ell + 3));
  t.verified_upto = std::min(k, kMaxEnumerationOrder);
  const auto family = enumerate_graphs_upto(t.verified_upto);
  parallel_for(family.size(), jobs, [&](std::size_t i) {
    const CountValue a = hom(family[i], t.g);
    if (a != hom(family[i], t.h1) || a != hom(family[i], t.h2))
      throw VerificationError("cycle triple separated by " + to_graph6(family[i]));
  });
  return t;
}

}  // namespace homcount
