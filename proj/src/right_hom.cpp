#include "homcount/right_hom.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "homcount/canonical.hpp"
#include "homcount/enumerate.hpp"
#include "homcount/errors.hpp"
#include "homcount/graph6.hpp"
#include "homcount/structure.hpp"

namespace homcount {

namespace {

mpz_class power(std::size_t base, std::size_t exponent) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exponent);
  return r;
}

std::size_t max_order(std::span<const Graph> family) {
  std::size_t m = 0;
  for (const auto& f : family) m = std::max(m, f.order());
  return m;
}

// Graphs on 2..max_vertices vertices without isolated vertices, in enumeration order.
std::vector<Graph> no_isolated_candidates(std::size_t max_vertices) {
  std::vector<Graph> out;
  for (std::size_t n = 2; n <= max_vertices; ++n)
    for (const auto& h : enumerate_graphs(n))
      if (isolated_vertex_count(h) == 0) out.push_back(h);
  return out;
}

}  // namespace

void for_each_hom(const Graph& g, const Graph& f, const std::function<bool(std::span<const Vertex>)>& visit) {
  const std::size_t n = g.order();
  // Components one after another, each in BFS order, so every vertex but a
  // component root has an earlier neighbour.
  std::vector<Vertex> order;
  std::vector<int> anchor(n, -1);
  std::vector<bool> seen(n, false);
  for (const auto& comp : g.components()) {
    const std::size_t start = order.size();
    order.push_back(comp.front());
    seen[comp.front()] = true;
    for (std::size_t i = start; i < order.size(); ++i)
      for (Vertex w : g.neighbors(order[i]))
        if (!seen[w]) {
          seen[w] = true;
          anchor[w] = static_cast<int>(order[i]);
          order.push_back(w);
        }
  }
  std::vector<Vertex> image(n, 0);
  std::vector<bool> placed(n, false);
  bool stop = false;
  auto fits = [&](Vertex v, Vertex x) {
    for (Vertex w : g.neighbors(v))
      if (placed[w] && !f.adjacent(image[w], x)) return false;
    return true;
  };
  std::function<void(std::size_t)> place = [&](std::size_t depth) {
    if (stop) return;
    if (depth == n) {
      stop = !visit(image);
      return;
    }
    const Vertex v = order[depth];
    auto attempt = [&](Vertex x) {
      if (!fits(v, x)) return;
      image[v] = x;
      placed[v] = true;
      place(depth + 1);
      placed[v] = false;
    };
    if (anchor[v] >= 0) {
      for (Vertex x : f.neighbors(image[static_cast<Vertex>(anchor[v])])) {
        attempt(x);
        if (stop) return;
      }
    } else {
      for (Vertex x = 0; x < f.order() && !stop; ++x) attempt(x);
    }
  };
  place(0);
}

Quotient quotient_graph(const Graph& g, std::span<const Graph> family, std::size_t max_maps) {
  if (family.empty()) throw std::invalid_argument("quotient needs a non-empty family");
  Quotient q;
  for (const auto& f : family) q.counts.push_back(hom(g, f));
  const bool all_zero = std::all_of(q.counts.begin(), q.counts.end(), [](const CountValue& c) { return c == 0; });

  if (family.size() == 1 && family.front().order() == 1 && g.edge_count() > 0) {
    q.regime = Quotient::Regime::single_vertex_family;
    q.graph = path(2);
  } else if (all_zero) {
    q.regime = Quotient::Regime::all_zero;
    q.graph = clique(1 + max_order(family));
  } else {
    q.regime = Quotient::Regime::general;
    const std::size_t n = g.order();
    std::vector<std::size_t> label(n, 0);
    std::size_t classes = 1;
    for (const auto& f : family) {
      for_each_hom(g, f, [&](std::span<const Vertex> image) {
        if (++q.maps_enumerated > max_maps)
          throw BudgetError("quotient needs more than " + std::to_string(max_maps) + " homomorphisms");
        if (classes == n) return false;  // already discrete
        std::map<std::pair<std::size_t, Vertex>, std::size_t> refined;
        for (std::size_t v = 0; v < n; ++v) {
          auto [it, fresh] = refined.try_emplace({label[v], image[v]}, refined.size());
          label[v] = it->second;
        }
        classes = refined.size();
        return true;
      });
      if (classes == n) break;
    }
    // Vertex numbering of the quotient follows the smallest member of each class.
    std::vector<int> renumber(n, -1);
    std::size_t next = 0;
    std::vector<std::size_t> class_of(n);
    for (std::size_t v = 0; v < n; ++v) {
      if (renumber[label[v]] < 0) renumber[label[v]] = static_cast<int>(next++);
      class_of[v] = static_cast<std::size_t>(renumber[label[v]]);
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
      if (class_of[u] != class_of[v])
        edges.emplace_back(static_cast<Vertex>(class_of[u]), static_cast<Vertex>(class_of[v]));
    q.graph = Graph::from_edges(next, edges);
    mpz_class bound = 1;
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (!q.counts[i].fits_ulong_p()) throw BudgetError("size bound exponent too large");
      bound *= power(family[i].order(), q.counts[i].get_ui());
    }
    q.size_bound = bound;
    if (bound < static_cast<unsigned long>(q.graph.order()))
      throw VerificationError("quotient exceeds the product size bound");
  }
  for (std::size_t i = 0; i < family.size(); ++i)
    if (hom(q.graph, family[i]) != q.counts[i])
      throw VerificationError("quotient changes the right count on " + to_graph6(family[i]));
  return q;
}

RightFamily bounded_edge_family(std::size_t k, std::optional<std::size_t> reduced_cap) {
  if (k == 0) throw std::invalid_argument("edge bound must be at least 1");
  RightFamily r;
  r.k = k;
  const std::size_t exact_cap = 8 * k * k * k;
  r.cap = exact_cap;
  if (reduced_cap && *reduced_cap < exact_cap) r.cap = *reduced_cap;
  if (r.cap > kMaxEnumerationOrder) r.cap = kMaxEnumerationOrder;
  if (r.cap < 2) throw std::invalid_argument("right family cap must be at least 2");
  r.reduced = r.cap < exact_cap;
  if (r.reduced)
    r.warning = "reduced right family: graphs with at most " + std::to_string(r.cap) + " vertices instead of " +
                std::to_string(exact_cap) + "; membership answers are not guaranteed";
  r.graphs = enumerate_graphs_upto(r.cap);
  r.base_size = r.graphs.size();
  for (std::size_t i = 0; i < r.base_size; ++i) r.graphs.push_back(disjoint_union(r.graphs[i], Graph()));
  return r;
}

std::size_t isolated_from_ratio(const CountValue& on_f0, const CountValue& on_f0_plus_k1, std::size_t f0_order) {
  if (on_f0 <= 0) throw std::invalid_argument("ratio needs a positive count on F_0");
  mpz_class lhs = on_f0, rhs = on_f0_plus_k1;
  for (std::size_t i = 0;; ++i) {
    if (lhs == rhs) return i;
    if (lhs > rhs) throw Error("counts are not consistent with any number of isolated vertices");
    lhs *= static_cast<unsigned long>(f0_order + 1);
    rhs *= static_cast<unsigned long>(f0_order);
  }
}

RightDecision right_membership(const std::function<bool(const Graph&)>& predicate, const RightFamily& family,
                               HomOracle& oracle) {
  if (oracle.orientation() != Orientation::right) throw Error("right membership reads right hom counts");
  const std::size_t before = oracle.query_count();
  std::vector<std::optional<CountValue>> seen(family.graphs.size());
  auto value = [&](std::size_t i) -> const CountValue& {
    if (!seen[i]) seen[i] = oracle.query(family.graphs[i]);
    return *seen[i];
  };
  std::unordered_map<CanonicalForm, std::size_t, CanonicalFormHash> index;
  for (std::size_t i = 0; i < family.base_size; ++i) index.emplace(canonical_form(family.graphs[i]), i);
  auto position = [&](const Graph& f) { return index.at(canonical_form(f)); };

  RightDecision d;
  auto finish = [&] {
    d.queries = oracle.query_count() - before;
    return d;
  };

  if (value(position(Graph())) != 0) {
    // hom(G, K_1) = 1 exactly for edgeless G, and then hom(G, 2K_1) = 2^n.
    d.edgeless = true;
    const CountValue& two_power = value(position(edgeless(2)));
    const std::size_t n = mpz_sizeinbase(two_power.get_mpz_t(), 2) - 1;
    if (two_power != power(2, n)) throw Error("right counts are inconsistent for an edgeless graph");
    d.isolated = n;
    d.member = predicate(edgeless(n));
    return finish();
  }

  std::optional<std::size_t> f0;
  for (std::size_t c = 2; c <= family.cap && !f0; ++c)
    if (value(position(clique(c))) != 0) f0 = position(clique(c));
  if (!f0) return finish();  // chromatic number above the cap: too many vertices for the class

  d.isolated = isolated_from_ratio(value(*f0), value(family.base_size + *f0), family.graphs[*f0].order());
  if (2 * family.k > kMaxEnumerationOrder) throw BudgetError("candidate graphs on more than 8 vertices");

  for (const auto& h : no_isolated_candidates(2 * family.k)) {
    bool same = true;
    for (std::size_t i = 0; i < family.base_size && same; ++i) {
      const Graph& f = family.graphs[i];
      same = value(i) == hom(h, f) * power(f.order(), d.isolated);
    }
    if (same) {
      d.without_isolated = h;
      const Graph full = d.isolated == 0 ? h : disjoint_union(h, edgeless(d.isolated));
      d.member = predicate(full);
      return finish();
    }
  }
  return finish();
}

RightDecision right_membership(const std::function<bool(const Graph&)>& predicate, std::size_t k, const Graph& g) {
  GraphOracle oracle(g, Orientation::right);
  return right_membership(predicate, bounded_edge_family(k), oracle);
}

PowRightReport powright_inequality_check(const Graph& h, std::size_t k) {
  if (k < 2) throw std::invalid_argument("the inequality chain needs k >= 2");
  PowRightReport r;
  r.k = k;
  const std::size_t big = k * k * k;
  r.k_colorable = hom(h, clique(k)) > 0;
  r.hom_big = hom(h, clique(big));
  r.threshold = power(k, 3 * k);
  r.chain_bound = power(big - k, k * k - 1);
  if (!r.k_colorable) {
    r.holds = true;
  } else {
    r.holds = r.hom_big > r.threshold;
    if (h.order() > big) r.holds = r.holds && r.hom_big >= r.chain_bound && r.chain_bound > r.threshold;
  }
  return r;
}

CountValue powright_small_side_max(std::size_t k) {
  if (k < 1 || k > kMaxEnumerationOrder) throw BudgetError("small side needs graphs on at most 8 vertices");
  const Graph big = clique(k * k * k);
  CountValue best = 0;
  for (const auto& g : enumerate_graphs_upto(k)) best = std::max(best, hom(g, big));
  return best;
}

FailureDemo right_failure_demo(std::size_t s, std::span<const Graph> probes) {
  if (s < 3 || s > 4) throw BudgetError("failure demo is limited to 3 <= s <= 4");
  FailureDemo d;
  d.s = s;
  Graph g0 = path(2);
  for (std::size_t c = 2; c < s; ++c) g0 = mycielskian(g0);
  d.g0 = g0;
  d.chromatic = chromatic_number(g0);
  d.g0_triangle_free = !has_triangle(g0);
  const Graph ks = clique(s);
  d.clique_has_triangle = has_triangle(ks);
  if (d.chromatic != s || !d.g0_triangle_free || !d.clique_has_triangle)
    throw VerificationError("failure demo graphs do not have the required properties");
  if (probes.empty())
    d.probes = enumerate_graphs_upto(s - 1);
  else
    d.probes.assign(probes.begin(), probes.end());
  for (const auto& f : d.probes) {
    if (f.order() >= s) throw std::invalid_argument("probe graphs need fewer than s vertices");
    d.g0_counts.push_back(hom(g0, f));
    d.clique_counts.push_back(hom(ks, f));
    if (d.g0_counts.back() != 0 || d.clique_counts.back() != 0)
      throw VerificationError("failure demo: nonzero count on " + to_graph6(f));
  }
  return d;
}

CliqueIsolatedDemo clique_isolated_demo(std::span<const Graph> family) {
  if (family.empty()) throw std::invalid_argument("demo needs a non-empty family");
  CliqueIsolatedDemo d;
  d.m = 1 + max_order(family);
  const Graph km = clique(d.m);
  const Graph km1 = disjoint_union(km, Graph());
  for (const auto& f : family) {
    d.clique_counts.push_back(hom(km, f));
    d.clique_plus_k1_counts.push_back(hom(km1, f));
    if (d.clique_counts.back() != 0 || d.clique_plus_k1_counts.back() != 0)
      throw VerificationError("clique demo: nonzero count on " + to_graph6(f));
  }
  return d;
}

}  // namespace homcount
