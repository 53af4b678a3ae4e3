#include <doctest.h>

#include "homcount/canonical.hpp"
#include "homcount/enumerate.hpp"
#include "homcount/errors.hpp"
#include "homcount/forge.hpp"
#include "homcount/structure.hpp"
#include "oracle.hpp"

using namespace homcount;

namespace {

Graph materialise(const GraphSum& s) {
  auto g = s.to_graph();
  REQUIRE(g.has_value());
  return *g;
}

bool single_part(const GraphSum& s, const Graph& g, const mpz_class& copies) {
  return s.parts().size() == 1 && s.parts()[0].copies == copies && is_isomorphic(s.parts()[0].component, g);
}

}  // namespace

TEST_CASE("connected reduction") {
  const std::vector<Graph> p3{path(3)};
  const auto r = connected_reduction(p3);
  REQUIRE(r.size() == 4);
  CHECK(r[0] == Graph());
  CHECK(is_isomorphic(r[3], clique(3)));
  const std::vector<Graph> k1{Graph()};
  CHECK(connected_reduction(k1).size() == 1);
}

TEST_CASE("isolated-vertex base cases") {
  ExpressiveLedger ledger;
  const std::vector<Graph> k1{Graph()}, p2{path(2)};
  const Witness a = forge_isolated_vertex(k1, ledger);
  CHECK(oracle::isomorphic(materialise(a.g), edgeless(2)));
  CHECK(oracle::isomorphic(materialise(a.h), path(2)));
  const Witness b = forge_isolated_vertex(p2, ledger);
  CHECK(oracle::isomorphic(materialise(b.g), disjoint_union(Graph(), path(2))));
  CHECK(oracle::isomorphic(materialise(b.h), path(2)));
}

TEST_CASE("property: isolated-vertex witnesses recount by search") {
  ExpressiveLedger ledger;
  for (std::size_t len = 1; len <= connected_count_upto(4); ++len) {
    const auto family = enumerate_connected_prefix(len);
    const Witness w = forge_isolated_vertex(family, ledger);
    const Graph g = materialise(w.g), h = materialise(w.h);
    for (const auto& f : family) CHECK(oracle::emb_search(f, g) == oracle::emb_search(f, h));
    CHECK(isolated_vertex_count(g) > 0);
    CHECK(isolated_vertex_count(h) == 0);
  }
  const std::vector<Graph> mixed{Graph(), path(2), path(3)};
  const Witness w = forge_isolated_vertex(mixed, ledger);
  for (const auto& f : mixed) CHECK(oracle::emb_search(f, materialise(w.g)) == oracle::emb_search(f, materialise(w.h)));
}

TEST_CASE("property: connected reduction plus forge gives hom agreement on graphs up to 4 vertices") {
  ExpressiveLedger ledger;
  const auto k = enumerate_graphs_upto(4);
  const Witness w = forge_isolated_vertex(connected_reduction(k), ledger);
  const Graph g = materialise(w.g), h = materialise(w.h);
  for (const auto& f : k) CHECK(oracle::hom_search(f, g) == oracle::hom_search(f, h));
}

TEST_CASE("forge refuses disconnected families") {
  ExpressiveLedger ledger;
  const std::vector<Graph> bad{edgeless(2)};
  CHECK_THROWS(forge_isolated_vertex(bad, ledger));
  CHECK_THROWS(forge_planarity(bad));
}

TEST_CASE("planarity base cases") {
  const std::vector<Graph> p3{path(3)}, k5{clique(5)};
  const Witness a = forge_planarity(p3);
  CHECK(single_part(a.g, path(3), 210));
  CHECK(single_part(a.h, clique(7), 2));
  CHECK(a.g_counts[0] == 420);
  const Witness b = forge_planarity(k5);
  CHECK(single_part(b.g, Graph(), 1));
  REQUIRE(b.h.parts().size() == 1);
  const Graph sub = b.h.parts()[0].component;
  CHECK(sub.order() == 9 + 36 * 5);
  CHECK(sub.edge_count() == 36 * 6);
  CHECK(!is_planar(sub));
  CHECK(b.h.parts()[0].copies == 1);
  CHECK(b.h_counts[0] == 0);
}

TEST_CASE("property: planarity witnesses for pairs of small connected graphs") {
  const auto conn = enumerate_connected(4);
  for (std::size_t a = 0; a < conn.size(); ++a)
    for (std::size_t b = a + 1; b < conn.size(); ++b) {
      const std::vector<Graph> k{conn[a], conn[b]};
      const Witness w = forge_planarity(k);
      CHECK(w.g_in_class);
      CHECK(!w.h_in_class);
      for (std::size_t i = 0; i < k.size(); ++i) CHECK(w.g_counts[i] == w.h_counts[i]);
      // Recount with a different route where the witness is small enough.
      const auto g = w.g.to_graph(400), h = w.h.to_graph(400);
      if (g && h) {
        for (const auto& f : k) CHECK(oracle::emb_search(f, *g) == oracle::emb_search(f, *h));
        CHECK(is_planar(*g));
        CHECK(!is_planar(*h));
      }
    }
}

TEST_CASE("colourability base cases") {
  const std::vector<Graph> p2{path(2)}, k3{clique(3)}, k4{clique(4)};
  const Witness a = forge_colorability(p2, 2);
  CHECK(single_part(a.g, path(2), 12));
  CHECK(single_part(a.h, clique(4), 2));
  const Witness b = forge_colorability(k3, 2);
  CHECK(single_part(b.g, Graph(), 1));
  CHECK(single_part(b.h, cycle(5), 1));
  const Witness c = forge_colorability(k4, 3);
  CHECK(single_part(c.g, Graph(), 1));
  const Graph h = materialise(c.h);
  CHECK(oracle::chromatic(h) == 4);
  CHECK(oracle::triangle_free(h));
  CHECK(is_isomorphic(h, mycielskian(cycle(5))));
  // K3 is 3-colourable, so it takes the clique branch instead.
  const Witness d = forge_colorability(k3, 3);
  CHECK(d.g_in_class);
  CHECK(!d.h_in_class);
}

TEST_CASE("property: colourability witnesses for pairs, l in {2,3}") {
  const auto conn = enumerate_connected(4);
  for (std::size_t colors : {2, 3})
    for (std::size_t a = 0; a < conn.size(); ++a)
      for (std::size_t b = a; b < conn.size(); ++b) {
        std::vector<Graph> k{conn[a]};
        if (b != a) k.push_back(conn[b]);
        const Witness w = forge_colorability(k, colors);
        CHECK(w.g_in_class);
        CHECK(!w.h_in_class);
        const auto g = w.g.to_graph(60), h = w.h.to_graph(60);
        if (g && h && h->order() <= 12) {
          CHECK(oracle::colorable(*g, colors));
          CHECK(!oracle::colorable(*h, colors));
          for (const auto& f : k) CHECK(oracle::emb_search(f, *g) == oracle::emb_search(f, *h));
        }
      }
}

TEST_CASE("high chromatic provider") {
  CHECK(oracle::isomorphic(high_chromatic_provider(3, 2), cycle(5)));
  CHECK(is_isomorphic(high_chromatic_provider(3, 3), mycielskian(cycle(5))));
  CHECK(oracle::isomorphic(high_chromatic_provider(5, 2), cycle(7)));
  CHECK(oracle::chromatic(high_chromatic_provider(3, 3)) == 4);
  const Graph g = high_chromatic_provider(5, 3);
  CHECK(odd_girth(g).value_or(0) > 5);
  CHECK(chromatic_number(g) > 3);
  CHECK_THROWS_AS(high_chromatic_provider(9, 5, ProviderBudget{30}), BudgetError);
}

TEST_CASE("two-adaptive cycle triple") {
  const CycleTriple t = forge_two_adaptive_triple(5);
  CHECK(t.ell == 1);
  CHECK(is_isomorphic(t.g, cycle(18)));
  CHECK(is_isomorphic(t.h1, replicate(3, cycle(6))));
  CHECK(is_isomorphic(t.h2, replicate(2, cycle(9))));
  const auto fam = enumerate_graphs_upto(5);
  CHECK(fam.size() == 52);
  for (const auto& f : fam) {
    const auto c = oracle::hom_search(f, t.g);
    CHECK(c == oracle::hom_search(f, t.h1));
    CHECK(c == oracle::hom_search(f, t.h2));
  }
  CHECK(forge_two_adaptive_triple(6).ell == 2);
}
