#include <doctest.h>

#include <algorithm>

#include "homcount/canonical.hpp"
#include "homcount/count.hpp"
#include "homcount/enumerate.hpp"
#include "oracle.hpp"

using namespace homcount;

TEST_CASE("counts match the mask-dedup oracle") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto reps = oracle::graphs_by_mask(n);
    const auto& gs = enumerate_graphs(n);
    REQUIRE(gs.size() == reps.size());
    const auto connected = std::count_if(reps.begin(), reps.end(), [](const Graph& g) { return oracle::connected(g); });
    CHECK(connected_count_upto(n) - (n > 1 ? connected_count_upto(n - 1) : 0) == static_cast<std::size_t>(connected));
    for (const auto& r : reps)
      CHECK(std::any_of(gs.begin(), gs.end(), [&](const Graph& g) { return oracle::isomorphic(g, r); }));
  }
}

TEST_CASE("larger counts are consistent with connectivity filtering") {
  const auto& g7 = enumerate_graphs(7);
  CHECK(mpz_class(static_cast<unsigned long>(g7.size())) == oracle::graph_count_burnside(7));
  CHECK(mpz_class(static_cast<unsigned long>(enumerate_graphs(8).size())) == oracle::graph_count_burnside(8));
  const auto c7 = std::count_if(g7.begin(), g7.end(), [](const Graph& g) { return oracle::connected(g); });
  CHECK(connected_count_upto(7) - connected_count_upto(6) == static_cast<std::size_t>(c7));
}

TEST_CASE("enumeration order is (|V|, |E|, canonical form) and duplicate-free") {
  const auto all = enumerate_graphs_upto(6);
  for (std::size_t i = 1; i < all.size(); ++i) {
    const Graph& a = all[i - 1];
    const Graph& b = all[i];
    CHECK(enumeration_less(a, b));
    CHECK((a.order() < b.order() || (a.order() == b.order() && a.edge_count() <= b.edge_count())));
  }
  CHECK(enumerate_graphs(1).size() == 1);
}

TEST_CASE("connected enumeration") {
  const auto pre = enumerate_connected_prefix(4);
  REQUIRE(pre.size() == 4);
  CHECK(pre[0] == Graph());
  CHECK(is_isomorphic(pre[1], path(2)));
  CHECK(is_isomorphic(pre[2], path(3)));
  CHECK(is_isomorphic(pre[3], clique(3)));
  CHECK(connected_index_of(Graph()) == 1);
  CHECK(connected_index_of(clique(3)) == 4);
  CHECK(enumerate_connected(4).size() == 10);
  for (EnumerationIndex i = 1; i <= connected_count_upto(6); ++i) CHECK(connected_index_of(connected_graph(i)) == i);
  CHECK_THROWS(connected_index_of(edgeless(2)));
}
