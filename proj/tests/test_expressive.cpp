#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "homcount/enumerate.hpp"
#include "homcount/errors.hpp"
#include "homcount/expressive.hpp"
#include "oracle.hpp"

using namespace homcount;

namespace {

std::vector<std::vector<mpq_class>> oracle_matrix(std::span<const EnumerationIndex> rows,
                                                  std::span<const EnumerationIndex> cols) {
  std::vector<std::vector<mpq_class>> m;
  for (auto i : rows) {
    std::vector<mpq_class> row;
    for (auto j : cols) row.emplace_back(oracle::count(oracle::Kind::emb, connected_graph(i), connected_graph(j)));
    m.push_back(std::move(row));
  }
  return m;
}

}  // namespace

TEST_CASE("displayed matrices") {
  const std::vector<EnumerationIndex> r2{1, 2}, c2{2, 3}, r3{1, 2, 3}, c3{2, 3, 4};
  CHECK(emb_matrix(r2, c2).to_string() == "((2,3),(2,4))");
  CHECK(emb_matrix(r3, c3).to_string() == "((2,3,3),(2,4,6),(0,2,6))");
}

TEST_CASE("expressive flags") {
  ExpressiveLedger ledger;
  CHECK(ledger.is_expressive(1));
  CHECK(ledger.is_expressive(2));
  CHECK(ledger.is_expressive(3));
  CHECK(!ledger.is_expressive(4));
  CHECK(ledger.next_expressive_after(1) == 2);
  CHECK(ledger.next_expressive_after(3) == 5);
  const auto s = ledger.next_expressive_after(5);
  CHECK(ledger.is_expressive(s));
}

TEST_CASE("property: incremental test matches full rank of an oracle-built matrix") {
  // Independent route: matrix entries by brute force, rank by minors.
  ExpressiveLedger ledger;
  for (EnumerationIndex t = 2; t <= 10; ++t) {
    std::vector<EnumerationIndex> rows{1}, cols = ledger.expressive_below(t);
    rows.insert(rows.end(), cols.begin(), cols.end());
    cols.push_back(t);
    const auto m = oracle_matrix(rows, cols);
    CHECK((oracle::minor_rank(m) == rows.size()) == ledger.is_expressive(t));
  }
}

TEST_CASE("square submatrices over expressive indices are upper triangular with positive diagonal") {
  ExpressiveLedger ledger;
  const auto idx = ledger.expressive_below(connected_count_upto(5) + 1);
  const auto m = emb_matrix(idx, idx);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    CHECK(m.at(i, i) > 0);
    for (std::size_t j = 0; j < i; ++j) CHECK(m.at(i, j) == 0);
  }
}

TEST_CASE("dependency coefficients annihilate every row, including K1") {
  ExpressiveLedger ledger;
  for (EnumerationIndex s = 4; s <= connected_count_upto(5); ++s) {
    if (ledger.is_expressive(s)) {
      CHECK_THROWS_AS(dependency_coefficients(s, ledger), Error);
      continue;
    }
    const Coefficients c = dependency_coefficients(s, ledger);
    REQUIRE(c.indices.back() == s);
    CHECK(c.p.back() != 0);
    std::vector<EnumerationIndex> rows{1};
    for (auto j : ledger.expressive_below(s)) rows.push_back(j);
    for (auto i : rows) {
      mpz_class sum = 0;
      for (std::size_t k = 0; k < c.indices.size(); ++k)
        sum += c.p[k] * oracle::emb_search(connected_graph(i), connected_graph(c.indices[k]));
      CHECK(sum == 0);
    }
  }
}

TEST_CASE("case-1 coefficients") {
  ExpressiveLedger ledger;
  const Coefficients c3 = case1_coefficients(3, ledger);
  REQUIRE(c3.p.size() == 2);
  // 2 p_2 + 4 p_3 = 0, so p is a multiple of (2, -1).
  CHECK(c3.p[0] == -2 * c3.p[1]);
  const Coefficients c2 = case1_coefficients(2, ledger);
  CHECK(c2.p.size() == 1);
  CHECK(c2.p[0] != 0);
  for (EnumerationIndex s = 2; s <= connected_count_upto(5); ++s) {
    if (!ledger.is_expressive(s)) continue;
    const Coefficients c = case1_coefficients(s, ledger);
    mpz_class k1_row = 0;
    for (std::size_t k = 0; k < c.indices.size(); ++k)
      k1_row += c.p[k] * static_cast<unsigned long>(connected_graph(c.indices[k]).order());
    CHECK(k1_row != 0);
    for (std::size_t r = 0; r + 1 < c.indices.size(); ++r) {
      mpz_class sum = 0;
      for (std::size_t k = 0; k < c.indices.size(); ++k)
        sum += c.p[k] * oracle::emb_search(connected_graph(c.indices[r]), connected_graph(c.indices[k]));
      CHECK(sum == 0);
    }
  }
}

TEST_CASE("ledger budget and cache file") {
  ExpressiveLedger small(6);
  CHECK_THROWS_AS(small.next_expressive_after(5), BudgetError);

  const auto path = (std::filesystem::temp_directory_path() / "homcount_ledger_test.json").string();
  ExpressiveLedger a;
  a.extend_to(30);
  a.save(path);
  ExpressiveLedger b;
  CHECK(b.load(path));
  CHECK(b.checked_upto() == 30);
  CHECK(b.to_json() == a.to_json());
  CHECK(b.next_expressive_after(11) == a.next_expressive_after(11));
  std::remove(path.c_str());
  ExpressiveLedger c;
  CHECK(!c.load(path));
}
