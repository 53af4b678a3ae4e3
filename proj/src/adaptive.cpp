#include "homcount/adaptive.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "homcount/enumerate.hpp"
#include "homcount/errors.hpp"
#include "homcount/graph6.hpp"
#include "homcount/linalg.hpp"
#include "homcount/structure.hpp"

namespace homcount {

namespace {

constexpr std::size_t kMaxRadixBits = std::size_t{1} << 26;

mpz_class power(std::size_t base, std::size_t exponent) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exponent);
  return r;
}

std::size_t to_size(const CountValue& v, const char* what) {
  if (v < 0 || !v.fits_ulong_p()) throw BudgetError(std::string(what) + " out of range: " + v.get_str());
  return v.get_ui();
}

const CountValue& plain(const Answer& a) {
  if (const auto* v = std::get_if<CountValue>(&a)) return *v;
  throw Error("expected a plain count answer");
}

mpz_class radix_for(std::size_t n, const mpz_class& vertices, RadixRule rule) {
  if (n <= 1) return 1;
  const double bits = vertices.get_d() * std::log2(static_cast<double>(n));
  if (bits > static_cast<double>(kMaxRadixBits) || !vertices.fits_ulong_p())
    throw BudgetError("encoding radix exceeds " + std::to_string(kMaxRadixBits) + " bits");
  const mpz_class r = power(n, vertices.get_ui());
  if (rule == RadixRule::vertex_power) return r;
  return static_cast<unsigned long>(mpz_sizeinbase(r.get_mpz_t(), 2));
}

}  // namespace

std::string describe(const Query& q) {
  if (const auto* g = std::get_if<Graph>(&q)) return to_graph6(*g);
  return std::get<GraphSum>(q).describe();
}

std::string describe(const Answer& a) {
  if (const auto* v = std::get_if<CountValue>(&a)) return v->get_str();
  return std::get<FactoredCount>(a).to_string();
}

// ---- oracles ---------------------------------------------------------------

CountValue HomOracle::query(const Graph& f, MorphismKind kind) {
  CountValue a = answer(kind, f);
  log_.push_back({kind, to_graph6(f), a.get_str()});
  return a;
}

FactoredCount HomOracle::query(const GraphSum& f) {
  if (orientation_ != Orientation::left) throw Error("sum queries need the left orientation");
  FactoredCount a = answer_sum(f);
  log_.push_back({MorphismKind::hom, f.describe(), a.to_string()});
  return a;
}

Answer HomOracle::query(const Query& q) {
  if (const auto* g = std::get_if<Graph>(&q)) return query(*g);
  return query(std::get<GraphSum>(q));
}

CountValue GraphOracle::answer(MorphismKind kind, const Graph& f) {
  return orientation() == Orientation::left ? count(kind, f, hidden_) : count(kind, hidden_, f);
}

FactoredCount GraphOracle::answer_sum(const GraphSum& f) { return hom_factored(f, hidden_); }

Transcript run_strategy(const AdaptiveStrategy& s, HomOracle& oracle) {
  if (s.depth == 0) throw std::invalid_argument("strategy depth must be positive");
  Transcript t;
  Query q = s.start;
  for (std::size_t i = 0; i < s.depth; ++i) {
    if (const auto* g = std::get_if<Graph>(&q))
      t.answers.emplace_back(oracle.query(*g, s.kind));
    else
      t.answers.emplace_back(oracle.query(std::get<GraphSum>(q)));
    t.queries.push_back(std::move(q));
    if (i + 1 < s.depth) q = s.next(t.answers);
  }
  t.decision = s.accept(t.answers);
  return t;
}

// ---- stars -----------------------------------------------------------------

std::vector<std::size_t> histogram_from_star_vector(std::span<const CountValue> values) {
  const std::size_t n = values.size();
  if (n == 0) throw Error("inconsistent star vector: empty");
  RationalMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) m.at(j, i) = power(i, j);  // 0^0 = 1
  std::vector<Rational> rhs(values.begin(), values.end());
  const SolveResult r = solve(m, rhs);
  if (r.status != SolveStatus::unique) throw Error("inconsistent star vector");
  std::vector<std::size_t> d(n);
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Rational& x = r.x[i];
    if (x.get_den() != 1 || x < 0 || !x.get_num().fits_ulong_p()) throw Error("inconsistent star vector");
    d[i] = x.get_num().get_ui();
    total += d[i];
  }
  if (total != n) throw Error("inconsistent star vector");
  return d;
}

std::size_t star_exponent_unrefined(std::size_t n) {
  if (n < 2) throw std::invalid_argument("star exponent needs n >= 2");
  const mpz_class x = power(n, n) - 1;
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

std::size_t star_exponent(std::size_t n) {
  std::size_t l = star_exponent_unrefined(n);
  auto separated = [n](std::size_t l) {
    for (std::size_t i = 2; i + 1 <= n; ++i)
      if (!(power(i - 1, l - 1) * static_cast<unsigned long>(n) < power(i, l - 1))) return false;
    return true;
  };
  while (!separated(l)) ++l;
  return l;
}

std::vector<std::size_t> histogram_from_single_count(const CountValue& m, std::size_t n) {
  if (n == 0) throw std::invalid_argument("graphs have at least one vertex");
  if (m < 0) throw Error("not a valid star count for n");
  const std::size_t l = star_exponent(std::max<std::size_t>(n, 2));
  std::vector<std::size_t> d(n, 0);
  mpz_class rest = m;
  std::size_t used = 0;
  for (std::size_t i = n - 1; i >= 1; --i) {
    const mpz_class digit_weight = power(i, l - 1);
    const mpz_class digit = rest / digit_weight;
    if (digit > static_cast<unsigned long>(n - used)) throw Error("not a valid star count for n");
    d[i] = digit.get_ui();
    used += d[i];
    rest -= digit * digit_weight;
  }
  if (rest != 0) throw Error("not a valid star count for n");
  d[0] = n - used;
  return d;
}

AdaptiveStrategy isolated_vertex_strategy() {
  AdaptiveStrategy s;
  s.name = "isolated-vertex";
  s.depth = 2;
  s.start = Graph();
  s.next = [](std::span<const Answer> a) -> Query {
    const std::size_t n = to_size(plain(a[0]), "vertex count");
    return star(star_exponent(std::max<std::size_t>(n, 2)));
  };
  s.accept = [](std::span<const Answer> a) {
    const std::size_t n = to_size(plain(a[0]), "vertex count");
    return histogram_from_single_count(plain(a[1]), n)[0] == 0;
  };
  return s;
}

// ---- encoding --------------------------------------------------------------

EncodedFamily encode_family(std::span<const Graph> k, std::size_t n, RadixRule rule) {
  if (k.empty()) throw std::invalid_argument("cannot encode an empty family");
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  EncodedFamily e;
  e.n = n;
  e.rule = rule;
  e.fold_order.assign(k.begin(), k.end());
  std::stable_sort(e.fold_order.begin(), e.fold_order.end(), enumeration_less);
  e.composite.add(e.fold_order.front());
  mpz_class vertices = static_cast<unsigned long>(e.fold_order.front().order());
  for (std::size_t i = 1; i < e.fold_order.size(); ++i) {
    mpz_class r = radix_for(n, vertices, rule);
    e.composite.add(e.fold_order[i], r);
    vertices += r * static_cast<unsigned long>(e.fold_order[i].order());
    e.radices.push_back(std::move(r));
  }
  return e;
}

std::optional<std::vector<CountValue>> decode_counts(const FactoredCount& z, const EncodedFamily& e) {
  if (z.is_zero()) return std::nullopt;
  const std::size_t m = e.fold_order.size();
  std::vector<std::map<std::uint64_t, mpz_class>> exps(m);
  for (const auto& [p, total] : z.exponents()) {
    mpz_class k = total;
    for (std::size_t i = m - 1; i >= 1; --i) {
      const mpz_class& r = e.radices[i - 1];
      exps[i][p] = k / r;
      k %= r;
    }
    exps[0][p] = k;
  }
  std::vector<CountValue> out;
  for (std::size_t i = 0; i < m; ++i) {
    const mpz_class bound = power(e.n, e.fold_order[i].order());
    const double bound_bits = static_cast<double>(mpz_sizeinbase(bound.get_mpz_t(), 2));
    double bits = 0;
    for (const auto& [p, x] : exps[i]) bits += x.get_d() * std::log2(static_cast<double>(p));
    if (bits > bound_bits + 1) throw DecodeError("input not a valid encoded count");
    mpz_class value = 1;
    for (const auto& [p, x] : exps[i]) {
      mpz_class f;
      mpz_ui_pow_ui(f.get_mpz_t(), p, x.get_ui());
      value *= f;
    }
    if (value > bound) throw DecodeError("input not a valid encoded count");
    out.push_back(std::move(value));
  }
  return out;
}

std::optional<std::vector<CountValue>> decode_counts(const CountValue& z, const EncodedFamily& e) {
  if (z < 0) throw DecodeError("input not a valid encoded count");
  if (z == 0) return std::nullopt;
  mpz_class bound = 1;
  for (const auto& f : e.fold_order) bound = std::max(bound, power(e.n, f.order()));
  if (bound > (1UL << 24)) throw BudgetError("trial division bound " + bound.get_str() + " too large");
  const unsigned long limit = bound.get_ui();
  std::vector<bool> composite(limit + 1, false);
  FactoredCount f;
  mpz_class rest = z;
  for (unsigned long p = 2; p <= limit && rest > 1; ++p) {
    if (composite[p]) continue;
    for (unsigned long q = p * p; q <= limit; q += p) composite[q] = true;
    unsigned long k = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++k;
    }
    if (k > 0) f *= FactoredCount::of(std::uint64_t{p}).pow(k);
  }
  if (rest != 1) throw DecodeError("input not a valid encoded count");
  return decode_counts(f, e);
}

// ---- three queries ---------------------------------------------------------

ThreeQueryGraphs three_query_graphs(std::size_t n, std::span<const Graph> family, RadixRule rule) {
  std::vector<Graph> bipartite, rest;
  bool has_edge = false;
  for (const auto& f : family) {
    if (is_bipartite(f)) {
      bipartite.push_back(f);
      has_edge = has_edge || f.edge_count() > 0;
    } else {
      rest.push_back(f);
    }
  }
  if (!has_edge) throw Error("the bipartite part of the family must contain a graph with an edge (such as P_2)");
  ThreeQueryGraphs q;
  q.n = n;
  q.f1 = encode_family(bipartite, n, rule);
  if (!rest.empty()) q.f2 = encode_family(rest, n, rule);
  return q;
}

AdaptiveStrategy three_adaptive_strategy(std::size_t n, std::span<const Graph> family,
                                         std::function<bool(std::span<const Answer>)> accept, RadixRule rule) {
  auto q = std::make_shared<const ThreeQueryGraphs>(three_query_graphs(n, family, rule));
  AdaptiveStrategy s;
  s.name = "three-adaptive";
  s.depth = 3;
  s.start = Graph();
  s.next = [q](std::span<const Answer> a) -> Query {
    if (a.size() == 1) return q->f1.composite;
    if (q->f2) return q->f2->composite;
    return Graph();
  };
  s.accept = std::move(accept);
  return s;
}

std::vector<Answer> three_adaptive_answers(const ThreeQueryGraphs& q, const Graph& g) {
  std::vector<Answer> out;
  out.emplace_back(CountValue(static_cast<unsigned long>(g.order())));
  out.emplace_back(hom_factored(q.f1.composite, g));
  if (q.f2)
    out.emplace_back(hom_factored(q.f2->composite, g));
  else
    out.emplace_back(CountValue(static_cast<unsigned long>(g.order())));
  return out;
}

// ---- non-adaptive ----------------------------------------------------------

Graph reconstruct_graph(HomOracle& oracle) {
  if (oracle.orientation() != Orientation::left) throw Error("reconstruction reads left hom counts");
  const std::size_t n = to_size(oracle.query(Graph()), "vertex count");
  if (n > 6) throw BudgetError("reconstruction is limited to 6 vertices");
  const auto family = enumerate_graphs_upto(n);
  std::vector<CountValue> answers;
  for (const auto& f : family) answers.push_back(oracle.query(f));
  std::vector<Graph> matches;
  for (const auto& h : enumerate_graphs(n)) {
    bool same = true;
    for (std::size_t i = 0; i < family.size() && same; ++i) same = hom(family[i], h) == answers[i];
    if (same) matches.push_back(h);
  }
  if (matches.size() != 1)
    throw VerificationError(std::to_string(matches.size()) + " graphs match the hom vector on " + std::to_string(n) +
                            " vertices");
  return matches.front();
}

bool forb_membership(std::span<const Graph> forbidden, HomOracle& oracle) {
  bool member = true;
  for (const auto& f : forbidden) member = oracle.query(f, MorphismKind::strong_emb) == 0 && member;
  return member;
}

bool forb_membership(std::span<const Graph> forbidden, const Graph& g) {
  GraphOracle oracle(g);
  return forb_membership(forbidden, oracle);
}

std::vector<Graph> dominated_family(std::size_t k) {
  if (k + 1 > kMaxEnumerationOrder) throw BudgetError("dominated family needs graphs on " + std::to_string(k + 1) + " vertices");
  std::vector<Graph> out;
  for (const auto& h : enumerate_graphs(k + 1)) {
    auto e = h.edges();
    const auto apex = static_cast<Vertex>(k + 1);
    for (Vertex v = 0; v < apex; ++v) e.emplace_back(v, apex);
    out.push_back(Graph::from_edges(k + 2, e));
  }
  return out;
}

bool is_k_regular_by_counts(std::size_t k, HomOracle& oracle) {
  const CountValue n = oracle.query(Graph());
  const CountValue twice_edges = oracle.query(path(2));
  const bool bounded = forb_membership(dominated_family(k), oracle);
  return twice_edges == n * static_cast<unsigned long>(k) && bounded;
}

}  // namespace homcount
