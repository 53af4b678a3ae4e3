#include "homcount/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "homcount/adaptive.hpp"
#include "homcount/canonical.hpp"
#include "homcount/count.hpp"
#include "homcount/enumerate.hpp"
#include "homcount/errors.hpp"
#include "homcount/expressive.hpp"
#include "homcount/forge.hpp"
#include "homcount/graph6.hpp"
#include "homcount/linalg.hpp"
#include "homcount/parallel.hpp"
#include "homcount/right_hom.hpp"
#include "homcount/structure.hpp"

namespace homcount {

namespace {

using Clock = std::chrono::steady_clock;

class Suite {
 public:
  explicit Suite(std::string name) { report_.name = std::move(name); }

  // fn(detail) returns whether the check passed; exceptions count as failures.
  void check(std::string name, const std::function<bool(std::string&)>& fn) {
    CheckResult r;
    r.name = std::move(name);
    const auto t0 = Clock::now();
    try {
      r.passed = fn(r.detail);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    report_.seconds += r.seconds;
    report_.checks.push_back(std::move(r));
  }

  SuiteReport take() { return std::move(report_); }

 private:
  SuiteReport report_;
};

mpz_class power(std::size_t base, std::size_t exponent) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exponent);
  return r;
}

std::string g6(const Graph& g) { return to_graph6(g); }

// Injective edge-preserving maps, by plain search over all injections.
CountValue brute_emb(const Graph& f, const Graph& g) {
  std::vector<Vertex> image(f.order());
  std::vector<bool> used(g.order(), false);
  CountValue total = 0;
  std::function<void(std::size_t)> go = [&](std::size_t v) {
    if (v == f.order()) {
      ++total;
      return;
    }
    for (Vertex x = 0; x < g.order(); ++x) {
      if (used[x]) continue;
      bool ok = true;
      for (Vertex w : f.neighbors(static_cast<Vertex>(v)))
        if (w < v && !g.adjacent(image[w], x)) ok = false;
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

// Counts maps one by one, without the product rule for components.
CountValue enumerated_hom(const Graph& f, const Graph& g) {
  CountValue total = 0;
  for_each_hom(f, g, [&](std::span<const Vertex>) {
    ++total;
    return true;
  });
  return total;
}

std::size_t size_or(std::size_t n, std::size_t fallback) { return n == 0 ? fallback : n; }

// ---- 1, 2 ------------------------------------------------------------------

SuiteReport lovasz(const VerifyOptions& o, Orientation orientation) {
  const bool left = orientation == Orientation::left;
  const std::size_t n = size_or(o.n, left ? 6 : 5);
  Suite s(left ? "lovasz" : "right-lovasz");
  for (std::size_t m = 2; m <= n; ++m) {
    s.check(std::string(left ? "left" : "right") + " hom vectors distinct on " + std::to_string(m) + " vertices",
            [&](std::string& detail) {
              const auto family = enumerate_graphs_upto(m);
              const auto& graphs = enumerate_graphs(m);
              std::set<std::vector<CountValue>> seen;
              for (const auto& g : graphs) seen.insert(count_vector(MorphismKind::hom, family, g, orientation, o.jobs).values);
              detail = std::to_string(graphs.size()) + " graphs, " + std::to_string(family.size()) + " patterns, " +
                       std::to_string(seen.size()) + " distinct vectors";
              return seen.size() == graphs.size();
            });
  }
  return s.take();
}

// ---- 3 ---------------------------------------------------------------------

SuiteReport identities(const VerifyOptions& o) {
  const std::size_t n = size_or(o.n, 4);
  Suite s("identities");
  const auto gs = enumerate_graphs_upto(n);
  const std::string scope = " (graphs with at most " + std::to_string(n) + " vertices)";

  s.check("hom(K1,G) = |V(G)| and hom(P2,G) = 2|E(G)|" + scope, [&](std::string& detail) {
    for (const auto& g : gs)
      if (hom(Graph(), g) != static_cast<unsigned long>(g.order()) ||
          hom(path(2), g) != static_cast<unsigned long>(2 * g.edge_count())) {
        detail = "fails for " + g6(g);
        return false;
      }
    return true;
  });

  s.check("hom(F1+F2,G) = hom(F1,G)·hom(F2,G), maps enumerated" + scope, [&](std::string& detail) {
    std::vector<std::vector<CountValue>> h(gs.size(), std::vector<CountValue>(gs.size()));
    for (std::size_t a = 0; a < gs.size(); ++a)
      for (std::size_t c = 0; c < gs.size(); ++c) h[a][c] = hom(gs[a], gs[c]);
    std::size_t checked = 0;
    for (std::size_t a = 0; a < gs.size(); ++a)
      for (std::size_t b = a; b < gs.size(); ++b) {
        const Graph u = disjoint_union(gs[a], gs[b]);
        for (std::size_t c = 0; c < gs.size(); ++c, ++checked)
          if (enumerated_hom(u, gs[c]) != h[a][c] * h[b][c]) {
            detail = "fails for " + g6(gs[a]) + " " + g6(gs[b]) + " " + g6(gs[c]);
            return false;
          }
      }
    detail = std::to_string(checked) + " triples";
    return true;
  });

  s.check("emb(G,F1+F2) = emb(G,F1)+emb(G,F2) for connected G" + scope, [&](std::string& detail) {
    std::size_t checked = 0;
    for (const auto& g : gs) {
      if (!g.is_connected()) continue;
      for (std::size_t a = 0; a < gs.size(); ++a)
        for (std::size_t b = a; b < gs.size(); ++b, ++checked)
          if (brute_emb(g, disjoint_union(gs[a], gs[b])) != emb(g, gs[a]) + emb(g, gs[b])) {
            detail = "fails for " + g6(g) + " " + g6(gs[a]) + " " + g6(gs[b]);
            return false;
          }
    }
    detail = std::to_string(checked) + " triples";
    return true;
  });

  s.check("hom(F,G) = Σ epi(F,F')·emb(F',G)/aut(F') over F' <= F" + scope, [&](std::string& detail) {
    for (const auto& f : gs)
      for (const auto& g : gs) {
        mpq_class sum = 0;
        for (std::size_t m = 1; m <= f.order(); ++m)
          for (const auto& fp : enumerate_graphs(m)) {
            if (m == f.order() && fp.edge_count() > f.edge_count()) continue;
            const CountValue e = count(MorphismKind::epi, f, fp);
            if (e != 0) sum += mpq_class(CountValue(e * emb(fp, g))) / mpq_class(aut(fp));
          }
        if (sum != mpq_class(hom(f, g))) {
          detail = "fails for " + g6(f) + " " + g6(g);
          return false;
        }
      }
    return true;
  });

  s.check("hom(F,G×H) = hom(F,G)·hom(F,H)" + scope, [&](std::string& detail) {
    std::size_t checked = 0;
    for (std::size_t a = 0; a < gs.size(); ++a)
      for (std::size_t b = a; b < gs.size(); ++b) {
        const Graph prod = tensor_product(gs[a], gs[b]);
        for (const auto& f : gs) {
          ++checked;
          if (hom(f, prod) != hom(f, gs[a]) * hom(f, gs[b])) {
            detail = "fails for " + g6(f) + " " + g6(gs[a]) + " " + g6(gs[b]);
            return false;
          }
        }
      }
    detail = std::to_string(checked) + " triples";
    return true;
  });

  s.check("hom(G,F) = hom(G^wi,F)·|V(F)|^i(G)" + scope, [&](std::string& detail) {
    for (const auto& g : gs) {
      const auto [core, isolated] = strip_isolated(g);
      for (const auto& f : gs)
        if (hom(g, f) != hom(core, f) * power(f.order(), isolated)) {
          detail = "fails for " + g6(g) + " " + g6(f);
          return false;
        }
    }
    return true;
  });

  s.check("s-emb(F,G) = s-emb(F^c,G^c)" + scope, [&](std::string& detail) {
    for (const auto& f : gs)
      for (const auto& g : gs)
        if (count(MorphismKind::strong_emb, f, g) != count(MorphismKind::strong_emb, complement(f), complement(g))) {
          detail = "fails for " + g6(f) + " " + g6(g);
          return false;
        }
    return true;
  });
  return s.take();
}

// ---- 4 ---------------------------------------------------------------------

SuiteReport expressive(const VerifyOptions& o) {
  const std::size_t upto = size_or(o.n, connected_count_upto(5));
  Suite s("expressive");
  ExpressiveLedger ledger;

  s.check("F_1..F_4 expressive flags are true, true, true, false", [&](std::string& detail) {
    std::string flags;
    for (EnumerationIndex i = 1; i <= 4; ++i) flags += ledger.is_expressive(i) ? 'T' : 'F';
    detail = flags;
    return flags == "TTTF";
  });

  auto matrix_for = [&](EnumerationIndex t) {
    std::vector<EnumerationIndex> rows{1}, cols = ledger.expressive_below(t);
    rows.insert(rows.end(), cols.begin(), cols.end());
    cols.push_back(t);
    return emb_matrix(rows, cols);
  };
  s.check("matrix for F_3 is ((2,3),(2,4))", [&](std::string& detail) {
    detail = matrix_for(3).to_string();
    return detail == "((2,3),(2,4))";
  });
  s.check("matrix for F_4 is ((2,3,3),(2,4,6),(0,2,6)) and singular", [&](std::string& detail) {
    const RationalMatrix m = matrix_for(4);
    detail = m.to_string();
    return detail == "((2,3,3),(2,4,6),(0,2,6))" && rank(m) == 2;
  });
  s.check("incremental test agrees with matrix rank up to F_" + std::to_string(upto), [&](std::string& detail) {
    std::size_t count_expressive = 0;
    for (EnumerationIndex t = 2; t <= upto; ++t) {
      const RationalMatrix m = matrix_for(t);
      const bool full = rank(m) == m.rows();
      if (full != ledger.is_expressive(t)) {
        detail = "disagreement at F_" + std::to_string(t);
        return false;
      }
      count_expressive += full;
    }
    detail = std::to_string(count_expressive + 1) + " expressive graphs among F_1..F_" + std::to_string(upto);
    return true;
  });
  s.check("dependency and case-1 coefficients verify up to F_" + std::to_string(upto), [&](std::string& detail) {
    for (EnumerationIndex t = 2; t <= upto; ++t) {
      const Coefficients c = ledger.is_expressive(t) ? case1_coefficients(t, ledger) : dependency_coefficients(t, ledger);
      if (c.p.back() == 0) {
        detail = "vanishing pivot at F_" + std::to_string(t);
        return false;
      }
    }
    return true;
  });
  return s.take();
}

// ---- 5 ---------------------------------------------------------------------

SuiteReport forge_isolated(const VerifyOptions& o) {
  const std::size_t longest = size_or(o.n, connected_count_upto(4));
  Suite s("forge-isolated");
  ExpressiveLedger ledger;
  for (std::size_t len = 1; len <= longest; ++len) {
    s.check("prefix of length " + std::to_string(len), [&](std::string& detail) {
      const auto family = enumerate_connected_prefix(len);
      const Witness w = forge_isolated_vertex(family, ledger);
      const auto g = w.g.to_graph(), h = w.h.to_graph();
      if (!g || !h) throw BudgetError("witness too large to materialize");
      detail = "|V(G)|=" + std::to_string(g->order()) + " |V(H)|=" + std::to_string(h->order());
      for (const auto& f : family)
        if (emb(f, *g) != emb(f, *h)) return false;
      return isolated_vertex_count(*g) > 0 && isolated_vertex_count(*h) == 0;
    });
  }
  s.check("connected reduction gives hom agreement on all graphs with at most 3 vertices", [&](std::string& detail) {
    const auto k = enumerate_graphs_upto(3);
    const auto reduced = connected_reduction(k);
    const Witness w = forge_isolated_vertex(reduced, ledger);
    const auto g = w.g.to_graph(), h = w.h.to_graph();
    if (!g || !h) throw BudgetError("witness too large to materialize");
    for (const auto& f : k)
      if (hom(f, *g) != hom(f, *h)) {
        detail = "differs on " + g6(f);
        return false;
      }
    detail = std::to_string(reduced.size()) + " connected graphs";
    return isolated_vertex_count(*g) > 0 && isolated_vertex_count(*h) == 0;
  });
  return s.take();
}

// ---- 6 ---------------------------------------------------------------------

SuiteReport forge_planar_color(const VerifyOptions& o) {
  const std::size_t n = size_or(o.n, 4);
  Suite s("forge-planar-color");
  const auto connected = enumerate_connected(n);
  std::vector<std::vector<Graph>> families;
  for (std::size_t a = 0; a < connected.size(); ++a) {
    families.push_back({connected[a]});
    for (std::size_t b = a + 1; b < connected.size(); ++b) families.push_back({connected[a], connected[b]});
  }
  auto run_all = [&](const std::function<Witness(const std::vector<Graph>&)>& forge, std::string& detail) {
    std::vector<char> ok(families.size(), 0);
    parallel_for(families.size(), o.jobs, [&](std::size_t i) {
      const Witness w = forge(families[i]);  // verified on construction
      ok[i] = w.g_counts == w.h_counts;
    });
    detail = std::to_string(families.size()) + " families";
    return std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
  };
  s.check("planarity witnesses for every family of at most 2 connected graphs",
          [&](std::string& detail) { return run_all([](const auto& k) { return forge_planarity(k); }, detail); });
  for (std::size_t colors : {2, 3})
    s.check(std::to_string(colors) + "-colourability witnesses for every family of at most 2 connected graphs",
            [&](std::string& detail) {
              return run_all([colors](const auto& k) { return forge_colorability(k, colors); }, detail);
            });
  s.check("K={P3}: G = 210·P3, H = 2·K7", [&](std::string& detail) {
    const std::vector<Graph> k{path(3)};
    const Witness w = forge_planarity(k);
    detail = w.g.describe() + " | " + w.h.describe();
    return w.g.parts().size() == 1 && w.g.parts()[0].copies == 210 && is_isomorphic(w.g.parts()[0].component, path(3)) &&
           w.h.parts().size() == 1 && w.h.parts()[0].copies == 2 && is_isomorphic(w.h.parts()[0].component, clique(7)) &&
           w.g_counts[0] == 420;
  });
  s.check("non-3-colourable branch uses the Grötzsch graph (K={K4})", [&](std::string& detail) {
    const std::vector<Graph> k{clique(4)};
    const Witness w = forge_colorability(k, 3);
    const Graph grotzsch = mycielskian(mycielskian(path(2)));
    detail = w.h.describe();
    return w.h.parts().size() == 1 && is_isomorphic(w.h.parts()[0].component, grotzsch) &&
           chromatic_number(grotzsch) == 4 && !has_triangle(grotzsch);
  });
  return s.take();
}

// ---- 7 ---------------------------------------------------------------------

SuiteReport star(const VerifyOptions& o) {
  const std::size_t n = size_or(o.n, 7);
  Suite s("star");
  s.check("star vector and single star count decode every graph with at most " + std::to_string(n) + " vertices",
          [&](std::string& detail) {
            std::size_t checked = 0;
            for (std::size_t m = 1; m <= n; ++m) {
              const std::size_t l = star_exponent(std::max<std::size_t>(m, 2));
              const Graph big_star = homcount::star(l);
              for (const auto& g : enumerate_graphs(m)) {
                std::vector<CountValue> values;
                for (std::size_t j = 1; j <= m; ++j) values.push_back(hom(homcount::star(j), g));
                const auto expected = degree_histogram(g);
                if (histogram_from_star_vector(values) != expected ||
                    histogram_from_single_count(hom(big_star, g), m) != expected) {
                  detail = "fails for " + g6(g);
                  return false;
                }
                ++checked;
              }
            }
            detail = std::to_string(checked) + " graphs";
            return true;
          });
  s.check("refined exponent satisfies the unrefined inequality", [&](std::string& detail) {
    for (std::size_t m = 2; m <= std::max<std::size_t>(n, 2); ++m) {
      const std::size_t l = star_exponent(m);
      if (l < star_exponent_unrefined(m)) return false;
      for (std::size_t i = 2; i + 1 <= m; ++i)
        if (!(power(i, l - 1) > power(i - 1, l - 1) * static_cast<unsigned long>(m - 1))) {
          detail = "n=" + std::to_string(m) + " i=" + std::to_string(i);
          return false;
        }
    }
    return true;
  });
  s.check("no collisions at the unrefined exponent ceil(n log2 n) for n <= " + std::to_string(n),
          [&](std::string& detail) {
            std::size_t histograms = 0;
            for (std::size_t m = 2; m <= n; ++m) {
              const std::size_t l = star_exponent_unrefined(m);
              // All vectors (d_0..d_{m-1}) of non-negative integers summing to m.
              std::map<CountValue, std::vector<std::size_t>> seen;
              std::vector<std::size_t> d(m, 0);
              std::function<bool(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t left) {
                if (i + 1 == m) {
                  d[i] = left;
                  CountValue v = 0;
                  for (std::size_t j = 1; j < m; ++j) v += power(j, l - 1) * static_cast<unsigned long>(d[j]);
                  ++histograms;
                  return seen.emplace(v, d).second;
                }
                for (std::size_t x = 0; x <= left; ++x) {
                  d[i] = x;
                  if (!go(i + 1, left - x)) return false;
                }
                return true;
              };
              if (!go(0, m)) {
                detail = "collision for n=" + std::to_string(m);
                return false;
              }
              // Realizable histograms agree with actual star counts.
              for (const auto& g : enumerate_graphs(m)) {
                const auto it = seen.find(hom(homcount::star(l), g));
                if (it == seen.end() || it->second != degree_histogram(g)) {
                  detail = "star count mismatch for " + g6(g);
                  return false;
                }
              }
            }
            detail = std::to_string(histograms) + " histograms";
            return true;
          });
  return s.take();
}

// ---- 8 ---------------------------------------------------------------------

SuiteReport encoding(const VerifyOptions& o) {
  const std::size_t n_max = size_or(o.n, 4);
  Suite s("encoding");
  const std::vector<Graph> pool{path(2), path(3), clique(3), cycle(4)};
  std::vector<std::vector<Graph>> families;
  for (unsigned mask = 0; mask < 16; ++mask) {
    const int bits = std::popcount(mask);
    if (bits < 2 || bits > 3) continue;
    std::vector<Graph> k;
    for (unsigned i = 0; i < 4; ++i)
      if (mask >> i & 1U) k.push_back(pool[i]);
    families.push_back(std::move(k));
  }
  for (std::size_t n = 1; n <= n_max; ++n) {
    s.check("equal encoded counts iff condition (a) or (b), n = " + std::to_string(n), [&](std::string& detail) {
      const auto& graphs = enumerate_graphs(n);
      std::size_t pairs = 0;
      for (const auto& k : families) {
        const EncodedFamily e = encode_family(k, n);
        std::vector<FactoredCount> z;
        std::vector<std::vector<CountValue>> direct;
        for (const auto& g : graphs) {
          z.push_back(hom_factored(e.composite, g));
          std::vector<CountValue> row;
          for (const auto& f : e.fold_order) row.push_back(hom(f, g));
          direct.push_back(std::move(row));
        }
        for (std::size_t a = 0; a < graphs.size(); ++a) {
          // Round trip on every positive count.
          const auto decoded = decode_counts(z[a], e);
          const bool any_zero = std::any_of(direct[a].begin(), direct[a].end(), [](const auto& c) { return c == 0; });
          if (decoded.has_value() == any_zero || (decoded && *decoded != direct[a])) {
            detail = "decode fails for " + g6(graphs[a]);
            return false;
          }
          for (std::size_t b = 0; b < graphs.size(); ++b, ++pairs) {
            const bool zero_a = any_zero;
            const bool zero_b =
                std::any_of(direct[b].begin(), direct[b].end(), [](const auto& c) { return c == 0; });
            const bool cond = (zero_a && zero_b) || direct[a] == direct[b];
            if ((z[a] == z[b]) != cond) {
              detail = "equivalence fails for " + g6(graphs[a]) + " " + g6(graphs[b]);
              return false;
            }
          }
        }
      }
      detail = std::to_string(pairs) + " (K, G, H) triples";
      return true;
    });
  }
  s.check("integer decoding agrees with factored decoding where the count is materializable", [&](std::string& detail) {
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= n_max; ++n)
      for (const auto& k : families) {
        const EncodedFamily e = encode_family(k, n);
        for (const auto& g : enumerate_graphs(n)) {
          const FactoredCount z = hom_factored(e.composite, g);
          const auto value = z.value(1 << 16);
          if (!value) continue;
          ++checked;
          if (decode_counts(*value, e) != decode_counts(z, e)) {
            detail = "mismatch for " + g6(g);
            return false;
          }
        }
      }
    detail = std::to_string(checked) + " counts";
    return checked > 0;
  });
  s.check("K={P2,P3}, n=3: F_K = P2 + 9·P3 and hom(F_K,C3) = 6·12^9", [&](std::string& detail) {
    const std::vector<Graph> k{path(2), path(3)};
    const EncodedFamily e = encode_family(k, 3);
    const auto z = hom_factored(e.composite, cycle(3)).value();
    detail = e.composite.describe();
    return e.radices.size() == 1 && e.radices[0] == 9 && z && *z == 6 * power(12, 9) &&
           decode_counts(*z, e) == std::vector<CountValue>{6, 12};
  });
  return s.take();
}

// ---- 9 ---------------------------------------------------------------------

SuiteReport two_adaptive(const VerifyOptions& o) {
  const std::size_t k = size_or(o.n, 5);
  Suite s("two-adaptive");
  std::optional<CycleTriple> t;
  s.check("cycle triple agrees on all graphs with at most " + std::to_string(k) + " vertices", [&](std::string& detail) {
    t = forge_two_adaptive_triple(k, o.jobs);
    const auto family = enumerate_graphs_upto(t->verified_upto);
    for (const auto& f : family) {
      const CountValue a = hom(f, t->g);
      if (a != hom(f, t->h1) || a != hom(f, t->h2)) return false;
    }
    detail = "l=" + std::to_string(t->ell) + ", " + std::to_string(family.size()) + " graphs";
    return true;
  });
  s.check("C_{12l+6} is isomorphic to P2 × C_{6l+3}", [&](std::string& detail) {
    if (!t) return false;
    detail = g6(t->g);
    return is_isomorphic(t->g, tensor_product(path(2), cycle(6 * t->ell + 3)));
  });
  s.check("second-query dichotomy: bipartite F gives hom(F,G)=hom(F,H2), otherwise hom(F,G)=hom(F,H1)=0",
          [&](std::string& detail) {
            if (!t) return false;
            for (const auto& f : enumerate_graphs_upto(t->verified_upto)) {
              const CountValue a = hom(f, t->g);
              const bool ok = is_bipartite(f) ? a == hom(f, t->h2) : (a == 0 && hom(f, t->h1) == 0);
              if (!ok) {
                detail = "fails for " + g6(f);
                return false;
              }
            }
            return true;
          });
  return s.take();
}

// ---- 10 --------------------------------------------------------------------

SuiteReport cancellation(const VerifyOptions& o) {
  const std::size_t n = size_or(o.n, 5);
  Suite s("cancellation");
  s.check("G×C3 pairwise non-isomorphic for graphs with at most " + std::to_string(n) + " vertices",
          [&](std::string& detail) {
            const auto gs = enumerate_graphs_upto(n);
            std::set<std::vector<CanonicalForm>> seen;
            for (const auto& g : gs) seen.insert(component_forms(tensor_product(g, cycle(3))));
            detail = std::to_string(gs.size()) + " graphs, " + std::to_string(seen.size()) + " distinct products";
            return seen.size() == gs.size();
          });
  s.check("bipartite failure: C6×K2 is isomorphic to (2·C3)×K2", [&](std::string&) {
    return is_isomorphic(tensor_product(cycle(6), clique(2)), tensor_product(replicate(2, cycle(3)), clique(2))) &&
           !is_isomorphic(cycle(6), replicate(2, cycle(3)));
  });
  return s.take();
}

// ---- 11 --------------------------------------------------------------------

SuiteReport right_hom(const VerifyOptions& o) {
  const std::size_t n = size_or(o.n, 5);
  Suite s("right-hom");
  const auto gs = enumerate_graphs_upto(n);

  s.check("quotient keeps the right vector and the size bound, families within {K2,K3,P3,C4}", [&](std::string& detail) {
    const std::vector<Graph> pool{clique(2), clique(3), path(3), cycle(4)};
    std::size_t built = 0;
    for (unsigned mask = 1; mask < 16; ++mask) {
      std::vector<Graph> family;
      for (unsigned i = 0; i < 4; ++i)
        if (mask >> i & 1U) family.push_back(pool[i]);
      for (const auto& g : gs) {
        const Quotient q = quotient_graph(g, family);  // re-verifies the right vector
        for (std::size_t i = 0; i < family.size(); ++i)
          if (hom(q.graph, family[i]) != hom(g, family[i])) return false;
        if (q.size_bound && *q.size_bound < static_cast<unsigned long>(q.graph.order())) return false;
        ++built;
      }
    }
    detail = std::to_string(built) + " quotients";
    return true;
  });

  s.check("k=2: hom(H,K2) > 0 implies hom(H,K8) > 64 for sampled H on 9..12 vertices", [&](std::string& detail) {
    std::mt19937_64 rng(20240611);
    std::size_t colourable = 0, samples = 0;
    for (std::size_t order = 9; order <= 12; ++order)
      for (int trial = 0; trial < 12; ++trial, ++samples) {
        // Half the samples are forced bipartite so the chain is not vacuous.
        const bool bipartite = trial % 2 == 0;
        std::bernoulli_distribution coin(0.3);
        std::vector<Edge> edges;
        for (Vertex u = 0; u < order; ++u)
          for (Vertex v = u + 1; v < order; ++v)
            if ((!bipartite || (u % 2) != (v % 2)) && coin(rng)) edges.emplace_back(u, v);
        const PowRightReport r = powright_inequality_check(Graph::from_edges(order, edges), 2);
        colourable += r.k_colorable;
        if (!r.holds) {
          detail = "fails on a sample with " + std::to_string(order) + " vertices";
          return false;
        }
      }
    detail = std::to_string(samples) + " samples, " + std::to_string(colourable) + " 2-colourable";
    return colourable > 0;
  });
  s.check("k=2: hom(G,K8) <= 64 for every G with at most 2 vertices", [&](std::string& detail) {
    const CountValue m = powright_small_side_max(2);
    detail = "max " + m.get_str();
    return m <= 64;
  });

  s.check("right membership for {at most 1 edge}, k=1, agrees with the predicate on graphs with at most " +
              std::to_string(n) + " vertices",
          [&](std::string& detail) {
            const RightFamily family = bounded_edge_family(1);
            const auto predicate = [](const Graph& g) { return g.edge_count() <= 1; };
            std::size_t queries = 0;
            for (const auto& g : gs) {
              GraphOracle oracle(g, Orientation::right);
              const RightDecision d = right_membership(predicate, family, oracle);
              queries += d.queries;
              if (d.member != predicate(g)) {
                detail = "disagrees on " + g6(g);
                return false;
              }
            }
            detail = std::to_string(gs.size()) + " graphs, family of " + std::to_string(family.graphs.size()) + ", " +
                     std::to_string(queries) + " queries";
            return !family.reduced;
          });

  s.check("isolated-vertex count recovered from the F0 / F0+K1 ratio for graphs with at most 6 vertices",
          [&](std::string& detail) {
            std::size_t checked = 0;
            for (const auto& g : enumerate_graphs_upto(6)) {
              if (g.edge_count() == 0) continue;
              for (std::size_t c = 2; c <= 8; ++c) {
                const Graph f0 = clique(c);
                const CountValue a = hom(g, f0);
                if (a == 0) continue;
                if (isolated_from_ratio(a, hom(g, disjoint_union(f0, Graph())), c) != isolated_vertex_count(g)) {
                  detail = "fails for " + g6(g);
                  return false;
                }
                ++checked;
                break;
              }
            }
            detail = std::to_string(checked) + " graphs";
            return true;
          });

  for (std::size_t sv : {3, 4})
    s.check("triangle detection demo s=" + std::to_string(sv), [&, sv](std::string& detail) {
      const FailureDemo d = right_failure_demo(sv);
      detail = g6(d.g0) + " against " + std::to_string(d.probes.size()) + " probes";
      return d.chromatic == sv && d.g0_triangle_free && d.clique_has_triangle;
    });

  s.check("K_m and K_m+K1 share the zero right vector", [&](std::string& detail) {
    const auto family = enumerate_graphs_upto(3);
    const CliqueIsolatedDemo d = clique_isolated_demo(family);
    detail = "m=" + std::to_string(d.m);
    return d.m == 4;
  });
  return s.take();
}

}  // namespace

bool SuiteReport::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string SuiteReport::to_json(bool with_timings) const {
  nlohmann::ordered_json j;
  j["suite"] = name;
  j["passed"] = passed();
  if (with_timings) j["seconds"] = seconds;
  auto& arr = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["passed"] = c.passed;
    if (!c.detail.empty()) e["detail"] = c.detail;
    if (with_timings) e["seconds"] = c.seconds;
    arr.push_back(std::move(e));
  }
  return j.dump();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lovasz",       "right-lovasz",       "identities", "expressive",
                                              "forge-isolated", "forge-planar-color", "star",       "encoding",
                                              "two-adaptive", "cancellation",       "right-hom"};
  return names;
}

bool is_suite(std::string_view name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteReport run_suite(std::string_view name, const VerifyOptions& options) {
  if (name == "lovasz") return lovasz(options, Orientation::left);
  if (name == "right-lovasz") return lovasz(options, Orientation::right);
  if (name == "identities") return identities(options);
  if (name == "expressive") return expressive(options);
  if (name == "forge-isolated") return forge_isolated(options);
  if (name == "forge-planar-color") return forge_planar_color(options);
  if (name == "star") return star(options);
  if (name == "encoding") return encoding(options);
  if (name == "two-adaptive") return two_adaptive(options);
  if (name == "cancellation") return cancellation(options);
  if (name == "right-hom") return right_hom(options);
  throw std::invalid_argument("unknown verify suite: " + std::string(name));
}

}  // namespace homcount
