#include "homcount/count.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <string>

#include "homcount/enumerate.hpp"
#include "homcount/errors.hpp"
#include "homcount/graph6.hpp"
#include "homcount/linalg.hpp"
#include "homcount/parallel.hpp"

namespace homcount {

namespace {

struct Flags {
  bool injective = false;
  bool strong = false;
  bool surjective = false;  // epi: onto vertices and covering every edge
  bool product_suffix = false;
};

Flags flags_of(MorphismKind kind) {
  switch (kind) {
    case MorphismKind::hom: return {false, false, false, true};
    case MorphismKind::emb: return {true, false, false, false};
    case MorphismKind::strong_hom: return {false, true, false, false};
    case MorphismKind::strong_emb: return {true, true, false, false};
    case MorphismKind::epi: return {false, false, true, false};
    case MorphismKind::strong_epi: return {false, true, true, false};
  }
  return {};
}

struct Plan {
  std::vector<Vertex> order;
  std::vector<std::vector<std::size_t>> back;  // positions of earlier neighbours
  std::vector<std::vector<std::size_t>> non;   // positions of earlier non-neighbours
  std::size_t core = 0;                        // positions >= core are counted as a product
};

Plan make_plan(const Graph& f, const Flags& flags) {
  const std::size_t n = f.order();
  std::vector<char> in_suffix(n, 0);
  if (flags.product_suffix) {
    // Greedy independent set preferring low degree: these vertices only
    // interact with the core, so their choices multiply.
    std::vector<Vertex> by_degree(n);
    for (Vertex v = 0; v < n; ++v) by_degree[v] = v;
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](Vertex a, Vertex b) { return f.degree(a) < f.degree(b); });
    for (Vertex v : by_degree) {
      bool free = true;
      for (Vertex w : f.neighbors(v))
        if (in_suffix[w]) {
          free = false;
          break;
        }
      if (free) in_suffix[v] = 1;
    }
  }

  Plan plan;
  std::vector<char> placed(n, 0);
  std::vector<std::size_t> placed_neighbours(n, 0);
  std::size_t core_size = 0;
  for (Vertex v = 0; v < n; ++v) core_size += !in_suffix[v];
  for (std::size_t step = 0; step < core_size; ++step) {
    Vertex pick = 0;
    bool found = false;
    for (Vertex v = 0; v < n; ++v) {
      if (placed[v] || in_suffix[v]) continue;
      if (!found || placed_neighbours[v] > placed_neighbours[pick] ||
          (placed_neighbours[v] == placed_neighbours[pick] && f.degree(v) > f.degree(pick))) {
        pick = v;
        found = true;
      }
    }
    placed[pick] = 1;
    plan.order.push_back(pick);
    for (Vertex w : f.neighbors(pick)) ++placed_neighbours[w];
  }
  plan.core = plan.order.size();
  for (Vertex v = 0; v < n; ++v)
    if (in_suffix[v]) plan.order.push_back(v);

  std::vector<std::size_t> position(n);
  for (std::size_t p = 0; p < n; ++p) position[plan.order[p]] = p;
  plan.back.resize(n);
  plan.non.resize(n);
  for (std::size_t p = 0; p < n; ++p) {
    const Vertex v = plan.order[p];
    for (std::size_t q = 0; q < p; ++q) {
      if (f.adjacent(v, plan.order[q])) plan.back[p].push_back(q);
      else if (flags.strong) plan.non[p].push_back(q);
    }
  }
  return plan;
}

class Search {
 public:
  Search(const Graph& f, const Graph& g, const Flags& flags)
      : f_(f), g_(g), flags_(flags), plan_(make_plan(f, flags)), nf_(f.order()), ng_(g.order()) {
    dense_ = !g.row(0).empty();
    words_ = g.row_words();
    image_.assign(nf_, 0);
    if (dense_) {
      scratch_.assign((nf_ + 1) * words_, 0);
      all_.assign(words_, ~std::uint64_t{0});
      if (ng_ % 64) all_.back() = (std::uint64_t{1} << (ng_ % 64)) - 1;
    }
    if (flags_.injective) used_.assign(ng_, 0);
    if (flags_.surjective) {
      hits_.assign(ng_, 0);
      uncovered_ = ng_;
    }
    candidates_.resize(nf_ + 1);
  }

  CountValue run() {
    if (flags_.injective && nf_ > ng_) return 0;
    if (flags_.surjective && (nf_ < ng_ || f_.edge_count() < g_.edge_count())) return 0;
    go(0);
    flush();
    return total_;
  }

 private:
  void add(std::uint64_t x) {
    if (acc_ > ~std::uint64_t{0} - x) flush();
    acc_ += x;
  }
  void flush() {
    if (acc_) {
      mpz_add_ui(total_.get_mpz_t(), total_.get_mpz_t(), acc_);
      acc_ = 0;
    }
  }

  void suffix_product() {
    std::uint64_t prod = 1;
    bool big = false;
    mpz_class bigprod;
    for (std::size_t p = plan_.core; p < nf_; ++p) {
      std::uint64_t c = 0;
      const auto& back = plan_.back[p];
      if (back.empty()) {
        c = ng_;
      } else if (dense_) {
        auto row0 = g_.row(image_[back[0]]);
        for (std::size_t w = 0; w < words_; ++w) {
          std::uint64_t x = row0[w];
          for (std::size_t i = 1; i < back.size() && x; ++i) x &= g_.row(image_[back[i]])[w];
          c += static_cast<std::uint64_t>(std::popcount(x));
        }
      } else {
        for (Vertex w : g_.neighbors(image_[back[0]])) {
          bool ok = true;
          for (std::size_t i = 1; i < back.size() && ok; ++i) ok = g_.adjacent(image_[back[i]], w);
          c += ok;
        }
      }
      if (c == 0) return;
      if (!big) {
        std::uint64_t next;
        if (__builtin_mul_overflow(prod, c, &next)) {
          big = true;
          bigprod = prod;
          bigprod *= c;
        } else {
          prod = next;
        }
      } else {
        bigprod *= c;
      }
    }
    if (big) {
      flush();
      total_ += bigprod;
    } else {
      add(prod);
    }
  }

  void collect(std::size_t p) {
    auto& out = candidates_[p];
    out.clear();
    const auto& back = plan_.back[p];
    const auto& non = plan_.non[p];
    if (dense_) {
      std::uint64_t* buf = &scratch_[p * words_];
      if (back.empty()) {
        std::copy(all_.begin(), all_.end(), buf);
      } else {
        auto r = g_.row(image_[back[0]]);
        std::copy(r.begin(), r.end(), buf);
        for (std::size_t i = 1; i < back.size(); ++i) {
          auto ri = g_.row(image_[back[i]]);
          for (std::size_t w = 0; w < words_; ++w) buf[w] &= ri[w];
        }
      }
      for (std::size_t q : non) {
        auto rq = g_.row(image_[q]);
        for (std::size_t w = 0; w < words_; ++w) buf[w] &= ~rq[w];
      }
      for (std::size_t w = 0; w < words_; ++w)
        for (std::uint64_t x = buf[w]; x; x &= x - 1) {
          const Vertex v = static_cast<Vertex>(w * 64 + std::countr_zero(x));
          if (!flags_.injective || !used_[v]) out.push_back(v);
        }
      return;
    }
    auto consider = [&](Vertex v) {
      if (flags_.injective && used_[v]) return;
      for (std::size_t i = 1; i < back.size(); ++i)
        if (!g_.adjacent(image_[back[i]], v)) return;
      for (std::size_t q : non)
        if (g_.adjacent(image_[q], v)) return;
      out.push_back(v);
    };
    if (back.empty()) {
      for (Vertex v = 0; v < ng_; ++v) consider(v);
    } else {
      for (Vertex v : g_.neighbors(image_[back[0]])) consider(v);
    }
  }

  bool edges_covered() const {
    std::vector<std::vector<char>> seen(ng_);
    std::size_t covered = 0;
    for (auto [a, b] : f_.edges()) {
      Vertex x = image_[position_of(a)], y = image_[position_of(b)];
      if (x > y) std::swap(x, y);
      auto& row = seen[x];
      if (row.empty()) row.assign(ng_, 0);
      if (!row[y]) {
        row[y] = 1;
        ++covered;
      }
    }
    return covered == g_.edge_count();
  }

  std::size_t position_of(Vertex v) const {
    if (positions_.empty()) {
      positions_.resize(nf_);
      for (std::size_t p = 0; p < nf_; ++p) positions_[plan_.order[p]] = p;
    }
    return positions_[v];
  }

  void go(std::size_t p) {
    if (p == nf_) {
      if (flags_.surjective && (uncovered_ != 0 || !edges_covered())) return;
      add(1);
      return;
    }
    if (flags_.product_suffix && p == plan_.core) {
      suffix_product();
      return;
    }
    if (flags_.surjective && uncovered_ > nf_ - p) return;
    collect(p);
    // candidates_[p] is stable while deeper levels use their own buffers.
    for (Vertex v : candidates_[p]) {
      image_[p] = v;
      if (flags_.injective) used_[v] = 1;
      if (flags_.surjective && hits_[v]++ == 0) --uncovered_;
      go(p + 1);
      if (flags_.surjective && --hits_[v] == 0) ++uncovered_;
      if (flags_.injective) used_[v] = 0;
    }
  }

  const Graph& f_;
  const Graph& g_;
  Flags flags_;
  Plan plan_;
  std::size_t nf_, ng_;
  bool dense_ = false;
  std::size_t words_ = 0;
  std::vector<Vertex> image_;
  std::vector<std::uint64_t> scratch_, all_;
  std::vector<char> used_;
  std::vector<std::size_t> hits_;
  std::size_t uncovered_ = 0;
  std::vector<std::vector<Vertex>> candidates_;
  mutable std::vector<std::size_t> positions_;
  CountValue total_ = 0;
  std::uint64_t acc_ = 0;
};

bool is_complete(const Graph& g) { return g.edge_count() == g.order() * (g.order() - 1) / 2; }

// hom(F, K_m) as the chromatic polynomial of F evaluated at m: the number of
// partitions of V(F) into j independent sets, times m(m-1)...(m-j+1).
CountValue clique_hom(const Graph& f, std::size_t m) {
  const std::size_t n = f.order();
  const std::size_t full = (std::size_t{1} << n) - 1;
  std::vector<std::uint32_t> nbr(n, 0);
  for (auto [u, v] : f.edges()) {
    nbr[u] |= 1U << v;
    nbr[v] |= 1U << u;
  }
  std::vector<char> independent(full + 1, 0);
  independent[0] = 1;
  for (std::size_t s = 1; s <= full; ++s) {
    const unsigned low = static_cast<unsigned>(std::countr_zero(s));
    const std::size_t rest = s & (s - 1);
    independent[s] = independent[rest] && !(nbr[low] & rest);
  }
  // parts[j][S] = partitions of S into j independent blocks.
  const std::size_t kmax = std::min(n, m);
  std::vector<std::vector<std::uint64_t>> parts(kmax + 1, std::vector<std::uint64_t>(full + 1, 0));
  parts[0][0] = 1;
  for (std::size_t j = 1; j <= kmax; ++j) {
    for (std::size_t s = 1; s <= full; ++s) {
      const std::size_t low = s & (~s + 1);
      const std::size_t rest = s ^ low;
      std::uint64_t acc = 0;
      // Block containing the lowest vertex: low | sub for sub ⊆ rest.
      for (std::size_t sub = rest;; sub = (sub - 1) & rest) {
        const std::size_t block = low | sub;
        if (independent[block]) acc += parts[j - 1][s ^ block];
        if (sub == 0) break;
      }
      parts[j][s] = acc;
    }
  }
  CountValue total = 0, falling = 1;
  for (std::size_t j = 1; j <= kmax; ++j) {
    falling *= static_cast<unsigned long>(m - j + 1);
    total += falling * mpz_class(std::to_string(parts[j][full]));
  }
  return total;
}

CountValue hom_connected(const Graph& f, const Graph& g) {
  if (f.order() >= 7 && f.order() <= 16 && g.order() >= 2 && is_complete(g))
    return clique_hom(f, g.order());
  return Search(f, g, flags_of(MorphismKind::hom)).run();
}

CountValue hom_product(const Graph& f, const Graph& g) {
  if (f.is_connected()) return hom_connected(f, g);
  // Identical components contribute identical factors.
  std::map<CanonicalForm, std::pair<Graph, unsigned long>> groups;
  CountValue result = 1;
  for (const auto& comp : f.components()) {
    Graph part = f.induced(comp);
    if (comp.size() <= kCanonicalBudget) {
      auto [it, fresh] = groups.try_emplace(canonical_form(part), part, 0);
      ++it->second.second;
    } else {
      result *= hom_connected(part, g);
      if (result == 0) return 0;
    }
  }
  for (auto& [form, entry] : groups) {
    CountValue base = hom_connected(entry.first, g);
    if (base == 0) return 0;
    mpz_class power;
    mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), entry.second);
    result *= power;
  }
  return result;
}

CountValue emb_sum(const Graph& f, const Graph& g) {
  if (f.order() > g.order()) return 0;
  if (!f.is_connected() || g.is_connected()) return Search(f, g, flags_of(MorphismKind::emb)).run();
  CountValue total = 0;
  for (const auto& comp : g.components())
    if (comp.size() >= f.order()) total += Search(f, g.induced(comp), flags_of(MorphismKind::emb)).run();
  return total;
}

}  // namespace

std::string_view kind_name(MorphismKind kind) {
  switch (kind) {
    case MorphismKind::hom: return "hom";
    case MorphismKind::emb: return "emb";
    case MorphismKind::strong_hom: return "s-hom";
    case MorphismKind::strong_emb: return "s-emb";
    case MorphismKind::epi: return "epi";
    case MorphismKind::strong_epi: return "s-epi";
  }
  return "?";
}

MorphismKind parse_kind(std::string_view name) {
  for (auto k : {MorphismKind::hom, MorphismKind::emb, MorphismKind::strong_hom, MorphismKind::strong_emb,
                 MorphismKind::epi, MorphismKind::strong_epi})
    if (kind_name(k) == name) return k;
  throw std::invalid_argument("unknown morphism kind: " + std::string(name));
}

CountValue count(MorphismKind kind, const Graph& f, const Graph& g) {
  switch (kind) {
    case MorphismKind::hom: return hom_product(f, g);
    case MorphismKind::emb: return emb_sum(f, g);
    default: return Search(f, g, flags_of(kind)).run();
  }
}

CountValue aut(const Graph& g) { return count(MorphismKind::emb, g, g); }

CountVector count_vector(MorphismKind kind, std::span<const Graph> family, const Graph& g,
                         Orientation orientation, unsigned jobs) {
  CountVector out;
  out.kind = kind;
  out.orientation = orientation;
  out.family.assign(family.begin(), family.end());
  out.values.assign(family.size(), 0);
  auto one = [&](std::size_t i) {
    out.values[i] = orientation == Orientation::left ? count(kind, family[i], g) : count(kind, g, family[i]);
  };
  parallel_for(family.size(), jobs, one);
  return out;
}

bool enumeration_less(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
  return canonical_form(a) < canonical_form(b);
}

namespace {

// Every isomorphism type F' with F' <= F.
std::vector<Graph> types_below(const Graph& f) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= f.order(); ++n)
    for (const auto& h : enumerate_graphs(n))
      if (n < f.order() || h.edge_count() <= f.edge_count()) out.push_back(h);
  return out;
}

std::unordered_map<CanonicalForm, std::size_t, CanonicalFormHash> index_family(std::span<const Graph> family) {
  std::unordered_map<CanonicalForm, std::size_t, CanonicalFormHash> index;
  for (std::size_t i = 0; i < family.size(); ++i) index.emplace(canonical_form(family[i]), i);
  return index;
}

}  // namespace

CountValue hom_from_emb(const Graph& f, std::span<const Graph> family, std::span<const CountValue> emb_values) {
  if (family.size() != emb_values.size()) throw std::invalid_argument("family and value lists differ in length");
  const auto index = index_family(family);
  mpq_class total = 0;
  for (const auto& h : types_below(f)) {
    auto it = index.find(canonical_form(h));
    if (it == index.end())
      throw Error("incomplete family: missing " + to_graph6(h) + " required below " + to_graph6(f));
    const CountValue e = count(MorphismKind::epi, f, h);
    if (e == 0) continue;
    total += mpq_class(e * emb_values[it->second], aut(h));
  }
  total.canonicalize();
  if (total.get_den() != 1) throw VerificationError("hom_from_emb produced a non-integral value");
  return total.get_num();
}

std::vector<CountValue> emb_from_hom(std::span<const Graph> family, std::span<const CountValue> hom_values) {
  if (family.size() != hom_values.size()) throw std::invalid_argument("family and value lists differ in length");
  const auto index = index_family(family);
  for (const auto& f : family)
    for (const auto& h : types_below(f))
      if (!index.contains(canonical_form(h)))
        throw Error("incomplete family: missing " + to_graph6(h) + " required below " + to_graph6(f));
  const std::size_t k = family.size();
  RationalMatrix t(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const CountValue e = count(MorphismKind::epi, family[i], family[j]);
      if (e != 0) t.at(i, j) = mpq_class(e, aut(family[j]));
    }
  std::vector<mpq_class> rhs(hom_values.begin(), hom_values.end());
  auto solved = solve(t, rhs);
  if (solved.status != SolveStatus::unique) throw VerificationError("hom-to-emb system is not uniquely solvable");
  std::vector<CountValue> out;
  for (auto& x : solved.x) {
    x.canonicalize();
    if (x.get_den() != 1 || x < 0) throw Error("hom values are not consistent with any graph");
    out.push_back(x.get_num());
  }
  return out;
}

std::size_t CountCache::KeyHash::operator()(const Key& k) const noexcept {
  CanonicalFormHash h;
  return h(k.f) * 31 + h(k.g) * 7 + static_cast<std::size_t>(k.kind);
}

CountValue CountCache::get(MorphismKind kind, const Graph& f, const Graph& g) {
  Key key;
  try {
    key = Key{kind, canonical_form(f), canonical_form(g)};
  } catch (const BudgetError&) {
    return count(kind, f, g);
  }
  {
    std::lock_guard lock(mutex_);
    if (auto it = table_.find(key); it != table_.end()) {
      ++hits_;
      return it->second;
    }
  }
  CountValue value = count(kind, f, g);
  std::lock_guard lock(mutex_);
  table_.emplace(std::move(key), value);
  return value;
}

std::size_t CountCache::size() const {
  std::lock_guard lock(mutex_);
  return table_.size();
}

std::size_t CountCache::hits() const {
  std::lock_guard lock(mutex_);
  return hits_;
}

}  // namespace homcount
