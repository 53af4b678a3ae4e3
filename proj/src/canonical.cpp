#include "homcount/canonical.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "homcount/errors.hpp"

namespace homcount {

namespace {

using Bits = std::vector<std::uint64_t>;

// Upper-triangle bits of g relabelled so that order[p] sits at position p.
Bits triangle_bits(const Graph& g, const std::vector<Vertex>& order) {
  const std::size_t n = order.size();
  const std::size_t total = n * (n - 1) / 2;
  Bits bits((total + 63) / 64, 0);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++k)
      if (g.adjacent(order[i], order[j])) bits[k / 64] |= std::uint64_t{1} << (63 - k % 64);
  return bits;
}

// Individualization-refinement search over one connected graph of at most 64
// vertices, rows given as local bit masks.
class ComponentSearch {
 public:
  explicit ComponentSearch(std::vector<std::uint64_t> rows) : rows_(std::move(rows)), n_(rows_.size()) {}

  std::vector<Vertex> run() {
    std::vector<int> colors(n_, 0);
    search(colors);
    return best_order_;
  }

 private:
  void refine(std::vector<int>& colors) const {
    std::vector<std::pair<std::vector<int>, Vertex>> sig(n_);
    std::size_t classes = count_classes(colors);
    while (true) {
      for (Vertex v = 0; v < n_; ++v) {
        auto& s = sig[v].first;
        s.clear();
        s.push_back(colors[v]);
        for (std::uint64_t r = rows_[v]; r; r &= r - 1) s.push_back(colors[std::countr_zero(r)]);
        std::sort(s.begin() + 1, s.end());
        sig[v].second = v;
      }
      std::sort(sig.begin(), sig.end());
      int rank = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        if (i > 0 && sig[i].first != sig[i - 1].first) ++rank;
        colors[sig[i].second] = rank;
      }
      const auto now = static_cast<std::size_t>(rank + 1);
      if (now == classes) return;
      classes = now;
    }
  }

  static std::size_t count_classes(const std::vector<int>& colors) {
    std::vector<int> c(colors);
    std::sort(c.begin(), c.end());
    return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
  }

  void search(std::vector<int> colors) {
    refine(colors);
    std::vector<int> count(n_, 0);
    for (int c : colors) ++count[c];
    int target = -1;
    for (std::size_t c = 0; c < n_; ++c)
      if (count[c] > 1) {
        target = static_cast<int>(c);
        break;
      }
    if (target < 0) {
      leaf(colors);
      return;
    }
    std::vector<Vertex> tried;
    for (Vertex v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      bool twin = false;
      for (Vertex w : tried) {
        const std::uint64_t mask = ~((std::uint64_t{1} << v) | (std::uint64_t{1} << w));
        if (((rows_[v] ^ rows_[w]) & mask) == 0) {
          twin = true;
          break;
        }
      }
      if (twin) continue;
      std::vector<int> next(colors);
      for (auto& c : next) c = 2 * c + 1;
      next[v] = 2 * target;
      search(std::move(next));
      tried.push_back(v);
    }
  }

  void leaf(const std::vector<int>& colors) {
    std::vector<Vertex> order(n_);
    for (Vertex v = 0; v < n_; ++v) order[colors[v]] = v;
    const std::size_t total = n_ * (n_ - 1) / 2;
    Bits bits((total + 63) / 64, 0);
    std::size_t k = 0;
    for (std::size_t j = 1; j < n_; ++j)
      for (std::size_t i = 0; i < j; ++i, ++k)
        if ((rows_[order[i]] >> order[j]) & 1U) bits[k / 64] |= std::uint64_t{1} << (63 - k % 64);
    if (best_order_.empty() || bits < best_bits_) {
      best_bits_ = std::move(bits);
      best_order_ = std::move(order);
    }
  }

  std::vector<std::uint64_t> rows_;
  std::size_t n_;
  Bits best_bits_;
  std::vector<Vertex> best_order_;
};

struct LabelledComponent {
  CanonicalForm form;
  std::vector<Vertex> order;  // original vertices in canonical position order
};

LabelledComponent label_component(const Graph& g, const std::vector<Vertex>& comp, std::size_t budget) {
  const std::size_t n = comp.size();
  if (n > budget || n > 64)
    throw BudgetError("canonicalization budget exceeded: component with " + std::to_string(n) +
                      " vertices (budget " + std::to_string(std::min<std::size_t>(budget, 64)) + ")");
  LabelledComponent out;
  out.form.n = static_cast<std::uint32_t>(n);
  if (n == 1) {
    out.order = comp;
    return out;
  }
  std::vector<std::uint64_t> rows(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && g.adjacent(comp[i], comp[j])) rows[i] |= std::uint64_t{1} << j;
  auto local = ComponentSearch(std::move(rows)).run();
  out.order.reserve(n);
  for (Vertex v : local) out.order.push_back(comp[v]);
  out.form.bits = triangle_bits(g, out.order);
  return out;
}

std::vector<LabelledComponent> label_components(const Graph& g, std::size_t budget) {
  std::vector<LabelledComponent> parts;
  for (const auto& comp : g.components()) parts.push_back(label_component(g, comp, budget));
  std::stable_sort(parts.begin(), parts.end(),
                   [](const LabelledComponent& a, const LabelledComponent& b) { return a.form < b.form; });
  return parts;
}

}  // namespace

std::string CanonicalForm::bit_string() const {
  std::string s;
  const std::size_t total = static_cast<std::size_t>(n) * (n - 1) / 2;
  for (std::size_t k = 0; k < total; ++k) s.push_back(((bits[k / 64] >> (63 - k % 64)) & 1U) ? '1' : '0');
  return s;
}

std::size_t CanonicalFormHash::operator()(const CanonicalForm& f) const noexcept {
  std::size_t h = std::hash<std::uint32_t>{}(f.n);
  for (auto w : f.bits) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::vector<Vertex> canonical_labeling(const Graph& g, std::size_t budget) {
  std::vector<Vertex> order;
  order.reserve(g.order());
  for (auto& part : label_components(g, budget)) order.insert(order.end(), part.order.begin(), part.order.end());
  return order;
}

CanonicalForm canonical_form(const Graph& g, std::size_t budget) {
  if (g.is_connected()) return label_component(g, g.components().front(), budget).form;
  CanonicalForm f;
  f.n = static_cast<std::uint32_t>(g.order());
  f.bits = triangle_bits(g, canonical_labeling(g, budget));
  return f;
}

Graph canonical_graph(const Graph& g, std::size_t budget) {
  const auto order = canonical_labeling(g, budget);
  std::vector<Vertex> position(g.order());
  for (std::size_t p = 0; p < order.size(); ++p) position[order[p]] = static_cast<Vertex>(p);
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(position[u], position[v]);
  return Graph::from_edges(g.order(), edges);
}

std::vector<CanonicalForm> component_forms(const Graph& g, std::size_t budget) {
  std::vector<CanonicalForm> forms;
  for (auto& part : label_components(g, budget)) forms.push_back(std::move(part.form));
  return forms;
}

bool is_isomorphic(const Graph& g, const Graph& h, std::size_t budget) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  if (g.components().size() != h.components().size()) return false;
  if (degree_histogram(g) != degree_histogram(h)) return false;
  return component_forms(g, budget) == component_forms(h, budget);
}

}  // namespace homcount
