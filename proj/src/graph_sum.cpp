#include "homcount/graph_sum.hpp"

#include <sstream>
#include <stdexcept>

#include "homcount/canonical.hpp"
#include "homcount/errors.hpp"
#include "homcount/graph6.hpp"
#include "homcount/structure.hpp"

namespace homcount {

GraphSum::GraphSum(const Graph& g) { add(g); }

GraphSum& GraphSum::add(const Graph& g, const mpz_class& copies) {
  if (copies < 0) throw std::invalid_argument("negative multiplicity");
  if (copies == 0) return *this;
  for (const auto& comp : g.components()) {
    Graph part = g.is_connected() ? g : g.induced(comp);
    std::optional<CanonicalForm> form;
    if (part.order() <= kCanonicalBudget) {
      part = canonical_graph(part);
      form = canonical_form(part);
    }
    bool merged = false;
    for (std::size_t i = 0; i < parts_.size() && !merged; ++i) {
      const bool same = form ? forms_[i] == form : (!forms_[i] && parts_[i].component == part);
      if (same) {
        parts_[i].copies += copies;
        merged = true;
      }
    }
    if (!merged) {
      parts_.push_back({std::move(part), copies});
      forms_.push_back(std::move(form));
    }
  }
  return *this;
}

GraphSum& GraphSum::add(const GraphSum& other, const mpz_class& copies) {
  if (copies < 0) throw std::invalid_argument("negative multiplicity");
  if (copies == 0) return *this;
  for (const auto& p : other.parts_) add(p.component, p.copies * copies);
  return *this;
}

GraphSum GraphSum::scaled(const mpz_class& copies) const {
  GraphSum out;
  out.add(*this, copies);
  return out;
}

mpz_class GraphSum::order() const {
  mpz_class n = 0;
  for (const auto& p : parts_) n += p.copies * static_cast<unsigned long>(p.component.order());
  return n;
}

mpz_class GraphSum::edge_count() const {
  mpz_class m = 0;
  for (const auto& p : parts_) m += p.copies * static_cast<unsigned long>(p.component.edge_count());
  return m;
}

bool GraphSum::has_isolated_vertex() const {
  for (const auto& p : parts_)
    if (p.component.order() == 1) return true;
  return false;
}

bool GraphSum::is_planar() const {
  for (const auto& p : parts_)
    if (!homcount::is_planar(p.component)) return false;
  return true;
}

bool GraphSum::is_k_colorable(std::size_t k) const {
  for (const auto& p : parts_)
    if (!homcount::is_k_colorable(p.component, k)) return false;
  return true;
}

std::optional<Graph> GraphSum::to_graph(std::size_t max_vertices) const {
  if (parts_.empty()) throw Error("empty graph sum");
  if (order() > max_vertices) return std::nullopt;
  std::vector<Edge> edges;
  Vertex base = 0;
  for (const auto& p : parts_) {
    const auto comp_edges = p.component.edges();
    for (unsigned long c = 0; c < p.copies.get_ui(); ++c) {
      for (auto [u, v] : comp_edges) edges.emplace_back(base + u, base + v);
      base += static_cast<Vertex>(p.component.order());
    }
  }
  return Graph::from_edges(base, edges);
}

std::string GraphSum::describe() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < parts_.size(); ++i)
    out << (i ? " + " : "") << parts_[i].copies.get_str() << '*' << to_graph6(parts_[i].component);
  return out.str();
}

CountValue emb(const Graph& f, const GraphSum& g) {
  if (!f.is_connected()) throw std::invalid_argument("emb into a graph sum needs a connected pattern");
  CountValue total = 0;
  for (const auto& p : g.parts())
    if (p.component.order() >= f.order()) total += p.copies * emb(f, p.component);
  return total;
}

CountValue hom(const Graph& f, const GraphSum& g) {
  CountValue result = 1;
  for (const auto& comp : f.components()) {
    const Graph part = f.is_connected() ? f : f.induced(comp);
    CountValue s = 0;
    for (const auto& p : g.parts()) s += p.copies * hom(part, p.component);
    result *= s;
    if (result == 0) break;
  }
  return result;
}

CountValue count(MorphismKind kind, const Graph& f, const GraphSum& g) {
  switch (kind) {
    case MorphismKind::hom: return hom(f, g);
    case MorphismKind::emb: return emb(f, g);
    default: throw std::invalid_argument("only hom and emb are supported on graph sums");
  }
}

FactoredCount hom_factored(const GraphSum& f, const Graph& g) {
  FactoredCount result;
  for (const auto& p : f.parts()) {
    const CountValue c = hom(p.component, g);
    if (c == 0) return FactoredCount::zero();
    result *= FactoredCount::of(c).pow(p.copies);
  }
  return result;
}

CountValue hom(const GraphSum& f, const Graph& g, std::size_t max_bits) {
  auto v = hom_factored(f, g).value(max_bits);
  if (!v) throw BudgetError("hom count exceeds " + std::to_string(max_bits) + " bits");
  return *v;
}

}  // namespace homcount
