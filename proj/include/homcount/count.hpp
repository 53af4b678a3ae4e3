#ifndef HOMCOUNT_COUNT_HPP
#define HOMCOUNT_COUNT_HPP

#include <cstddef>
#include <mutex>
#include <span>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "homcount/canonical.hpp"
#include "homcount/graph.hpp"

namespace homcount {

using CountValue = mpz_class;

enum class MorphismKind { hom, emb, strong_hom, strong_emb, epi, strong_epi };

/// "hom", "emb", "s-hom", "s-emb", "epi", "s-epi".
std::string_view kind_name(MorphismKind kind);
MorphismKind parse_kind(std::string_view name);

/// Number of maps V(f) -> V(g) of the given kind.
CountValue count(MorphismKind kind, const Graph& f, const Graph& g);

inline CountValue hom(const Graph& f, const Graph& g) { return count(MorphismKind::hom, f, g); }
inline CountValue emb(const Graph& f, const Graph& g) { return count(MorphismKind::emb, f, g); }

CountValue aut(const Graph& g);

enum class Orientation { left, right };

/// Counts of one kind against a family. Left entries are count(F, G), right
/// entries count(G, F).
struct CountVector {
  MorphismKind kind = MorphismKind::hom;
  Orientation orientation = Orientation::left;
  std::vector<Graph> family;
  std::vector<CountValue> values;
};

/// Entry-wise counting; with jobs > 1 the entries are split across threads,
/// the output order is always the family order.
CountVector count_vector(MorphismKind kind, std::span<const Graph> family, const Graph& g,
                         Orientation orientation, unsigned jobs = 1);

/// hom(F, G) from the emb values of G over a family containing every
/// isomorphism type F' with F' <= F (fewer vertices, or as many vertices and
/// at most as many edges). Throws Error naming a missing type otherwise.
CountValue hom_from_emb(const Graph& f, std::span<const Graph> family, std::span<const CountValue> emb_values);

/// Inverse transform: emb values over `family` from hom values over the same
/// family, which must be closed under F' <= F.
std::vector<CountValue> emb_from_hom(std::span<const Graph> family, std::span<const CountValue> hom_values);

/// Thread-safe memo of counts keyed by (kind, canonical F, canonical G).
/// Graphs whose components exceed the canonicalization budget bypass the cache.
class CountCache {
 public:
  CountValue get(MorphismKind kind, const Graph& f, const Graph& g);
  std::size_t size() const;
  std::size_t hits() const;

 private:
  struct Key {
    MorphismKind kind;
    CanonicalForm f, g;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };
  mutable std::mutex mutex_;
  std::unordered_map<Key, CountValue, KeyHash> table_;
  std::size_t hits_ = 0;
};

/// Enumeration-order comparison: (|V|, |E|, canonical form).
bool enumeration_less(const Graph& a, const Graph& b);

}  // namespace homcount

#endif  // HOMCOUNT_COUNT_HPP
