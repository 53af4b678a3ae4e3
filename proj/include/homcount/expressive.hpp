#ifndef HOMCOUNT_EXPRESSIVE_HPP
#define HOMCOUNT_EXPRESSIVE_HPP

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "homcount/count.hpp"
#include "homcount/enumerate.hpp"
#include "homcount/linalg.hpp"

namespace homcount {

/// (emb(F_i, F_j)) for i in rows, j in cols, over the connected enumeration.
RationalMatrix emb_matrix(std::span<const EnumerationIndex> rows, std::span<const EnumerationIndex> cols,
                          CountCache* cache = nullptr);

/// Expressiveness flags for F_1, F_2, ... computed in index order.
///
/// F_1 is expressive; F_s (s >= 2) is expressive when the square matrix
/// (emb(F_i, F_j)) with rows {1} ∪ I_{s-1} and columns I_{s-1} ∪ {s} has full
/// rank, where I_{s-1} holds the expressive indices in 2..s-1.
class ExpressiveLedger {
 public:
  /// Identifies the enumeration order the flags were computed under; cache
  /// files carrying another tag are ignored.
  static constexpr std::string_view kVersionTag = "connected|V|,|E|,canonical-asc/v1";
  /// Connected graphs through 6 vertices.
  static constexpr EnumerationIndex kDefaultBudget = 143;

  explicit ExpressiveLedger(EnumerationIndex budget = kDefaultBudget);

  EnumerationIndex budget() const noexcept { return budget_; }
  EnumerationIndex checked_upto() const noexcept { return flags_.size(); }

  bool is_expressive(EnumerationIndex s);
  /// I_{s-1} = {i | 2 <= i <= s-1, F_i expressive}.
  std::vector<EnumerationIndex> expressive_below(EnumerationIndex s);
  /// Least expressive index > s; BudgetError("budget exhausted") if none
  /// within the budget.
  EnumerationIndex next_expressive_after(EnumerationIndex s);
  void extend_to(EnumerationIndex s);

  CountCache& cache() noexcept { return cache_; }

  std::string to_json() const;
  /// Loads flags from a cache file if it exists and carries the current
  /// version tag; returns whether anything was loaded.
  bool load(const std::string& path);
  void save(const std::string& path) const;

 private:
  void push_next();

  EnumerationIndex budget_;
  std::vector<bool> flags_;  // flags_[i-1] for F_i
  std::vector<EnumerationIndex> expressive_;  // current I (indices >= 2)
  std::vector<mpq_class> weights_;  // solves U^T w = (|V(F_j)|)_j for the upper triangular U over I
  CountCache cache_;
};

/// Indices I_{s-1} ∪ {s} and the matching integer coefficients p_j.
struct Coefficients {
  std::vector<EnumerationIndex> indices;
  std::vector<mpz_class> p;
};

/// For non-expressive s: p with p_s != 0 and Σ_j p_j·emb(F_i, F_j) = 0 for
/// every i in {1} ∪ I_{s-1}. Re-verified against fresh counts.
Coefficients dependency_coefficients(EnumerationIndex s, ExpressiveLedger& ledger);

/// For expressive s: p with p_s != 0 annihilating the rows I_{s-1} (not row
/// 1). Throws VerificationError if the K_1 row sum Σ p_j·|V(F_j)| vanishes.
Coefficients case1_coefficients(EnumerationIndex s, ExpressiveLedger& ledger);

}  // namespace homcount

#endif  // HOMCOUNT_EXPRESSIVE_HPP
