#include "homcount/expressive.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "homcount/errors.hpp"

namespace homcount {

namespace {

CountValue emb_entry(EnumerationIndex i, EnumerationIndex j, CountCache* cache) {
  const Graph& fi = connected_graph(i);
  const Graph& fj = connected_graph(j);
  return cache ? cache->get(MorphismKind::emb, fi, fj) : emb(fi, fj);
}

void check_annihilates(const Coefficients& c, std::span<const EnumerationIndex> rows, const char* what) {
  for (EnumerationIndex i : rows) {
    mpz_class sum = 0;
    for (std::size_t k = 0; k < c.indices.size(); ++k) sum += c.p[k] * emb(connected_graph(i), connected_graph(c.indices[k]));
    if (sum != 0)
      throw VerificationError(std::string(what) + ": coefficients fail to annihilate row " + std::to_string(i));
  }
  if (c.p.back() == 0) throw VerificationError(std::string(what) + ": coefficient of the last index vanished");
}

}  // namespace

RationalMatrix emb_matrix(std::span<const EnumerationIndex> rows, std::span<const EnumerationIndex> cols,
                          CountCache* cache) {
  RationalMatrix m(rows.size(), cols.size());
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b) m.at(a, b) = emb_entry(rows[a], cols[b], cache);
  return m;
}

ExpressiveLedger::ExpressiveLedger(EnumerationIndex budget) : budget_(budget) {
  if (budget_ < 1) throw std::invalid_argument("expressive budget must be at least 1");
  connected_graph(budget_);  // validates the budget against the enumeration
}

// The defining matrix is [[a^T, α], [U, c]] with U upper triangular (emb
// vanishes from later to earlier graphs) and positive diagonal aut(F_i), so
// its determinant is ±det(U)·(α − w·c) with U^T w = a. The weights w extend
// by one entry whenever a new expressive index joins I.
void ExpressiveLedger::push_next() {
  const EnumerationIndex t = flags_.size() + 1;
  if (t > budget_) throw BudgetError("expressive budget exhausted at index " + std::to_string(budget_));
  if (t == 1) {
    flags_.push_back(true);
    return;
  }
  const mpq_class alpha = mpq_class(emb_entry(1, t, &cache_));
  mpq_class combined = 0;
  for (std::size_t k = 0; k < expressive_.size(); ++k) combined += weights_[k] * emb_entry(expressive_[k], t, &cache_);
  const bool expressive = alpha != combined;
  flags_.push_back(expressive);
  if (expressive) {
    const CountValue diagonal = emb_entry(t, t, &cache_);
    if (diagonal <= 0) throw VerificationError("automorphism count must be positive");
    expressive_.push_back(t);
    weights_.push_back((alpha - combined) / mpq_class(diagonal));
  }
}

void ExpressiveLedger::extend_to(EnumerationIndex s) {
  while (flags_.size() < s) push_next();
}

bool ExpressiveLedger::is_expressive(EnumerationIndex s) {
  if (s == 0) throw std::invalid_argument("enumeration indices start at 1");
  extend_to(s);
  return flags_[s - 1];
}

std::vector<EnumerationIndex> ExpressiveLedger::expressive_below(EnumerationIndex s) {
  if (s >= 2) extend_to(s - 1);
  std::vector<EnumerationIndex> out;
  for (EnumerationIndex i = 2; i < s; ++i)
    if (flags_[i - 1]) out.push_back(i);
  return out;
}

EnumerationIndex ExpressiveLedger::next_expressive_after(EnumerationIndex s) {
  for (EnumerationIndex t = s + 1; t <= budget_; ++t)
    if (is_expressive(t)) return t;
  throw BudgetError("budget exhausted: no expressive graph after index " + std::to_string(s) + " within " +
                    std::to_string(budget_));
}

std::string ExpressiveLedger::to_json() const {
  nlohmann::json j;
  j["version"] = std::string(kVersionTag);
  j["checked_upto"] = flags_.size();
  j["flags"] = flags_;
  return j.dump();
}

bool ExpressiveLedger::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) return false;
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception&) {
    return false;
  }
  if (!j.contains("version") || j["version"] != std::string(kVersionTag)) return false;
  const auto flags = j.value("flags", std::vector<bool>{});
  if (flags.empty() || !flags.front()) return false;
  flags_.clear();
  expressive_.clear();
  weights_.clear();
  // Rebuild the weights from the stored flags; only the entries of U and a are needed.
  flags_.push_back(true);
  for (EnumerationIndex t = 2; t <= std::min<std::size_t>(flags.size(), budget_); ++t) {
    if (flags[t - 1]) {
      mpq_class combined = 0;
      for (std::size_t k = 0; k < expressive_.size(); ++k)
        combined += weights_[k] * emb_entry(expressive_[k], t, &cache_);
      const mpq_class alpha = mpq_class(emb_entry(1, t, &cache_));
      expressive_.push_back(t);
      weights_.push_back((alpha - combined) / mpq_class(emb_entry(t, t, &cache_)));
    }
    flags_.push_back(flags[t - 1]);
  }
  return true;
}

void ExpressiveLedger::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw Error("cannot write expressive cache " + path);
  out << to_json() << '\n';
}

Coefficients dependency_coefficients(EnumerationIndex s, ExpressiveLedger& ledger) {
  if (ledger.is_expressive(s)) throw Error("F_" + std::to_string(s) + " is expressive");
  Coefficients c;
  c.indices = ledger.expressive_below(s);
  std::vector<EnumerationIndex> rows{1};
  rows.insert(rows.end(), c.indices.begin(), c.indices.end());
  c.indices.push_back(s);
  const RationalMatrix m = emb_matrix(rows, c.indices, &ledger.cache());
  c.p = integer_nullspace_with_pivot(m, c.indices.size() - 1);
  check_annihilates(c, rows, "dependency coefficients");
  return c;
}

Coefficients case1_coefficients(EnumerationIndex s, ExpressiveLedger& ledger) {
  if (!ledger.is_expressive(s)) throw Error("F_" + std::to_string(s) + " is not expressive");
  Coefficients c;
  c.indices = ledger.expressive_below(s);
  const std::vector<EnumerationIndex> rows = c.indices;
  c.indices.push_back(s);
  const RationalMatrix m = emb_matrix(rows, c.indices, &ledger.cache());
  c.p = integer_nullspace_with_pivot(m, c.indices.size() - 1);
  check_annihilates(c, rows, "case-1 coefficients");
  mpz_class size_balance = 0;
  for (std::size_t k = 0; k < c.indices.size(); ++k)
    size_balance += c.p[k] * static_cast<unsigned long>(connected_graph(c.indices[k]).order());
  if (size_balance == 0)
    throw VerificationError("precondition violated: K_1 row of the case-1 combination vanishes for F_" +
                            std::to_string(s));
  return c;
}

}  // namespace homcount
