#ifndef HOMCOUNT_FACTORED_HPP
#define HOMCOUNT_FACTORED_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace homcount {

/// Prime factorization of a natural number whose exponents may themselves be
/// huge (hom counts of composites such as F_1 ⊔ r·F_2 with astronomical r).
/// Zero is represented explicitly.
class FactoredCount {
 public:
  FactoredCount() = default;  // the value 1
  static FactoredCount zero();
  /// Factors `value`; throws BudgetError if a cofactor of 64 bits or more
  /// survives trial division.
  static FactoredCount of(const mpz_class& value);
  static FactoredCount of(std::uint64_t value);

  bool is_zero() const noexcept { return zero_; }
  bool is_one() const noexcept { return !zero_ && exponents_.empty(); }
  const std::map<std::uint64_t, mpz_class>& exponents() const noexcept { return exponents_; }
  mpz_class exponent_of(std::uint64_t prime) const;

  FactoredCount& operator*=(const FactoredCount& other);
  friend FactoredCount operator*(FactoredCount a, const FactoredCount& b) { return a *= b; }
  FactoredCount pow(const mpz_class& e) const;

  /// log2 of the value (0 for zero and one); an estimate good to double precision.
  double log2() const;

  /// The value as an integer, or nullopt if it would exceed `max_bits`.
  std::optional<mpz_class> value(std::size_t max_bits = std::size_t{1} << 24) const;

  /// Decimal if at most `max_bits` bits, else "p1^e1 * p2^e2 * ...".
  std::string to_string(std::size_t max_bits = 4096) const;
  /// Inverse of to_string: a decimal, or "p1^e1 * p2^e2 * ..." with prime
  /// bases. ParseError on anything else.
  static FactoredCount parse(std::string_view text);

  friend bool operator==(const FactoredCount& a, const FactoredCount& b) {
    return a.zero_ == b.zero_ && a.exponents_ == b.exponents_;
  }

 private:
  bool zero_ = false;
  std::map<std::uint64_t, mpz_class> exponents_;
};

/// Prime factors of a 64-bit value with multiplicity (Pollard-Brent with
/// deterministic Miller-Rabin).
std::map<std::uint64_t, unsigned> factor_u64(std::uint64_t value);
bool is_prime_u64(std::uint64_t value);

}  // namespace homcount

#endif  // HOMCOUNT_FACTORED_HPP
