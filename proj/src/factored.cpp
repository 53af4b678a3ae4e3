#include "homcount/factored.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "homcount/errors.hpp"

namespace homcount {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

u64 pollard_brent(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 x) { return (mul_mod(x, x, n) + c) % n; };
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    u64 r = 1;
    constexpr u64 m = 128;
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(u64 n, std::map<u64, unsigned>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    ++out[n];
    return;
  }
  const u64 d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::map<u64, unsigned> factor_u64(u64 value) {
  std::map<u64, unsigned> out;
  for (u64 p = 2; p < 1000 && p * p <= value; ++p)
    while (value % p == 0) {
      ++out[p];
      value /= p;
    }
  factor_into(value, out);
  return out;
}

FactoredCount FactoredCount::zero() {
  FactoredCount f;
  f.zero_ = true;
  return f;
}

FactoredCount FactoredCount::of(u64 value) {
  if (value == 0) return zero();
  FactoredCount f;
  for (auto [p, e] : factor_u64(value)) f.exponents_[p] = e;
  return f;
}

FactoredCount FactoredCount::of(const mpz_class& value) {
  if (value < 0) throw std::invalid_argument("FactoredCount of a negative value");
  if (value == 0) return zero();
  if (value.fits_ulong_p()) return of(static_cast<u64>(value.get_ui()));
  FactoredCount f;
  mpz_class rest = value;
  for (u64 p = 2; p < (1U << 20); p += (p == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      unsigned e = 0;
      while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        ++e;
      }
      f.exponents_[p] += e;
    }
    if (rest.fits_ulong_p()) break;
  }
  if (!rest.fits_ulong_p())
    throw BudgetError("cannot factor count: cofactor of " + std::to_string(mpz_sizeinbase(rest.get_mpz_t(), 2)) +
                      " bits");
  for (auto [p, e] : factor_u64(rest.get_ui())) f.exponents_[p] += e;
  return f;
}

mpz_class FactoredCount::exponent_of(u64 prime) const {
  auto it = exponents_.find(prime);
  return it == exponents_.end() ? mpz_class(0) : it->second;
}

FactoredCount& FactoredCount::operator*=(const FactoredCount& other) {
  if (zero_ || other.zero_) {
    *this = zero();
    return *this;
  }
  for (const auto& [p, e] : other.exponents_) exponents_[p] += e;
  return *this;
}

FactoredCount FactoredCount::pow(const mpz_class& e) const {
  if (e == 0) return FactoredCount();
  FactoredCount r = *this;
  for (auto& [p, x] : r.exponents_) x *= e;
  return r;
}

double FactoredCount::log2() const {
  double s = 0;
  for (const auto& [p, e] : exponents_) s += e.get_d() * std::log2(static_cast<double>(p));
  return s;
}

std::optional<mpz_class> FactoredCount::value(std::size_t max_bits) const {
  if (zero_) return mpz_class(0);
  if (log2() > static_cast<double>(max_bits)) return std::nullopt;
  mpz_class r = 1, t;
  for (const auto& [p, e] : exponents_) {
    mpz_ui_pow_ui(t.get_mpz_t(), p, e.get_ui());
    r *= t;
  }
  return r;
}

std::string FactoredCount::to_string(std::size_t max_bits) const {
  if (auto v = value(max_bits)) return v->get_str();
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, e] : exponents_) {
    if (!first) out << " * ";
    first = false;
    out << p << '^' << e.get_str();
  }
  return out.str();
}

FactoredCount FactoredCount::parse(std::string_view text) {
  auto is_space = [](char c) { return c == ' ' || c == '\t'; };
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && is_space(text[i])) ++i;
  };
  auto digits = [&]() -> std::string {
    const std::size_t start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == start) throw ParseError("expected a number", i);
    return std::string(text.substr(start, i - start));
  };
  skip();
  if (text.find('^') == std::string_view::npos) {
    const std::string d = digits();
    skip();
    if (i != text.size()) throw ParseError("trailing characters after count", i);
    return of(mpz_class(d));
  }
  FactoredCount f;
  while (true) {
    const std::size_t at = i;
    const std::string base = digits();
    if (base.size() > 19) throw ParseError("prime base out of range", at);
    const u64 p = std::stoull(base);
    if (!is_prime_u64(p)) throw ParseError("factor base " + base + " is not prime", at);
    // A bare prime stands for p^1.
    mpz_class e = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      e = mpz_class(digits());
    }
    skip();
    if (e > 0) f.exponents_[p] += e;
    skip();
    if (i == text.size()) break;
    if (text[i] != '*') throw ParseError("expected '*'", i);
    ++i;
    skip();
  }
  return f;
}

}  // namespace homcount
