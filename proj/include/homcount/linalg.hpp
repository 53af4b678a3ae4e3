#ifndef HOMCOUNT_LINALG_HPP
#define HOMCOUNT_LINALG_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace homcount {

using Rational = mpq_class;

/// Dense matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RationalMatrix from_integers(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalMatrix transpose() const;
  /// "((a,b),(c,d))" with entries in lowest terms.
  std::string to_string() const;

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

std::size_t rank(const RationalMatrix& m);
Rational determinant(const RationalMatrix& m);
std::vector<Rational> multiply(const RationalMatrix& m, std::span<const Rational> x);

enum class SolveStatus { unique, inconsistent, underdetermined };

struct SolveResult {
  SolveStatus status = SolveStatus::inconsistent;
  std::vector<Rational> x;  // filled only when unique
};

/// Solves m·x = b exactly. Throws std::invalid_argument on a dimension mismatch.
SolveResult solve(const RationalMatrix& m, std::span<const Rational> b);

/// Primitive integer vector p with m·p = 0 and p[pivot_col] != 0; the other
/// free variables are set to zero and the first nonzero entry is positive.
/// Throws Error("no such vector") when every null vector vanishes at pivot_col.
std::vector<mpz_class> integer_nullspace_with_pivot(const RationalMatrix& m, std::size_t pivot_col);

}  // namespace homcount

#endif  // HOMCOUNT_LINALG_HPP
