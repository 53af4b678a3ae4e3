#include "homcount/linalg.hpp"

#include <sstream>
#include <stdexcept>

#include "homcount/errors.hpp"

namespace homcount {

namespace {

// Reduced row echelon form in place; returns the pivot column of each
// nonzero row. Columns at or beyond `limit` are never chosen as pivots.
std::vector<std::size_t> reduce(RationalMatrix& a, std::size_t limit) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < limit && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a.at(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(sel, j), a.at(row, j));
    const Rational inv = 1 / a.at(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a.at(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a.at(i, col) == 0) continue;
      const Rational factor = a.at(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a.at(i, j) -= factor * a.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RationalMatrix RationalMatrix::from_integers(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Rational>> q;
  for (const auto& r : rows) q.emplace_back(r.begin(), r.end());
  return from_rows(q);
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

std::string RationalMatrix::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? ",(" : "(");
    for (std::size_t j = 0; j < cols_; ++j) {
      Rational x = at(i, j);
      x.canonicalize();
      out << (j ? "," : "") << x.get_str();
    }
    out << ')';
  }
  out << ')';
  return out.str();
}

std::size_t rank(const RationalMatrix& m) {
  RationalMatrix a = m;
  return reduce(a, a.cols()).size();
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  RationalMatrix a = m;
  Rational det = 1;
  const std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && a.at(sel, col) == 0) ++sel;
    if (sel == n) return 0;
    if (sel != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(sel, j), a.at(col, j));
      det = -det;
    }
    det *= a.at(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a.at(i, col) == 0) continue;
      const Rational factor = a.at(i, col) / a.at(col, col);
      for (std::size_t j = col; j < n; ++j) a.at(i, j) -= factor * a.at(col, j);
    }
  }
  return det;
}

std::vector<Rational> multiply(const RationalMatrix& m, std::span<const Rational> x) {
  if (x.size() != m.cols()) throw std::invalid_argument("dimension mismatch in matrix-vector product");
  std::vector<Rational> out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * x[j];
  return out;
}

SolveResult solve(const RationalMatrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("dimension mismatch in solve");
  RationalMatrix a(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) a.at(i, j) = m.at(i, j);
    a.at(i, m.cols()) = b[i];
  }
  const auto pivots = reduce(a, m.cols());
  SolveResult r;
  for (std::size_t i = pivots.size(); i < a.rows(); ++i)
    if (a.at(i, m.cols()) != 0) {
      r.status = SolveStatus::inconsistent;
      return r;
    }
  if (pivots.size() < m.cols()) {
    r.status = SolveStatus::underdetermined;
    return r;
  }
  r.status = SolveStatus::unique;
  r.x.assign(m.cols(), 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) r.x[pivots[i]] = a.at(i, m.cols());
  return r;
}

std::vector<mpz_class> integer_nullspace_with_pivot(const RationalMatrix& m, std::size_t pivot_col) {
  if (pivot_col >= m.cols()) throw std::invalid_argument("pivot column out of range");
  // Move the pivot column to the end so that it is the last candidate for a
  // pivot; it is free exactly when it lies in the span of the others.
  const std::size_t c = m.cols();
  std::vector<std::size_t> perm;
  for (std::size_t j = 0; j < c; ++j)
    if (j != pivot_col) perm.push_back(j);
  perm.push_back(pivot_col);
  RationalMatrix a(m.rows(), c);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < c; ++j) a.at(i, j) = m.at(i, perm[j]);
  const auto pivots = reduce(a, c);
  if (!pivots.empty() && pivots.back() == c - 1) throw Error("no such vector: pivot column is independent");

  std::vector<Rational> x(c, 0);
  x[c - 1] = 1;
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -a.at(i, c - 1);

  mpz_class lcm = 1;
  for (auto& v : x) {
    v.canonicalize();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
  }
  std::vector<mpz_class> p(c);
  mpz_class g = 0;
  for (std::size_t j = 0; j < c; ++j) {
    Rational scaled = x[j] * lcm;
    scaled.canonicalize();
    p[perm[j]] = scaled.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), p[perm[j]].get_mpz_t());
  }
  for (auto& v : p) v /= g;
  for (const auto& v : p) {
    if (v == 0) continue;
    if (v < 0)
      for (auto& w : p) w = -w;
    break;
  }
  return p;
}

}  // namespace homcount
