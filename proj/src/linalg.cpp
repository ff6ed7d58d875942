#include "cellini/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace cellini {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Rational> RationalMatrix::operator*(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  std::vector<Rational> out(rows_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  return out;
}

namespace {

// Gauss-Jordan on [a | rhs]; returns false when a is singular.
bool eliminate(RationalMatrix& a, RationalMatrix& rhs) {
  const std::size_t n = a.rows();
  if (a.cols() != n || rhs.rows() != n) throw std::invalid_argument("eliminate: shape mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return false;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      for (std::size_t c = 0; c < rhs.cols(); ++c) std::swap(rhs(pivot, c), rhs(col, c));
    }
    const Rational inv = 1 / a(col, col);
    for (std::size_t c = 0; c < n; ++c) a(col, c) *= inv;
    for (std::size_t c = 0; c < rhs.cols(); ++c) rhs(col, c) *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Rational f = a(r, col);
      for (std::size_t c = 0; c < n; ++c) a(r, c) -= f * a(col, c);
      for (std::size_t c = 0; c < rhs.cols(); ++c) rhs(r, c) -= f * rhs(col, c);
    }
  }
  return true;
}

}  // namespace

std::optional<std::vector<Rational>> solve(RationalMatrix a, std::vector<Rational> b) {
  RationalMatrix rhs(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
  if (!eliminate(a, rhs)) return std::nullopt;
  for (std::size_t i = 0; i < b.size(); ++i) b[i] = rhs(i, 0);
  return b;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& a) {
  RationalMatrix work = a;
  RationalMatrix inv = RationalMatrix::identity(a.rows());
  if (!eliminate(work, inv)) return std::nullopt;
  return inv;
}

Rational determinant(RationalMatrix a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("determinant: matrix not square");
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      const Rational f = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

}  // namespace cellini
