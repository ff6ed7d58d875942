#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cellini/rational.hpp"

namespace cellini {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> operator*(const std::vector<Rational>& v) const;
  bool operator==(const RationalMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Unique solution of a square system, or nullopt when singular.
std::optional<std::vector<Rational>> solve(RationalMatrix a, std::vector<Rational> b);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& a);

Rational determinant(RationalMatrix a);

}  // namespace cellini
