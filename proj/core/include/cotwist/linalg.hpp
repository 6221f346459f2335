#pragma once

// Dense exact linear algebra over Q: reduced row echelon form, rank and
// nullspace by Gauss-Jordan elimination on GMP rationals.

#include <cstddef>
#include <vector>

#include "cotwist/scalars.hpp"

namespace cotwist {

class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  /// Multiplies by a column vector.
  std::vector<Rational> apply(const std::vector<Rational>& x) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> entries_;
};

struct RowEchelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivot_columns;
};

RowEchelon reduced_row_echelon(RationalMatrix m);
std::size_t matrix_rank(const RationalMatrix& m);

/// Basis of {x : M x = 0}: one vector per free column, with that free
/// coordinate set to 1 and the other free coordinates 0.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

}  // namespace cotwist
