#include "cotwist/linalg.hpp"

#include <utility>

#include "cotwist/error.hpp"

namespace cotwist {

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& x) const {
  if (x.size() != cols_) throw InputError("RationalMatrix::apply: dimension mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if ((*this)(i, j) != 0 && x[j] != 0) out[i] += (*this)(i, j) * x[j];
    }
  }
  return out;
}

RowEchelon reduced_row_echelon(RationalMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(pivot, j));
    }
    const Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) {
      if (m(row, j) != 0) m(row, j) *= inv;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rational factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (m(row, j) != 0) m(i, j) -= factor * m(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t matrix_rank(const RationalMatrix& m) { return reduced_row_echelon(m).pivot_columns.size(); }

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
  const auto [r, pivots] = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace cotwist
