#include "cotwist/cocycles.hpp"

#include <algorithm>

#include "cotwist/error.hpp"

namespace cotwist {

namespace {

// Accumulates prod u^k without materializing intermediate units.
class UnitAccumulator {
 public:
  void multiply_power(const UnitScalar& u, std::int64_t k) {
    if (k == 0 || u.is_one()) return;
    if (u.coefficient() != 1) coefficient_ *= rational_pow(u.coefficient(), k);
    for (const auto& [name, exp] : u.exponents().entries()) exponents_.emplace_back(name, exp * k);
  }
  UnitScalar result() {
    return UnitScalar(std::move(coefficient_), ParamExponents::from_entries(std::move(exponents_)));
  }

 private:
  Rational coefficient_{1};
  std::vector<ParamExponents::Entry> exponents_;
};

void require_same_rank(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw InputError(std::string(what) + ": rank mismatch (" + std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// UnitMatrix

UnitMatrix::UnitMatrix(std::size_t rows, std::size_t cols, std::vector<UnitScalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) throw InputError("unit matrix: entry count does not match shape");
}

UnitMatrix UnitMatrix::from_rows(const std::vector<std::vector<UnitScalar>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  std::vector<UnitScalar> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw InputError("unit matrix: ragged rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return UnitMatrix(r, c, std::move(entries));
}

bool UnitMatrix::is_all_ones() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const UnitScalar& u) { return u.is_one(); });
}

bool UnitMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if (!((*this)(i, j) == (*this)(j, i))) return false;
    }
  }
  return true;
}

UnitMatrix UnitMatrix::transpose() const {
  UnitMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

UnitMatrix UnitMatrix::inverse() const {
  UnitMatrix out = *this;
  for (auto& e : out.entries_) e = e.inverse();
  return out;
}

UnitMatrix UnitMatrix::block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const {
  if (row0 + rows > rows_ || col0 + cols > cols_) throw InputError("unit matrix block out of range");
  UnitMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = (*this)(row0 + i, col0 + j);
  }
  return out;
}

UnitMatrix& UnitMatrix::operator*=(const UnitMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw InputError("unit matrix product: shape mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] *= other.entries_[k];
  return *this;
}

UnitMatrix& UnitMatrix::operator/=(const UnitMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw InputError("unit matrix quotient: shape mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] /= other.entries_[k];
  return *this;
}

UnitScalar bilinear_value(const UnitMatrix& m, const ExponentVector& u, const ExponentVector& v) {
  require_same_rank(u.rank(), m.rows(), "bilinear_value (left argument)");
  require_same_rank(v.rank(), m.cols(), "bilinear_value (right argument)");
  UnitAccumulator acc;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (v[j] == 0) continue;
      acc.multiply_power(m(i, j), u[i] * v[j]);
    }
  }
  return acc.result();
}

// ---------------------------------------------------------------------------
// Cocycle types

BimultiplicativeCocycle::BimultiplicativeCocycle(UnitMatrix matrix) : matrix_(std::move(matrix)) {
  if (!matrix_.is_square()) throw InputError("cocycle matrix must be square");
}

BimultiplicativeCocycle BimultiplicativeCocycle::trivial(std::size_t rank) {
  return BimultiplicativeCocycle(UnitMatrix(rank, rank));
}

BimultiplicativeCocycle operator*(const BimultiplicativeCocycle& a, const BimultiplicativeCocycle& b) {
  require_same_rank(a.rank(), b.rank(), "cocycle product");
  return BimultiplicativeCocycle(a.matrix_ * b.matrix_);
}

BimultiplicativeCocycle operator/(const BimultiplicativeCocycle& a, const BimultiplicativeCocycle& b) {
  require_same_rank(a.rank(), b.rank(), "cocycle quotient");
  return BimultiplicativeCocycle(a.matrix_ / b.matrix_);
}

AntisymmetricMatrix::AntisymmetricMatrix(UnitMatrix matrix) : matrix_(std::move(matrix)) {
  if (!matrix_.is_square()) throw InputError("antisymmetric matrix must be square");
  for (std::size_t i = 0; i < matrix_.rows(); ++i) {
    if (!matrix_(i, i).is_one()) {
      throw InputError("antisymmetric matrix: diagonal entry " + std::to_string(i) + " is not 1");
    }
    for (std::size_t j = i + 1; j < matrix_.cols(); ++j) {
      if (!(matrix_(i, j) * matrix_(j, i)).is_one()) {
        throw InputError("antisymmetric matrix: q_" + std::to_string(i) + std::to_string(j) + " * q_" +
                         std::to_string(j) + std::to_string(i) + " != 1");
      }
    }
  }
}

AntisymmetricMatrix AntisymmetricMatrix::identity(std::size_t rank) {
  return AntisymmetricMatrix(UnitMatrix(rank, rank));
}

AntisymmetricMatrix AntisymmetricMatrix::from_upper(std::size_t rank, const std::vector<UnitScalar>& upper) {
  if (upper.size() != rank * (rank - (rank > 0 ? 1 : 0)) / 2) {
    throw InputError("antisymmetric matrix: wrong number of upper-triangle entries");
  }
  UnitMatrix m(rank, rank);
  std::size_t k = 0;
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = i + 1; j < rank; ++j) {
      m(i, j) = upper[k];
      m(j, i) = upper[k].inverse();
      ++k;
    }
  }
  return AntisymmetricMatrix(std::move(m));
}

UnitScalar Pairing::operator()(const ExponentVector& s, const ExponentVector& t) const {
  return bilinear_value(matrix_, s, t);
}

// ---------------------------------------------------------------------------
// Operations

UnitScalar evaluate(const BimultiplicativeCocycle& mu, const ExponentVector& u, const ExponentVector& v) {
  return bilinear_value(mu.matrix(), u, v);
}

UnitScalar ordered_monomial_scalar(const BimultiplicativeCocycle& mu, const ExponentVector& u) {
  require_same_rank(u.rank(), mu.rank(), "ordered_monomial_scalar");
  UnitAccumulator acc;
  for (std::size_t k = 0; k < u.rank(); ++k) {
    if (u[k] == 0) continue;
    acc.multiply_power(mu.entry(k, k), u[k] * (u[k] - 1) / 2);
    for (std::size_t l = k + 1; l < u.rank(); ++l) {
      if (u[l] != 0) acc.multiply_power(mu.entry(k, l), u[k] * u[l]);
    }
  }
  return acc.result();
}

BimultiplicativeCocycle canonical_from_antisym(const AntisymmetricMatrix& q) {
  const std::size_t n = q.rank();
  UnitMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) a(i, j) = q.entry(i, j);
  }
  return BimultiplicativeCocycle(std::move(a));
}

AntisymmetricMatrix antisymmetrize(const BimultiplicativeCocycle& mu) {
  return AntisymmetricMatrix(mu.matrix() / mu.matrix().transpose());
}

bool cohomologous(const BimultiplicativeCocycle& mu, const BimultiplicativeCocycle& nu) {
  require_same_rank(mu.rank(), nu.rank(), "cohomologous");
  return antisymmetrize(mu) == antisymmetrize(nu);
}

YamazakiFactors yamazaki_factorize(const BimultiplicativeCocycle& mu, const ProductSplit& split) {
  require_same_rank(mu.rank(), split.ambient_rank(), "yamazaki_factorize");
  const std::size_t a = split.left_rank();
  const std::size_t b = split.right_rank();
  const UnitMatrix& m = mu.matrix();
  UnitMatrix alpha(a, b);
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) alpha(i, j) = m(i, a + j) / m(a + j, i);
  }
  return {BimultiplicativeCocycle(m.block(0, 0, a, a)), BimultiplicativeCocycle(m.block(a, a, b, b)),
          Pairing(std::move(alpha))};
}

BimultiplicativeCocycle yamazaki_reconstruct(const BimultiplicativeCocycle& nu, const BimultiplicativeCocycle& xi,
                                             const Pairing& alpha) {
  const std::size_t a = nu.rank();
  const std::size_t b = xi.rank();
  if (alpha.left_rank() != a || alpha.right_rank() != b) {
    throw InputError("yamazaki_reconstruct: pairing shape " + std::to_string(alpha.left_rank()) + "x" +
                     std::to_string(alpha.right_rank()) + " does not match ranks " + std::to_string(a) + ", " +
                     std::to_string(b));
  }
  if (a < 1 || b < 1) throw InputError("yamazaki_reconstruct: empty factor");
  UnitMatrix m(a + b, a + b);
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < a; ++j) m(i, j) = nu.entry(i, j);
    for (std::size_t j = 0; j < b; ++j) m(i, a + j) = alpha.entry(i, j);
  }
  for (std::size_t i = 0; i < b; ++i) {
    for (std::size_t j = 0; j < b; ++j) m(a + i, a + j) = xi.entry(i, j);
  }
  return BimultiplicativeCocycle(std::move(m));
}

BimultiplicativeCocycle direct_product(const BimultiplicativeCocycle& nu, const BimultiplicativeCocycle& xi) {
  return yamazaki_reconstruct(nu, xi, Pairing::trivial(nu.rank(), xi.rank()));
}

bool is_factorizable(const BimultiplicativeCocycle& mu, const ProductSplit& split) {
  return yamazaki_factorize(mu, split).pairing.is_trivial();
}

BimultiplicativeCocycle pullback(const BimultiplicativeCocycle& mu, const MonoidMorphism& f) {
  require_same_rank(mu.rank(), f.target_rank(), "pullback");
  const auto& images = f.generator_images();
  const std::size_t r = f.source_rank();
  UnitMatrix out(r, r);
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t l = 0; l < r; ++l) out(k, l) = evaluate(mu, images[k], images[l]);
  }
  return BimultiplicativeCocycle(std::move(out));
}

}  // namespace cotwist
