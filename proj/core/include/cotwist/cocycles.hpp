#pragma once

// Bimultiplicative 2-cocycles on N^n with values in invertible Laurent
// monomials, their antisymmetrizations, and the Yamazaki factorization
// with respect to a product split N^a x N^b.

#include <cstddef>
#include <string>
#include <vector>

#include "cotwist/monoids.hpp"
#include "cotwist/scalars.hpp"

namespace cotwist {

/// Dense rows x cols matrix of units, row-major.
class UnitMatrix {
 public:
  UnitMatrix() = default;
  /// All-ones matrix.
  UnitMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  UnitMatrix(std::size_t rows, std::size_t cols, std::vector<UnitScalar> entries);
  static UnitMatrix from_rows(const std::vector<std::vector<UnitScalar>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const UnitScalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  UnitScalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  bool is_all_ones() const;
  bool is_symmetric() const;
  UnitMatrix transpose() const;
  UnitMatrix inverse() const;  // entrywise
  UnitMatrix block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;

  UnitMatrix& operator*=(const UnitMatrix& other);  // entrywise
  friend UnitMatrix operator*(UnitMatrix a, const UnitMatrix& b) { return a *= b; }
  UnitMatrix& operator/=(const UnitMatrix& other);  // entrywise
  friend UnitMatrix operator/(UnitMatrix a, const UnitMatrix& b) { return a /= b; }
  friend bool operator==(const UnitMatrix&, const UnitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<UnitScalar> entries_;
};

/// prod_{i,j} M_ij^(u_i v_j) for a rows x cols matrix.
UnitScalar bilinear_value(const UnitMatrix& m, const ExponentVector& u, const ExponentVector& v);

/// mu(u, v) = prod_{i,j} A_ij^(u_i v_j). Bimultiplicative by construction,
/// hence a normalized 2-cocycle.
class BimultiplicativeCocycle {
 public:
  explicit BimultiplicativeCocycle(UnitMatrix matrix);
  static BimultiplicativeCocycle trivial(std::size_t rank);

  std::size_t rank() const { return matrix_.rows(); }
  const UnitMatrix& matrix() const { return matrix_; }
  const UnitScalar& entry(std::size_t i, std::size_t j) const { return matrix_(i, j); }
  bool is_trivial() const { return matrix_.is_all_ones(); }

  /// Pointwise product, the group law of Z^2.
  friend BimultiplicativeCocycle operator*(const BimultiplicativeCocycle& a, const BimultiplicativeCocycle& b);
  friend BimultiplicativeCocycle operator/(const BimultiplicativeCocycle& a, const BimultiplicativeCocycle& b);
  BimultiplicativeCocycle inverse() const { return BimultiplicativeCocycle(matrix_.inverse()); }
  friend bool operator==(const BimultiplicativeCocycle&, const BimultiplicativeCocycle&) = default;

 private:
  UnitMatrix matrix_;
};

/// Multiplicatively antisymmetric matrix: q_ii = 1 and q_ij q_ji = 1.
class AntisymmetricMatrix {
 public:
  /// Throws InputError when the invariants fail.
  explicit AntisymmetricMatrix(UnitMatrix matrix);
  static AntisymmetricMatrix identity(std::size_t rank);
  /// Builds q from its strictly upper triangle, filling q_ji = 1/q_ij.
  static AntisymmetricMatrix from_upper(std::size_t rank, const std::vector<UnitScalar>& upper);

  std::size_t rank() const { return matrix_.rows(); }
  const UnitMatrix& matrix() const { return matrix_; }
  const UnitScalar& entry(std::size_t i, std::size_t j) const { return matrix_(i, j); }

  friend bool operator==(const AntisymmetricMatrix&, const AntisymmetricMatrix&) = default;

 private:
  UnitMatrix matrix_;
};

/// Bimultiplicative pairing N^a x N^b -> units, alpha(s,t) = prod alpha_ij^(s_i t_j).
class Pairing {
 public:
  explicit Pairing(UnitMatrix matrix) : matrix_(std::move(matrix)) {}
  static Pairing trivial(std::size_t left_rank, std::size_t right_rank) {
    return Pairing(UnitMatrix(left_rank, right_rank));
  }

  std::size_t left_rank() const { return matrix_.rows(); }
  std::size_t right_rank() const { return matrix_.cols(); }
  const UnitMatrix& matrix() const { return matrix_; }
  const UnitScalar& entry(std::size_t i, std::size_t j) const { return matrix_(i, j); }
  bool is_trivial() const { return matrix_.is_all_ones(); }

  UnitScalar operator()(const ExponentVector& s, const ExponentVector& t) const;
  Pairing inverse() const { return Pairing(matrix_.inverse()); }
  friend Pairing operator*(const Pairing& a, const Pairing& b) { return Pairing(a.matrix_ * b.matrix_); }
  friend bool operator==(const Pairing&, const Pairing&) = default;

 private:
  UnitMatrix matrix_;
};

UnitScalar evaluate(const BimultiplicativeCocycle& mu, const ExponentVector& u, const ExponentVector& v);

/// The unit c(u) with g_0^{u_0} * g_1^{u_1} * ... = c(u) e_u in the twisted
/// monoid algebra of mu, the product taken in increasing generator order:
/// prod_k A_kk^(u_k(u_k-1)/2) * prod_{k<l} A_kl^(u_k u_l).
UnitScalar ordered_monomial_scalar(const BimultiplicativeCocycle& mu, const ExponentVector& u);

/// mu_q with A_ij = q_ij for i < j and 1 otherwise.
BimultiplicativeCocycle canonical_from_antisym(const AntisymmetricMatrix& q);
/// beta_mu with B_ij = A_ij / A_ji.
AntisymmetricMatrix antisymmetrize(const BimultiplicativeCocycle& mu);
/// Same cohomology class, i.e. equal antisymmetrizations.
bool cohomologous(const BimultiplicativeCocycle& mu, const BimultiplicativeCocycle& nu);

struct YamazakiFactors {
  BimultiplicativeCocycle left;
  BimultiplicativeCocycle right;
  Pairing pairing;

  friend bool operator==(const YamazakiFactors&, const YamazakiFactors&) = default;
};

/// Y(mu) = (mu|_S, mu|_T, alpha_mu) with alpha_ij = A_{i,a+j} / A_{a+j,i}.
YamazakiFactors yamazaki_factorize(const BimultiplicativeCocycle& mu, const ProductSplit& split);
/// (nu x xi) * sigma: blocks (a,a) = nu, (b,b) = xi, (a,b) = alpha, (b,a) = 1.
BimultiplicativeCocycle yamazaki_reconstruct(const BimultiplicativeCocycle& nu, const BimultiplicativeCocycle& xi,
                                             const Pairing& alpha);
/// Direct product nu x xi (block diagonal).
BimultiplicativeCocycle direct_product(const BimultiplicativeCocycle& nu, const BimultiplicativeCocycle& xi);
/// Trivial cross pairing, i.e. cohomologous to a direct product.
bool is_factorizable(const BimultiplicativeCocycle& mu, const ProductSplit& split);

/// mu^f(s, s') = mu(f(s), f(s')); matrix entries prod_{i,j} A_ij^(F_ki F_lj).
BimultiplicativeCocycle pullback(const BimultiplicativeCocycle& mu, const MonoidMorphism& f);

}  // namespace cotwist
