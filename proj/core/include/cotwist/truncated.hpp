#pragma once

// Degree-truncated cocycles and normalized functions on N^n. These carry
// general (not necessarily bimultiplicative) cocycles and coboundaries, and
// the constructive trivializations that turn cohomology vanishing
// statements into explicit witnesses h with delta h = mu.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "cotwist/cocycles.hpp"
#include "cotwist/monoids.hpp"
#include "cotwist/scalars.hpp"

namespace cotwist {

/// Default total-degree bound for truncated tables.
inline constexpr std::int64_t kDefaultDegreeBound = 8;

/// h: {u : |u| <= D} -> units with h(0) = 1.
class FunctionOnMonoid {
 public:
  using Table = std::map<ExponentVector, UnitScalar>;

  /// Validates rank, completeness of the domain and h(0) = 1.
  FunctionOnMonoid(std::size_t rank, std::int64_t degree_bound, Table table);
  static FunctionOnMonoid tabulate(std::size_t rank, std::int64_t degree_bound,
                                   const std::function<UnitScalar(const ExponentVector&)>& h);

  std::size_t rank() const { return rank_; }
  std::int64_t degree_bound() const { return degree_bound_; }
  const Table& table() const { return table_; }
  const UnitScalar& operator()(const ExponentVector& u) const;

  friend bool operator==(const FunctionOnMonoid&, const FunctionOnMonoid&) = default;

 private:
  std::size_t rank_;
  std::int64_t degree_bound_;
  Table table_;
};

/// mu on {(u, v) : |u| + |v| <= D}.
class TruncatedCocycle {
 public:
  using Key = std::pair<ExponentVector, ExponentVector>;
  using Table = std::map<Key, UnitScalar>;

  /// Validates rank and completeness of the domain. The cocycle equation is
  /// not enforced here; see verify_cocycle_equation.
  TruncatedCocycle(std::size_t rank, std::int64_t degree_bound, Table table);
  static TruncatedCocycle tabulate(std::size_t rank, std::int64_t degree_bound,
                                   const std::function<UnitScalar(const ExponentVector&, const ExponentVector&)>& mu);
  static TruncatedCocycle truncate(const BimultiplicativeCocycle& mu, std::int64_t degree_bound);

  std::size_t rank() const { return rank_; }
  std::int64_t degree_bound() const { return degree_bound_; }
  const Table& table() const { return table_; }
  const UnitScalar& operator()(const ExponentVector& u, const ExponentVector& v) const;

  /// Pointwise quotient on the common domain.
  friend TruncatedCocycle operator/(const TruncatedCocycle& a, const TruncatedCocycle& b);
  /// Copy with one entry replaced (used to build counterexamples).
  TruncatedCocycle with_entry(const ExponentVector& u, const ExponentVector& v, UnitScalar value) const;
  bool is_symmetric() const;

  friend bool operator==(const TruncatedCocycle&, const TruncatedCocycle&) = default;

 private:
  std::size_t rank_;
  std::int64_t degree_bound_;
  Table table_;
};

/// delta h(u, v) = h(u) h(v) / h(u + v) on |u| + |v| <= D.
TruncatedCocycle coboundary(const FunctionOnMonoid& h);

struct CocycleCheck {
  bool holds = true;
  /// First failing triple (x, y, z); for a normalization failure z is empty
  /// and (x, y) is the offending pair.
  std::optional<ExponentVector> x, y, z;
  std::string detail;
};

/// Exhaustive check of mu(x, y+z) mu(y, z) = mu(x, y) mu(x+y, z) for
/// |x| + |y| + |z| <= D, and of mu(x, 0) = mu(0, x) = 1.
CocycleCheck verify_cocycle_equation(const TruncatedCocycle& mu);

/// Rank-1 trivialization: h(0) = h(g) = 1, h(g^{p+1}) = h(g^p) / mu(g, g^p).
/// Throws InputError if rank != 1 or mu is not a cocycle; the result
/// satisfies coboundary(h) == mu.
FunctionOnMonoid trivialize_rank1(const TruncatedCocycle& mu);

/// For mu trivial on both factors with trivial cross pairing:
/// h(s, t) = 1 / mu(s, t). Throws InputError naming the failed precondition.
FunctionOnMonoid yamazaki_trivialize(const TruncatedCocycle& mu, const ProductSplit& split);

/// Closed-form h with delta h = sigma_C for a symmetric unit matrix C:
///   h(u) = prod_i C_ii^(-u_i(u_i-1)/2) * prod_{i<j} C_ij^(-u_i u_j).
class SymmetricTrivializer {
 public:
  /// Throws InputError for an asymmetric matrix.
  explicit SymmetricTrivializer(UnitMatrix symmetric);

  std::size_t rank() const { return matrix_.rows(); }
  const UnitMatrix& matrix() const { return matrix_; }
  UnitScalar operator()(const ExponentVector& u) const;
  FunctionOnMonoid tabulate(std::int64_t degree_bound) const;

 private:
  UnitMatrix matrix_;
};

SymmetricTrivializer symmetric_trivializer(const UnitMatrix& symmetric);

}  // namespace cotwist
