#pragma once

// Free commutative monoids N^n written additively, and morphisms between them.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cotwist {

/// An element of N^n. Entries are nonnegative; the zero vector is the identity.
class ExponentVector {
 public:
  ExponentVector() = default;
  /// Zero vector of the given rank.
  explicit ExponentVector(std::size_t rank) : entries_(rank, 0) {}
  explicit ExponentVector(std::vector<std::int64_t> entries);
  ExponentVector(std::initializer_list<std::int64_t> entries)
      : ExponentVector(std::vector<std::int64_t>(entries)) {}

  /// The k-th generator g_k of N^rank.
  static ExponentVector generator(std::size_t rank, std::size_t k);

  std::size_t rank() const { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  std::span<const std::int64_t> entries() const { return entries_; }
  std::int64_t total_degree() const;
  bool is_zero() const;

  /// Rank-checked entrywise sum; throws InputError on mismatch.
  ExponentVector& operator+=(const ExponentVector& other);
  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
  ExponentVector scaled(std::int64_t k) const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

  std::string to_string() const;

 private:
  std::vector<std::int64_t> entries_;
};

/// All vectors of N^rank with total degree exactly `degree`, in
/// lexicographically decreasing order.
std::vector<ExponentVector> vectors_of_degree(std::size_t rank, std::int64_t degree);
/// All vectors of N^rank with total degree at most `max_degree`, grouped by
/// increasing degree.
std::vector<ExponentVector> vectors_up_to_degree(std::size_t rank, std::int64_t max_degree);

/// Identification of N^a x N^b with N^(a+b): the left factor occupies the
/// first a coordinates.
class ProductSplit {
 public:
  ProductSplit(std::size_t left_rank, std::size_t right_rank);

  std::size_t left_rank() const { return left_; }
  std::size_t right_rank() const { return right_; }
  std::size_t ambient_rank() const { return left_ + right_; }

  friend bool operator==(const ProductSplit&, const ProductSplit&) = default;

 private:
  std::size_t left_;
  std::size_t right_;
};

ExponentVector inject_left(const ProductSplit& split, const ExponentVector& u);
ExponentVector inject_right(const ProductSplit& split, const ExponentVector& v);
std::pair<ExponentVector, ExponentVector> split_vector(const ProductSplit& split, const ExponentVector& w);

/// True when w is supported on the left (resp. right) block only.
bool is_left_supported(const ProductSplit& split, const ExponentVector& w);
bool is_right_supported(const ProductSplit& split, const ExponentVector& w);

/// A monoid morphism N^r -> N^n, determined by the images of the generators.
class MonoidMorphism {
 public:
  MonoidMorphism(std::size_t source_rank, std::size_t target_rank,
                 std::vector<ExponentVector> generator_images);

  static MonoidMorphism identity(std::size_t rank);

  std::size_t source_rank() const { return source_rank_; }
  std::size_t target_rank() const { return target_rank_; }
  const std::vector<ExponentVector>& generator_images() const { return images_; }

  /// Linear extension: f(u) = sum_k u_k * f(g_k).
  ExponentVector operator()(const ExponentVector& u) const;

  friend bool operator==(const MonoidMorphism&, const MonoidMorphism&) = default;

 private:
  std::size_t source_rank_;
  std::size_t target_rank_;
  std::vector<ExponentVector> images_;
};

ExponentVector morphism_apply(const MonoidMorphism& f, const ExponentVector& u);

/// f: N^((n+1)(m+1)) -> N^(n+1) x N^(m+1), e_ij -> (alpha_i, beta_j).
/// Source generators are ordered row-major in (i, j).
MonoidMorphism segre_morphism(std::size_t n, std::size_t m);

/// Row-major index of e_ij in the Segre source monoid.
inline std::size_t segre_index(std::size_t m, std::size_t i, std::size_t j) { return i * (m + 1) + j; }

}  // namespace cotwist
