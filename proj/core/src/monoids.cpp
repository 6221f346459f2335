#include "cotwist/monoids.hpp"

#include <algorithm>
#include <numeric>

#include "cotwist/error.hpp"

namespace cotwist {

namespace {

void require_rank(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw InputError(std::string(what) + ": rank mismatch (got " + std::to_string(got) +
                     ", expected " + std::to_string(want) + ")");
  }
}

}  // namespace

ExponentVector::ExponentVector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
  for (auto e : entries_) {
    if (e < 0) throw InputError("exponent vector with a negative entry");
  }
}

ExponentVector ExponentVector::generator(std::size_t rank, std::size_t k) {
  if (k >= rank) throw InputError("generator index out of range");
  ExponentVector out(rank);
  out.entries_[k] = 1;
  return out;
}

std::int64_t ExponentVector::total_degree() const {
  return std::accumulate(entries_.begin(), entries_.end(), std::int64_t{0});
}

bool ExponentVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](auto e) { return e == 0; });
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& other) {
  require_rank(other.rank(), rank(), "exponent vector addition");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ExponentVector ExponentVector::scaled(std::int64_t k) const {
  if (k < 0) throw InputError("exponent vectors scale by nonnegative integers only");
  ExponentVector out = *this;
  for (auto& e : out.entries_) e *= k;
  return out;
}

std::string ExponentVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out + ")";
}

std::vector<ExponentVector> vectors_of_degree(std::size_t rank, std::int64_t degree) {
  std::vector<ExponentVector> out;
  if (degree < 0) return out;
  if (rank == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  std::vector<std::int64_t> cur(rank, 0);
  // Compositions of `degree` into `rank` parts, lexicographically decreasing.
  auto recurse = [&](auto&& self, std::size_t pos, std::int64_t remaining) -> void {
    if (pos + 1 == rank) {
      cur[pos] = remaining;
      out.emplace_back(cur);
      return;
    }
    for (std::int64_t v = remaining; v >= 0; --v) {
      cur[pos] = v;
      self(self, pos + 1, remaining - v);
    }
    cur[pos] = 0;
  };
  recurse(recurse, 0, degree);
  return out;
}

std::vector<ExponentVector> vectors_up_to_degree(std::size_t rank, std::int64_t max_degree) {
  std::vector<ExponentVector> out;
  for (std::int64_t d = 0; d <= max_degree; ++d) {
    auto layer = vectors_of_degree(rank, d);
    out.insert(out.end(), std::make_move_iterator(layer.begin()), std::make_move_iterator(layer.end()));
  }
  return out;
}

ProductSplit::ProductSplit(std::size_t left_rank, std::size_t right_rank)
    : left_(left_rank), right_(right_rank) {
  if (left_rank < 1 || right_rank < 1) throw InputError("product split needs two nonempty factors");
}

ExponentVector inject_left(const ProductSplit& split, const ExponentVector& u) {
  require_rank(u.rank(), split.left_rank(), "inject_left");
  std::vector<std::int64_t> e(u.entries().begin(), u.entries().end());
  e.resize(split.ambient_rank(), 0);
  return ExponentVector(std::move(e));
}

ExponentVector inject_right(const ProductSplit& split, const ExponentVector& v) {
  require_rank(v.rank(), split.right_rank(), "inject_right");
  std::vector<std::int64_t> e(split.left_rank(), 0);
  e.insert(e.end(), v.entries().begin(), v.entries().end());
  return ExponentVector(std::move(e));
}

std::pair<ExponentVector, ExponentVector> split_vector(const ProductSplit& split, const ExponentVector& w) {
  require_rank(w.rank(), split.ambient_rank(), "split_vector");
  auto e = w.entries();
  const auto a = static_cast<std::ptrdiff_t>(split.left_rank());
  return {ExponentVector(std::vector<std::int64_t>(e.begin(), e.begin() + a)),
          ExponentVector(std::vector<std::int64_t>(e.begin() + a, e.end()))};
}

bool is_left_supported(const ProductSplit& split, const ExponentVector& w) {
  require_rank(w.rank(), split.ambient_rank(), "is_left_supported");
  for (std::size_t i = split.left_rank(); i < w.rank(); ++i) {
    if (w[i] != 0) return false;
  }
  return true;
}

bool is_right_supported(const ProductSplit& split, const ExponentVector& w) {
  require_rank(w.rank(), split.ambient_rank(), "is_right_supported");
  for (std::size_t i = 0; i < split.left_rank(); ++i) {
    if (w[i] != 0) return false;
  }
  return true;
}

MonoidMorphism::MonoidMorphism(std::size_t source_rank, std::size_t target_rank,
                               std::vector<ExponentVector> generator_images)
    : source_rank_(source_rank), target_rank_(target_rank), images_(std::move(generator_images)) {
  if (images_.size() != source_rank_) {
    throw InputError("monoid morphism: expected " + std::to_string(source_rank_) + " generator images, got " +
                     std::to_string(images_.size()));
  }
  for (const auto& img : images_) require_rank(img.rank(), target_rank_, "monoid morphism generator image");
}

MonoidMorphism MonoidMorphism::identity(std::size_t rank) {
  std::vector<ExponentVector> images;
  images.reserve(rank);
  for (std::size_t k = 0; k < rank; ++k) images.push_back(ExponentVector::generator(rank, k));
  return MonoidMorphism(rank, rank, std::move(images));
}

ExponentVector MonoidMorphism::operator()(const ExponentVector& u) const {
  require_rank(u.rank(), source_rank_, "morphism_apply");
  std::vector<std::int64_t> out(target_rank_, 0);
  for (std::size_t k = 0; k < source_rank_; ++k) {
    if (u[k] == 0) continue;
    for (std::size_t i = 0; i < target_rank_; ++i) out[i] += u[k] * images_[k][i];
  }
  return ExponentVector(std::move(out));
}

ExponentVector morphism_apply(const MonoidMorphism& f, const ExponentVector& u) { return f(u); }

MonoidMorphism segre_morphism(std::size_t n, std::size_t m) {
  if (n < 1 || m < 1) throw InputError("segre_morphism requires n >= 1 and m >= 1");
  const std::size_t target = (n + 1) + (m + 1);
  std::vector<ExponentVector> images;
  images.reserve((n + 1) * (m + 1));
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= m; ++j) {
      std::vector<std::int64_t> e(target, 0);
      e[i] = 1;
      e[(n + 1) + j] = 1;
      images.emplace_back(std::move(e));
    }
  }
  return MonoidMorphism((n + 1) * (m + 1), target, std::move(images));
}

}  // namespace cotwist
