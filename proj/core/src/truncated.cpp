#include "cotwist/truncated.hpp"

#include <algorithm>

#include "cotwist/error.hpp"

namespace cotwist {

namespace {

void check_domain_rank(const ExponentVector& u, std::size_t rank) {
  if (u.rank() != rank) throw InputError("truncated table: rank mismatch at " + u.to_string());
}

std::size_t expected_pair_count(std::size_t rank, std::int64_t degree_bound) {
  // Pairs (u, v) with |u| + |v| <= D are vectors of N^(2 rank) of degree <= D.
  std::size_t count = 0;
  for (std::int64_t d = 0; d <= degree_bound; ++d) count += vectors_of_degree(2 * rank, d).size();
  return count;
}

}  // namespace

// ---------------------------------------------------------------------------
// FunctionOnMonoid

FunctionOnMonoid::FunctionOnMonoid(std::size_t rank, std::int64_t degree_bound, Table table)
    : rank_(rank), degree_bound_(degree_bound), table_(std::move(table)) {
  if (degree_bound_ < 0) throw InputError("negative degree bound");
  for (const auto& [u, value] : table_) {
    check_domain_rank(u, rank_);
    if (u.total_degree() > degree_bound_) throw InputError("function table entry beyond degree bound: " + u.to_string());
  }
  if (table_.size() != vectors_up_to_degree(rank_, degree_bound_).size()) {
    throw InputError("function table does not cover all vectors of degree <= " + std::to_string(degree_bound_));
  }
  if (!table_.at(ExponentVector(rank_)).is_one()) throw InputError("function on monoid must satisfy h(e) = 1");
}

FunctionOnMonoid FunctionOnMonoid::tabulate(std::size_t rank, std::int64_t degree_bound,
                                            const std::function<UnitScalar(const ExponentVector&)>& h) {
  Table table;
  for (auto& u : vectors_up_to_degree(rank, degree_bound)) {
    UnitScalar value = h(u);
    table.emplace(std::move(u), std::move(value));
  }
  return FunctionOnMonoid(rank, degree_bound, std::move(table));
}

const UnitScalar& FunctionOnMonoid::operator()(const ExponentVector& u) const {
  auto it = table_.find(u);
  if (it == table_.end()) throw InputError("function evaluated outside its truncated domain at " + u.to_string());
  return it->second;
}

// ---------------------------------------------------------------------------
// TruncatedCocycle

TruncatedCocycle::TruncatedCocycle(std::size_t rank, std::int64_t degree_bound, Table table)
    : rank_(rank), degree_bound_(degree_bound), table_(std::move(table)) {
  if (degree_bound_ < 0) throw InputError("negative degree bound");
  for (const auto& [key, value] : table_) {
    check_domain_rank(key.first, rank_);
    check_domain_rank(key.second, rank_);
    if (key.first.total_degree() + key.second.total_degree() > degree_bound_) {
      throw InputError("cocycle table entry beyond degree bound: " + key.first.to_string() + ", " +
                       key.second.to_string());
    }
  }
  if (table_.size() != expected_pair_count(rank_, degree_bound_)) {
    throw InputError("cocycle table does not cover all pairs with |u| + |v| <= " + std::to_string(degree_bound_));
  }
}

TruncatedCocycle TruncatedCocycle::tabulate(
    std::size_t rank, std::int64_t degree_bound,
    const std::function<UnitScalar(const ExponentVector&, const ExponentVector&)>& mu) {
  Table table;
  const auto vectors = vectors_up_to_degree(rank, degree_bound);
  for (const auto& u : vectors) {
    for (const auto& v : vectors) {
      if (u.total_degree() + v.total_degree() > degree_bound) continue;
      table.emplace(Key{u, v}, mu(u, v));
    }
  }
  return TruncatedCocycle(rank, degree_bound, std::move(table));
}

TruncatedCocycle TruncatedCocycle::truncate(const BimultiplicativeCocycle& mu, std::int64_t degree_bound) {
  return tabulate(mu.rank(), degree_bound,
                  [&mu](const ExponentVector& u, const ExponentVector& v) { return evaluate(mu, u, v); });
}

const UnitScalar& TruncatedCocycle::operator()(const ExponentVector& u, const ExponentVector& v) const {
  auto it = table_.find(Key{u, v});
  if (it == table_.end()) {
    throw InputError("cocycle evaluated outside its truncated domain at " + u.to_string() + ", " + v.to_string());
  }
  return it->second;
}

TruncatedCocycle operator/(const TruncatedCocycle& a, const TruncatedCocycle& b) {
  if (a.rank_ != b.rank_) throw InputError("truncated cocycle quotient: rank mismatch");
  const std::int64_t d = std::min(a.degree_bound_, b.degree_bound_);
  TruncatedCocycle::Table table;
  for (const auto& [key, value] : a.table_) {
    if (key.first.total_degree() + key.second.total_degree() > d) continue;
    table.emplace(key, value / b.table_.at(key));
  }
  return TruncatedCocycle(a.rank_, d, std::move(table));
}

TruncatedCocycle TruncatedCocycle::with_entry(const ExponentVector& u, const ExponentVector& v,
                                              UnitScalar value) const {
  TruncatedCocycle out = *this;
  auto it = out.table_.find(Key{u, v});
  if (it == out.table_.end()) throw InputError("with_entry: pair outside the truncated domain");
  it->second = std::move(value);
  return out;
}

bool TruncatedCocycle::is_symmetric() const {
  for (const auto& [key, value] : table_) {
    if (!(table_.at(Key{key.second, key.first}) == value)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Operations

TruncatedCocycle coboundary(const FunctionOnMonoid& h) {
  return TruncatedCocycle::tabulate(h.rank(), h.degree_bound(), [&h](const ExponentVector& u, const ExponentVector& v) {
    return h(u) * h(v) / h(u + v);
  });
}

CocycleCheck verify_cocycle_equation(const TruncatedCocycle& mu) {
  CocycleCheck check;
  const std::size_t n = mu.rank();
  const std::int64_t bound = mu.degree_bound();
  const ExponentVector e(n);
  const auto vectors = vectors_up_to_degree(n, bound);

  for (const auto& x : vectors) {
    if (!mu(x, e).is_one() || !mu(e, x).is_one()) {
      check.holds = false;
      check.x = x;
      check.y = e;
      check.detail = "normalization fails: mu(x, e) or mu(e, x) differs from 1 at x = " + x.to_string();
      return check;
    }
  }
  for (const auto& x : vectors) {
    const std::int64_t dx = x.total_degree();
    for (const auto& y : vectors) {
      const std::int64_t dy = y.total_degree();
      if (dx + dy > bound) break;  // vectors are grouped by increasing degree
      const ExponentVector xy = x + y;
      for (const auto& z : vectors) {
        if (dx + dy + z.total_degree() > bound) break;
        const UnitScalar lhs = mu(x, y + z) * mu(y, z);
        const UnitScalar rhs = mu(x, y) * mu(xy, z);
        if (!(lhs == rhs)) {
          check.holds = false;
          check.x = x;
          check.y = y;
          check.z = z;
          check.detail = "cocycle equation fails at x = " + x.to_string() + ", y = " + y.to_string() +
                         ", z = " + z.to_string() + ": " + render_unit(lhs) + " != " + render_unit(rhs);
          return check;
        }
      }
    }
  }
  return check;
}

FunctionOnMonoid trivialize_rank1(const TruncatedCocycle& mu) {
  if (mu.rank() != 1) throw InputError("trivialize_rank1 requires a rank-1 cocycle");
  if (auto check = verify_cocycle_equation(mu); !check.holds) {
    throw InputError("trivialize_rank1: input is not a cocycle: " + check.detail);
  }
  const std::int64_t bound = mu.degree_bound();
  FunctionOnMonoid::Table table;
  table.emplace(ExponentVector{0}, UnitScalar());
  if (bound >= 1) table.emplace(ExponentVector{1}, UnitScalar());
  UnitScalar h_p;  // h(g^p), starting at p = 1
  for (std::int64_t p = 1; p + 1 <= bound; ++p) {
    h_p /= mu(ExponentVector{1}, ExponentVector{p});
    table.emplace(ExponentVector{p + 1}, h_p);
  }
  return FunctionOnMonoid(1, bound, std::move(table));
}

FunctionOnMonoid yamazaki_trivialize(const TruncatedCocycle& mu, const ProductSplit& split) {
  if (mu.rank() != split.ambient_rank()) throw InputError("yamazaki_trivialize: rank does not match split");
  for (const auto& [key, value] : mu.table()) {
    const auto& [u, v] = key;
    const bool both_left = is_left_supported(split, u) && is_left_supported(split, v);
    const bool both_right = is_right_supported(split, u) && is_right_supported(split, v);
    if ((both_left || both_right) && !value.is_one()) {
      throw InputError("yamazaki_trivialize: restriction to the " + std::string(both_left ? "left" : "right") +
                       " factor is not trivial at " + u.to_string() + ", " + v.to_string());
    }
    if (is_left_supported(split, u) && is_right_supported(split, v) && !(mu(v, u) == value)) {
      throw InputError("yamazaki_trivialize: cross pairing is not trivial at s = " + u.to_string() +
                       ", t = " + v.to_string());
    }
  }
  return FunctionOnMonoid::tabulate(mu.rank(), mu.degree_bound(), [&](const ExponentVector& w) {
    auto [s, t] = split_vector(split, w);
    return mu(inject_left(split, s), inject_right(split, t)).inverse();
  });
}

SymmetricTrivializer::SymmetricTrivializer(UnitMatrix symmetric) : matrix_(std::move(symmetric)) {
  if (!matrix_.is_symmetric()) throw InputError("symmetric_trivializer: matrix is not symmetric");
}

UnitScalar SymmetricTrivializer::operator()(const ExponentVector& u) const {
  return ordered_monomial_scalar(BimultiplicativeCocycle(matrix_), u).inverse();
}

FunctionOnMonoid SymmetricTrivializer::tabulate(std::int64_t degree_bound) const {
  return FunctionOnMonoid::tabulate(rank(), degree_bound, [this](const ExponentVector& u) { return (*this)(u); });
}

SymmetricTrivializer symmetric_trivializer(const UnitMatrix& symmetric) { return SymmetricTrivializer(symmetric); }

}  // namespace cotwist
