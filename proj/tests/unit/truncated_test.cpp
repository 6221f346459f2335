#include <doctest.h>

#include "cotwist/error.hpp"
#include "cotwist/sampling.hpp"
#include "cotwist/truncated.hpp"
#include "oracles.hpp"

using namespace cotwist;

namespace {

UnitSampling spec() { return UnitSampling{{"q", "r"}, 3, 7}; }

FunctionOnMonoid random_function(Rng& rng, std::size_t rank, std::int64_t degree, bool fix_generators) {
  return FunctionOnMonoid::tabulate(rank, degree, [&](const ExponentVector& u) {
    if (u.is_zero() || (fix_generators && u.total_degree() == 1)) return UnitScalar();
    return random_unit(rng, spec());
  });
}

}  // namespace

TEST_CASE("coboundaries") {
  const auto one = FunctionOnMonoid::tabulate(2, 4, [](const ExponentVector&) { return UnitScalar(); });
  const auto d_one = coboundary(one);
  for (const auto& [key, value] : d_one.table()) CHECK(value.is_one());

  // A character h(g^p) = c^p has trivial coboundary.
  const auto c = parse_unit("3*q");
  const auto chi = FunctionOnMonoid::tabulate(1, 6, [&](const ExponentVector& u) { return c.pow(u[0]); });
  const auto d_chi = coboundary(chi);
  for (const auto& [key, value] : d_chi.table()) CHECK(value.is_one());

  Rng rng(1);
  const auto h = random_function(rng, 2, 5, false);
  const auto dh = coboundary(h);
  CHECK(dh.is_symmetric());
  for (const auto& [key, value] : dh.table()) CHECK(value == oracle::coboundary_value(h, key.first, key.second));
  CHECK(verify_cocycle_equation(dh).holds);

  CHECK_THROWS_AS(FunctionOnMonoid::tabulate(1, 2, [](const ExponentVector&) { return parse_unit("2"); }),
                  InputError);
}

TEST_CASE("exhaustive cocycle check") {
  Rng rng(2);
  for (std::size_t rank = 1; rank <= 3; ++rank) {
    CHECK(verify_cocycle_equation(TruncatedCocycle::truncate(random_cocycle(rng, rank, spec()), 6)).holds);
  }

  const auto mu = TruncatedCocycle::truncate(random_cocycle(rng, 2, spec()), 4);
  const ExponentVector x({1, 0});
  const ExponentVector y({0, 1});
  const auto bad = mu.with_entry(x, y, mu(x, y) * parse_unit("2"));
  const auto check = verify_cocycle_equation(bad);
  REQUIRE_FALSE(check.holds);
  REQUIRE(check.x.has_value());
  // The reported triple must actually violate the equation.
  const auto &a = *check.x, &b = *check.y, &c = *check.z;
  CHECK_FALSE(bad(a, b + c) * bad(b, c) == bad(a, b) * bad(a + b, c));

  const auto unnormalized = mu.with_entry(ExponentVector(2), x, parse_unit("q"));
  CHECK_FALSE(verify_cocycle_equation(unnormalized).holds);
}

TEST_CASE("rank-one trivialization") {
  const auto trivial = TruncatedCocycle::truncate(BimultiplicativeCocycle::trivial(1), 8);
  const auto recovered = trivialize_rank1(trivial);
  for (const auto& [u, value] : recovered.table()) CHECK(value.is_one());

  Rng rng(3);
  for (int k = 0; k < 20; ++k) {
    const auto h = random_function(rng, 1, 12, true);
    CHECK(trivialize_rank1(coboundary(h)) == h);
  }

  // mu(g^a, g^b) = c^{ab}: the recurrence h(g^{p+1}) = h(g^p) / mu(g, g^p)
  // gives h(g^p) = c^{-p(p-1)/2}.
  const auto c = parse_unit("-2*q");
  const auto mu = TruncatedCocycle::truncate(BimultiplicativeCocycle(UnitMatrix(1, 1, {c})), 10);
  const auto h = trivialize_rank1(mu);
  for (std::int64_t p = 0; p <= 10; ++p) CHECK(h(ExponentVector({p})) == c.pow(-p * (p - 1) / 2));
  CHECK(coboundary(h) == mu);

  CHECK_THROWS_AS(trivialize_rank1(TruncatedCocycle::truncate(BimultiplicativeCocycle::trivial(2), 3)), InputError);
}

TEST_CASE("yamazaki trivialization") {
  for (auto [a, b] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 1}, {2, 2}}) {
    const ProductSplit split(a, b);
    const auto trivial = TruncatedCocycle::truncate(BimultiplicativeCocycle::trivial(a + b), 5);
    const auto h = yamazaki_trivialize(trivial, split);
    for (const auto& [u, value] : h.table()) CHECK(value.is_one());

    // Coboundary of h0(s, t) = k(s, t) with h0 = 1 on each factor.
    Rng rng(a * 10 + b);
    const auto h0 = FunctionOnMonoid::tabulate(a + b, 6, [&](const ExponentVector& w) {
      if (is_left_supported(split, w) || is_right_supported(split, w)) return UnitScalar();
      return random_unit(rng, spec());
    });
    const auto mu = coboundary(h0);
    CHECK(coboundary(yamazaki_trivialize(mu, split)) == mu);
  }

  const auto sigma = TruncatedCocycle::truncate(
      BimultiplicativeCocycle(UnitMatrix(2, 2, {UnitScalar(), parse_unit("q"), UnitScalar(), UnitScalar()})), 4);
  CHECK_THROWS_AS(yamazaki_trivialize(sigma, ProductSplit(1, 1)), InputError);
  CHECK_THROWS_AS(yamazaki_trivialize(sigma, ProductSplit(1, 2)), InputError);
}

TEST_CASE("symmetric trivializer") {
  const auto ones = symmetric_trivializer(UnitMatrix(2, 2));
  const auto tabulated = ones.tabulate(4);
  for (const auto& [u, value] : tabulated.table()) CHECK(value.is_one());

  const auto c = parse_unit("5/3*r");
  const auto h1 = symmetric_trivializer(UnitMatrix(1, 1, {c}));
  for (std::int64_t p = 0; p <= 7; ++p) CHECK(h1(ExponentVector({p})) == c.pow(-p * (p - 1) / 2));
  // delta h (g^a, g^b) = c^{ab}.
  const auto dh = coboundary(h1.tabulate(8));
  for (const auto& [key, value] : dh.table()) CHECK(value == c.pow(key.first[0] * key.second[0]));

  Rng rng(4);
  for (int k = 0; k < 5; ++k) {
    const auto sym = random_symmetric_matrix(rng, 3, spec());
    const auto h = symmetric_trivializer(sym).tabulate(6);
    const BimultiplicativeCocycle sigma(sym);
    for (int t = 0; t < 20; ++t) {
      const auto u = random_vector(rng, 3, 1);
      const auto v = random_vector(rng, 3, 1);
      CHECK(oracle::coboundary_value(h, u, v) == evaluate(sigma, u, v));
    }
    CHECK(coboundary(h) == TruncatedCocycle::truncate(sigma, 6));
  }
  CHECK_THROWS_AS(symmetric_trivializer(UnitMatrix(2, 2, {UnitScalar(), parse_unit("q"), UnitScalar(), UnitScalar()})),
                  InputError);
}
