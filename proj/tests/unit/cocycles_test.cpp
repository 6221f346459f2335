#include <doctest.h>

#include "cotwist/cocycles.hpp"
#include "cotwist/error.hpp"
#include "cotwist/sampling.hpp"
#include "oracles.hpp"

using namespace cotwist;

namespace {

UnitSampling spec() { return UnitSampling{{"q", "r", "s"}, 3, 7}; }

UnitMatrix m(const std::vector<std::vector<const char*>>& rows) {
  std::vector<std::vector<UnitScalar>> out;
  for (const auto& r : rows) {
    out.emplace_back();
    for (const auto* e : r) out.back().push_back(parse_unit(e));
  }
  return UnitMatrix::from_rows(out);
}

BimultiplicativeCocycle with_symmetric_factor(Rng& rng, const BimultiplicativeCocycle& mu) {
  return mu * BimultiplicativeCocycle(random_symmetric_matrix(rng, mu.rank(), spec()));
}

}  // namespace

TEST_CASE("evaluate agrees with the letter-pair oracle") {
  Rng rng(1);
  for (int k = 0; k < 30; ++k) {
    const auto rank = static_cast<std::size_t>(uniform_int(rng, 1, 5));
    const auto mu = random_cocycle(rng, rank, spec());
    for (int t = 0; t < 10; ++t) {
      const auto a = random_vector(rng, rank, 3);
      const auto b = random_vector(rng, rank, 3);
      CHECK(evaluate(mu, a, b) == oracle::pair_product(mu.matrix(), a, b));
      CHECK(ordered_monomial_scalar(mu, a) == oracle::word_scalar(mu.matrix(), oracle::word(a)));
    }
  }
  const auto trivial = BimultiplicativeCocycle::trivial(3);
  CHECK(evaluate(trivial, ExponentVector({4, 1, 2}), ExponentVector({0, 3, 5})).is_one());
}

TEST_CASE("bimultiplicative cocycles satisfy the cocycle equation") {
  Rng rng(2);
  for (int k = 0; k < 10; ++k) {
    const auto rank = static_cast<std::size_t>(uniform_int(rng, 2, 5));
    const auto mu = random_cocycle(rng, rank, spec());
    for (int t = 0; t < 100; ++t) {
      const auto x = random_vector(rng, rank, 5);
      const auto y = random_vector(rng, rank, 5);
      const auto z = random_vector(rng, rank, 5);
      CHECK(evaluate(mu, x, y + z) * evaluate(mu, y, z) == evaluate(mu, x, y) * evaluate(mu, x + y, z));
    }
    CHECK(evaluate(mu, ExponentVector(rank), random_vector(rng, rank, 5)).is_one());
  }
}

TEST_CASE("canonical cocycle of an antisymmetric matrix") {
  const auto q = AntisymmetricMatrix::from_upper(2, {parse_unit("q")});
  CHECK(canonical_from_antisym(q).matrix() == m({{"1", "q"}, {"1", "1"}}));
  CHECK(canonical_from_antisym(AntisymmetricMatrix::identity(3)).is_trivial());

  const auto q3 = AntisymmetricMatrix::from_upper(3, {parse_unit("q"), parse_unit("r"), parse_unit("s")});
  const auto mu = canonical_from_antisym(q3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const auto value = evaluate(mu, ExponentVector::generator(3, i), ExponentVector::generator(3, j));
      CHECK(value == (i < j ? q3.entry(i, j) : UnitScalar()));
    }
  }

  Rng rng(4);
  for (int k = 0; k < 20; ++k) {
    const auto r = random_antisymmetric(rng, static_cast<std::size_t>(uniform_int(rng, 1, 6)), spec());
    CHECK(antisymmetrize(canonical_from_antisym(r)) == r);
  }
}

TEST_CASE("antisymmetric matrices are validated") {
  CHECK_THROWS_AS(AntisymmetricMatrix(m({{"1", "q"}, {"q", "1"}})), InputError);
  CHECK_THROWS_AS(AntisymmetricMatrix(m({{"2", "q"}, {"q^-1", "1"}})), InputError);
  CHECK_NOTHROW(AntisymmetricMatrix(m({{"1", "-2*q"}, {"-1/2*q^-1", "1"}})));
}

TEST_CASE("antisymmetrization") {
  const auto b = antisymmetrize(BimultiplicativeCocycle(m({{"1", "q"}, {"1", "1"}})));
  CHECK(b.entry(0, 1) == parse_unit("q"));
  CHECK(b.entry(1, 0) == parse_unit("q^-1"));
  CHECK(antisymmetrize(BimultiplicativeCocycle(m({{"2", "q"}, {"q", "r"}}))) == AntisymmetricMatrix::identity(2));

  Rng rng(6);
  for (int k = 0; k < 20; ++k) {
    const auto mu = random_cocycle(rng, static_cast<std::size_t>(uniform_int(rng, 1, 5)), spec());
    const auto beta = antisymmetrize(mu);
    for (std::size_t i = 0; i < mu.rank(); ++i) {
      CHECK(beta.entry(i, i).is_one());
      for (std::size_t j = 0; j < mu.rank(); ++j) CHECK((beta.entry(i, j) * beta.entry(j, i)).is_one());
    }
  }
}

TEST_CASE("cohomology classes") {
  const auto q3 = AntisymmetricMatrix::from_upper(3, {parse_unit("q"), parse_unit("2"), parse_unit("r^-1")});
  const auto mu = canonical_from_antisym(q3);
  CHECK(cohomologous(mu, mu));

  // Lower-triangular variant: A'_ij = q_ij below the diagonal.
  UnitMatrix lower(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < i; ++j) lower(i, j) = q3.entry(i, j);
  }
  const BimultiplicativeCocycle mu_lower(lower);
  CHECK(antisymmetrize(mu_lower) == q3);
  CHECK(cohomologous(mu, mu_lower));

  Rng rng(7);
  for (int k = 0; k < 20; ++k) {
    const auto nu = random_cocycle(rng, 4, spec());
    CHECK(cohomologous(nu, with_symmetric_factor(rng, nu)));
  }
  CHECK_FALSE(cohomologous(mu, BimultiplicativeCocycle::trivial(3)));
}

TEST_CASE("yamazaki factorization") {
  const ProductSplit split(2, 2);
  const auto trivial = yamazaki_factorize(BimultiplicativeCocycle::trivial(4), split);
  CHECK(trivial.left.is_trivial());
  CHECK(trivial.right.is_trivial());
  CHECK(trivial.pairing.is_trivial());

  // The pairing of a canonical cocycle is its upper-right block.
  Rng rng(9);
  for (int k = 0; k < 10; ++k) {
    const auto q = random_antisymmetric(rng, 5, spec());
    const auto y = yamazaki_factorize(canonical_from_antisym(q), ProductSplit(2, 3));
    CHECK(y.pairing.matrix() == q.matrix().block(0, 2, 2, 3));
  }

  // Y(sigma) = (1, 1, alpha).
  const Pairing alpha(m({{"q", "2"}, {"1", "r^-1"}}));
  const auto sigma = yamazaki_reconstruct(BimultiplicativeCocycle::trivial(2), BimultiplicativeCocycle::trivial(2),
                                          alpha);
  CHECK(yamazaki_factorize(sigma, split) ==
        YamazakiFactors{BimultiplicativeCocycle::trivial(2), BimultiplicativeCocycle::trivial(2), alpha});
  CHECK_FALSE(is_factorizable(sigma, split));
  CHECK(is_factorizable(direct_product(random_cocycle(rng, 2, spec()), random_cocycle(rng, 3, spec())),
                        ProductSplit(2, 3)));

  for (int k = 0; k < 20; ++k) {
    const auto a = static_cast<std::size_t>(uniform_int(rng, 1, 3));
    const auto b = static_cast<std::size_t>(uniform_int(rng, 1, 3));
    const ProductSplit s(a, b);
    const auto mu = random_cocycle(rng, a + b, spec());
    const auto nu = random_cocycle(rng, a + b, spec());
    const auto ym = yamazaki_factorize(mu, s);
    const auto yn = yamazaki_factorize(nu, s);
    const auto ymn = yamazaki_factorize(mu * nu, s);
    CHECK(ymn.left == ym.left * yn.left);
    CHECK(ymn.right == ym.right * yn.right);
    CHECK(ymn.pairing == ym.pairing * yn.pairing);

    const YamazakiFactors t{random_cocycle(rng, a, spec()), random_cocycle(rng, b, spec()),
                            random_pairing(rng, a, b, spec())};
    CHECK(yamazaki_factorize(yamazaki_reconstruct(t.left, t.right, t.pairing), s) == t);
    CHECK(cohomologous(yamazaki_reconstruct(ym.left, ym.right, ym.pairing), mu));
    CHECK(is_factorizable(mu, s) == is_factorizable(with_symmetric_factor(rng, mu), s));
  }
  CHECK_THROWS_AS(yamazaki_factorize(BimultiplicativeCocycle::trivial(3), split), InputError);
}

TEST_CASE("pullback along monoid morphisms") {
  Rng rng(10);
  const auto mu = random_cocycle(rng, 4, spec());
  CHECK(pullback(mu, MonoidMorphism::identity(4)) == mu);
  CHECK(pullback(BimultiplicativeCocycle::trivial(4), segre_morphism(1, 1)).is_trivial());

  const auto f = segre_morphism(1, 1);
  const auto pulled = pullback(mu, f);
  for (int k = 0; k < 100; ++k) {
    const auto a = random_vector(rng, 4, 3);
    const auto b = random_vector(rng, 4, 3);
    CHECK(evaluate(pulled, a, b) == evaluate(mu, f(a), f(b)));
  }
  CHECK_THROWS_AS(pullback(random_cocycle(rng, 3, spec()), f), InputError);
}
