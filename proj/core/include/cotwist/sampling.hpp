#pragma once

// Seeded random generators for exact values. Used by the sampled
// verifications (homomorphism and isomorphism checks), the CLI and tests.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cotwist/algebras.hpp"
#include "cotwist/cocycles.hpp"
#include "cotwist/monoids.hpp"
#include "cotwist/scalars.hpp"

namespace cotwist {

using Rng = std::mt19937_64;

struct UnitSampling {
  /// Parameters that may occur in sampled units.
  std::vector<std::string> parameters;
  /// Laurent exponents are drawn from [-max_exponent, max_exponent].
  std::int64_t max_exponent = 3;
  /// Numerator and denominator are drawn from [1, max_coefficient]; a sign
  /// is chosen at random. With max_coefficient = 1 coefficients are +-1.
  std::int64_t max_coefficient = 7;
};

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi);

Rational random_rational(Rng& rng, std::int64_t max_abs);
UnitScalar random_unit(Rng& rng, const UnitSampling& spec);
LaurentPolynomial random_polynomial(Rng& rng, std::size_t max_terms, const UnitSampling& spec);
ExponentVector random_vector(Rng& rng, std::size_t rank, std::int64_t max_entry);

UnitMatrix random_unit_matrix(Rng& rng, std::size_t rows, std::size_t cols, const UnitSampling& spec);
UnitMatrix random_symmetric_matrix(Rng& rng, std::size_t rank, const UnitSampling& spec);
BimultiplicativeCocycle random_cocycle(Rng& rng, std::size_t rank, const UnitSampling& spec);
AntisymmetricMatrix random_antisymmetric(Rng& rng, std::size_t rank, const UnitSampling& spec);
Pairing random_pairing(Rng& rng, std::size_t left_rank, std::size_t right_rank, const UnitSampling& spec);

/// Between 1 and max_terms terms with exponent entries <= max_entry and
/// single-unit coefficients.
AlgebraElement random_element(Rng& rng, std::size_t rank, std::size_t max_terms, std::int64_t max_entry,
                              const UnitSampling& spec);

}  // namespace cotwist
