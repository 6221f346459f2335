#include "cotwist/sampling.hpp"

namespace cotwist {

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

Rational random_rational(Rng& rng, std::int64_t max_abs) {
  const long num = static_cast<long>(uniform_int(rng, 1, max_abs));
  const long den = static_cast<long>(uniform_int(rng, 1, max_abs));
  Rational r(num, den);
  r.canonicalize();
  return uniform_int(rng, 0, 1) == 0 ? r : Rational(-r);
}

UnitScalar random_unit(Rng& rng, const UnitSampling& spec) {
  std::vector<ParamExponents::Entry> exps;
  for (const auto& p : spec.parameters) exps.emplace_back(p, uniform_int(rng, -spec.max_exponent, spec.max_exponent));
  return UnitScalar(random_rational(rng, spec.max_coefficient), ParamExponents::from_entries(std::move(exps)));
}

LaurentPolynomial random_polynomial(Rng& rng, std::size_t max_terms, const UnitSampling& spec) {
  LaurentPolynomial p;
  const auto terms = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<std::int64_t>(max_terms)));
  for (std::size_t k = 0; k < terms; ++k) p += random_unit(rng, spec);
  return p;
}

ExponentVector random_vector(Rng& rng, std::size_t rank, std::int64_t max_entry) {
  std::vector<std::int64_t> e(rank);
  for (auto& x : e) x = uniform_int(rng, 0, max_entry);
  return ExponentVector(std::move(e));
}

UnitMatrix random_unit_matrix(Rng& rng, std::size_t rows, std::size_t cols, const UnitSampling& spec) {
  std::vector<UnitScalar> entries;
  entries.reserve(rows * cols);
  for (std::size_t k = 0; k < rows * cols; ++k) entries.push_back(random_unit(rng, spec));
  return UnitMatrix(rows, cols, std::move(entries));
}

UnitMatrix random_symmetric_matrix(Rng& rng, std::size_t rank, const UnitSampling& spec) {
  UnitMatrix m(rank, rank);
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = i; j < rank; ++j) {
      m(i, j) = random_unit(rng, spec);
      m(j, i) = m(i, j);
    }
  }
  return m;
}

BimultiplicativeCocycle random_cocycle(Rng& rng, std::size_t rank, const UnitSampling& spec) {
  return BimultiplicativeCocycle(random_unit_matrix(rng, rank, rank, spec));
}

AntisymmetricMatrix random_antisymmetric(Rng& rng, std::size_t rank, const UnitSampling& spec) {
  std::vector<UnitScalar> upper;
  for (std::size_t k = 0; k < rank * (rank == 0 ? 0 : rank - 1) / 2; ++k) upper.push_back(random_unit(rng, spec));
  return AntisymmetricMatrix::from_upper(rank, upper);
}

Pairing random_pairing(Rng& rng, std::size_t left_rank, std::size_t right_rank, const UnitSampling& spec) {
  return Pairing(random_unit_matrix(rng, left_rank, right_rank, spec));
}

AlgebraElement random_element(Rng& rng, std::size_t rank, std::size_t max_terms, std::int64_t max_entry,
                              const UnitSampling& spec) {
  AlgebraElement x(rank);
  while (x.is_zero()) {
    const auto terms = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<std::int64_t>(max_terms)));
    for (std::size_t k = 0; k < terms; ++k) {
      ExponentVector u = random_vector(rng, rank, max_entry);
      x.add_term(u, random_unit(rng, spec));
    }
  }
  return x;
}

}  // namespace cotwist
