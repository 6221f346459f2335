#include "cotwist/segre.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "cotwist/error.hpp"
#include "cotwist/linalg.hpp"
#include "cotwist/sampling.hpp"

namespace cotwist {

namespace {

std::vector<std::string> cocycle_parameters(const BimultiplicativeCocycle& mu, std::set<std::string>& into) {
  for (std::size_t i = 0; i < mu.rank(); ++i) {
    for (std::size_t j = 0; j < mu.rank(); ++j) {
      for (auto& p : parameters_of(mu.entry(i, j))) into.insert(std::move(p));
    }
  }
  return {into.begin(), into.end()};
}

}  // namespace

GradedHomomorphism::GradedHomomorphism(TwistedMonoidAlgebra source, TwistedMonoidAlgebra target,
                                       MonoidMorphism morphism, std::vector<AlgebraElement> generator_images)
    : source_(std::move(source)),
      target_(std::move(target)),
      morphism_(std::move(morphism)),
      images_(std::move(generator_images)),
      normalization_(BimultiplicativeCocycle::trivial(0)) {
  if (morphism_.source_rank() != source_.rank() || morphism_.target_rank() != target_.rank()) {
    throw InputError("graded homomorphism: monoid morphism ranks do not match the algebras");
  }
  if (images_.size() != source_.rank()) {
    throw InputError("graded homomorphism: expected " + std::to_string(source_.rank()) + " generator images");
  }
  for (std::size_t k = 0; k < images_.size(); ++k) {
    const auto& img = images_[k];
    if (!target_.contains(img)) throw InputError("graded homomorphism: image of generator " + std::to_string(k) +
                                                 " is not an element of the target");
    const ExponentVector want = morphism_.generator_images()[k];
    const auto deg = img.homogeneous_degree();
    if (!deg || *deg != want) {
      throw InputError("graded homomorphism: image of generator " + source_.generator_names()[k] +
                       " is not homogeneous of degree " + want.to_string());
    }
    image_coefficients_.push_back(img.terms().begin()->second);
    if (!(image_coefficients_.back() == LaurentPolynomial(Rational(1)))) unit_images_ = false;
  }
  normalization_ = pullback(target_.cocycle(), morphism_) / source_.cocycle();
}

AlgebraElement GradedHomomorphism::image_of_basis(const ExponentVector& u) const {
  if (u.rank() != source_.rank()) throw InputError("image_of_basis: rank mismatch");
  LaurentPolynomial coeff(ordered_monomial_scalar(normalization_, u));
  if (!unit_images_) {
    for (std::size_t k = 0; k < u.rank(); ++k) {
      if (u[k] != 0) coeff *= image_coefficients_[k].pow(static_cast<std::uint64_t>(u[k]));
    }
  }
  return AlgebraElement::monomial(morphism_(u), coeff);
}

AlgebraElement apply(const GradedHomomorphism& phi, const AlgebraElement& x) {
  if (!phi.source().contains(x)) throw InputError("apply: element does not belong to the source algebra");
  AlgebraElement out(phi.target().rank());
  for (const auto& [u, c] : x.terms()) out += phi.image_of_basis(u).scaled(c);
  return out;
}

HomomorphismReport verify_homomorphism(const GradedHomomorphism& phi, std::size_t samples, std::uint64_t seed) {
  HomomorphismReport report;
  const auto& src = phi.source();
  const auto& tgt = phi.target();

  std::set<std::string> names;
  cocycle_parameters(src.cocycle(), names);
  UnitSampling spec;
  spec.parameters = cocycle_parameters(tgt.cocycle(), names);
  spec.max_exponent = 2;
  spec.max_coefficient = 5;

  Rng rng(seed);
  for (std::size_t k = 0; k < samples; ++k) {
    auto x = random_element(rng, src.rank(), 3, 4, spec);
    auto y = random_element(rng, src.rank(), 3, 4, spec);
    auto expected = apply(phi, multiply(src, x, y));
    auto actual = multiply(tgt, apply(phi, x), apply(phi, y));
    ++report.checked_pairs;
    if (!(expected == actual)) {
      report.pass = false;
      report.counterexample = HomomorphismCounterexample{"product", std::move(x), std::move(y), std::move(expected),
                                                         std::move(actual)};
      return report;
    }
  }

  const AntisymmetricMatrix beta = deformation_matrix(src);
  for (std::size_t j = 0; j < src.rank(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const auto xi = apply(phi, src.generator(i));
      const auto xj = apply(phi, src.generator(j));
      auto expected = multiply(tgt, xi, xj).scaled(beta.entry(j, i));
      auto actual = multiply(tgt, xj, xi);
      ++report.checked_relations;
      if (!(expected == actual)) {
        report.pass = false;
        report.counterexample =
            HomomorphismCounterexample{"relation", src.generator(j), src.generator(i), std::move(expected),
                                       std::move(actual)};
        return report;
      }
    }
  }
  return report;
}

SegreMap build_quantum_segre(std::size_t n, std::size_t m, const BimultiplicativeCocycle& mu) {
  if (n < 1 || m < 1) throw InputError("build_quantum_segre requires n >= 1 and m >= 1");
  if (mu.rank() != n + m + 2) {
    throw InputError("build_quantum_segre: ambient cocycle has rank " + std::to_string(mu.rank()) + ", expected " +
                     std::to_string(n + m + 2));
  }
  const MonoidMorphism f = segre_morphism(n, m);
  const bool wide = n > 9 || m > 9;
  std::vector<std::string> z_names;
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= m; ++j) {
      z_names.push_back("z" + std::to_string(i) + (wide ? "_" : "") + std::to_string(j));
    }
  }
  std::vector<std::string> xy_names = default_generator_names(n + 1, "x");
  for (auto& y : default_generator_names(m + 1, "y")) xy_names.push_back(std::move(y));

  TwistedMonoidAlgebra source(pullback(mu, f), std::move(z_names));
  TwistedMonoidAlgebra target(mu, std::move(xy_names), ProductSplit(n + 1, m + 1));
  std::vector<AlgebraElement> images;
  images.reserve(f.source_rank());
  for (const auto& deg : f.generator_images()) images.push_back(target.basis(deg));
  GradedHomomorphism phi(std::move(source), std::move(target), f, std::move(images));
  return SegreMap(n, m, mu, std::move(phi));
}

AntisymmetricMatrix source_deformation_matrix(const SegreMap& s) {
  return antisymmetrize(pullback(s.ambient_cocycle(), segre_morphism(s.n(), s.m())));
}

AntisymmetricMatrix kronecker(const AntisymmetricMatrix& q, const AntisymmetricMatrix& q_prime) {
  const std::size_t a = q.rank();
  const std::size_t b = q_prime.rank();
  UnitMatrix out(a * b, a * b);
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) {
      for (std::size_t k = 0; k < a; ++k) {
        for (std::size_t l = 0; l < b; ++l) out(i * b + j, k * b + l) = q.entry(i, k) * q_prime.entry(j, l);
      }
    }
  }
  return AntisymmetricMatrix(std::move(out));
}

KernelProbe kernel_basis(const SegreMap& s, std::int64_t degree, const Assignment& specialization) {
  if (degree < 1) throw InputError("kernel_basis: degree must be at least 1");
  std::set<std::string> names;
  for (const auto& p : cocycle_parameters(s.ambient_cocycle(), names)) {
    auto it = specialization.find(p);
    if (it == specialization.end()) throw InputError("kernel_basis: parameter '" + p + "' is not specialized");
    if (it->second == 0) throw InputError("kernel_basis: parameter '" + p + "' is specialized to zero");
  }

  const auto& phi = s.homomorphism();
  const auto columns = vectors_of_degree(s.source().rank(), degree);
  std::vector<AlgebraElement> images;
  std::map<ExponentVector, std::size_t> row_of;
  images.reserve(columns.size());
  for (const auto& u : columns) {
    images.push_back(phi.image_of_basis(u));
    for (const auto& [w, c] : images.back().terms()) row_of.try_emplace(w, 0);
  }
  std::size_t next = 0;
  for (auto& [w, idx] : row_of) idx = next++;

  RationalMatrix matrix(row_of.size(), columns.size());
  for (std::size_t col = 0; col < columns.size(); ++col) {
    for (const auto& [w, c] : images[col].terms()) matrix(row_of.at(w), col) = specialize(c, specialization);
  }

  KernelProbe probe;
  probe.degree = degree;
  probe.source_dimension = columns.size();
  probe.target_dimension = row_of.size();
  probe.rank = matrix_rank(matrix);
  for (auto& v : nullspace(matrix)) {
    std::size_t lead = 0;
    while (v[lead] == 0) ++lead;
    const Rational scale = 1 / v[lead];
    AlgebraElement x(s.source().rank());
    for (std::size_t col = 0; col < columns.size(); ++col) {
      if (v[col] != 0) x.add_term(columns[col], Rational(v[col] * scale));
    }
    const AlgebraElement image = apply(phi, x);
    for (const auto& [w, c] : image.terms()) {
      if (specialize(c, specialization) != 0) {
        throw std::logic_error("kernel_basis: nullspace vector does not map to zero at " + w.to_string());
      }
    }
    probe.basis.push_back(std::move(x));
  }
  return probe;
}

}  // namespace cotwist
