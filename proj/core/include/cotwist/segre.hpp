#pragma once

// Graded homomorphisms between twisted monoid algebras that are compatible
// with a monoid morphism, and the quantum Segre maps built from them.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cotwist/algebras.hpp"
#include "cotwist/cocycles.hpp"
#include "cotwist/monoids.hpp"
#include "cotwist/scalars.hpp"

namespace cotwist {

/// An algebra map determined by its values on generators, compatible with a
/// monoid morphism f: the image of generator k is c_k e_{f(g_k)}.
///
/// On a basis monomial the map acts as
///   phi(e_u) = (1 / c_src(u)) * phi(X_0)^{u_0} * ... * phi(X_{r-1})^{u_{r-1}},
/// where c_src(u) is the unit with X_0^{u_0} * ... = c_src(u) e_u in the
/// source, i.e. the ordered product of generators is sent to the ordered
/// product of their images.
class GradedHomomorphism {
 public:
  /// Throws InputError when an image is not a nonzero homogeneous element of
  /// degree f(g_k) in the target, or when ranks do not match.
  GradedHomomorphism(TwistedMonoidAlgebra source, TwistedMonoidAlgebra target, MonoidMorphism morphism,
                     std::vector<AlgebraElement> generator_images);

  const TwistedMonoidAlgebra& source() const { return source_; }
  const TwistedMonoidAlgebra& target() const { return target_; }
  const MonoidMorphism& monoid_morphism() const { return morphism_; }
  const std::vector<AlgebraElement>& generator_images() const { return images_; }

  /// phi(e_u), homogeneous of degree f(u).
  AlgebraElement image_of_basis(const ExponentVector& u) const;

 private:
  TwistedMonoidAlgebra source_;
  TwistedMonoidAlgebra target_;
  MonoidMorphism morphism_;
  std::vector<AlgebraElement> images_;
  std::vector<LaurentPolynomial> image_coefficients_;
  bool unit_images_ = true;
  // Entrywise pullback(target cocycle, f) / source cocycle; its ordered
  // monomial scalar is c_tgt(f, u) / c_src(u).
  BimultiplicativeCocycle normalization_;
};

AlgebraElement apply(const GradedHomomorphism& phi, const AlgebraElement& x);

struct HomomorphismCounterexample {
  std::string kind;  // "product" or "relation"
  AlgebraElement left;
  AlgebraElement right;
  AlgebraElement expected;  // phi(x * y), or beta_ji phi(X_i) * phi(X_j)
  AlgebraElement actual;    // phi(x) * phi(y), or phi(X_j) * phi(X_i)
};

struct HomomorphismReport {
  bool pass = true;
  std::size_t checked_pairs = 0;
  std::size_t checked_relations = 0;
  std::optional<HomomorphismCounterexample> counterexample;
};

/// Checks phi(x * y) = phi(x) * phi(y) exactly on `samples` seeded random
/// pairs (up to 3 terms, exponent entries <= 4), then the generator
/// relations phi(X_j) * phi(X_i) = beta_ji phi(X_i) * phi(X_j) for i < j.
HomomorphismReport verify_homomorphism(const GradedHomomorphism& phi, std::size_t samples, std::uint64_t seed);

/// The quantum Segre map (s_{n,m})_mu : (A^{(n+1)(m+1)-1})_{mu^f} -> (A^n (x) A^m)_mu,
/// z_ij -> x_i (x) y_j.
class SegreMap {
 public:
  SegreMap(std::size_t n, std::size_t m, BimultiplicativeCocycle ambient_cocycle, GradedHomomorphism homomorphism)
      : n_(n), m_(m), ambient_(std::move(ambient_cocycle)), phi_(std::move(homomorphism)) {}

  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  ProductSplit split() const { return ProductSplit(n_ + 1, m_ + 1); }
  const BimultiplicativeCocycle& ambient_cocycle() const { return ambient_; }
  const GradedHomomorphism& homomorphism() const { return phi_; }
  const TwistedMonoidAlgebra& source() const { return phi_.source(); }
  const TwistedMonoidAlgebra& target() const { return phi_.target(); }

 private:
  std::size_t n_;
  std::size_t m_;
  BimultiplicativeCocycle ambient_;
  GradedHomomorphism phi_;
};

/// Source generators are named z{i}{j} (z{i}_{j} when n or m exceeds 9),
/// target generators x0..xn, y0..ym.
SegreMap build_quantum_segre(std::size_t n, std::size_t m, const BimultiplicativeCocycle& mu);

/// antisymmetrize(pullback(mu, f)): the matrix g with source = A_g.
AntisymmetricMatrix source_deformation_matrix(const SegreMap& s);

/// Entry ((i,j),(k,l)) = q_ik * q'_jl with row-major pair indices.
AntisymmetricMatrix kronecker(const AntisymmetricMatrix& q, const AntisymmetricMatrix& q_prime);

struct KernelProbe {
  std::int64_t degree = 0;
  std::size_t source_dimension = 0;  // number of source monomials of that degree
  std::size_t target_dimension = 0;  // number of distinct image monomials
  std::size_t rank = 0;
  /// Nullspace basis lifted to source elements with rational coefficients,
  /// each normalized so its first term (in rendering order) is 1.
  std::vector<AlgebraElement> basis;
};

/// Degree-bounded kernel of the specialized Segre map. Every returned
/// element is checked to map to zero after specialization. Throws
/// InputError on degree < 1 or a missing/zero parameter value.
KernelProbe kernel_basis(const SegreMap& s, std::int64_t degree, const Assignment& specialization);

}  // namespace cotwist
