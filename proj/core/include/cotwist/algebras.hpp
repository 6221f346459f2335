#pragma once

// Twisted monoid algebras: the N^n-graded algebra with basis e_u, u in N^n,
// and product e_u * e_v = mu(u, v) e_{u+v} for a bimultiplicative cocycle mu.
// Polynomial algebras, quantum projective spaces, twists and twisted tensor
// products are all instances.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cotwist/cocycles.hpp"
#include "cotwist/monoids.hpp"
#include "cotwist/scalars.hpp"
#include "cotwist/truncated.hpp"

namespace cotwist {

/// Finite linear combination of basis monomials e_u with Laurent polynomial
/// coefficients. Zero coefficients are never stored.
class AlgebraElement {
 public:
  using Terms = std::map<ExponentVector, LaurentPolynomial>;

  explicit AlgebraElement(std::size_t rank) : rank_(rank) {}
  static AlgebraElement monomial(const ExponentVector& u, const LaurentPolynomial& coefficient = Rational(1));

  std::size_t rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// The coefficient of e_u (zero when absent).
  LaurentPolynomial coefficient(const ExponentVector& u) const;
  /// The common degree when the element is a single nonzero term.
  std::optional<ExponentVector> homogeneous_degree() const;

  void add_term(const ExponentVector& u, const LaurentPolynomial& coefficient);
  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  /// Scalar multiplication by a coefficient.
  AlgebraElement scaled(const LaurentPolynomial& c) const;

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  std::size_t rank_;
  Terms terms_;
};

/// Basis-indexed N^n-graded algebra twisted by `cocycle`.
class TwistedMonoidAlgebra {
 public:
  /// Generator names must be distinct identifiers, one per rank.
  TwistedMonoidAlgebra(BimultiplicativeCocycle cocycle, std::vector<std::string> generator_names,
                       std::optional<ProductSplit> split = std::nullopt);
  /// Commutative polynomial algebra on the given generators.
  static TwistedMonoidAlgebra polynomial(std::vector<std::string> generator_names);

  std::size_t rank() const { return cocycle_.rank(); }
  const BimultiplicativeCocycle& cocycle() const { return cocycle_; }
  const std::vector<std::string>& generator_names() const { return names_; }
  /// Present for twisted tensor products: which generators come from which factor.
  const std::optional<ProductSplit>& split() const { return split_; }

  AlgebraElement one() const { return AlgebraElement::monomial(ExponentVector(rank())); }
  AlgebraElement generator(std::size_t k) const {
    return AlgebraElement::monomial(ExponentVector::generator(rank(), k));
  }
  AlgebraElement basis(const ExponentVector& u) const;
  bool contains(const AlgebraElement& x) const { return x.rank() == rank(); }

  /// Element grammar: sums of terms `[coeff '*'] gen['^' k] ('*' gen['^' k])*`
  /// where coeff is a unit literal or a parenthesized polynomial. The
  /// generator part is a label for the basis monomial e_u: factor order is
  /// irrelevant and repeated generators add exponents.
  AlgebraElement parse(std::string_view text) const;
  std::string render(const AlgebraElement& x) const;
  /// Renders e_u as "X0^2*X1" ("1" for the identity).
  std::string render_monomial(const ExponentVector& u) const;

  friend bool operator==(const TwistedMonoidAlgebra&, const TwistedMonoidAlgebra&) = default;

 private:
  BimultiplicativeCocycle cocycle_;
  std::vector<std::string> names_;
  std::optional<ProductSplit> split_;
};

/// Bilinear extension of e_u * e_v = mu(u, v) e_{u+v}.
AlgebraElement multiply(const TwistedMonoidAlgebra& a, const AlgebraElement& x, const AlgebraElement& y);

/// The algebra generated by X_0..X_N with X_j X_i = q_ji X_i X_j, realized
/// as the polynomial algebra twisted by the canonical cocycle mu_q.
TwistedMonoidAlgebra quantum_projective_space(const AntisymmetricMatrix& q, std::vector<std::string> names);

/// beta of the algebra's cocycle: entry (j, i) is the scalar with
/// X_j X_i = beta_ji X_i X_j.
AntisymmetricMatrix deformation_matrix(const TwistedMonoidAlgebra& a);

/// A_nu: same basis, cocycle multiplied by nu.
TwistedMonoidAlgebra twist_by(const TwistedMonoidAlgebra& a, const BimultiplicativeCocycle& nu);

/// B (x)_alpha C on N^(a+b): blocks (a,a) = B, (b,b) = C, (a,b) = 1 and
/// (b,a) = alpha^T. This realizes tau((s,t),(s',t')) = alpha(s',t), so
/// e_t * e_s = alpha(s, t) e_{s+t} for s in the left and t in the right block.
TwistedMonoidAlgebra twisted_tensor_product(const TwistedMonoidAlgebra& b, const TwistedMonoidAlgebra& c,
                                            const Pairing& alpha);

/// Embeddings of the factors into a twisted tensor product.
AlgebraElement embed_left(const TwistedMonoidAlgebra& product, const AlgebraElement& b);
AlgebraElement embed_right(const TwistedMonoidAlgebra& product, const AlgebraElement& c);

struct FactorTwistReport {
  TwistedMonoidAlgebra twisted_product;   // (B (x) C)_mu
  TwistedMonoidAlgebra tensor_of_twists;  // B_nu (x)_alpha C_xi
  YamazakiFactors factors;                // (nu, xi, 1/alpha)
  Pairing alpha;
  bool cohomologous = false;
  bool identical = false;
  /// mu is factorizable, so the twist is a classical tensor product B_nu (x) C_xi.
  bool classical_tensor_product = false;
};

/// Compares (B (x) C)_mu with B_nu (x)_alpha C_xi where Y(mu) = (nu, xi, 1/alpha).
FactorTwistReport factor_twist(const TwistedMonoidAlgebra& b, const TwistedMonoidAlgebra& c,
                               const BimultiplicativeCocycle& mu);

/// The graded isomorphism A_mu -> A_nu, e_u -> h(u) e_u, for cohomologous
/// mu and nu with mu = (delta h) nu.
class ScalingIsomorphism {
 public:
  ScalingIsomorphism(TwistedMonoidAlgebra source, TwistedMonoidAlgebra target, SymmetricTrivializer h)
      : source_(std::move(source)), target_(std::move(target)), h_(std::move(h)) {}

  const TwistedMonoidAlgebra& source() const { return source_; }
  const TwistedMonoidAlgebra& target() const { return target_; }
  UnitScalar scale(const ExponentVector& u) const { return h_(u); }
  AlgebraElement operator()(const AlgebraElement& x) const;
  /// The inverse scaling A_nu -> A_mu.
  AlgebraElement inverse(const AlgebraElement& y) const;

 private:
  TwistedMonoidAlgebra source_;
  TwistedMonoidAlgebra target_;
  SymmetricTrivializer h_;
};

struct IsomorphismReport {
  ScalingIsomorphism map;
  bool verified = false;
  std::size_t checked_pairs = 0;
  std::optional<std::pair<AlgebraElement, AlgebraElement>> counterexample;
};

/// Builds phi_h from A_mu (twist of `a` by mu) to A_nu and checks
/// phi(x *_mu y) = phi(x) *_nu phi(y) on `samples` seeded random pairs.
/// Throws InputError when mu and nu are not cohomologous.
IsomorphismReport coboundary_isomorphism(const TwistedMonoidAlgebra& a, const BimultiplicativeCocycle& mu,
                                         const BimultiplicativeCocycle& nu, std::size_t samples = 50,
                                         std::uint64_t seed = 1);

AlgebraElement parse_element(const TwistedMonoidAlgebra& a, std::string_view text);
std::string render_element(const TwistedMonoidAlgebra& a, const AlgebraElement& x);

/// Default generator names X0..X{n-1} (or a custom prefix).
std::vector<std::string> default_generator_names(std::size_t rank, std::string_view prefix = "X");

}  // namespace cotwist
