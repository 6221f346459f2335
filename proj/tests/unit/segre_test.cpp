#include <doctest.h>

#include "cotwist/error.hpp"
#include "cotwist/sampling.hpp"
#include "cotwist/segre.hpp"
#include "oracles.hpp"

using namespace cotwist;

namespace {

UnitSampling spec() { return UnitSampling{{"q", "r", "s"}, 3, 7}; }

Assignment all_ones() { return {{"q", Rational(1)}, {"r", Rational(1)}, {"s", Rational(1)}}; }

}  // namespace

TEST_CASE("classical segre map") {
  const auto s = build_quantum_segre(1, 1, BimultiplicativeCocycle::trivial(4));
  CHECK(s.source().cocycle().is_trivial());
  CHECK(s.source().generator_names() == std::vector<std::string>{"z00", "z01", "z10", "z11"});
  CHECK(s.target().generator_names() == std::vector<std::string>{"x0", "x1", "y0", "y1"});
  const auto& phi = s.homomorphism();
  CHECK(apply(phi, s.source().one()) == s.target().one());
  const auto image = apply(phi, s.source().parse("z00*z11"));
  CHECK(image == s.target().basis(ExponentVector({1, 1, 1, 1})));
  CHECK(s.target().render(image) == "x0*x1*y0*y1");
  CHECK(verify_homomorphism(phi, 100, 1).pass);
  CHECK(verify_homomorphism(build_quantum_segre(2, 2, BimultiplicativeCocycle::trivial(6)).homomorphism(), 100, 2).pass);

  const auto wide = build_quantum_segre(10, 1, BimultiplicativeCocycle::trivial(13));
  CHECK(wide.source().generator_names()[3] == "z1_1");
  CHECK_THROWS_AS(build_quantum_segre(1, 1, BimultiplicativeCocycle::trivial(5)), InputError);
  CHECK_THROWS_AS(build_quantum_segre(0, 1, BimultiplicativeCocycle::trivial(3)), InputError);
}

TEST_CASE("images of basis monomials") {
  Rng rng(1);
  for (int k = 0; k < 10; ++k) {
    const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 2));
    const auto m = static_cast<std::size_t>(uniform_int(rng, 1, 2));
    const auto s = build_quantum_segre(n, m, random_cocycle(rng, n + m + 2, spec()));
    const auto& phi = s.homomorphism();
    const auto& src = s.source();
    const auto& tgt = s.target();
    for (int t = 0; t < 10; ++t) {
      const auto u = random_vector(rng, src.rank(), 2);
      // Ordered product of generator images, divided by the source scalar.
      AlgebraElement product = tgt.one();
      for (auto letter : oracle::word(u)) product = multiply(tgt, product, phi.generator_images()[letter]);
      const auto c_src = oracle::word_scalar(src.cocycle().matrix(), oracle::word(u));
      const auto image = phi.image_of_basis(u);
      CHECK(image == product.scaled(c_src.inverse()));
      REQUIRE(image.homogeneous_degree().has_value());
      CHECK(*image.homogeneous_degree() == phi.monoid_morphism()(u));
    }
  }
}

TEST_CASE("quantum segre maps are homomorphisms") {
  Rng rng(2);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t m = 1; m <= 3; ++m) {
      const auto s = build_quantum_segre(n, m, random_cocycle(rng, n + m + 2, spec()));
      const auto r = verify_homomorphism(s.homomorphism(), 20, n * 10 + m);
      CHECK(r.pass);
      CHECK(r.checked_pairs == 20);
      CHECK(r.checked_relations == s.source().rank() * (s.source().rank() - 1) / 2);
    }
  }
}

TEST_CASE("a wrong generator image is rejected") {
  const auto target = TwistedMonoidAlgebra::polynomial({"x0", "x1", "y0", "y1"});
  const auto source = TwistedMonoidAlgebra::polynomial({"z00", "z01", "z10", "z11"});
  const auto f = segre_morphism(1, 1);
  std::vector<AlgebraElement> images;
  for (const auto& d : f.generator_images()) images.push_back(target.basis(d));
  CHECK_NOTHROW(GradedHomomorphism(source, target, f, images));

  auto wrong_degree = images;
  wrong_degree[1] = target.basis(ExponentVector({1, 0, 1, 0}));
  CHECK_THROWS_AS(GradedHomomorphism(source, target, f, wrong_degree), InputError);
  auto inhomogeneous = images;
  inhomogeneous[0] = inhomogeneous[0] + images[3];
  CHECK_THROWS_AS(GradedHomomorphism(source, target, f, inhomogeneous), InputError);
  images.pop_back();
  CHECK_THROWS_AS(GradedHomomorphism(source, target, f, images), InputError);
}

TEST_CASE("a homomorphism check finds a counterexample") {
  // Identity morphism from a commutative algebra to a quantum plane is not
  // multiplicative: X1 X0 = X0 X1 upstairs but not downstairs.
  const auto source = TwistedMonoidAlgebra::polynomial({"X0", "X1"});
  const auto target = quantum_projective_space(AntisymmetricMatrix::from_upper(2, {parse_unit("q")}), {"X0", "X1"});
  const GradedHomomorphism phi(source, target, MonoidMorphism::identity(2), {target.generator(0), target.generator(1)});
  const auto r = verify_homomorphism(phi, 30, 4);
  CHECK_FALSE(r.pass);
  REQUIRE(r.counterexample.has_value());
  CHECK(r.counterexample->expected != r.counterexample->actual);

  // The identity of a twisted algebra onto itself is a homomorphism.
  const GradedHomomorphism id(target, target, MonoidMorphism::identity(2), {target.generator(0), target.generator(1)});
  CHECK(verify_homomorphism(id, 30, 4).pass);
}

TEST_CASE("source deformation matrix and kronecker products") {
  CHECK(source_deformation_matrix(build_quantum_segre(2, 1, BimultiplicativeCocycle::trivial(5))) ==
        AntisymmetricMatrix::identity(6));
  CHECK(kronecker(AntisymmetricMatrix::identity(2), AntisymmetricMatrix::identity(3)) ==
        AntisymmetricMatrix::identity(6));

  const auto q = AntisymmetricMatrix::from_upper(2, {parse_unit("q")});
  const auto r = AntisymmetricMatrix::from_upper(2, {parse_unit("r")});
  const auto k = kronecker(q, r);
  CHECK(k.entry(segre_index(1, 0, 0), segre_index(1, 1, 1)) == parse_unit("q*r"));
  CHECK(k.entry(segre_index(1, 0, 1), segre_index(1, 1, 0)) == parse_unit("q*r^-1"));
  for (std::size_t i = 0; i < 4; ++i) CHECK(k.entry(i, i).is_one());

  const auto mu = yamazaki_reconstruct(canonical_from_antisym(q), canonical_from_antisym(r), Pairing::trivial(2, 2));
  const auto s = build_quantum_segre(1, 1, mu);
  CHECK(source_deformation_matrix(s) == k);

  Rng rng(3);
  const auto sym = BimultiplicativeCocycle(random_symmetric_matrix(rng, 4, spec()));
  CHECK(source_deformation_matrix(build_quantum_segre(1, 1, mu * sym)) == k);

  const auto general = random_cocycle(rng, 5, spec());
  CHECK(source_deformation_matrix(build_quantum_segre(1, 2, general)) ==
        antisymmetrize(pullback(general, segre_morphism(1, 2))));
}

TEST_CASE("classical kernel") {
  const auto s11 = build_quantum_segre(1, 1, BimultiplicativeCocycle::trivial(4));
  const auto probe = kernel_basis(s11, 2, {});
  CHECK(probe.source_dimension == 10);
  CHECK(probe.target_dimension == 9);
  CHECK(probe.rank == 9);
  REQUIRE(probe.basis.size() == 1);
  CHECK(s11.source().render(probe.basis[0]) == "z00*z11 - z01*z10");

  for (auto [n, m] : {std::pair<std::size_t, std::size_t>{1, 2}, {2, 2}, {2, 1}, {1, 3}}) {
    const auto s = build_quantum_segre(n, m, BimultiplicativeCocycle::trivial(n + m + 2));
    const auto p = kernel_basis(s, 2, {});
    CHECK(p.basis.size() == oracle::binomial(n + 1, 2) * oracle::binomial(m + 1, 2));
    CHECK(p.basis.size() == oracle::segre_monomial_kernel_dimension(n, m, 2));
    CHECK(p.basis.size() == p.source_dimension - p.rank);
  }
  const auto p3 = kernel_basis(s11, 3, {});
  CHECK(p3.basis.size() == oracle::segre_monomial_kernel_dimension(1, 1, 3));
  CHECK_THROWS_AS(kernel_basis(s11, 0, {}), InputError);
}

TEST_CASE("kernel at quantum specializations") {
  Rng rng(4);
  for (int k = 0; k < 5; ++k) {
    const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 2));
    const auto m = static_cast<std::size_t>(uniform_int(rng, 1, 2));
    const auto s = build_quantum_segre(n, m, random_cocycle(rng, n + m + 2, spec()));
    Assignment a;
    for (const char* name : {"q", "r", "s"}) a[name] = random_rational(rng, 6);
    const auto p = kernel_basis(s, 2, a);
    CHECK(p.basis.size() == p.source_dimension - p.rank);
    CHECK(p.basis.size() == oracle::segre_monomial_kernel_dimension(n, m, 2));
    for (const auto& x : p.basis) {
      const auto image = apply(s.homomorphism(), x);
      for (const auto& [w, c] : image.terms()) CHECK(specialize(c, a) == 0);
    }
  }
  const auto quantum = build_quantum_segre(1, 1, random_cocycle(rng, 4, spec()));
  CHECK_THROWS_AS(kernel_basis(quantum, 2, {{"q", Rational(1)}}), InputError);
  CHECK_THROWS_AS(kernel_basis(quantum, 2, {{"q", Rational(0)}, {"r", Rational(1)}, {"s", Rational(1)}}),
                  InputError);
  CHECK_NOTHROW(kernel_basis(quantum, 2, all_ones()));
}
