#include <doctest.h>

#include "cotwist/algebras.hpp"
#include "cotwist/error.hpp"
#include "cotwist/sampling.hpp"
#include "oracles.hpp"

using namespace cotwist;

namespace {

UnitSampling spec() { return UnitSampling{{"q", "r", "s"}, 3, 7}; }

TwistedMonoidAlgebra qps(const AntisymmetricMatrix& q) {
  return quantum_projective_space(q, default_generator_names(q.rank()));
}

}  // namespace

TEST_CASE("untwisted multiplication is the polynomial product") {
  const auto a = TwistedMonoidAlgebra::polynomial({"x", "y"});
  const auto x = a.generator(0);
  const auto y = a.generator(1);
  CHECK(multiply(a, x, y) == multiply(a, y, x));
  const auto s = a.parse("x + y");
  CHECK(a.render(multiply(a, s, s)) == "x^2 + 2*x*y + y^2");
  CHECK(multiply(a, a.one(), s) == s);
}

TEST_CASE("quantum projective space relations") {
  const auto q = AntisymmetricMatrix::from_upper(2, {parse_unit("q")});
  const auto a = qps(q);
  const auto x0 = a.generator(0);
  const auto x1 = a.generator(1);
  CHECK(multiply(a, x1, x0) == multiply(a, x0, x1).scaled(parse_unit("q^-1")));
  CHECK(deformation_matrix(a) == q);

  Rng rng(1);
  for (std::size_t rank = 2; rank <= 6; ++rank) {
    const auto qr = random_antisymmetric(rng, rank, spec());
    const auto b = qps(qr);
    CHECK(deformation_matrix(b) == qr);
    for (std::size_t j = 0; j < rank; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        const auto lhs = multiply(b, b.generator(j), b.generator(i));
        const auto rhs = multiply(b, b.generator(i), b.generator(j)).scaled(qr.entry(j, i));
        CHECK((lhs - rhs).is_zero());
      }
    }
  }
  CHECK(qps(AntisymmetricMatrix::identity(3)).cocycle().is_trivial());
}

TEST_CASE("ordered words reduce by the commutation relations") {
  Rng rng(2);
  for (int k = 0; k < 20; ++k) {
    const auto rank = static_cast<std::size_t>(uniform_int(rng, 2, 4));
    const auto q = random_antisymmetric(rng, rank, spec());
    const auto a = qps(q);
    std::vector<std::size_t> word;
    const auto len = uniform_int(rng, 1, 6);
    for (std::int64_t p = 0; p < len; ++p) word.push_back(static_cast<std::size_t>(uniform_int(rng, 0, rank - 1)));

    AlgebraElement product = a.one();
    for (auto letter : word) product = multiply(a, product, a.generator(letter));
    auto sorted = word;
    std::sort(sorted.begin(), sorted.end());
    AlgebraElement standard = a.one();
    for (auto letter : sorted) standard = multiply(a, standard, a.generator(letter));
    CHECK(product == standard.scaled(oracle::bubble_scalar(q.matrix(), word)));
  }
}

TEST_CASE("multiplication matches the naive oracle and is associative") {
  Rng rng(3);
  for (int k = 0; k < 100; ++k) {
    const auto rank = static_cast<std::size_t>(uniform_int(rng, 1, 4));
    const TwistedMonoidAlgebra a(random_cocycle(rng, rank, spec()), default_generator_names(rank));
    const auto x = random_element(rng, rank, 3, 3, spec());
    const auto y = random_element(rng, rank, 3, 3, spec());
    const auto z = random_element(rng, rank, 3, 3, spec());
    CHECK(multiply(a, x, y) == oracle::naive_multiply(a.cocycle().matrix(), x, y));
    CHECK(multiply(a, multiply(a, x, y), z) == multiply(a, x, multiply(a, y, z)));
  }
}

TEST_CASE("twists") {
  Rng rng(4);
  const auto poly = TwistedMonoidAlgebra::polynomial(default_generator_names(3));
  CHECK(twist_by(poly, BimultiplicativeCocycle::trivial(3)) == poly);
  const auto q = random_antisymmetric(rng, 3, spec());
  CHECK(twist_by(poly, canonical_from_antisym(q)) == qps(q));

  const auto nu = random_cocycle(rng, 3, spec());
  const auto a = qps(q);
  CHECK(twist_by(twist_by(a, nu), nu.inverse()) == a);
  const auto sym = BimultiplicativeCocycle(random_symmetric_matrix(rng, 3, spec()));
  CHECK(deformation_matrix(twist_by(a, sym)) == deformation_matrix(a));
  CHECK(deformation_matrix(TwistedMonoidAlgebra::polynomial({"a", "b"})) == AntisymmetricMatrix::identity(2));
}

TEST_CASE("twisted tensor products") {
  const auto b = TwistedMonoidAlgebra::polynomial({"x0", "x1"});
  const auto c = TwistedMonoidAlgebra::polynomial({"y0"});
  const auto classical = twisted_tensor_product(b, c, Pairing::trivial(2, 1));
  CHECK(classical.cocycle().is_trivial());
  CHECK(classical.generator_names() == std::vector<std::string>{"x0", "x1", "y0"});
  REQUIRE(classical.split().has_value());

  Rng rng(5);
  const auto qb = random_antisymmetric(rng, 2, spec());
  const auto qc = random_antisymmetric(rng, 3, spec());
  const auto bb = quantum_projective_space(qb, {"x0", "x1"});
  const auto cc = quantum_projective_space(qc, {"y0", "y1", "y2"});
  const auto alpha = random_pairing(rng, 2, 3, spec());
  const auto t = twisted_tensor_product(bb, cc, alpha);
  const ProductSplit split(2, 3);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const auto xb = embed_left(t, bb.generator(i));
      const auto yc = embed_right(t, cc.generator(j));
      CHECK(multiply(t, yc, xb) == multiply(t, xb, yc).scaled(alpha.entry(i, j)));
    }
  }
  // tau((s,t),(s',t')) = alpha(s',t) on block-supported arguments.
  for (int k = 0; k < 20; ++k) {
    const auto s = random_vector(rng, 2, 3);
    const auto s2 = random_vector(rng, 2, 3);
    const auto tt = random_vector(rng, 3, 3);
    const auto t2 = random_vector(rng, 3, 3);
    const auto left = inject_left(split, s) + inject_right(split, tt);
    const auto right = inject_left(split, s2) + inject_right(split, t2);
    const auto expected = evaluate(bb.cocycle(), s, s2) * evaluate(cc.cocycle(), tt, t2) * alpha(s2, tt);
    CHECK(evaluate(t.cocycle(), left, right) == expected);
  }
  CHECK_THROWS_AS(twisted_tensor_product(bb, cc, random_pairing(rng, 3, 2, spec())), InputError);
}

TEST_CASE("twisting a tensor product by a cocycle") {
  const auto b = TwistedMonoidAlgebra::polynomial({"x0", "x1"});
  const auto c = TwistedMonoidAlgebra::polynomial({"y0", "y1"});
  const auto trivial = factor_twist(b, c, BimultiplicativeCocycle::trivial(4));
  CHECK(trivial.cohomologous);
  CHECK(trivial.identical);
  CHECK(trivial.classical_tensor_product);

  Rng rng(6);
  const auto alpha = random_pairing(rng, 2, 2, spec());
  const auto sigma = yamazaki_reconstruct(BimultiplicativeCocycle::trivial(2), BimultiplicativeCocycle::trivial(2),
                                          alpha);
  const auto r = factor_twist(b, c, sigma);
  CHECK(r.cohomologous);
  CHECK_FALSE(r.classical_tensor_product);
  CHECK(r.alpha == alpha.inverse());
  CHECK(cohomologous(r.tensor_of_twists.cocycle(), twisted_tensor_product(b, c, alpha.inverse()).cocycle()));

  const auto fact = direct_product(random_cocycle(rng, 2, spec()), random_cocycle(rng, 2, spec()));
  CHECK(factor_twist(b, c, fact).classical_tensor_product);
}

TEST_CASE("cohomologous twists are isomorphic") {
  const auto a = TwistedMonoidAlgebra::polynomial(default_generator_names(1));
  const auto c = parse_unit("q");
  const auto mu = BimultiplicativeCocycle(UnitMatrix(1, 1, {c}));
  const auto same = coboundary_isomorphism(a, mu, mu);
  CHECK(same.verified);
  CHECK(same.map.scale(ExponentVector({3})).is_one());

  // mu = (delta h) nu with nu trivial: h(g^p) = c^{-p(p-1)/2}.
  const auto r = coboundary_isomorphism(a, mu, BimultiplicativeCocycle::trivial(1));
  CHECK(r.verified);
  for (std::int64_t p = 0; p <= 5; ++p) CHECK(r.map.scale(ExponentVector({p})) == c.pow(-p * (p - 1) / 2));

  Rng rng(7);
  for (int k = 0; k < 10; ++k) {
    const auto rank = static_cast<std::size_t>(uniform_int(rng, 1, 4));
    const auto nu = random_cocycle(rng, rank, spec());
    const auto sym = BimultiplicativeCocycle(random_symmetric_matrix(rng, rank, spec()));
    const TwistedMonoidAlgebra base(random_cocycle(rng, rank, spec()), default_generator_names(rank));
    const auto iso = coboundary_isomorphism(base, nu * sym, nu, 50, static_cast<std::uint64_t>(k));
    CHECK(iso.verified);
    CHECK(iso.checked_pairs == 50);
    const auto x = random_element(rng, rank, 3, 3, spec());
    CHECK(iso.map.inverse(iso.map(x)) == x);
  }
  CHECK_THROWS_AS(coboundary_isomorphism(TwistedMonoidAlgebra::polynomial({"a", "b"}),
                                         canonical_from_antisym(random_antisymmetric(rng, 2, spec())),
                                         BimultiplicativeCocycle::trivial(2)),
                  InputError);
}

TEST_CASE("element grammar") {
  const auto a = TwistedMonoidAlgebra::polynomial(default_generator_names(3));
  CHECK(a.parse("1") == a.one());
  const auto x = a.parse("3/2*q*X0^2*X1 + X2");
  CHECK(x.terms().size() == 2);
  CHECK(x.coefficient(ExponentVector({2, 1, 0})) == LaurentPolynomial(parse_unit("3/2*q")));
  CHECK(a.parse("X1*X0") == a.parse("X0*X1"));
  CHECK(a.parse("X0*X0") == a.parse("X0^2"));
  CHECK(a.parse("(1 + q)*X0 - X0") == a.parse("q*X0"));
  CHECK(a.parse("X0 - X0").is_zero());
  CHECK(a.render(a.parse("X2 + X0")) == "X0 + X2");
  CHECK(a.render(AlgebraElement(3)) == "0");
  CHECK(render_element(a, parse_element(a, "-X1")) == "-X1");

  // Names that are not generators are parameters.
  CHECK(a.parse("X3*X0") == AlgebraElement::monomial(ExponentVector({1, 0, 0}), parse_unit("X3")));
  CHECK(a.parse("q") == AlgebraElement::monomial(ExponentVector(3), parse_unit("q")));

  for (const char* bad : {"X0^", "2*", "X0 +", "(1 + q*X0", "X0^-1", "X0^0", "X0 X1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(a.parse(bad), ParseError);
  }

  Rng rng(8);
  for (int k = 0; k < 100; ++k) {
    const auto e = random_element(rng, 3, 4, 3, spec());
    const auto text = a.render(e);
    CAPTURE(text);
    CHECK(a.parse(text) == e);
    CHECK(a.render(a.parse(text)) == text);
  }
  CHECK_THROWS_AS(TwistedMonoidAlgebra::polynomial({"x", "x"}), InputError);
  CHECK_THROWS_AS(TwistedMonoidAlgebra::polynomial({"1x"}), InputError);
}
