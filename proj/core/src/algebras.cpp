#include "cotwist/algebras.hpp"

#include <set>

#include "cotwist/error.hpp"
#include "cotwist/sampling.hpp"
#include "literal_cursor.hpp"

namespace cotwist {

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || std::isalpha(static_cast<unsigned char>(s[0])) == 0) return false;
  for (char c : s) {
    if (std::isalnum(static_cast<unsigned char>(c)) == 0 && c != '_') return false;
  }
  return true;
}

void require_member(const TwistedMonoidAlgebra& a, const AlgebraElement& x, const char* what) {
  if (!a.contains(x)) {
    throw InputError(std::string(what) + ": element of rank " + std::to_string(x.rank()) +
                     " does not belong to an algebra of rank " + std::to_string(a.rank()));
  }
}

std::vector<std::string> parameters_of_cocycles(std::initializer_list<const BimultiplicativeCocycle*> cocycles) {
  std::set<std::string> names;
  for (const auto* mu : cocycles) {
    for (std::size_t i = 0; i < mu->rank(); ++i) {
      for (std::size_t j = 0; j < mu->rank(); ++j) {
        for (auto& p : parameters_of(mu->entry(i, j))) names.insert(std::move(p));
      }
    }
  }
  return {names.begin(), names.end()};
}

}  // namespace

// ---------------------------------------------------------------------------
// AlgebraElement

AlgebraElement AlgebraElement::monomial(const ExponentVector& u, const LaurentPolynomial& coefficient) {
  AlgebraElement x(u.rank());
  x.add_term(u, coefficient);
  return x;
}

LaurentPolynomial AlgebraElement::coefficient(const ExponentVector& u) const {
  auto it = terms_.find(u);
  return it == terms_.end() ? LaurentPolynomial() : it->second;
}

std::optional<ExponentVector> AlgebraElement::homogeneous_degree() const {
  if (terms_.size() != 1) return std::nullopt;
  return terms_.begin()->first;
}

void AlgebraElement::add_term(const ExponentVector& u, const LaurentPolynomial& coefficient) {
  if (u.rank() != rank_) throw InputError("algebra element: term of rank " + std::to_string(u.rank()) +
                                          " added to an element of rank " + std::to_string(rank_));
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(u, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  for (const auto& [u, c] : other.terms_) add_term(u, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  for (const auto& [u, c] : other.terms_) add_term(u, -c);
  return *this;
}

AlgebraElement AlgebraElement::scaled(const LaurentPolynomial& c) const {
  AlgebraElement out(rank_);
  for (const auto& [u, coeff] : terms_) out.add_term(u, coeff * c);
  return out;
}

// ---------------------------------------------------------------------------
// TwistedMonoidAlgebra

TwistedMonoidAlgebra::TwistedMonoidAlgebra(BimultiplicativeCocycle cocycle, std::vector<std::string> generator_names,
                                           std::optional<ProductSplit> split)
    : cocycle_(std::move(cocycle)), names_(std::move(generator_names)), split_(split) {
  if (names_.size() != cocycle_.rank()) {
    throw InputError("algebra: " + std::to_string(names_.size()) + " generator names for rank " +
                     std::to_string(cocycle_.rank()));
  }
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!is_identifier(n)) throw InputError("algebra: invalid generator name '" + n + "'");
    if (!seen.insert(n).second) throw InputError("algebra: duplicate generator name '" + n + "'");
  }
  if (split_ && split_->ambient_rank() != cocycle_.rank()) throw InputError("algebra: split does not match rank");
}

TwistedMonoidAlgebra TwistedMonoidAlgebra::polynomial(std::vector<std::string> generator_names) {
  const std::size_t n = generator_names.size();
  return TwistedMonoidAlgebra(BimultiplicativeCocycle::trivial(n), std::move(generator_names));
}

AlgebraElement TwistedMonoidAlgebra::basis(const ExponentVector& u) const {
  if (u.rank() != rank()) throw InputError("basis monomial of wrong rank");
  return AlgebraElement::monomial(u);
}

AlgebraElement TwistedMonoidAlgebra::parse(std::string_view text) const {
  detail::LiteralCursor cur(text);
  AlgebraElement out(rank());
  if (cur.peek() == '0') {
    detail::LiteralCursor probe(text);
    probe.digits();
    if (probe.at_end()) return out;
  }

  bool first = true;
  while (first || cur.peek() == '+' || cur.peek() == '-') {
    bool negative = false;
    if (cur.consume('-')) {
      negative = true;
    } else if (!cur.consume('+') && !first) {
      cur.fail("expected '+' or '-'");
    }
    first = false;

    std::vector<std::int64_t> exps(rank(), 0);
    auto on_factor = [&](const std::string& name, std::int64_t e) {
      for (std::size_t k = 0; k < names_.size(); ++k) {
        if (names_[k] == name) {
          if (e < 1) cur.fail("generator exponents must be positive");
          exps[k] += e;
          return true;
        }
      }
      return false;
    };

    LaurentPolynomial coeff(Rational(1));
    if (cur.consume('(')) {
      coeff = detail::parse_polynomial_sum(cur);
      cur.expect(')');
      if (cur.consume('*')) coeff *= detail::parse_unit_product(cur, false, on_factor);
    } else {
      coeff = detail::parse_unit_product(cur, false, on_factor);
    }
    if (negative) coeff = -coeff;
    out.add_term(ExponentVector(std::move(exps)), coeff);
  }
  if (!cur.at_end()) cur.fail("trailing characters");
  return out;
}

std::string TwistedMonoidAlgebra::render_monomial(const ExponentVector& u) const {
  if (u.rank() != rank()) throw InputError("render_monomial: rank mismatch");
  std::string out;
  for (std::size_t k = 0; k < rank(); ++k) {
    if (u[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += names_[k];
    if (u[k] != 1) out += "^" + std::to_string(u[k]);
  }
  return out.empty() ? "1" : out;
}

std::string TwistedMonoidAlgebra::render(const AlgebraElement& x) const {
  require_member(*this, x, "render");
  if (x.is_zero()) return "0";
  std::string out;
  // Decreasing lexicographic order: X0^2 before X0*X1 before X1^2.
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    const auto& [u, c] = *it;
    const bool identity = u.is_zero();
    const std::string mono = render_monomial(u);
    std::string term;
    if (c.is_unit()) {
      const UnitScalar unit = c.as_unit();
      if (identity) {
        term = render_unit(unit);
      } else if (unit.is_one()) {
        term = mono;
      } else if (unit == UnitScalar(Rational(-1))) {
        term = "-" + mono;
      } else {
        term = render_unit(unit) + "*" + mono;
      }
    } else {
      term = "(" + render_polynomial(c) + ")";
      if (!identity) term += "*" + mono;
    }
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

AlgebraElement parse_element(const TwistedMonoidAlgebra& a, std::string_view text) { return a.parse(text); }
std::string render_element(const TwistedMonoidAlgebra& a, const AlgebraElement& x) { return a.render(x); }

std::vector<std::string> default_generator_names(std::size_t rank, std::string_view prefix) {
  std::vector<std::string> names;
  names.reserve(rank);
  for (std::size_t k = 0; k < rank; ++k) names.push_back(std::string(prefix) + std::to_string(k));
  return names;
}

// ---------------------------------------------------------------------------
// Operations

AlgebraElement multiply(const TwistedMonoidAlgebra& a, const AlgebraElement& x, const AlgebraElement& y) {
  require_member(a, x, "multiply");
  require_member(a, y, "multiply");
  AlgebraElement out(a.rank());
  for (const auto& [u, cu] : x.terms()) {
    for (const auto& [v, cv] : y.terms()) {
      out.add_term(u + v, cu * cv * evaluate(a.cocycle(), u, v));
    }
  }
  return out;
}

TwistedMonoidAlgebra quantum_projective_space(const AntisymmetricMatrix& q, std::vector<std::string> names) {
  return TwistedMonoidAlgebra(canonical_from_antisym(q), std::move(names));
}

AntisymmetricMatrix deformation_matrix(const TwistedMonoidAlgebra& a) { return antisymmetrize(a.cocycle()); }

TwistedMonoidAlgebra twist_by(const TwistedMonoidAlgebra& a, const BimultiplicativeCocycle& nu) {
  if (nu.rank() != a.rank()) throw InputError("twist_by: cocycle rank does not match the algebra");
  return TwistedMonoidAlgebra(a.cocycle() * nu, a.generator_names(), a.split());
}

TwistedMonoidAlgebra twisted_tensor_product(const TwistedMonoidAlgebra& b, const TwistedMonoidAlgebra& c,
                                            const Pairing& alpha) {
  if (alpha.left_rank() != b.rank() || alpha.right_rank() != c.rank()) {
    throw InputError("twisted_tensor_product: pairing shape " + std::to_string(alpha.left_rank()) + "x" +
                     std::to_string(alpha.right_rank()) + " does not match ranks " + std::to_string(b.rank()) +
                     ", " + std::to_string(c.rank()));
  }
  const std::size_t ra = b.rank();
  const std::size_t rb = c.rank();
  UnitMatrix m(ra + rb, ra + rb);
  for (std::size_t i = 0; i < ra; ++i) {
    for (std::size_t j = 0; j < ra; ++j) m(i, j) = b.cocycle().entry(i, j);
  }
  for (std::size_t i = 0; i < rb; ++i) {
    for (std::size_t j = 0; j < rb; ++j) m(ra + i, ra + j) = c.cocycle().entry(i, j);
  }
  for (std::size_t i = 0; i < ra; ++i) {
    for (std::size_t j = 0; j < rb; ++j) m(ra + j, i) = alpha.entry(i, j);
  }
  std::vector<std::string> names = b.generator_names();
  names.insert(names.end(), c.generator_names().begin(), c.generator_names().end());
  return TwistedMonoidAlgebra(BimultiplicativeCocycle(std::move(m)), std::move(names), ProductSplit(ra, rb));
}

AlgebraElement embed_left(const TwistedMonoidAlgebra& product, const AlgebraElement& b) {
  if (!product.split()) throw InputError("embed_left: algebra has no product split");
  AlgebraElement out(product.rank());
  for (const auto& [u, c] : b.terms()) out.add_term(inject_left(*product.split(), u), c);
  return out;
}

AlgebraElement embed_right(const TwistedMonoidAlgebra& product, const AlgebraElement& c) {
  if (!product.split()) throw InputError("embed_right: algebra has no product split");
  AlgebraElement out(product.rank());
  for (const auto& [u, coeff] : c.terms()) out.add_term(inject_right(*product.split(), u), coeff);
  return out;
}

FactorTwistReport factor_twist(const TwistedMonoidAlgebra& b, const TwistedMonoidAlgebra& c,
                               const BimultiplicativeCocycle& mu) {
  if (mu.rank() != b.rank() + c.rank()) {
    throw InputError("factor_twist: cocycle rank " + std::to_string(mu.rank()) + " is not " +
                     std::to_string(b.rank()) + " + " + std::to_string(c.rank()));
  }
  const ProductSplit split(b.rank(), c.rank());
  const auto classical = twisted_tensor_product(b, c, Pairing::trivial(b.rank(), c.rank()));
  auto twisted = twist_by(classical, mu);
  auto factors = yamazaki_factorize(mu, split);
  Pairing alpha = factors.pairing.inverse();
  auto tensor = twisted_tensor_product(twist_by(b, factors.left), twist_by(c, factors.right), alpha);
  const bool coh = cohomologous(twisted.cocycle(), tensor.cocycle());
  const bool same = twisted.cocycle() == tensor.cocycle();
  const bool factorizable = factors.pairing.is_trivial();
  return FactorTwistReport{std::move(twisted), std::move(tensor), std::move(factors), std::move(alpha),
                           coh, same, factorizable};
}

AlgebraElement ScalingIsomorphism::operator()(const AlgebraElement& x) const {
  require_member(source_, x, "scaling isomorphism");
  AlgebraElement out(x.rank());
  for (const auto& [u, c] : x.terms()) out.add_term(u, c * h_(u));
  return out;
}

AlgebraElement ScalingIsomorphism::inverse(const AlgebraElement& y) const {
  require_member(target_, y, "scaling isomorphism inverse");
  AlgebraElement out(y.rank());
  for (const auto& [u, c] : y.terms()) out.add_term(u, c * h_(u).inverse());
  return out;
}

IsomorphismReport coboundary_isomorphism(const TwistedMonoidAlgebra& a, const BimultiplicativeCocycle& mu,
                                         const BimultiplicativeCocycle& nu, std::size_t samples,
                                         std::uint64_t seed) {
  if (mu.rank() != a.rank() || nu.rank() != a.rank()) throw InputError("coboundary_isomorphism: rank mismatch");
  if (!cohomologous(mu, nu)) throw InputError("coboundary_isomorphism: cocycles are not cohomologous");
  // mu / nu is symmetric; its trivializer h has delta h = mu / nu.
  IsomorphismReport report{ScalingIsomorphism(twist_by(a, mu), twist_by(a, nu),
                                               SymmetricTrivializer(mu.matrix() / nu.matrix())),
                           false, 0, std::nullopt};
  const auto& phi = report.map;
  UnitSampling spec;
  spec.parameters = parameters_of_cocycles({&a.cocycle(), &mu, &nu});
  spec.max_exponent = 2;
  spec.max_coefficient = 5;
  Rng rng(seed);
  for (std::size_t k = 0; k < samples; ++k) {
    auto x = random_element(rng, a.rank(), 3, 4, spec);
    auto y = random_element(rng, a.rank(), 3, 4, spec);
    const auto lhs = phi(multiply(phi.source(), x, y));
    const auto rhs = multiply(phi.target(), phi(x), phi(y));
    ++report.checked_pairs;
    if (!(lhs == rhs)) {
      report.counterexample.emplace(std::move(x), std::move(y));
      return report;
    }
  }
  report.verified = true;
  return report;
}

}  // namespace cotwist
