#include "commands.hpp"

#include "cotwist/error.hpp"

namespace cotwist::cli {

namespace {

std::string scaled_monomial(const UnitScalar& c, const std::string& monomial) {
  const auto r = render_unit(c);
  if (r == "1") return monomial;
  if (r == "-1") return "-" + monomial;
  return r + "*" + monomial;
}

Json generator_names(const TwistedMonoidAlgebra& a) { return Json(a.generator_names()); }

}  // namespace

Outcome algebra_mul(const JobConfig& cfg) {
  const auto a = cfg.algebra(cfg.at("algebra"));
  const auto x = cfg.element(a, cfg.at("left"));
  const auto y = cfg.element(a, cfg.at("right"));
  const auto xy = multiply(a, x, y);
  return report({{"generators", generator_names(a)},
                 {"left", a.render(x)},
                 {"right", a.render(y)},
                 {"product", a.render(xy)},
                 {"terms", element_to_json(xy)}});
}

Outcome algebra_relations(const JobConfig& cfg) {
  const auto a = cfg.algebra(cfg.at("algebra"));
  const auto beta = deformation_matrix(a);
  Json relations = Json::array();
  std::optional<Json> failure;
  for (std::size_t j = 0; j < a.rank(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const auto xi = a.generator(i);
      const auto xj = a.generator(j);
      const auto lhs = multiply(a, xj, xi);
      const auto rhs = multiply(a, xi, xj).scaled(beta.entry(j, i));
      const auto& names = a.generator_names();
      relations.push_back(names[j] + "*" + names[i] + " = " +
                          scaled_monomial(beta.entry(j, i), names[i] + "*" + names[j]));
      if (!(lhs == rhs) && !failure) {
        failure = Json{{"i", i}, {"j", j}, {"left_side", a.render(lhs)}, {"right_side", a.render(rhs)}};
      }
    }
  }
  return verdict(!failure,
                 {{"generators", generator_names(a)},
                  {"deformation_matrix", matrix_to_json(beta.matrix())},
                  {"relations", std::move(relations)}},
                 failure);
}

Outcome algebra_twist(const JobConfig& cfg) {
  const auto a = cfg.algebra(cfg.at("algebra"));
  const auto mu = cfg.cocycle(cfg.at("twist"));
  if (mu.rank() != a.rank()) throw InputError("'twist' has a different rank from the algebra");
  const auto twisted = twist_by(a, mu);
  Json payload = {{"generators", generator_names(twisted)},
                  {"cocycle", matrix_to_json(twisted.cocycle().matrix())},
                  {"deformation_matrix", matrix_to_json(deformation_matrix(twisted).matrix())}};
  if (cfg.has("left") || cfg.has("right")) {
    const auto x = cfg.element(twisted, cfg.at("left"));
    const auto y = cfg.element(twisted, cfg.at("right"));
    payload["product"] = twisted.render(multiply(twisted, x, y));
  }
  if (!cfg.has("compare")) return report(std::move(payload));

  // Compare A_mu with A_nu through the scaling isomorphism.
  const auto nu = cfg.cocycle(cfg.at("compare"));
  if (nu.rank() != a.rank()) throw InputError("'compare' has a different rank from the algebra");
  if (!cohomologous(mu, nu)) {
    return verdict(false, std::move(payload),
                   Json{{"detail", "twists are not cohomologous"},
                        {"antisymmetrization", matrix_to_json(antisymmetrize(mu).matrix())},
                        {"compare_antisymmetrization", matrix_to_json(antisymmetrize(nu).matrix())}});
  }
  const auto iso = coboundary_isomorphism(a, mu, nu, cfg.samples(50), cfg.seed());
  Json scales = Json::array();
  for (const auto& u : vectors_up_to_degree(a.rank(), 2)) {
    scales.push_back({{"u", vector_to_json(u)}, {"value", unit_to_json(iso.map.scale(u))}});
  }
  payload["isomorphism"] = {{"verified", iso.verified}, {"checked_pairs", iso.checked_pairs}, {"scales", scales}};
  std::optional<Json> ce;
  if (iso.counterexample) {
    ce = Json{{"left", a.render(iso.counterexample->first)}, {"right", a.render(iso.counterexample->second)}};
  }
  return verdict(iso.verified, std::move(payload), ce);
}

Outcome algebra_tensor(const JobConfig& cfg) {
  const auto b = cfg.algebra(cfg.at("left"), "x");
  const auto c = cfg.algebra(cfg.at("right"), "y");
  if (cfg.has("twist")) {
    const auto mu = cfg.cocycle(cfg.at("twist"));
    if (mu.rank() != b.rank() + c.rank()) throw InputError("'twist' must have rank left + right");
    const auto r = factor_twist(b, c, mu);
    Json payload = {{"generators", generator_names(r.tensor_of_twists)},
                    {"twisted_product_cocycle", matrix_to_json(r.twisted_product.cocycle().matrix())},
                    {"tensor_of_twists_cocycle", matrix_to_json(r.tensor_of_twists.cocycle().matrix())},
                    {"factors",
                     {{"left", matrix_to_json(r.factors.left.matrix())},
                      {"right", matrix_to_json(r.factors.right.matrix())},
                      {"pairing", matrix_to_json(r.factors.pairing.matrix())}}},
                    {"alpha", matrix_to_json(r.alpha.matrix())},
                    {"cohomologous", r.cohomologous},
                    {"identical", r.identical},
                    {"classical_tensor_product", r.classical_tensor_product}};
    return verdict(r.cohomologous, std::move(payload),
                   r.cohomologous ? std::nullopt
                                  : std::optional<Json>(Json{{"detail", "twist is not cohomologous to the factors"}}));
  }
  const Pairing alpha = cfg.has("pairing") ? Pairing(cfg.matrix(cfg.at("pairing")))
                                           : Pairing::trivial(b.rank(), c.rank());
  const auto t = twisted_tensor_product(b, c, alpha);
  Json payload = {{"generators", generator_names(t)},
                  {"cocycle", matrix_to_json(t.cocycle().matrix())},
                  {"deformation_matrix", matrix_to_json(deformation_matrix(t).matrix())}};
  if (cfg.has("left_element") || cfg.has("right_element")) {
    const auto x = embed_left(t, cfg.element(b, cfg.at("left_element")));
    const auto y = embed_right(t, cfg.element(c, cfg.at("right_element")));
    payload["left_times_right"] = t.render(multiply(t, x, y));
    payload["right_times_left"] = t.render(multiply(t, y, x));
  }
  return report(std::move(payload));
}

}  // namespace cotwist::cli
