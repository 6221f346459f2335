#include "commands.hpp"

#include "cotwist/error.hpp"

namespace cotwist::cli {

Outcome segre_build(const JobConfig& cfg) {
  const auto s = cfg.segre();
  const auto& phi = s.homomorphism();
  Json images = Json::array();
  for (std::size_t k = 0; k < s.source().rank(); ++k) {
    images.push_back({{"generator", s.source().generator_names()[k]},
                      {"image", s.target().render(phi.generator_images()[k])}});
  }
  Json payload = segre_to_json(s);
  payload["source_generators"] = s.source().generator_names();
  payload["target_generators"] = s.target().generator_names();
  payload["source_cocycle"] = matrix_to_json(s.source().cocycle().matrix());
  payload["morphism"] = morphism_to_json(phi.monoid_morphism());
  payload["images"] = std::move(images);
  return report(std::move(payload));
}

Outcome segre_verify(const JobConfig& cfg) {
  const auto s = cfg.segre();
  const auto r = verify_homomorphism(s.homomorphism(), cfg.samples(100), cfg.seed());
  Json payload = homomorphism_report_to_json(s.homomorphism(), r);
  std::optional<Json> ce;
  if (payload.contains("counterexample")) {
    ce = payload.at("counterexample");
    payload.erase("counterexample");
  }
  payload["n"] = s.n();
  payload["m"] = s.m();
  payload["seed"] = cfg.seed();
  return verdict(r.pass, std::move(payload), ce);
}

Outcome segre_matrix(const JobConfig& cfg) {
  const auto s = cfg.segre();
  const auto g = source_deformation_matrix(s);
  const auto y = yamazaki_factorize(s.ambient_cocycle(), s.split());
  Json payload = {{"matrix", matrix_to_json(g.matrix())},
                  {"source_generators", s.source().generator_names()},
                  {"factorizable", y.pairing.is_trivial()}};
  if (!y.pairing.is_trivial()) return report(std::move(payload));

  const auto k = kronecker(antisymmetrize(y.left), antisymmetrize(y.right));
  const bool equal = k == g;
  payload["kronecker"] = matrix_to_json(k.matrix());
  payload["equals_kronecker"] = equal;
  return verdict(equal, std::move(payload),
                 equal ? std::nullopt
                       : std::optional<Json>(Json{{"detail", "source deformation matrix differs from kronecker"}}));
}

Outcome segre_kronecker(const JobConfig& cfg) {
  const auto q = cfg.antisymmetric(cfg.at("q"));
  const auto q_prime = cfg.antisymmetric(cfg.at("q_prime"));
  if (q.rank() < 2 || q_prime.rank() < 2) throw InputError("'q' and 'q_prime' must have rank at least 2");
  const auto k = kronecker(q, q_prime);
  const auto mu = yamazaki_reconstruct(canonical_from_antisym(q), canonical_from_antisym(q_prime),
                                       Pairing::trivial(q.rank(), q_prime.rank()));
  const auto s = build_quantum_segre(q.rank() - 1, q_prime.rank() - 1, mu);
  const bool equal = source_deformation_matrix(s) == k;
  return verdict(equal,
                 {{"kronecker", matrix_to_json(k.matrix())},
                  {"source_generators", s.source().generator_names()},
                  {"equals_source_deformation_matrix", equal}},
                 equal ? std::nullopt : std::optional<Json>(Json{{"detail", "kronecker differs from segre matrix"}}));
}

Outcome segre_kernel(const JobConfig& cfg) {
  const auto s = cfg.segre();
  const auto degree = cfg.degree(2);
  const auto probe = kernel_basis(s, degree, cfg.specialization());
  Json basis = Json::array();
  for (const auto& x : probe.basis) basis.push_back(s.source().render(x));
  Json spec = Json::object();
  for (const auto& [name, value] : cfg.specialization()) spec[name] = render_rational(value);
  return report({{"degree", probe.degree},
                 {"specialization", std::move(spec)},
                 {"source_dimension", probe.source_dimension},
                 {"image_monomials", probe.target_dimension},
                 {"rank", probe.rank},
                 {"dimension", probe.basis.size()},
                 {"basis", std::move(basis)}});
}

}  // namespace cotwist::cli
