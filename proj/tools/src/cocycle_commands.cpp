#include "commands.hpp"

#include "cotwist/error.hpp"

namespace cotwist::cli {

namespace {

TruncatedCocycle truncated_input(const JobConfig& cfg, std::int64_t default_degree) {
  if (cfg.has("truncated")) return cfg.truncated(cfg.at("truncated"));
  const auto degree = cfg.degree(default_degree);
  if (degree < 0) throw InputError("degree bound must be nonnegative");
  return TruncatedCocycle::truncate(cfg.cocycle(cfg.at("cocycle")), degree);
}

std::optional<Json> check_counterexample(const CocycleCheck& check) {
  if (check.holds) return std::nullopt;
  return cocycle_check_to_json(check).at("counterexample");
}

}  // namespace

Outcome cocycle_check(const JobConfig& cfg) {
  const auto mu = truncated_input(cfg, kDefaultDegreeBound);
  const auto check = verify_cocycle_equation(mu);
  Json payload = {{"input", cfg.has("truncated") ? "table" : "matrix"},
                  {"rank", mu.rank()},
                  {"degree_bound", mu.degree_bound()},
                  {"table_size", mu.table().size()}};
  return verdict(check.holds, std::move(payload), check_counterexample(check));
}

Outcome cocycle_antisym(const JobConfig& cfg) {
  const auto mu = cfg.cocycle(cfg.at("cocycle"));
  const auto beta = antisymmetrize(mu);
  Json payload = {{"antisymmetrization", matrix_to_json(beta.matrix())},
                  {"canonical_cocycle", matrix_to_json(canonical_from_antisym(beta).matrix())}};
  if (cfg.has("other")) {
    const auto nu = cfg.cocycle(cfg.at("other"));
    if (nu.rank() != mu.rank()) throw InputError("'other' has a different rank from 'cocycle'");
    payload["other_antisymmetrization"] = matrix_to_json(antisymmetrize(nu).matrix());
    payload["cohomologous"] = cohomologous(mu, nu);
  }
  return report(std::move(payload));
}

Outcome cocycle_factorize(const JobConfig& cfg) {
  const auto mu = cfg.cocycle(cfg.at("cocycle"));
  const auto split = cfg.split(cfg.at("split"));
  const auto y = yamazaki_factorize(mu, split);
  return report({{"left", matrix_to_json(y.left.matrix())},
                 {"right", matrix_to_json(y.right.matrix())},
                 {"pairing", matrix_to_json(y.pairing.matrix())},
                 {"factorizable", y.pairing.is_trivial()},
                 {"split", split_to_json(split)}});
}

Outcome cocycle_reconstruct(const JobConfig& cfg) {
  const auto left = cfg.cocycle(cfg.at("left"));
  const auto right = cfg.cocycle(cfg.at("right"));
  const Pairing alpha = cfg.has("pairing") ? Pairing(cfg.matrix(cfg.at("pairing")))
                                           : Pairing::trivial(left.rank(), right.rank());
  const auto mu = yamazaki_reconstruct(left, right, alpha);
  const ProductSplit split(left.rank(), right.rank());
  const bool roundtrip = yamazaki_factorize(mu, split) == YamazakiFactors{left, right, alpha};
  return verdict(roundtrip,
                 {{"cocycle", matrix_to_json(mu.matrix())},
                  {"antisymmetrization", matrix_to_json(antisymmetrize(mu).matrix())},
                  {"split", split_to_json(split)},
                  {"roundtrip", roundtrip}},
                 roundtrip ? std::nullopt : std::optional<Json>(Json{{"detail", "factorize(reconstruct) differs"}}));
}

Outcome cocycle_pullback(const JobConfig& cfg) {
  const auto mu = cfg.cocycle(cfg.at("cocycle"));
  const auto f = cfg.morphism(cfg.at("morphism"));
  const auto pulled = pullback(mu, f);
  return report({{"cocycle", matrix_to_json(pulled.matrix())},
                 {"antisymmetrization", matrix_to_json(antisymmetrize(pulled).matrix())},
                 {"morphism", morphism_to_json(f)}});
}

Outcome cocycle_trivialize(const JobConfig& cfg) {
  std::string method;
  if (cfg.has("method")) {
    const auto& m = cfg.at("method");
    if (!m.is_string()) throw InputError("'method' must be one of rank1, yamazaki, symmetric");
    method = m.get<std::string>();
  } else if (cfg.has("split")) {
    method = "yamazaki";
  } else if (cfg.has("truncated")) {
    method = "rank1";
  } else {
    method = "symmetric";
  }
  if (method != "rank1" && method != "yamazaki" && method != "symmetric") {
    throw InputError("unknown trivialization method '" + method + "'");
  }

  const auto mu = truncated_input(cfg, kDefaultDegreeBound);
  Json payload = {{"method", method}, {"rank", mu.rank()}, {"degree_bound", mu.degree_bound()}};
  std::optional<FunctionOnMonoid> h;

  if (method == "rank1") {
    if (mu.rank() != 1) throw InputError("rank1 trivialization needs a rank-1 cocycle");
    const auto check = verify_cocycle_equation(mu);
    if (!check.holds) return verdict(false, std::move(payload), check_counterexample(check));
    h = trivialize_rank1(mu);
  } else if (method == "yamazaki") {
    const auto split = cfg.split(cfg.at("split"));
    if (split.ambient_rank() != mu.rank()) throw InputError("split does not match the cocycle rank");
    payload["split"] = split_to_json(split);
    try {
      h = yamazaki_trivialize(mu, split);
    } catch (const InputError& e) {
      return verdict(false, std::move(payload), Json{{"detail", e.what()}});
    }
  } else {
    if (cfg.has("truncated")) throw InputError("symmetric trivialization needs a 'cocycle' matrix");
    const auto m = cfg.matrix(cfg.at("cocycle"));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = i + 1; j < m.cols(); ++j) {
        if (!(m(i, j) == m(j, i))) {
          return verdict(false, std::move(payload),
                         Json{{"detail", "cocycle matrix is not symmetric"},
                              {"i", i},
                              {"j", j},
                              {"entry_ij", unit_to_json(m(i, j))},
                              {"entry_ji", unit_to_json(m(j, i))}});
        }
      }
    }
    h = symmetric_trivializer(m).tabulate(mu.degree_bound());
  }

  const bool verified = coboundary(*h) == mu;
  payload["function"] = function_to_json(*h);
  payload["verified"] = verified;
  return verdict(verified, std::move(payload),
                 verified ? std::nullopt : std::optional<Json>(Json{{"detail", "coboundary(h) differs from mu"}}));
}

}  // namespace cotwist::cli
