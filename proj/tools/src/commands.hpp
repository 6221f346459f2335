#pragma once

#include <optional>
#include <string>

#include "config.hpp"

namespace cotwist::cli {

struct Outcome {
  std::string status;  // "pass", "fail" or "report"
  Json payload = Json::object();
  std::optional<Json> counterexample;
};

inline Outcome report(Json payload) { return {"report", std::move(payload), std::nullopt}; }
inline Outcome verdict(bool pass, Json payload, std::optional<Json> counterexample = std::nullopt) {
  return {pass ? "pass" : "fail", std::move(payload), std::move(counterexample)};
}

Outcome cocycle_check(const JobConfig& cfg);
Outcome cocycle_antisym(const JobConfig& cfg);
Outcome cocycle_factorize(const JobConfig& cfg);
Outcome cocycle_reconstruct(const JobConfig& cfg);
Outcome cocycle_pullback(const JobConfig& cfg);
Outcome cocycle_trivialize(const JobConfig& cfg);

Outcome algebra_mul(const JobConfig& cfg);
Outcome algebra_relations(const JobConfig& cfg);
Outcome algebra_twist(const JobConfig& cfg);
Outcome algebra_tensor(const JobConfig& cfg);

Outcome segre_build(const JobConfig& cfg);
Outcome segre_verify(const JobConfig& cfg);
Outcome segre_matrix(const JobConfig& cfg);
Outcome segre_kronecker(const JobConfig& cfg);
Outcome segre_kernel(const JobConfig& cfg);

}  // namespace cotwist::cli
