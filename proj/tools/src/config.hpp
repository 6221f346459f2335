#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cotwist/json_io.hpp"

namespace cotwist::cli {

struct Options {
  std::string config_path;
  bool json = false;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> samples;
  std::optional<std::int64_t> degree;
  std::vector<std::string> sets;  // name=rational
};

/// A parsed job document. Every accessor that reads exact values checks
/// that the parameters they mention are declared under "parameters".
class JobConfig {
 public:
  JobConfig(Json doc, Options options);
  static JobConfig load(const Options& options);

  bool has(std::string_view key) const;
  const Json& at(std::string_view key) const;

  std::uint64_t seed() const;
  std::size_t samples(std::size_t fallback) const;
  std::int64_t degree(std::int64_t fallback) const;
  std::int64_t integer(std::string_view key) const;
  /// "specialization" object merged with --set flags (flags win).
  Assignment specialization() const;

  UnitMatrix matrix(const Json& j) const;
  BimultiplicativeCocycle cocycle(const Json& j) const { return BimultiplicativeCocycle(matrix(j)); }
  AntisymmetricMatrix antisymmetric(const Json& j) const { return AntisymmetricMatrix(matrix(j)); }
  TruncatedCocycle truncated(const Json& j) const;
  MonoidMorphism morphism(const Json& j) const;
  ProductSplit split(const Json& j) const { return split_from_json(j); }
  AlgebraElement element(const TwistedMonoidAlgebra& a, const Json& j) const;

  /// {"cocycle": matrix} or {"q": antisymmetric matrix}, with optional
  /// "generators" names.
  TwistedMonoidAlgebra algebra(const Json& j, std::string_view prefix = "X") const;
  /// Top-level n, m and either "cocycle" or "factors" {left, right, pairing}.
  SegreMap segre() const;

 private:
  void require_declared(const std::vector<std::string>& names) const;

  Json doc_;
  Options options_;
  std::set<std::string, std::less<>> declared_;
};

}  // namespace cotwist::cli
