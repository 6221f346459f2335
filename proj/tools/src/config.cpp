#include "config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "cotwist/error.hpp"

namespace cotwist::cli {

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

std::int64_t as_integer(const Json& j, std::string_view key) {
  if (!j.is_number_integer()) throw InputError("config field '" + std::string(key) + "' must be an integer");
  return j.get<std::int64_t>();
}

Rational as_rational(const Json& j, const std::string& name) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  throw InputError("specialization of '" + name + "' must be a rational string or an integer");
}

}  // namespace

JobConfig::JobConfig(Json doc, Options options) : doc_(std::move(doc)), options_(std::move(options)) {
  if (!doc_.is_object()) throw InputError("config must be a JSON object");
  if (doc_.contains("parameters")) {
    const auto& params = doc_.at("parameters");
    if (!params.is_array()) throw InputError("'parameters' must be a list of names");
    for (const auto& p : params) {
      if (!p.is_string() || !is_identifier(p.get<std::string>())) {
        throw InputError("invalid parameter name " + p.dump());
      }
      declared_.insert(p.get<std::string>());
    }
  }
}

JobConfig JobConfig::load(const Options& options) {
  const auto& path = options.config_path;
  if (path.empty()) throw InputError("--config is required");
  if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".toml") == 0) {
    throw InputError("TOML configs are not supported; use a JSON document");
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot read config '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  Json doc;
  try {
    doc = Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw InputError("malformed config '" + path + "': " + e.what());
  }
  return JobConfig(std::move(doc), options);
}

bool JobConfig::has(std::string_view key) const { return doc_.contains(std::string(key)); }

const Json& JobConfig::at(std::string_view key) const {
  const std::string k(key);
  if (!doc_.contains(k)) throw InputError("config is missing '" + k + "'");
  return doc_.at(k);
}

std::uint64_t JobConfig::seed() const {
  if (options_.seed) return *options_.seed;
  if (has("seed")) {
    const auto s = as_integer(at("seed"), "seed");
    if (s < 0) throw InputError("seed must be nonnegative");
    return static_cast<std::uint64_t>(s);
  }
  return 1;
}

std::size_t JobConfig::samples(std::size_t fallback) const {
  if (options_.samples) return *options_.samples;
  if (has("samples")) {
    const auto s = as_integer(at("samples"), "samples");
    if (s < 0) throw InputError("samples must be nonnegative");
    return static_cast<std::size_t>(s);
  }
  return fallback;
}

std::int64_t JobConfig::degree(std::int64_t fallback) const {
  if (options_.degree) return *options_.degree;
  if (has("degree")) return as_integer(at("degree"), "degree");
  return fallback;
}

std::int64_t JobConfig::integer(std::string_view key) const { return as_integer(at(key), key); }

Assignment JobConfig::specialization() const {
  Assignment out;
  if (has("specialization")) {
    const auto& s = at("specialization");
    if (!s.is_object()) throw InputError("'specialization' must be an object of name: value");
    for (const auto& [name, value] : s.items()) out[name] = as_rational(value, name);
  }
  for (const auto& entry : options_.sets) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos || eq == 0) throw InputError("--set expects name=rational, got '" + entry + "'");
    out[entry.substr(0, eq)] = parse_rational(entry.substr(eq + 1));
  }
  std::vector<std::string> names;
  for (const auto& [name, value] : out) names.push_back(name);
  require_declared(names);
  return out;
}

void JobConfig::require_declared(const std::vector<std::string>& names) const {
  for (const auto& n : names) {
    if (!declared_.contains(n)) throw InputError("parameter '" + n + "' is not declared in 'parameters'");
  }
}

UnitMatrix JobConfig::matrix(const Json& j) const {
  auto m = matrix_from_json(j);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) require_declared(parameters_of(m(r, c)));
  }
  return m;
}

TruncatedCocycle JobConfig::truncated(const Json& j) const {
  auto mu = truncated_from_json(j);
  for (const auto& [key, value] : mu.table()) require_declared(parameters_of(value));
  return mu;
}

MonoidMorphism JobConfig::morphism(const Json& j) const {
  if (j.is_object() && j.contains("segre")) {
    const auto& nm = j.at("segre");
    if (!nm.is_array() || nm.size() != 2) throw InputError("morphism {\"segre\": [n, m]} expects two integers");
    const auto n = as_integer(nm[0], "segre n");
    const auto m = as_integer(nm[1], "segre m");
    if (n < 1 || m < 1) throw InputError("segre morphism requires n >= 1 and m >= 1");
    return segre_morphism(static_cast<std::size_t>(n), static_cast<std::size_t>(m));
  }
  return morphism_from_json(j);
}

AlgebraElement JobConfig::element(const TwistedMonoidAlgebra& a, const Json& j) const {
  auto x = element_from_json(a, j);
  if (!a.contains(x)) throw InputError("element does not belong to the algebra");
  for (const auto& [u, c] : x.terms()) require_declared(parameters_of(c));
  return x;
}

TwistedMonoidAlgebra JobConfig::algebra(const Json& j, std::string_view prefix) const {
  if (!j.is_object()) throw InputError("algebra must be an object with 'cocycle' or 'q'");
  std::optional<BimultiplicativeCocycle> mu;
  if (j.contains("cocycle") && j.contains("q")) throw InputError("algebra takes either 'cocycle' or 'q', not both");
  if (j.contains("cocycle")) {
    mu = cocycle(j.at("cocycle"));
  } else if (j.contains("q")) {
    mu = canonical_from_antisym(antisymmetric(j.at("q")));
  } else {
    throw InputError("algebra must give 'cocycle' or 'q'");
  }
  std::vector<std::string> names;
  if (j.contains("generators")) {
    const auto& g = j.at("generators");
    if (!g.is_array()) throw InputError("'generators' must be a list of names");
    for (const auto& n : g) {
      if (!n.is_string()) throw InputError("generator names must be strings");
      names.push_back(n.get<std::string>());
    }
  } else {
    names = default_generator_names(mu->rank(), prefix);
  }
  if (names.size() != mu->rank()) {
    throw InputError("algebra has rank " + std::to_string(mu->rank()) + " but " + std::to_string(names.size()) +
                     " generator names");
  }
  return TwistedMonoidAlgebra(std::move(*mu), std::move(names));
}

SegreMap JobConfig::segre() const {
  const auto n = integer("n");
  const auto m = integer("m");
  if (n < 1 || m < 1) throw InputError("segre map requires n >= 1 and m >= 1");
  std::optional<BimultiplicativeCocycle> mu;
  if (has("cocycle") && has("factors")) throw InputError("give either 'cocycle' or 'factors', not both");
  if (has("cocycle")) {
    mu = cocycle(at("cocycle"));
  } else if (has("factors")) {
    const auto& f = at("factors");
    if (!f.is_object() || !f.contains("left") || !f.contains("right")) {
      throw InputError("'factors' must give 'left' and 'right' (and optionally 'pairing')");
    }
    auto left = cocycle(f.at("left"));
    auto right = cocycle(f.at("right"));
    Pairing alpha = f.contains("pairing") ? Pairing(matrix(f.at("pairing")))
                                          : Pairing::trivial(left.rank(), right.rank());
    mu = yamazaki_reconstruct(left, right, alpha);
  } else {
    throw InputError("segre config must give 'cocycle' or 'factors'");
  }
  auto s = build_quantum_segre(static_cast<std::size_t>(n), static_cast<std::size_t>(m), *mu);
  if (has("split") && !(split(at("split")) == s.split())) throw InputError("segre split must be [n+1, m+1]");
  return s;
}

}  // namespace cotwist::cli
