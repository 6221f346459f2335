#include "cotwist/json_io.hpp"

#include <algorithm>

#include "cotwist/error.hpp"

namespace cotwist {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::int64_t require_integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

}  // namespace

Json unit_to_json(const UnitScalar& u) { return render_unit(u); }

UnitScalar unit_from_json(const Json& j) {
  if (j.is_string()) return parse_unit(j.get<std::string>());
  if (j.is_number_integer()) {
    const auto v = j.get<std::int64_t>();
    if (v == 0) throw InputError("unit value must be nonzero");
    return UnitScalar(Rational(static_cast<long>(v)));
  }
  throw InputError("unit value must be a unit literal string, got " + j.dump());
}

Json matrix_to_json(const UnitMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(unit_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

UnitMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("matrix must be a 2-D array of unit literals");
  std::vector<std::vector<UnitScalar>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw InputError("matrix rows must be arrays");
    std::vector<UnitScalar> r;
    for (const auto& e : row) r.push_back(unit_from_json(e));
    rows.push_back(std::move(r));
  }
  return UnitMatrix::from_rows(rows);
}

Json vector_to_json(const ExponentVector& u) {
  return Json(std::vector<std::int64_t>(u.entries().begin(), u.entries().end()));
}

ExponentVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("exponent vector must be an array of nonnegative integers");
  std::vector<std::int64_t> e;
  for (const auto& x : j) e.push_back(require_integer(x, "exponent vector entry"));
  return ExponentVector(std::move(e));
}

Json split_to_json(const ProductSplit& s) { return Json::array({s.left_rank(), s.right_rank()}); }

ProductSplit split_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw InputError("split must be [left_rank, right_rank]");
  const auto a = require_integer(j[0], "split rank");
  const auto b = require_integer(j[1], "split rank");
  if (a < 1 || b < 1) throw InputError("split ranks must be positive");
  return ProductSplit(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
}

Json morphism_to_json(const MonoidMorphism& f) {
  Json out = Json::array();
  for (const auto& img : f.generator_images()) out.push_back(vector_to_json(img));
  return out;
}

MonoidMorphism morphism_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw InputError("morphism must be a nonempty array of generator images");
  std::vector<ExponentVector> images;
  for (const auto& img : j) images.push_back(vector_from_json(img));
  const std::size_t source = images.size();
  const std::size_t target = images.front().rank();
  return MonoidMorphism(source, target, std::move(images));
}

Json truncated_to_json(const TruncatedCocycle& mu) {
  Json out = Json::array();
  for (const auto& [key, value] : mu.table()) {
    out.push_back({{"u", vector_to_json(key.first)}, {"v", vector_to_json(key.second)}, {"value", unit_to_json(value)}});
  }
  return out;
}

TruncatedCocycle truncated_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw InputError("truncated cocycle must be a nonempty list of {u, v, value}");
  TruncatedCocycle::Table table;
  std::int64_t bound = 0;
  const std::size_t rank = vector_from_json(require(j.front(), "u")).rank();
  for (const auto& entry : j) {
    auto u = vector_from_json(require(entry, "u"));
    auto v = vector_from_json(require(entry, "v"));
    if (u.rank() != rank || v.rank() != rank) throw InputError("truncated cocycle entries have inconsistent ranks");
    bound = std::max(bound, u.total_degree() + v.total_degree());
    if (!table.emplace(TruncatedCocycle::Key{std::move(u), std::move(v)}, unit_from_json(require(entry, "value")))
             .second) {
      throw InputError("truncated cocycle has a repeated entry");
    }
  }
  return TruncatedCocycle(rank, bound, std::move(table));
}

Json function_to_json(const FunctionOnMonoid& h) {
  Json out = Json::array();
  for (const auto& [u, value] : h.table()) out.push_back({{"u", vector_to_json(u)}, {"value", unit_to_json(value)}});
  return out;
}

FunctionOnMonoid function_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw InputError("function must be a nonempty list of {u, value}");
  FunctionOnMonoid::Table table;
  std::int64_t bound = 0;
  const std::size_t rank = vector_from_json(require(j.front(), "u")).rank();
  for (const auto& entry : j) {
    auto u = vector_from_json(require(entry, "u"));
    bound = std::max(bound, u.total_degree());
    table.emplace(std::move(u), unit_from_json(require(entry, "value")));
  }
  return FunctionOnMonoid(rank, bound, std::move(table));
}

Json element_to_json(const AlgebraElement& x) {
  Json out = Json::array();
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    out.push_back({{"exponents", vector_to_json(it->first)}, {"coefficient", render_polynomial(it->second)}});
  }
  return out;
}

AlgebraElement element_from_json(const TwistedMonoidAlgebra& a, const Json& j) {
  if (j.is_string()) return a.parse(j.get<std::string>());
  if (!j.is_array()) throw InputError("element must be a string or a list of {exponents, coefficient}");
  AlgebraElement x(a.rank());
  for (const auto& term : j) {
    const auto& c = require(term, "coefficient");
    if (!c.is_string()) throw InputError("element coefficient must be a string");
    x.add_term(vector_from_json(require(term, "exponents")), parse_polynomial(c.get<std::string>()));
  }
  return x;
}

Json segre_to_json(const SegreMap& s) {
  return {{"n", s.n()},
          {"m", s.m()},
          {"cocycle", matrix_to_json(s.ambient_cocycle().matrix())},
          {"split", split_to_json(s.split())}};
}

SegreMap segre_from_json(const Json& j) {
  const auto n = require_integer(require(j, "n"), "n");
  const auto m = require_integer(require(j, "m"), "m");
  if (n < 1 || m < 1) throw InputError("segre map requires n >= 1 and m >= 1");
  auto s = build_quantum_segre(static_cast<std::size_t>(n), static_cast<std::size_t>(m),
                               BimultiplicativeCocycle(matrix_from_json(require(j, "cocycle"))));
  if (j.contains("split") && !(split_from_json(j.at("split")) == s.split())) {
    throw InputError("segre map split must be [n+1, m+1]");
  }
  return s;
}

Json cocycle_check_to_json(const CocycleCheck& check) {
  Json out = {{"pass", check.holds}};
  if (!check.holds) {
    Json ce = {{"detail", check.detail}};
    if (check.x) ce["x"] = vector_to_json(*check.x);
    if (check.y) ce["y"] = vector_to_json(*check.y);
    if (check.z) ce["z"] = vector_to_json(*check.z);
    out["counterexample"] = std::move(ce);
  }
  return out;
}

Json homomorphism_report_to_json(const GradedHomomorphism& phi, const HomomorphismReport& report) {
  Json out = {{"pass", report.pass},
              {"checked_pairs", report.checked_pairs},
              {"checked_relations", report.checked_relations}};
  if (report.counterexample) {
    const auto& ce = *report.counterexample;
    out["counterexample"] = {{"kind", ce.kind},
                             {"left", phi.source().render(ce.left)},
                             {"right", phi.source().render(ce.right)},
                             {"expected", phi.target().render(ce.expected)},
                             {"actual", phi.target().render(ce.actual)}};
  }
  return out;
}

}  // namespace cotwist
