#pragma once

// JSON encodings of the exact values:
//   unit                 "-3/2*q^2*r^-1"            (unit literal grammar)
//   unit matrix          [["1","q"],["1","1"]]
//   exponent vector      [1,0,2]
//   monoid morphism      [[1,0,1,0],[1,0,0,1],...]  (one image per generator)
//   product split        [a,b]
//   truncated cocycle    [{"u":[..],"v":[..],"value":"..."}, ...]
//   function on monoid   [{"u":[..],"value":"..."}, ...]
//   algebra element      [{"exponents":[..],"coefficient":"..."}, ...]
//   segre map            {"n":..,"m":..,"cocycle":[[..]],"split":[n+1,m+1]}
//   reports              {"pass":bool,"counterexample":{...}?}

#include <nlohmann/json.hpp>

#include "cotwist/algebras.hpp"
#include "cotwist/cocycles.hpp"
#include "cotwist/monoids.hpp"
#include "cotwist/scalars.hpp"
#include "cotwist/segre.hpp"
#include "cotwist/truncated.hpp"

namespace cotwist {

using Json = nlohmann::json;

Json unit_to_json(const UnitScalar& u);
/// Accepts a unit literal string or a nonzero JSON integer.
UnitScalar unit_from_json(const Json& j);

Json matrix_to_json(const UnitMatrix& m);
UnitMatrix matrix_from_json(const Json& j);

Json vector_to_json(const ExponentVector& u);
ExponentVector vector_from_json(const Json& j);

Json split_to_json(const ProductSplit& s);
ProductSplit split_from_json(const Json& j);

Json morphism_to_json(const MonoidMorphism& f);
/// Source rank is the number of images; target rank is their common length.
MonoidMorphism morphism_from_json(const Json& j);

Json truncated_to_json(const TruncatedCocycle& mu);
/// Rank is taken from the entries; the degree bound is the largest |u|+|v|.
TruncatedCocycle truncated_from_json(const Json& j);

Json function_to_json(const FunctionOnMonoid& h);
FunctionOnMonoid function_from_json(const Json& j);

Json element_to_json(const AlgebraElement& x);
/// Accepts the element grammar as a string, or the list encoding.
AlgebraElement element_from_json(const TwistedMonoidAlgebra& a, const Json& j);

Json segre_to_json(const SegreMap& s);
SegreMap segre_from_json(const Json& j);

Json cocycle_check_to_json(const CocycleCheck& check);
Json homomorphism_report_to_json(const GradedHomomorphism& phi, const HomomorphismReport& report);

}  // namespace cotwist
