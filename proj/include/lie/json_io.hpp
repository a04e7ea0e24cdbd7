#ifndef LIE_JSON_IO_HPP
#define LIE_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "lie/field.hpp"
#include "lie/morphism.hpp"

namespace lie {

// ordered_json keeps insertion order, so identical inputs serialize to
// identical bytes
using Json = nlohmann::ordered_json;

Json algebra_to_json(const LieAlgebra& g);
LieAlgebra algebra_from_json(const Json& j);

Json morphism_to_json(const AlgebraMorphism& m);
AlgebraMorphism morphism_from_json(const Json& j);

Json rep_to_json(const ExactRep& r);
Json rep_to_json(const NumericRep& r);

Json field_to_json(const SampledField& f);
SampledField field_from_json(const Json& j);

Json report_to_json(const CheckReport& r);

Json cmat_to_json(const CMat& m);

}  // namespace lie

#endif
