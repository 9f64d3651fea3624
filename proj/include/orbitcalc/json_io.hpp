#pragma once

#include "orbitcalc/chow.hpp"
#include "orbitcalc/matroid.hpp"
#include "orbitcalc/orbit.hpp"
#include "orbitcalc/pathmatrix.hpp"
#include "orbitcalc/polytope.hpp"
#include "orbitcalc/qmatrix.hpp"

#include <json.hpp>

namespace orbitcalc {

using Json = nlohmann::json;

// Polynomial schema: {"vars": [names], "terms": [{"exp": [ints], "coeff":
// "decimal-string"}]}, terms in graded-lex order. Byte-deterministic.
Json poly_to_json(const MPoly& p, const std::vector<std::string>& names);
MPoly poly_from_json(const Json& j, std::vector<std::string>* names_out = nullptr);

Json matroid_to_json(const Matroid& m);
Matroid matroid_from_json(const Json& j);

Json matrix_to_json(const QMatrix& m);
QMatrix matrix_from_json(const Json& j);
PathMatrix path_matrix_from_json(const Json& j);

Json class_to_json(const ChowClass& c);
ChowClass class_from_json(const Json& j);

Json qelem_to_json(const QuantumElement& q);
Json graph_class_to_json(const GraphClass& g);

Json subdivision_to_json(const Subdivision& s);
Subdivision subdivision_from_json(const Json& j);

}  // namespace orbitcalc
