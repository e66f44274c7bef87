#pragma once

#include "detline/conventions.hpp"
#include "detline/square.hpp"
#include "json.hpp"

namespace detline {

using json = nlohmann::json;

json to_json(const Rational& q);
Rational rational_from_json(const json& j);

json to_json(const RationalMatrix& m);
// Accepts an array of arrays of "p/q" strings, or the object form
// {"rows":r,"cols":c,"entries":[...]} needed when rows = 0.
RationalMatrix matrix_from_json(const json& j);

json to_json(const FinOperator& op);
FinOperator operator_from_json(const json& j);

json to_json(const LineSpace& s);
LineSpace line_space_from_json(const json& j);

json to_json(const LineElement& e);
LineElement line_element_from_json(const json& j);

json to_json(const DetLineElement& e);
DetLineElement det_element_from_json(const json& j);

json to_json(const ExactTriple& t);
ExactTriple triple_from_json(const json& j);

json to_json(const ExactSquare& s);
ExactSquare square_from_json(const json& j);

json to_json(const ConventionSystem& c);
ConventionSystem convention_from_json(const json& j);

}  // namespace detline
