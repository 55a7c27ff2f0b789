#pragma once

#include <string>

#include <json.hpp>

#include "twistcat/category.hpp"
#include "twistcat/linear.hpp"
#include "twistcat/product.hpp"
#include "twistcat/thin.hpp"
#include "twistcat/twisting.hpp"
#include "twistcat/validation.hpp"

// Readers and writers for the on-disk JSON formats. Writers emit a
// canonical form: object keys sorted, list entries in ascending id
// order, rationals reduced with positive denominator. Readers reject
// unknown keys, wrong types, and non-dense ids with a ParseError.
namespace twistcat::io {

using nlohmann::json;

json parse(const std::string& text);       // ParseError on bad JSON
json load_file(const std::string& path);   // ParseError on bad file
void write_file(const std::string& path, const json& j);
std::string dump(const json& j);           // canonical text, trailing newline

json category_to_json(const FiniteCategory& c);
FiniteCategory category_from_json(const json& j);

json functor_to_json(const Functor& f);
Functor functor_from_json(const json& j);

json report_to_json(const ValidationReport& r);

json twisting_to_json(const TwistingSystem& r);
TwistingSystem twisting_from_json(const json& j, int b_size, int a_size);

json matched_pair_to_json(const MatchedPair& mp);
MatchedPair matched_pair_from_json(const json& j, int b_size, int a_size);

json bracket_to_json(const BracketFunction& bf);
BracketFunction bracket_from_json(const json& j);

json product_to_json(const TwistedProduct& p);
TwistedProduct product_from_json(const json& j);

std::vector<int> subset_from_json(const json& j);
std::vector<std::vector<int>> action_from_json(const json& j, int monoid_size, int cat_size);

json linear_map_to_json(const LinearMap& m);
LinearMap linear_map_from_json(const json& j);

json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const json& j);

json coalgebra_to_json(const Coalgebra& c);
Coalgebra coalgebra_from_json(const json& j);

json bialgebra_to_json(const Bialgebra& b);
Bialgebra bialgebra_from_json(const json& j);

json linear_category_to_json(const LinearCategory& c);
LinearCategory linear_category_from_json(const json& j);

json module_action_to_json(const ModuleAction& a);
ModuleAction module_action_from_json(const json& j);

}  // namespace twistcat::io
