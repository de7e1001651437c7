#pragma once

#include "hs/dpexp.hpp"
#include "hs/suites.hpp"

#include <json.hpp>

#include <string>

namespace hs {

using Json = nlohmann::ordered_json;

// Inline JSON (text starting with '{', '[' or '"') or a path to a JSON file.
Json read_json_arg(const std::string& arg);

Json base_to_json(const BaseRing& k);
BaseRing base_from_json(const Json& j);
// Shorthand names: Q, Z, F<p>, Z/<n>, optionally followed by variables as in F2[x,y].
BaseRing base_from_name(const std::string& name);

// {"base":..., "vars":[...], "relations":[...]}
Json ring_to_json(const AlgebraPtr& A);
AlgebraPtr ring_from_json(const Json& j, int degree_cap = kDefaultDegreeCap);
// Shorthand such as `Q`, `F2[x]`, `Q[x,y]`, inline JSON or a file path.
AlgebraPtr ring_from_arg(const std::string& arg, int degree_cap = kDefaultDegreeCap);

Json shape_to_json(const Shape& sh);
Shape shape_from_json(const Json& j);

// {"shape":..., "coeffs":[{"alpha":[...],"value":"..."}]}; coeffs may also be a string in s1..sp.
Json series_to_json(const ElemSeries& r);
ElemSeries series_from_json(const AlgebraPtr& A, const Json& j);

// {"algebra":..., "shape":..., "phi":{"x":"x + s1"}}; `algebra` may be omitted when A is given.
Json hs_to_json(const HSDerivation& d);
HSDerivation hs_from_json(const Json& j, const AlgebraPtr& fallback = nullptr, int degree_cap = kDefaultDegreeCap);

// {"source":{"p":..,"shape":..},"target":{"p":..,"shape":..},"images":["t1+t2"]}
Json subst_to_json(const SubstMap& phi);
SubstMap subst_from_json(const AlgebraPtr& A, const Json& j);

// {"x":"1"}; absent variables map to 0.
Derivation derivation_from_json(const AlgebraPtr& A, const Json& j);
Json derivation_to_json(const Derivation& d);

Json integral_to_json(const IntegralResult& r);
Json suite_to_json(const SuiteReport& r);

} // namespace hs
