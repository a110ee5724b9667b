#pragma once

// JSON round-trip for the public data shapes.  Rationals travel as strings
// ("-3/2"), matrices as row arrays, formal values either structured or as
// their rendered text (the renderer and parser are mutually inverse).

#include <string>
#include <vector>

#include <json.hpp>

#include "parahoric/dualdata.hpp"
#include "parahoric/folding.hpp"
#include "parahoric/rootdata.hpp"
#include "parahoric/satake.hpp"
#include "parahoric/values.hpp"

namespace parahoric::jsonio {

using json = nlohmann::json;

json matrix_to_json(const IntMat& m);
IntMat matrix_from_json(const json& j);

json datum_to_json(const rootdata::BasedRootDatum& d);
rootdata::BasedRootDatum datum_from_json(const json& j);

json action_to_json(const folding::GaloisAction& a);
folding::GaloisAction action_from_json(const json& j);

json spec_to_json(const satake::GroupSpec& s);
// Rebuilds through make_group_spec, so the result is validated.
satake::GroupSpec spec_from_json(const json& j);

json folded_to_json(const folding::FoldedSystem& f);

json group_to_json(const abelian::FinAbGroup& g);
json kottwitz_to_json(const dualdata::KottwitzGroup& k);

json value_to_json(const values::FormalValue& v);
values::FormalValue value_from_json(const json& j);

// Values as rendered strings; parse accepts the same strings.
json values_to_json(const std::vector<values::FormalValue>& vs);
std::vector<values::FormalValue> values_from_json(const json& j);

json parameter_to_json(const satake::SatakeParameter& s);
json member_to_json(const satake::MemberResult& r);

// Wraps nlohmann parse errors in parse_error.
json parse_text(const std::string& text);

}  // namespace parahoric::jsonio
