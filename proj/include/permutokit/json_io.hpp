#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "permutokit/axioms.hpp"
#include "permutokit/boolfun.hpp"
#include "permutokit/cones.hpp"
#include "permutokit/opens.hpp"
#include "permutokit/points.hpp"
#include "permutokit/preposet.hpp"
#include "permutokit/sections.hpp"
#include "permutokit/setcomp.hpp"

namespace permutokit::json_io {

using json = nlohmann::json;

inline constexpr const char* kSchema = "permutokit/1";

// Every parser throws ValidationError on malformed input.

json to_json(const Label& l);
Label label_from_json(const json& j);
/// Object keys: strings made of an optional sign and digits denote integers.
std::string label_key(const Label& l);
Label label_from_key(const std::string& key);

json to_json(const GroundSet& g);
GroundSet ground_from_json(const json& j);

json to_json(const setcomp::Composition& f);
setcomp::Composition composition_from_json(const json& j);

json to_json(const setcomp::Bijection& sigma);
setcomp::Bijection bijection_from_json(const json& j);

json to_json(const setcomp::Perm& beta);
setcomp::Perm perm_from_json(const json& j);

json to_json(const preposet::AugPreposet& p);
preposet::AugPreposet preposet_from_json(const json& j);

/// {"coords": {label: int}}.
json to_json(const cones::CoweightVector& h);
cones::CoweightVector coweight_from_json(const json& j);

/// Plain coordinate map {label: int}; a {"coords": ...} wrapper is accepted on input.
json point_to_json(const LatticePoint& h);
LatticePoint point_from_json(const json& j);

/// {"ground": [...], "values": {"{1,2}": v, ...}}; value keys may also be
/// decimal bitmasks.
json to_json(const boolfun::BooleanFunction& z);
boolfun::BooleanFunction boolfun_from_json(const json& j);

json to_json(const points::Rational& q);
points::Rational rational_from_json(const json& j);

json to_json(const points::PermPoint& x);
points::PermPoint permpoint_from_json(const json& j);

json to_json(const sections::SectionBasis& s);
sections::SectionBasis sections_from_json(const json& j);

json to_json(const opens::ToricOpen& u);
opens::ToricOpen open_from_json(const json& j);

json to_json(const axioms::LawReport& r);

}  // namespace permutokit::json_io
