#pragma once

#include "hb/domains.hpp"
#include "hb/dualaction.hpp"
#include "hb/groups.hpp"
#include "hb/invariantspace.hpp"
#include "hb/repr.hpp"
#include "hb/witness.hpp"

#include <nlohmann/json.hpp>

namespace hb {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);       // [num, den]
Rational rational_from_json(const Json& j);

Json to_json(const GroupElement& g);   // [theta_num, theta_den, phi_num, phi_den]
GroupElement element_from_json(const Json& j);

// {ambient:[n,m], generators:[[...]], order, class, elements:[[...]]}
Json to_json(const FiniteSubgroup& f);

// {pieces:[[lo1,hi1,lo2,hi2],...]} with each bound a rational [num,den]
Json to_json(const RectUnion& u);
RectUnion rect_union_from_json(const Json& j);

Json to_json(const ElementaryReport& r);
Json to_json(const CosetSelection& s);

// {n1, n2, values:[[num,den],...]} row-major; round-trips exactly
Json to_json(const GridFunction& f);
GridFunction grid_function_from_json(const Json& j);

Json to_json(const InvariantReport& r);
Json to_json(const WitnessReport& r);

Json to_json(const CharacterTable& t);
Json to_json(const InducedRepDescriptor& d);

} // namespace hb
