#pragma once

#include <string>

#include "json.hpp"

#include "finitop/claims.hpp"
#include "finitop/construct.hpp"
#include "finitop/covers.hpp"
#include "finitop/maps.hpp"
#include "finitop/props.hpp"
#include "finitop/search.hpp"

namespace finitop {

using json = nlohmann::json;

// Space files: {"n": int, "le": [[x,y], ...]} listing the non-reflexive
// pairs; the reader adds reflexivity and rejects non-transitive input.
json space_to_json(const FinSpace& x);
FinSpace space_from_json(const json& j);

json pointset_to_json(const Bits& s);
Bits pointset_from_json(const json& j, int n);

// Map files: {"dom": space, "cod": space, "values": [..]}.
json map_to_json(const PointMap& f);
PointMap map_from_json(const json& j);

// Cover files: {"members": [[points]...]}.
json cover_to_json(const Cover& c);
Cover cover_from_json(const json& j, int n);

json report_to_json(const PropertyReport& r);
json decomposition_to_json(const Decomposition& d);
json search_outcome_to_json(const SearchOutcome& o);
json suite_report_to_json(const SuiteReport& r);
json claim_report_to_json(const ClaimReport& r);

/// Hasse diagram of the T0 quotient's order, as a DOT digraph.
std::string dot_hasse_t0(const FinSpace& x);

/// DOT of the space with decomposition fibers as clusters.
std::string dot_decomposition(const FinSpace& x, const Decomposition& d);

}  // namespace finitop
