#pragma once

#include "padic/covering.hpp"
#include "padic/diffsys.hpp"
#include "padic/newton.hpp"
#include "padic/ratfunc.hpp"
#include "padic/rolle.hpp"
#include "padic/series.hpp"

#include <json.hpp>

namespace padic {

// Wire formats.  Keys are emitted in canonical (sorted) order and rationals
// are strings ("num/den", "/den" omitted when 1; "+inf" is "inf"), so every
// document is diff-stable: from_json(to_json(x)) == x and re-serialization
// is byte-identical.

using json = nlohmann::json;

json to_json(const PSeries& f);
PSeries pseries_from_json(const json& j);

json to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const json& j);

json to_json(const DiffSystem& sys);
DiffSystem system_from_json(const json& j);

// Gauge file: {"P": [[entry...]...], "n": ..., "prime": ...}.
RatFuncMatrix gauge_matrix_from_json(const json& j);
json gauge_matrix_to_json(const RatFuncMatrix& P);

json to_json(const RolleReport& r);
RolleReport rolle_report_from_json(const json& j);

json to_json(const RadiusEstimate& r);
RadiusEstimate radius_estimate_from_json(const json& j);

json to_json(const CoveringReport& r);
json to_json(const SectionSeries& s, long prime);
json to_json(const SolutionMatrix& sol, long prime);

json polygon_report(const NewtonPolygon& np);

} // namespace padic
