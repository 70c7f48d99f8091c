#pragma once

#include <json.hpp>

#include "fgc/algebras.hpp"
#include "fgc/pell.hpp"
#include "fgc/tracegroup.hpp"

namespace fgc {

using nlohmann::json;

json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const QuadExt& x);
QuadExt quadext_from_json(const json& j);

json to_json(const QuadraticIrrational& q);
QuadraticIrrational quadirr_from_json(const json& j);

json to_json(const RingDescriptor& r);
RingDescriptor ring_from_json(const json& j);

json to_json(const TraceGroup& e);
TraceGroup tracegroup_from_json(const json& j);

json to_json(const FundamentalGroupValue& f);
FundamentalGroupValue fgvalue_from_json(const json& j);

json to_json(const PellSolution& s);
PellSolution pell_from_json(const json& j);

json to_json(const FgResult& r);
FgResult fgresult_from_json(const json& j);

} // namespace fgc
