#pragma once

#include <nlohmann/json.hpp>

#include "wkb/cech.hpp"
#include "wkb/crossed_module.hpp"
#include "wkb/descent.hpp"
#include "wkb/half_form.hpp"
#include "wkb/nerve.hpp"
#include "wkb/symbol.hpp"
#include "wkb/tau_series.hpp"

// Wire formats.  Truncation windows serialize as (top, depth): depth >= 1
// means the window [top-depth+1, top] as usual, depth == 0 marks an exact
// element.  Rationals are strings "p" or "p/q".  All decoders throw
// Error("ParseError", ...) on malformed input; groups, crossed modules and
// nerves are validated on load.

namespace wkb {

using Json = nlohmann::json;

Json to_json(const TauSeries& s);
TauSeries tau_series_from_json(const Json& j);

Json to_json(const RationalFunction& f);
RationalFunction rational_function_from_json(const Json& j);

Json to_json(const CoefficientFunction& f);
CoefficientFunction coefficient_function_from_json(const Json& j);

Json to_json(const Symbol& p);
Symbol symbol_from_json(const Json& j);

Json to_json(const HalfFormOperator& h);
HalfFormOperator half_form_from_json(const Json& j);

Json to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);

Json to_json(const CrossedModule& cm);
CrossedModule crossed_module_from_json(const Json& j);

Json to_json(const Nerve& nv);
Nerve nerve_from_json(const Json& j);

// cochains and witnesses are keyed by simplex tuples ("2", "0,1", "0,1,2"),
// so (de)serialization needs the nerve
Json to_json(const ZeroCochain& c, const Nerve& nv);
ZeroCochain zero_cochain_from_json(const Json& j, const Nerve& nv);

Json to_json(const OneCochain& c, const Nerve& nv);
OneCochain one_cochain_from_json(const Json& j, const Nerve& nv);

Json to_json(const Witness0& w, const Nerve& nv);
Witness0 witness0_from_json(const Json& j, const Nerve& nv);

Json to_json(const Witness1& w, const Nerve& nv);
Witness1 witness1_from_json(const Json& j, const Nerve& nv);

Json to_json(const DescentDatum& d);
DescentDatum descent_from_json(const Json& j);

} // namespace wkb
