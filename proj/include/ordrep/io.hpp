#pragma once

#include <string>

#include "json.hpp"
#include "ordrep/build.hpp"
#include "ordrep/errors.hpp"
#include "ordrep/order_ops.hpp"
#include "ordrep/partial_fn.hpp"
#include "ordrep/relation.hpp"
#include "ordrep/topology.hpp"
#include "ordrep/trace.hpp"
#include "ordrep/verify.hpp"

namespace ordrep::io {

using ojson = nlohmann::ordered_json;

// Version tag stamped on every emitted document.
inline constexpr const char* kSchemaTag = "ordrep/1";

// ---- parsing ----
// All parsers throw ParseError on malformed shapes and UnknownLabel when an
// element reference falls outside the governing ground set. Unknown keys are
// ignored, so documents with extra reporting fields still parse.

ojson parse_text(const std::string& text, const std::string& what);

// {"elements":["a",...], "pairs":[["a","b"],...], "reflexive_closure":bool}
// pairs mean first ≾ second; reflexive_closure defaults to false.
Relation relation_from_json(const ojson& j);

// {"values":{"a":"1/2","b":3,...}} — absent keys mean undefined; values are
// rational strings or integers.
PartialFn function_from_json(const ojson& j, const GroundSet& ground);

// {"kind":"partial-rp-mu","threshold":"1","functions":[...]} — threshold is
// optional but must equal 1 when present (the only supported threshold).
ReprFamily family_from_json(const ojson& j, const GroundSet& ground);

// {"elements":[...], "opens":[["a"],["a","b"],...]} — the empty and full
// sets are implicit; the constructor validates closure under union and
// intersection.
FiniteTopology topology_from_json(const ojson& j);

Relation parse_relation_text(const std::string& text);
PartialFn parse_function_text(const std::string& text,
                              const GroundSet& ground);
ReprFamily parse_family_text(const std::string& text,
                             const GroundSet& ground);
FiniteTopology parse_topology_text(const std::string& text);

// ---- serialization fragments (schema field added by document()) ----
// All fragments are deterministic: fixed key order, elements in ground-set
// order, opens ascending by bitmask, rationals as canonical "p/q" strings.

ojson relation_to_json(const Relation& r);
ojson function_to_json(const PartialFn& f);
ojson family_to_json(const ReprFamily& f);
ojson topology_to_json(const FiniteTopology& t);
ojson verdict_to_json(const Verdict& v, const GroundSet& ground);
// Bare property flags, one boolean per property.
ojson flags_to_json(const PropertyReport& p);
// Same properties with witnesses: {"holds":false,"counterexample":[...]}.
ojson axioms_to_json(const PropertyReport& p, const GroundSet& ground);
ojson width_to_json(const WidthResult& w, const GroundSet& ground);
// Family fields inline plus optimal/search/chains, so the emitted document
// also parses as a family.
ojson build_report_to_json(const BuildReport& b);
ojson harness_to_json(const HarnessReport& h);
ojson clock_report_to_json(const ClockReport& c);
ojson error_to_json(const Error& e);

// Prepends {"schema":"ordrep/1"}, then the fragment's keys in order;
// renders with two-space indentation and a trailing newline.
std::string document(const ojson& fragment);

}  // namespace ordrep::io
