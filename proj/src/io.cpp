#include "ordrep/io.hpp"

#include <utility>
#include <vector>

namespace ordrep::io {

namespace {

std::string ctx(const std::string& what, const std::string& msg) {
  return what + ": " + msg;
}

const ojson& require_key(const ojson& j, const char* key,
                         const std::string& what) {
  if (!j.is_object()) throw ParseError(ctx(what, "expected a JSON object"));
  auto it = j.find(key);
  if (it == j.end())
    throw ParseError(ctx(what, std::string("missing key \"") + key + "\""));
  return *it;
}

std::string require_string(const ojson& v, const std::string& what) {
  if (!v.is_string()) throw ParseError(ctx(what, "expected a string"));
  return v.get<std::string>();
}

void require_array(const ojson& v, const std::string& what) {
  if (!v.is_array()) throw ParseError(ctx(what, "expected an array"));
}

GroundSet ground_from_elements(const ojson& j, const std::string& what) {
  const ojson& elems = require_key(j, "elements", what);
  require_array(elems, what + " elements");
  std::vector<std::string> names;
  names.reserve(elems.size());
  for (const auto& e : elems)
    names.push_back(require_string(e, what + " element"));
  return GroundSet(std::move(names));
}

Rational rational_from_value(const ojson& v, const std::string& what) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw ParseError(ctx(what, "expected a rational string or an integer"));
}

std::vector<std::string> labels_of(const GroundSet& g,
                                   const std::vector<int>& xs) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (int x : xs) out.push_back(g.label(x));
  return out;
}

ojson flag_to_json(const Flag& f, const GroundSet& g) {
  ojson o;
  o["holds"] = f.holds;
  if (!f.holds) o["counterexample"] = labels_of(g, f.counterexample);
  return o;
}

struct PropertyRow {
  const char* key;
  const Flag PropertyReport::*flag;
};

constexpr PropertyRow kPropertyRows[] = {
    {"reflexive", &PropertyReport::reflexive},
    {"irreflexive", &PropertyReport::irreflexive},
    {"symmetric", &PropertyReport::symmetric},
    {"antisymmetric", &PropertyReport::antisymmetric},
    {"asymmetric", &PropertyReport::asymmetric},
    {"total", &PropertyReport::total},
    {"transitive", &PropertyReport::transitive},
    {"preorder", &PropertyReport::preorder},
    {"partial_order", &PropertyReport::partial_order},
    {"interval_order", &PropertyReport::interval_order},
    {"semiorder", &PropertyReport::semiorder},
};

const char* error_type_name(const Error& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "parse";
  if (dynamic_cast<const UnknownLabel*>(&e)) return "unknown-label";
  if (dynamic_cast<const UnknownExample*>(&e)) return "unknown-example";
  if (dynamic_cast<const NotAPreorder*>(&e)) return "not-a-preorder";
  if (dynamic_cast<const NotAPartialOrder*>(&e)) return "not-a-partial-order";
  if (dynamic_cast<const NotASemiorder*>(&e)) return "not-a-semiorder";
  if (dynamic_cast<const CyclicStrictPart*>(&e)) return "cyclic-strict-part";
  if (dynamic_cast<const NonPositiveAlpha*>(&e)) return "non-positive-alpha";
  if (dynamic_cast<const PartialFunctionInTotalKind*>(&e))
    return "partial-function-in-total-kind";
  if (dynamic_cast<const PartialUtilityForSS*>(&e))
    return "partial-utility-for-ss";
  if (dynamic_cast<const CapExceeded*>(&e)) return "cap-exceeded";
  if (dynamic_cast<const PreconditionFailed*>(&e))
    return "precondition-failed";
  if (dynamic_cast<const DanglingReceive*>(&e)) return "dangling-receive";
  if (dynamic_cast<const DuplicateMessageId*>(&e))
    return "duplicate-message-id";
  if (dynamic_cast<const CausalCycle*>(&e)) return "causal-cycle";
  return "internal";
}

}  // namespace

ojson parse_text(const std::string& text, const std::string& what) {
  ojson j = ojson::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError(ctx(what, "invalid JSON"));
  return j;
}

Relation relation_from_json(const ojson& j) {
  const std::string what = "relation";
  GroundSet ground = ground_from_elements(j, what);
  const ojson& pairs = require_key(j, "pairs", what);
  require_array(pairs, what + " pairs");
  std::vector<std::pair<int, int>> idx;
  idx.reserve(pairs.size());
  for (const auto& p : pairs) {
    if (!p.is_array() || p.size() != 2)
      throw ParseError(ctx(what, "each pair must be a two-element array"));
    int a = ground.index(require_string(p[0], what + " pair"));
    int b = ground.index(require_string(p[1], what + " pair"));
    idx.emplace_back(a, b);
  }
  bool refl = false;
  if (auto it = j.find("reflexive_closure"); it != j.end()) {
    if (!it->is_boolean())
      throw ParseError(ctx(what, "reflexive_closure must be a boolean"));
    refl = it->get<bool>();
  }
  return Relation::from_pairs(std::move(ground), idx, refl);
}

PartialFn function_from_json(const ojson& j, const GroundSet& ground) {
  const std::string what = "function";
  const ojson& values = require_key(j, "values", what);
  if (!values.is_object())
    throw ParseError(ctx(what, "values must be an object"));
  PartialFn f(ground);
  for (const auto& [label, v] : values.items()) {
    int x = ground.index(label);
    f.set(x, rational_from_value(v, what + " value for " + label));
  }
  return f;
}

ReprFamily family_from_json(const ojson& j, const GroundSet& ground) {
  const std::string what = "family";
  ReprFamily fam;
  fam.kind =
      repr_kind_from_name(require_string(require_key(j, "kind", what), what));
  if (auto it = j.find("threshold"); it != j.end()) {
    Rational t = rational_from_value(*it, what + " threshold");
    if (!(t == Rational(1)))
      throw ParseError(ctx(what, "only threshold 1 is supported"));
  }
  const ojson& fns = require_key(j, "functions", what);
  require_array(fns, what + " functions");
  for (const auto& fj : fns)
    fam.functions.push_back(function_from_json(fj, ground));
  return fam;
}

FiniteTopology topology_from_json(const ojson& j) {
  const std::string what = "topology";
  GroundSet ground = ground_from_elements(j, what);
  const ojson& opens = require_key(j, "opens", what);
  require_array(opens, what + " opens");
  std::vector<std::uint64_t> masks;
  masks.reserve(opens.size());
  for (const auto& open : opens) {
    require_array(open, what + " open set");
    std::uint64_t m = 0;
    for (const auto& e : open)
      m |= 1ull << ground.index(require_string(e, what + " open set"));
    masks.push_back(m);
  }
  return FiniteTopology(std::move(ground), std::move(masks));
}

Relation parse_relation_text(const std::string& text) {
  return relation_from_json(parse_text(text, "relation"));
}

PartialFn parse_function_text(const std::string& text,
                              const GroundSet& ground) {
  return function_from_json(parse_text(text, "function"), ground);
}

ReprFamily parse_family_text(const std::string& text,
                             const GroundSet& ground) {
  return family_from_json(parse_text(text, "family"), ground);
}

FiniteTopology parse_topology_text(const std::string& text) {
  return topology_from_json(parse_text(text, "topology"));
}

ojson relation_to_json(const Relation& r) {
  ojson o;
  o["elements"] = r.ground().names();
  ojson pairs = ojson::array();
  for (const auto& [a, b] : r.pairs())
    pairs.push_back({r.ground().label(a), r.ground().label(b)});
  o["pairs"] = std::move(pairs);
  o["reflexive_closure"] = false;
  return o;
}

ojson function_to_json(const PartialFn& f) {
  ojson values = ojson::object();
  for (int x = 0; x < f.size(); ++x)
    if (f.defined(x)) values[f.ground().label(x)] = f.at(x).str();
  ojson o;
  o["values"] = std::move(values);
  return o;
}

ojson family_to_json(const ReprFamily& f) {
  ojson o;
  o["kind"] = repr_kind_name(f.kind);
  o["threshold"] = "1";
  ojson fns = ojson::array();
  for (const auto& fn : f.functions) fns.push_back(function_to_json(fn));
  o["functions"] = std::move(fns);
  return o;
}

ojson topology_to_json(const FiniteTopology& t) {
  ojson o;
  o["elements"] = t.ground().names();
  ojson opens = ojson::array();
  for (std::uint64_t m : t.opens()) {
    if (m == 0 || m == t.full_mask()) continue;
    ojson open = ojson::array();
    for (int x = 0; x < t.size(); ++x)
      if (m >> x & 1) open.push_back(t.ground().label(x));
    opens.push_back(std::move(open));
  }
  o["opens"] = std::move(opens);
  return o;
}

ojson verdict_to_json(const Verdict& v, const GroundSet& ground) {
  ojson o;
  o["ok"] = v.ok;
  ojson vio = ojson::array();
  for (const auto& viol : v.violations) {
    ojson jv;
    jv["clause"] = viol.clause;
    if (viol.x >= 0) jv["x"] = ground.label(viol.x);
    if (viol.y >= 0) jv["y"] = ground.label(viol.y);
    jv["detail"] = viol.detail;
    vio.push_back(std::move(jv));
  }
  o["violations"] = std::move(vio);
  return o;
}

ojson flags_to_json(const PropertyReport& p) {
  ojson o;
  for (const auto& row : kPropertyRows) o[row.key] = (p.*row.flag).holds;
  return o;
}

ojson axioms_to_json(const PropertyReport& p, const GroundSet& ground) {
  ojson o;
  for (const auto& row : kPropertyRows)
    o[row.key] = flag_to_json(p.*row.flag, ground);
  return o;
}

ojson width_to_json(const WidthResult& w, const GroundSet& ground) {
  ojson o;
  o["width"] = w.width;
  o["witness"] = labels_of(ground, w.witness);
  return o;
}

ojson build_report_to_json(const BuildReport& b) {
  ojson o = family_to_json(b.family);
  o["optimal"] = b.optimal;
  ojson search;
  search["nodes"] = b.stats.nodes;
  search["initial_bound"] = b.stats.initial_bound;
  o["search"] = std::move(search);
  o["chains"] = b.chains;
  return o;
}

ojson harness_to_json(const HarnessReport& h) {
  ojson o;
  o["harness"] = h.harness;
  ojson hyp = ojson::array();
  for (const auto& c : h.hypotheses) {
    ojson jc;
    jc["name"] = c.name;
    jc["holds"] = c.holds;
    if (!c.holds) jc["detail"] = c.detail;
    hyp.push_back(std::move(jc));
  }
  o["hypotheses"] = std::move(hyp);
  o["applicable"] = h.applicable;
  o["conclusion"] = h.conclusion;
  if (h.applicable) o["conclusion_holds"] = h.conclusion_holds;
  o["alarm"] = h.alarm;
  o["outcome"] = h.outcome;
  return o;
}

ojson clock_report_to_json(const ClockReport& c) {
  ojson o;
  o["processes"] = c.processes;
  o["functions"] = c.function_count;
  o["width"] = c.poset_width;
  o["optimal"] = c.build.optimal;
  o["chains"] = c.build.chains;
  o["verdict"] = verdict_to_json(c.verdict, c.hb.ground());
  o["family"] = family_to_json(c.build.family);
  return o;
}

ojson error_to_json(const Error& e) {
  ojson err;
  err["type"] = error_type_name(e);
  err["message"] = e.what();
  if (const auto* ns = dynamic_cast<const NotASemiorder*>(&e);
      ns && !ns->quadruple.empty())
    err["quadruple"] = ns->quadruple;
  ojson o;
  o["error"] = std::move(err);
  return o;
}

std::string document(const ojson& fragment) {
  ojson doc;
  doc["schema"] = kSchemaTag;
  for (const auto& [k, v] : fragment.items()) doc[k] = v;
  return doc.dump(2) + "\n";
}

}  // namespace ordrep::io
