#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ordrep/examples.hpp"
#include "ordrep/io.hpp"
#include "ordrep/labelings.hpp"
#include "ordrep/scott_suppes.hpp"

namespace {

namespace io = ordrep::io;
using io::ojson;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ordrep::ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ordrep::Relation load_relation(const std::string& path) {
  return io::parse_relation_text(read_file(path));
}

void emit(const ojson& fragment) { std::cout << io::document(fragment); }

int run_classify(const std::string& rel_path) {
  emit(io::flags_to_json(ordrep::classify(load_relation(rel_path))));
  return 0;
}

int run_axioms(const std::string& rel_path) {
  ordrep::Relation r = load_relation(rel_path);
  emit(io::axioms_to_json(ordrep::classify(r), r.ground()));
  return 0;
}

int run_width(const std::string& rel_path) {
  ordrep::Relation r = load_relation(rel_path);
  emit(io::width_to_json(ordrep::width(r), r.ground()));
  return 0;
}

int run_labelings(const std::string& rel_path, bool count_only, int cap) {
  ordrep::Relation r = load_relation(rel_path);
  ojson o;
  if (count_only) {
    o["count"] =
        ordrep::count_labelings(r, cap > 0 ? cap : ordrep::kCountCap);
  } else {
    auto ls = ordrep::enumerate_labelings(
        r, cap > 0 ? cap : ordrep::kEnumerationCap);
    o["count"] = ls.size();
    ojson arr = ojson::array();
    for (const auto& l : ls) arr.push_back(io::function_to_json(l));
    o["labelings"] = std::move(arr);
  }
  emit(o);
  return 0;
}

int run_represent(const std::string& rel_path, const std::string& kind,
                  const std::string& mode) {
  ordrep::Relation r = load_relation(rel_path);
  if (kind == "mu") {
    emit(io::family_to_json(ordrep::build_indicator_mu(r)));
  } else if (kind == "rp-mu") {
    emit(io::family_to_json(ordrep::build_labeling_rp_mu(r)));
  } else if (kind == "partial-rp-mu") {
    emit(io::build_report_to_json(ordrep::build_minimal_partial_rp_mu(
        r, ordrep::build_mode_from_name(mode))));
  } else if (kind == "ss") {
    emit(io::build_report_to_json(ordrep::build_ss(r)));
  } else {
    throw ordrep::ParseError("unknown representation kind: " + kind);
  }
  return 0;
}

int run_verify(const std::string& rel_path, const std::string& fam_path,
               const std::string& kind) {
  ordrep::Relation r = load_relation(rel_path);
  ordrep::ReprFamily fam =
      io::parse_family_text(read_file(fam_path), r.ground());
  const std::string k = kind.empty() ? repr_kind_name(fam.kind) : kind;
  const auto need_one = [&fam](const char* what) {
    if (fam.functions.size() != 1)
      throw ordrep::PreconditionFailed(
          std::string(what) + " verification needs exactly one function, got " +
          std::to_string(fam.functions.size()));
  };
  ordrep::Verdict v;
  if (k == "labeling") {
    need_one("labeling");
    v = ordrep::verify_labeling(r, fam.functions[0]);
  } else {
    fam.kind = ordrep::repr_kind_from_name(k);
    switch (fam.kind) {
      case ordrep::ReprKind::MultiUtility:
        v = ordrep::verify_multi_utility(r, fam);
        break;
      case ordrep::ReprKind::RpMultiUtility:
        v = ordrep::verify_rp_multi_utility(r, fam);
        break;
      case ordrep::ReprKind::PartialMu:
        v = ordrep::verify_partial_mu(r, fam);
        break;
      case ordrep::ReprKind::PartialRpMu:
        v = ordrep::verify_partial_rp_mu(r, fam);
        break;
      case ordrep::ReprKind::ScottSuppes:
        need_one("threshold");
        v = ordrep::verify_ss(r, fam.functions[0]);
        break;
      case ordrep::ReprKind::PartialSs:
        v = ordrep::verify_partial_ss(r, fam);
        break;
      case ordrep::ReprKind::PartialRpSs:
        v = ordrep::verify_partial_rpss(r, fam);
        break;
    }
  }
  emit(io::verdict_to_json(v, r.ground()));
  return v.ok ? 0 : 1;
}

int run_scott(const std::string& rel_path) {
  emit(io::topology_to_json(ordrep::scott_topology(load_relation(rel_path))));
  return 0;
}

int run_continuity(const std::string& fn_path, const std::string& dom_path,
                   const std::string& cod_path) {
  ordrep::FiniteTopology tx = io::parse_topology_text(read_file(dom_path));
  ordrep::FiniteTopology ty = io::parse_topology_text(read_file(cod_path));
  ordrep::PartialFn f = io::parse_function_text(read_file(fn_path),
                                                tx.ground());
  ordrep::Verdict v = ordrep::is_continuous(f, tx, ty);
  emit(io::verdict_to_json(v, tx.ground()));
  return v.ok ? 0 : 1;
}

int run_harness(const std::string& which, const std::string& rel_path,
                const std::string& top_path, const std::string& fam_path) {
  ordrep::Relation r = load_relation(rel_path);
  ordrep::FiniteTopology t = io::parse_topology_text(read_file(top_path));
  ordrep::ReprFamily fam =
      io::parse_family_text(read_file(fam_path), r.ground());
  ordrep::HarnessReport rep = which == "totality"
                                  ? ordrep::totality_harness(r, t, fam)
                                  : ordrep::closed_contours_harness(r, t, fam);
  emit(io::harness_to_json(rep));
  return rep.outcome == "pass" ? 0 : 1;
}

int run_example(const std::string& name,
                const std::map<std::string, long long>& params,
                const std::string& format) {
  ordrep::ExampleBundle b = ordrep::generate_example(name, params);
  if (format == "dot") {
    std::cout << ordrep::dot_hasse(b.relation);
    return 0;
  }
  ojson o;
  o["name"] = b.name;
  o["relation"] = io::relation_to_json(b.relation);
  if (b.family) o["family"] = io::family_to_json(*b.family);
  if (!b.topologies.empty()) {
    ojson arr = ojson::array();
    for (const auto& [tname, top] : b.topologies) {
      ojson jt;
      jt["name"] = tname;
      const ojson tj = io::topology_to_json(top);
      for (const auto& [key, val] : tj.items()) jt[key] = val;
      arr.push_back(std::move(jt));
    }
    o["topologies"] = std::move(arr);
  }
  emit(o);
  return 0;
}

int run_trace_ingest(const std::string& path, const std::string& format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ordrep::ParseError("cannot open file: " + path);
  ordrep::Trace t = ordrep::parse_trace(in);
  ordrep::Relation hb = ordrep::happened_before(t);
  if (format == "dot") {
    std::cout << ordrep::dot_hasse(hb);
    return 0;
  }
  emit(io::relation_to_json(hb));
  return 0;
}

int run_trace_gen(int procs, int events, double msg_prob,
                  std::uint64_t seed) {
  std::cout << ordrep::serialize_trace(
      ordrep::generate_trace(procs, events, msg_prob, seed));
  return 0;
}

int run_trace_clocks(const std::string& path, const std::string& mode) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ordrep::ParseError("cannot open file: " + path);
  ordrep::Trace t = ordrep::parse_trace(in);
  ordrep::ClockReport rep =
      ordrep::clock_report(t, ordrep::build_mode_from_name(mode));
  emit(io::clock_report_to_json(rep));
  return rep.verdict.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact order-theoretic toolbox: classification, utility "
      "representations, finite topology checks, and trace posets"};
  app.require_subcommand(1);

  std::string rel_path, fam_path, fn_path, dom_path, cod_path, top_path;
  std::string kind, mode = "exact", format = "json", harness_kind;
  std::string example_name, trace_path, clocks_mode = "greedy";
  bool count_only = false;
  int cap = -1;
  long long lo = 0, hi = 0, kparam = 0;
  int procs = 2, events = 10;
  double msg_prob = 0.3;
  std::uint64_t seed = 1;

  auto* c_classify =
      app.add_subcommand("classify", "report property flags of a relation");
  c_classify->add_option("--relation", rel_path, "relation JSON file")
      ->required();

  auto* c_axioms = app.add_subcommand(
      "axioms", "report property flags with counterexample witnesses");
  c_axioms->add_option("--relation", rel_path, "relation JSON file")
      ->required();

  auto* c_width =
      app.add_subcommand("width", "maximum antichain of the quotient order");
  c_width->add_option("--relation", rel_path, "relation JSON file")
      ->required();

  auto* c_labelings = app.add_subcommand(
      "labelings", "enumerate or count the labelings of a partial order");
  c_labelings->add_option("--relation", rel_path, "relation JSON file")
      ->required();
  c_labelings->add_flag("--count-only", count_only,
                        "count without materializing");
  c_labelings->add_option("--cap", cap, "override the element cap");

  auto* c_represent = app.add_subcommand(
      "represent", "build a representing family for a relation");
  c_represent->add_option("--relation", rel_path, "relation JSON file")
      ->required();
  c_represent
      ->add_option("--kind", kind,
                   "representation kind: mu, rp-mu, partial-rp-mu, ss")
      ->required();
  c_represent->add_option("--mode", mode, "chain cover mode")
      ->check(CLI::IsMember({"exact", "greedy"}));

  auto* c_verify = app.add_subcommand(
      "verify", "check a family against a relation, exit 1 when it fails");
  c_verify->add_option("--relation", rel_path, "relation JSON file")
      ->required();
  c_verify->add_option("--family", fam_path, "family JSON file")->required();
  c_verify->add_option(
      "--kind", kind,
      "override the family's kind: mu, rp-mu, partial-mu, partial-rp-mu, "
      "ss, partial-ss, partial-rpss, labeling");

  auto* c_scott = app.add_subcommand(
      "scott", "up-set topology of a partial order");
  c_scott->add_option("--relation", rel_path, "relation JSON file")
      ->required();

  auto* c_continuity = app.add_subcommand(
      "continuity", "check a partial function between finite spaces");
  c_continuity->add_option("--function", fn_path, "function JSON file")
      ->required();
  c_continuity
      ->add_option("--domain-topology", dom_path, "topology JSON file")
      ->required();
  c_continuity
      ->add_option("--codomain-topology", cod_path, "topology JSON file")
      ->required();

  auto* c_harness = app.add_subcommand(
      "harness", "instantiate an order-topological theorem and watch for "
                 "soundness alarms");
  c_harness->add_option("kind", harness_kind, "totality or closed-contours")
      ->required()
      ->check(CLI::IsMember({"totality", "closed-contours"}));
  c_harness->add_option("--relation", rel_path, "relation JSON file")
      ->required();
  c_harness->add_option("--topology", top_path, "topology JSON file")
      ->required();
  c_harness->add_option("--family", fam_path, "family JSON file")->required();

  auto* c_example =
      app.add_subcommand("example", "emit a named fixture structure");
  c_example->add_option("name", example_name, "fixture name")->required();
  c_example->add_option("--lo", lo, "window lower bound");
  c_example->add_option("--hi", hi, "window upper bound");
  c_example->add_option("--k", kparam, "chain truncation length");
  c_example->add_option("--format", format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));

  auto* c_trace = app.add_subcommand(
      "trace", "distributed-trace ingestion and clock reports");
  c_trace->require_subcommand(1);
  auto* c_ingest = c_trace->add_subcommand(
      "ingest", "happened-before order of a trace file");
  c_ingest->add_option("file", trace_path, "JSONL trace file")->required();
  c_ingest->add_option("--format", format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));
  auto* c_gen =
      c_trace->add_subcommand("gen", "deterministic random trace to stdout");
  c_gen->add_option("--procs", procs, "process count")->required();
  c_gen->add_option("--events", events, "event count")->required();
  c_gen->add_option("--msg-prob", msg_prob, "message probability per step");
  c_gen->add_option("--seed", seed, "random seed");
  auto* c_clocks = c_trace->add_subcommand(
      "clocks", "partial-clock family of a trace versus vector clocks");
  c_clocks->add_option("file", trace_path, "JSONL trace file")->required();
  c_clocks->add_option("--mode", clocks_mode, "chain cover mode")
      ->check(CLI::IsMember({"exact", "greedy"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_classify->parsed()) return run_classify(rel_path);
    if (c_axioms->parsed()) return run_axioms(rel_path);
    if (c_width->parsed()) return run_width(rel_path);
    if (c_labelings->parsed())
      return run_labelings(rel_path, count_only, cap);
    if (c_represent->parsed()) return run_represent(rel_path, kind, mode);
    if (c_verify->parsed()) return run_verify(rel_path, fam_path, kind);
    if (c_scott->parsed()) return run_scott(rel_path);
    if (c_continuity->parsed())
      return run_continuity(fn_path, dom_path, cod_path);
    if (c_harness->parsed())
      return run_harness(harness_kind, rel_path, top_path, fam_path);
    if (c_example->parsed()) {
      std::map<std::string, long long> params;
      if (c_example->count("--lo")) params["lo"] = lo;
      if (c_example->count("--hi")) params["hi"] = hi;
      if (c_example->count("--k")) params["k"] = kparam;
      return run_example(example_name, params, format);
    }
    if (c_ingest->parsed()) return run_trace_ingest(trace_path, format);
    if (c_gen->parsed()) return run_trace_gen(procs, events, msg_prob, seed);
    if (c_clocks->parsed()) return run_trace_clocks(trace_path, clocks_mode);
  } catch (const ordrep::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ordrep::UnknownLabel& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ordrep::UnknownExample& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ordrep::Error& e) {
    std::cout << io::document(io::error_to_json(e));
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  std::cerr << "error: no command selected\n";
  return 2;
}
