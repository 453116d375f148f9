#include "ordrep/trace.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <random>
#include <sstream>

#include "json.hpp"

#include "ordrep/errors.hpp"
#include "ordrep/order_ops.hpp"

namespace ordrep {

namespace {

const char* kind_name(EventKind k) {
  switch (k) {
    case EventKind::Local: return "local";
    case EventKind::Send: return "send";
    case EventKind::Receive: return "recv";
  }
  return "local";
}

EventKind kind_from_name(const std::string& s) {
  if (s == "local") return EventKind::Local;
  if (s == "send") return EventKind::Send;
  if (s == "recv") return EventKind::Receive;
  throw ParseError("unknown event kind '" + s + "' (expected local|send|recv)");
}

std::string default_name(const TraceEvent& e) {
  return "p" + std::to_string(e.proc) + "." + std::to_string(e.seq);
}

}  // namespace

Trace parse_trace(std::istream& in) {
  Trace t;
  std::map<int, long long> last_seq;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("trace line " + std::to_string(lineno) + ": " + e.what());
    }
    const auto fail = [&](const std::string& msg) -> ParseError {
      return ParseError("trace line " + std::to_string(lineno) + ": " + msg);
    };
    if (!j.is_object()) throw fail("expected a JSON object");
    TraceEvent e;
    if (!j.contains("proc") || !j["proc"].is_number_integer())
      throw fail("missing integer field 'proc'");
    e.proc = j["proc"].get<int>();
    if (e.proc < 0) throw fail("'proc' must be non-negative");
    if (!j.contains("seq") || !j["seq"].is_number_integer())
      throw fail("missing integer field 'seq'");
    e.seq = j["seq"].get<long long>();
    if (!j.contains("kind") || !j["kind"].is_string())
      throw fail("missing string field 'kind'");
    e.kind = kind_from_name(j["kind"].get<std::string>());
    if (e.kind == EventKind::Local) {
      if (j.contains("msg")) throw fail("local events must not carry 'msg'");
    } else {
      if (!j.contains("msg") || !j["msg"].is_string())
        throw fail("send/recv events require string field 'msg'");
      e.msg = j["msg"].get<std::string>();
    }
    if (j.contains("name")) {
      if (!j["name"].is_string()) throw fail("'name' must be a string");
      e.name = j["name"].get<std::string>();
    }
    if (e.name.empty()) e.name = default_name(e);
    auto it = last_seq.find(e.proc);
    if (it != last_seq.end() && e.seq <= it->second)
      throw fail("sequence numbers of process " + std::to_string(e.proc) +
                 " are not strictly increasing");
    last_seq[e.proc] = e.seq;
    t.processes = std::max(t.processes, e.proc + 1);
    t.events.push_back(std::move(e));
  }
  return t;
}

std::string serialize_trace(const Trace& t) {
  std::string out;
  for (const TraceEvent& e : t.events) {
    nlohmann::ordered_json j;
    j["proc"] = e.proc;
    j["seq"] = e.seq;
    j["kind"] = kind_name(e.kind);
    if (e.kind != EventKind::Local) j["msg"] = e.msg;
    if (!e.name.empty() && e.name != default_name(e)) j["name"] = e.name;
    out += j.dump();
    out += "\n";
  }
  return out;
}

Relation happened_before(const Trace& t) {
  const int n = static_cast<int>(t.events.size());
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const TraceEvent &ea = t.events[a], &eb = t.events[b];
    if (ea.proc != eb.proc) return ea.proc < eb.proc;
    return ea.seq < eb.seq;
  });
  std::vector<std::string> labels;
  std::vector<int> pos_of_event(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) {
    labels.push_back(t.events[order[p]].name);
    pos_of_event[order[p]] = p;
  }

  // Covering edges: program order between (proc, seq)-consecutive events
  // plus one edge per message.
  std::vector<std::pair<int, int>> edges;
  for (int p = 0; p + 1 < n; ++p)
    if (t.events[order[p]].proc == t.events[order[p + 1]].proc)
      edges.emplace_back(p, p + 1);
  std::map<std::string, int> send_of, recv_of;
  for (int i = 0; i < n; ++i) {
    const TraceEvent& e = t.events[i];
    if (e.kind == EventKind::Send) {
      if (!send_of.emplace(e.msg, i).second)
        throw DuplicateMessageId("message '" + e.msg + "' is sent twice");
    } else if (e.kind == EventKind::Receive) {
      if (!recv_of.emplace(e.msg, i).second)
        throw DuplicateMessageId("message '" + e.msg + "' is received twice");
    }
  }
  for (const auto& [msg, ri] : recv_of) {
    auto it = send_of.find(msg);
    if (it == send_of.end())
      throw DanglingReceive("message '" + msg + "' is received but never sent");
    edges.emplace_back(pos_of_event[it->second], pos_of_event[ri]);
  }

  // Kahn topological check before closing: causal edges must form a DAG.
  std::vector<std::vector<int>> succ(static_cast<std::size_t>(n));
  std::vector<int> indeg(static_cast<std::size_t>(n), 0);
  for (const auto& [a, b] : edges) {
    succ[a].push_back(b);
    ++indeg[b];
  }
  std::vector<int> queue;
  for (int p = 0; p < n; ++p)
    if (indeg[p] == 0) queue.push_back(p);
  std::size_t done = 0;
  while (done < queue.size()) {
    const int v = queue[done++];
    for (int w : succ[v])
      if (--indeg[w] == 0) queue.push_back(w);
  }
  if (done < static_cast<std::size_t>(n))
    throw CausalCycle("the trace's causal edges form a cycle");

  Relation r{GroundSet(labels)};
  for (int p = 0; p < n; ++p) r.add(p, p);
  for (const auto& [a, b] : edges) r.add(a, b);
  return transitive_closure(r);
}

ClockReport clock_report(const Trace& t, BuildMode mode) {
  ClockReport report{happened_before(t),
                     BuildReport{ReprFamily{ReprKind::PartialRpMu, {}}, false,
                                 SearchStats{}, {}},
                     t.processes, 0, 0, Verdict{}};
  report.build = build_minimal_partial_rp_mu(report.hb, mode);
  report.function_count = static_cast<int>(report.build.family.functions.size());
  report.poset_width = width(report.hb).width;
  report.verdict = verify_partial_rp_mu(report.hb, report.build.family);
  return report;
}

Trace generate_trace(int processes, int events, double msg_prob,
                     std::uint64_t seed) {
  if (processes < 1) throw PreconditionFailed("need at least one process");
  if (events < 0) throw PreconditionFailed("event count must be non-negative");
  if (!(msg_prob >= 0.0 && msg_prob <= 1.0))
    throw PreconditionFailed("msg-prob must lie in [0,1]");
  std::mt19937_64 rng(seed);
  // Fixed-point threshold instead of a distribution: identical across
  // platforms for the same seed.
  const std::uint64_t threshold =
      static_cast<std::uint64_t>(msg_prob * 4294967296.0);
  const auto coin = [&] { return (rng() & 0xffffffffull) < threshold; };

  Trace t;
  t.processes = processes;
  std::vector<long long> next_seq(static_cast<std::size_t>(processes), 1);
  struct Pending {
    std::string msg;
    int sender;
  };
  std::vector<Pending> in_flight;
  int msg_counter = 0;
  for (int i = 0; i < events; ++i) {
    const int proc = static_cast<int>(rng() % static_cast<std::uint64_t>(processes));
    TraceEvent e;
    e.proc = proc;
    e.seq = next_seq[proc]++;
    std::size_t deliverable = in_flight.size();
    for (std::size_t k = 0; k < in_flight.size(); ++k)
      if (in_flight[k].sender != proc) {
        deliverable = k;
        break;
      }
    if (deliverable < in_flight.size() && coin()) {
      e.kind = EventKind::Receive;
      e.msg = in_flight[deliverable].msg;
      in_flight.erase(in_flight.begin() + static_cast<long>(deliverable));
    } else if (coin()) {
      e.kind = EventKind::Send;
      e.msg = "m" + std::to_string(++msg_counter);
      in_flight.push_back({e.msg, proc});
    } else {
      e.kind = EventKind::Local;
    }
    e.name = default_name(e);
    t.events.push_back(std::move(e));
  }
  return t;
}

}  // namespace ordrep
