#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ordrep/build.hpp"
#include "ordrep/relation.hpp"
#include "ordrep/verify.hpp"

namespace ordrep {

enum class EventKind { Local, Send, Receive };

struct TraceEvent {
  int proc = 0;
  long long seq = 0;
  EventKind kind = EventKind::Local;
  std::string msg;   // message id, send/receive only
  std::string name;  // element label; defaults to p<proc>.<seq>
};

// A recorded distributed execution. Process ids are 0-based; the process
// count is max id + 1. Within one process, later file lines must carry
// strictly larger sequence numbers. A receive may appear before its send in
// the file; logical order is recovered from the causal edges. Events keep
// their file order here; derived relations order them by (proc, seq).
struct Trace {
  int processes = 0;
  std::vector<TraceEvent> events;
};

// Line-oriented JSON: one object per line with fields
//   {"proc":0,"seq":1,"kind":"local|send|recv","msg":"m1","name":"a1"}
// msg is required exactly for send/recv; name is optional. Blank lines are
// skipped. Throws ParseError on malformed lines.
Trace parse_trace(std::istream& in);
std::string serialize_trace(const Trace& t);

// Causal (happened-before) order: reflexive-transitive closure of program
// order plus send ≺ receive per message id. The result is a partial order
// on the events, ordered by (proc, seq) in the ground set. Throws
// DanglingReceive (receive without matching send), DuplicateMessageId (two
// sends or two receives sharing an id), CausalCycle.
Relation happened_before(const Trace& t);

struct ClockReport {
  Relation hb;
  BuildReport build;       // minimal partial rp-mu of the causal order
  int processes = 0;       // vector-clock component count for comparison
  int function_count = 0;  // partial functions in the family
  int poset_width = 0;
  Verdict verdict;         // the family re-verified against hb
};

ClockReport clock_report(const Trace& t, BuildMode mode);

// Deterministic random trace: each step picks a process, then delivers a
// pending message, sends a new one (probability msg_prob each), or runs a
// local step. Identical arguments give byte-identical traces.
Trace generate_trace(int processes, int events, double msg_prob,
                     std::uint64_t seed);

}  // namespace ordrep
