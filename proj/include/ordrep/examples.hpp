#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordrep/partial_fn.hpp"
#include "ordrep/relation.hpp"
#include "ordrep/topology.hpp"

namespace ordrep {

struct ExampleBundle {
  ExampleBundle(std::string n, Relation r)
      : name(std::move(n)), relation(std::move(r)) {}

  std::string name;
  Relation relation;
  std::optional<ReprFamily> family;
  std::vector<std::pair<std::string, FiniteTopology>> topologies;
};

// Named fixture structures used throughout the test suites:
//   fence4            the 4-element poset {x1⊏x2⊏x4, x3⊏x4} with its
//                     two-function partial-rp-mu family
//   chain2_isolated   {x1⊏x2} plus an isolated x3, one-function family
//   esemiz_window     threshold relation n≾m ⟺ n≤m+1 on integers lo..hi
//                     (params "lo","hi", defaults 0..5) with the mod-3
//                     three-function partial-rp-mu family
//   eseq_truncation   the chain 1 ≺ 1/2 ≺ … ≺ 1/k ≺ 0 (param "k",
//                     default 3) with its two-function partial-ss family
//   e05               fence4 plus the topologies tau1 and tau2
// Unknown names throw UnknownExample; out-of-range params CapExceeded or
// PreconditionFailed.
ExampleBundle generate_example(const std::string& name,
                               const std::map<std::string, long long>& params = {});

// Names accepted by generate_example, for usage messages.
std::vector<std::string> example_names();

}  // namespace ordrep
