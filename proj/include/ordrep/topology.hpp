#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ordrep/partial_fn.hpp"
#include "ordrep/relation.hpp"
#include "ordrep/verify.hpp"

namespace ordrep {

inline constexpr int kMaxTopologyElements = 16;

// A topology on a ground set of at most kMaxTopologyElements elements,
// stored as the full (finite) family of open sets encoded as bitmasks.
// Always contains the empty set and the whole set and is closed under
// union and intersection; the constructor rejects families that are not.
class FiniteTopology {
 public:
  FiniteTopology(GroundSet ground, std::vector<std::uint64_t> opens);

  // Generates the smallest topology containing the given sets.
  static FiniteTopology generate(GroundSet ground,
                                 const std::vector<std::uint64_t>& basis);

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  std::uint64_t full_mask() const;
  const std::vector<std::uint64_t>& opens() const { return opens_; }

  bool is_open(std::uint64_t s) const;
  bool is_closed(std::uint64_t s) const;
  // Intersection of all opens containing x: the least open neighborhood,
  // which exists because the family is finite and intersection-closed.
  std::uint64_t minimal_neighborhood(int x) const;

  bool operator==(const FiniteTopology& o) const {
    return ground_ == o.ground_ && opens_ == o.opens_;
  }

 private:
  GroundSet ground_;
  std::vector<std::uint64_t> opens_;  // sorted ascending, deduplicated
};

// Topology of all up-sets of a partial order, generated by the principal
// up-sets {y : x ⊑ y}. Throws NotAPartialOrder.
FiniteTopology scott_topology(const Relation& p);

// Same construction for an arbitrary preorder (up-sets of a preorder also
// form a topology); used by sweeps that feed non-antisymmetric relations.
FiniteTopology upset_topology(const Relation& r);

// True iff no proper nonempty subset is both open and closed.
bool is_connected(const FiniteTopology& t);

// Continuity of a partial function f between topological spaces: the
// preimage of every open of ty must be open in the subspace topology that
// tx induces on domain(f). Values of f are matched to elements of ty's
// ground set by their canonical rational rendering.
Verdict is_continuous(const PartialFn& f, const FiniteTopology& tx,
                      const FiniteTopology& ty);

// ok iff for every x both d(x) = {y : y ≾ x} and i(x) = {y : x ≾ y} are
// closed in t. Throws NotAPreorder.
Verdict check_regular_preorder(const Relation& r, const FiniteTopology& t);

// ok iff every strict contour l(x) = {y : y ≺ x} and r(x) = {y : x ≺ y}
// is an open set of t. Throws NotAPreorder.
Verdict check_contour_openness(const Relation& r, const FiniteTopology& t);

struct HypothesisCheck {
  std::string name;
  bool holds;
  std::string detail;  // nonempty when holds is false
};

// Outcome of instantiating one of the order-topological theorems on a
// concrete finite instance. "alarm" means every hypothesis held yet the
// conclusion failed — i.e. a soundness bug somewhere — and is asserted
// never to happen by the property suites.
struct HarnessReport {
  std::string harness;      // "totality" or "closed-contours"
  std::vector<HypothesisCheck> hypotheses;
  bool applicable;          // all hypotheses hold
  std::string conclusion;   // human statement of what is asserted
  bool conclusion_holds;    // meaningful only when applicable
  bool alarm;               // applicable && !conclusion_holds
  std::string outcome;      // "pass" | "alarm" | "hypotheses-not-met"
};

// Theorem: a preorder with no isolated points on a connected space,
// admitting a verified family of continuous partial functions with closed
// domains (kind partial-rp-mu), is total.
//
// Continuity of a rational-valued function on a finite instance means
// continuity into its value set carrying the topology inherited from the
// rational line — which is discrete for a finite value set — i.e. the
// function is locally constant on the subspace topology of its domain.
// Closedness of each domain is checked as an explicit hypothesis: with
// partially defined functions, local constancy alone does not constrain
// points outside the domain, and the conclusion genuinely needs it.
HarnessReport totality_harness(const Relation& r, const FiniteTopology& t,
                               const ReprFamily& f);

// Theorem: a preorder with no isolated points admitting a verified family
// of continuous partial functions with closed domains (kind partial-mu)
// has every d(x) and i(x) closed. Connectedness is not needed here.
HarnessReport closed_contours_harness(const Relation& r,
                                      const FiniteTopology& t,
                                      const ReprFamily& f);

}  // namespace ordrep
