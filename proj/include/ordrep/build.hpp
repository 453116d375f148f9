#pragma once

#include <string>
#include <vector>

#include "ordrep/partial_fn.hpp"
#include "ordrep/rational.hpp"
#include "ordrep/relation.hpp"

namespace ordrep {

inline constexpr int kExactCoverCap = 10;  // quotient classes, exact mode

enum class BuildMode { Exact, Greedy };

const char* build_mode_name(BuildMode m);
BuildMode build_mode_from_name(const std::string& name);

struct SearchStats {
  long long nodes = 0;     // branch-and-bound nodes explored (exact mode)
  int initial_bound = 0;   // greedy solution size used as the starting bound
};

struct BuildReport {
  ReprFamily family;
  bool optimal = false;
  SearchStats stats;
  // Chain domains behind each chain function, as sequences of quotient
  // class labels, in the same order as the corresponding functions.
  std::vector<std::vector<std::string>> chains;
};

// One 0/1 indicator function per element: u_x(z) = 1 iff x ≾ z. A
// multi-utility representation of any preorder. Throws NotAPreorder.
ReprFamily build_indicator_mu(const Relation& r);

// All labelings of the quotient, lifted to the carrier constant on each
// ∼-class: a Richter-Peleg multi-utility made of total functions (the
// intersection of the linear extensions of a partial order is the order
// itself). Throws NotAPreorder, CapExceeded via labeling enumeration.
ReprFamily build_labeling_rp_mu(const Relation& r, int cap = 12);

// {v + α·f : v ∈ base, α ∈ alphas}, tagged partial-rp-mu. Validates the
// hypotheses: base verifies as a partial multi-utility, and f is defined
// everywhere outside the isolated points and strictly order-preserving on
// its domain. Throws PreconditionFailed naming the violated hypothesis,
// NonPositiveAlpha.
ReprFamily build_rp_combination(const Relation& r, const ReprFamily& base,
                                const PartialFn& f,
                                const std::vector<Rational>& alphas);

// Minimal partial Richter-Peleg multi-utility with chain-shaped domains:
// covers every strictly comparable pair of quotient classes with ≺-chains
// (exact: branch-and-bound over maximal chains; greedy: most uncovered
// pairs first, ties to the longer then lexicographically least chain), one
// strictly increasing function per chain, constant on each ∼-class, plus
// one constant function per non-singleton class no chain touches. Elements
// left outside every domain are exactly the isolated points. Throws
// NotAPreorder; exact mode throws CapExceeded above kExactCoverCap classes.
BuildReport build_minimal_partial_rp_mu(const Relation& r, BuildMode mode);

}  // namespace ordrep
