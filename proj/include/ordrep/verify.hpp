#pragma once

#include <string>
#include <vector>

#include "ordrep/partial_fn.hpp"
#include "ordrep/relation.hpp"

namespace ordrep {

// One failed clause at one ordered pair. clause is a stable identifier
// ("pmu-forall", "ss-reverse", ...), detail a human-readable explanation
// naming the function involved and its values.
struct Violation {
  int x = -1;
  int y = -1;
  std::string clause;
  std::string detail;
};

// ok ⟺ violations empty. Verifiers scan ordered pairs lexicographically by
// index and stop at the first failing clause, so a non-ok verdict carries
// exactly the lexicographically least witness.
struct Verdict {
  bool ok = true;
  std::vector<Violation> violations;
};

// Total multi-utility representation: x≾y ⟺ u(x)≤u(y) for every u.
// All ordered pairs including the diagonal are checked (a non-reflexive
// relation is correctly rejected, since the right side always holds at
// (x,x)). Throws PartialFunctionInTotalKind if any function is partial.
Verdict verify_multi_utility(const Relation& r, const ReprFamily& f);

// Multi-utility + Richter-Peleg condition: x≺y ⟹ u(x)<u(y) for every u.
Verdict verify_rp_multi_utility(const Relation& r, const ReprFamily& f);

// Partial multi-utility, full biconditional on ordered pairs x≠y:
//   x≾y ⟺ [∃u defined on both with u(x)≤u(y)]
//         ∧ [∀v defined on both, v(x)≤v(y)].
// Diagonal pairs are exempt so that elements in no domain (isolated points)
// do not trip the existence clause at (x,x).
Verdict verify_partial_mu(const Relation& r, const ReprFamily& f);

// Partial multi-utility + for every x≺y:
//   [∃u defined on both with u(x)<u(y)] ∧ [∀v defined on both, v(x)<v(y)].
Verdict verify_partial_rp_mu(const Relation& r, const ReprFamily& f);

// Single total utility with unit threshold: x≾y ⟺ u(x) ≤ u(y)+1.
// Throws PartialUtilityForSS if u is not total.
Verdict verify_ss(const Relation& r, const PartialFn& u);

// Partial threshold family with unit threshold; two biconditional clauses
// on ordered pairs x≠y:
//  (i)  x≾y ⟺ [∃u def. on both: u(x)≤u(y)+1] ∧ [∀v def. on both: v(x)≤v(y)+1]
//  (ii) x≺y ⟺ [∃u def. on both: u(x)+1<u(y)] ∧ [∀v def. on both: v(x)≤v(y)+1]
Verdict verify_partial_ss(const Relation& r, const ReprFamily& f);

// As verify_partial_ss but clause (ii) strengthens its universal part to
// v(x)+1 < v(y) for every v defined on both.
Verdict verify_partial_rpss(const Relation& r, const ReprFamily& f);

// Labeling of an n-element structure: u total, a bijection onto {1..n},
// and x⊏y ⟹ u(x)<u(y) on the strict part.
Verdict verify_labeling(const Relation& r, const PartialFn& u);

}  // namespace ordrep
