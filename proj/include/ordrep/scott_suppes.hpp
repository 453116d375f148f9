#pragma once

#include "ordrep/build.hpp"
#include "ordrep/relation.hpp"

namespace ordrep {

// Builds a threshold-1 utility for a semiorder: a total u with
// x ≾ y ⟺ u(x) ≤ u(y)+1. Solves the difference-constraint system
//   x ≺ y  ⟹  u(x) − u(y) ≤ −(1+ε)
//   x ∼ y  ⟹  u(x) − u(y) ≤ 1 and u(y) − u(x) ≤ 1
// by single-source shortest paths over values of the form a + b·ε with ε a
// symbolic positive infinitesimal (lexicographic comparison), then
// instantiates ε = 1/(2n). Any shortest path uses fewer than 2n unit
// ε-coefficients, so the instantiation preserves every comparison the
// symbolic solution satisfies strictly.
//
// Throws NotASemiorder (carrying the lex-least witness tuple) when the
// input fails the semiorder axioms; a negative constraint cycle on a
// classified semiorder cannot happen and raises a plain Error.
BuildReport build_ss(const Relation& s);

}  // namespace ordrep
