#pragma once

#include <string>
#include <vector>

#include "ordrep/relation.hpp"

namespace ordrep {

// One classification flag. When holds is false, counterexample carries the
// lexicographically least witnessing tuple of element indices under the
// documented scan order for that property (see classify below).
struct Flag {
  bool holds = true;
  std::vector<int> counterexample;
};

// Full property report for a relation. Quadruple axioms are read as:
//   interval order axiom: (x≾z) ∧ (y≾w) ⟹ (x≾w) ∨ (y≾z)
//   semiorder axiom:      (x≾y) ∧ (y≾z) ⟹ (x≾w) ∨ (w≾z)
// interval_order = reflexive ∧ interval axiom; semiorder = interval_order ∧
// semiorder axiom. Counterexample tuples for the quadruple axioms are the
// lex-least (x, y, z, w) with the premise true and the conclusion false;
// quantifiers range over all quadruples including repeats (the repeats are
// what force totality, e.g. z=x, w=y).
struct PropertyReport {
  Flag reflexive;
  Flag irreflexive;
  Flag symmetric;
  Flag antisymmetric;
  Flag asymmetric;
  Flag total;
  Flag transitive;
  Flag preorder;       // reflexive ∧ transitive
  Flag partial_order;  // preorder ∧ antisymmetric
  Flag interval_order;
  Flag semiorder;
};

// Brute-force quantifier evaluation, O(n^4) worst case from the quadruple
// axioms; n is capped by the bit-matrix backend anyway.
PropertyReport classify(const Relation& r);

// Contour sets of x: lower l(x)={y:y≺x}, upper r(x)={z:x≺z},
// down d(x)={y:y≾x}, up i(x)={z:x≾z}. Indices sorted ascending.
struct Contours {
  std::vector<int> lower;
  std::vector<int> upper;
  std::vector<int> down;
  std::vector<int> up;
};
Contours contours(const Relation& r, int x);

// Elements comparable to no other element (diagonal ignored).
std::vector<int> isolated_points(const Relation& r);

// Quotient of a preorder by indifference. class_of maps element -> class
// index; members lists each class's elements ascending; classes are numbered
// by their least member. order is the induced partial order on classes, with
// class labels joined member names ("a|b"). Throws NotAPreorder.
struct QuotientResult {
  Relation order;
  std::vector<int> class_of;
  std::vector<std::vector<int>> members;
};
QuotientResult quotient(const Relation& r);

// Width of the quotient partial order (max antichain of classes) with a
// witness of representative elements (least member per class, ascending).
// Computed by chain-cover duality via bipartite matching; cross-checked by
// subset brute force when the quotient has at most 15 classes, in which case
// the witness is the lex-least maximum antichain. Throws NotAPreorder.
struct WidthResult {
  int width = 0;
  std::vector<int> witness;
};
WidthResult width(const Relation& r);

// Reflexive-preserving transitive closure (Floyd-Warshall over bit rows).
Relation transitive_closure(const Relation& r);

// Hasse diagram: cover pairs of the strict part, preserving any diagonal
// pairs present so that closure(reduction(P)) == closure(P). Requires the
// closure to relate no two distinct elements in both directions (a
// nontrivial indifference class is a ≾-cycle); throws CyclicStrictPart.
Relation transitive_reduction(const Relation& r);

// DOT rendering of the Hasse diagram of a preorder: nodes are indifference
// classes labeled "a|b", edges are quotient cover pairs, bottom-to-top.
std::string dot_hasse(const Relation& r);

}  // namespace ordrep
