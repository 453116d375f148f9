#pragma once

#include <cstdint>
#include <vector>

#include "ordrep/partial_fn.hpp"
#include "ordrep/relation.hpp"

namespace ordrep {

inline constexpr int kEnumerationCap = 12;
inline constexpr int kCountCap = 20;

// Streams the labelings of a partial order: bijections u: X -> {1..n} with
// x⊏y ⟹ u(x)<u(y), i.e. the linear extensions, emitted depth-first picking
// the least-index minimal element first. Resumable (next() yields one
// result and keeps its backtracking state) and cancelable (drop it).
// Throws NotAPartialOrder / CapExceeded on construction.
class LabelingStream {
 public:
  explicit LabelingStream(const Relation& p, int cap = kEnumerationCap);

  // Fills order[k] with the element placed at position k (label k+1).
  // Returns false when exhausted.
  bool next(std::vector<int>& order);

 private:
  bool minimal_in_rest(int e) const;

  Relation p_;
  int n_;
  std::vector<int> choice_;
  std::vector<int> cursor_;
  std::uint32_t used_ = 0;
  int depth_ = 0;
  bool exhausted_ = false;
};

PartialFn labeling_from_order(const GroundSet& ground,
                              const std::vector<int>& order);

std::vector<PartialFn> enumerate_labelings(const Relation& p,
                                           int cap = kEnumerationCap);

// Exact count via dynamic programming over order ideals; handles larger n
// than enumeration since it never materializes the labelings.
unsigned long long count_labelings(const Relation& p, int cap = kCountCap);

}  // namespace ordrep
