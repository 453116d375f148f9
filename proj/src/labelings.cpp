#include "ordrep/labelings.hpp"

#include <unordered_map>

#include "ordrep/errors.hpp"
#include "ordrep/order_ops.hpp"

namespace ordrep {

namespace {

void require_partial_order(const Relation& p) {
  const int n = p.size();
  for (int i = 0; i < n; ++i)
    if (!p.leq(i, i)) throw NotAPartialOrder("relation is not reflexive");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && p.leq(i, j) && p.leq(j, i))
        throw NotAPartialOrder("relation is not antisymmetric: " +
                               p.ground().label(i) + " and " +
                               p.ground().label(j) +
                               " are related both ways");
  if (!(transitive_closure(p) == p))
    throw NotAPartialOrder("relation is not transitive");
}

}  // namespace

LabelingStream::LabelingStream(const Relation& p, int cap)
    : p_(p), n_(p.size()) {
  require_partial_order(p_);
  if (n_ > cap)
    throw CapExceeded("labeling enumeration supports at most " +
                      std::to_string(cap) + " elements, got " +
                      std::to_string(n_));
  choice_.assign(static_cast<std::size_t>(n_), -1);
  cursor_.assign(static_cast<std::size_t>(n_) + 1, 0);
}

bool LabelingStream::minimal_in_rest(int e) const {
  if (used_ & (1u << e)) return false;
  for (int q = 0; q < n_; ++q)
    if (q != e && p_.lt(q, e) && !(used_ & (1u << q))) return false;
  return true;
}

bool LabelingStream::next(std::vector<int>& order) {
  if (exhausted_) return false;
  while (true) {
    if (depth_ == n_) {
      order.assign(choice_.begin(), choice_.end());
      // Arrange to resume by backtracking off the full assignment.
      --depth_;
      used_ &= ~(1u << choice_[depth_]);
      cursor_[depth_] = choice_[depth_] + 1;
      return true;
    }
    int e = cursor_[depth_];
    while (e < n_ && !minimal_in_rest(e)) ++e;
    if (e < n_) {
      choice_[depth_] = e;
      used_ |= 1u << e;
      ++depth_;
      cursor_[depth_] = 0;
    } else {
      if (depth_ == 0) {
        exhausted_ = true;
        return false;
      }
      --depth_;
      used_ &= ~(1u << choice_[depth_]);
      cursor_[depth_] = choice_[depth_] + 1;
    }
  }
}

PartialFn labeling_from_order(const GroundSet& ground,
                              const std::vector<int>& order) {
  PartialFn u(ground);
  for (std::size_t k = 0; k < order.size(); ++k)
    u.set(order[k], Rational(static_cast<long long>(k) + 1));
  return u;
}

std::vector<PartialFn> enumerate_labelings(const Relation& p, int cap) {
  LabelingStream stream(p, cap);
  std::vector<PartialFn> out;
  std::vector<int> order;
  while (stream.next(order)) out.push_back(labeling_from_order(p.ground(), order));
  return out;
}

unsigned long long count_labelings(const Relation& p, int cap) {
  require_partial_order(p);
  const int n = p.size();
  if (n > cap)
    throw CapExceeded("labeling counting supports at most " +
                      std::to_string(cap) + " elements, got " +
                      std::to_string(n));
  // preds[e] as a bitmask of strict predecessors; e is placeable once all
  // of its predecessors already hold a smaller label.
  std::vector<std::uint32_t> preds(static_cast<std::size_t>(n), 0);
  for (int e = 0; e < n; ++e)
    for (int q = 0; q < n; ++q)
      if (q != e && p.lt(q, e)) preds[e] |= 1u << q;
  std::unordered_map<std::uint32_t, unsigned long long> memo;
  memo.reserve(1u << std::min(n, 20));
  const std::uint32_t full = (n == 32) ? 0xffffffffu : ((1u << n) - 1u);
  // Iterative DP over ideals in increasing popcount order would need all
  // 2^n masks; recurse instead so only reachable ideals are touched.
  struct Rec {
    int n;
    const std::vector<std::uint32_t>& preds;
    std::uint32_t full;
    std::unordered_map<std::uint32_t, unsigned long long>& memo;
    unsigned long long run(std::uint32_t used) {
      if (used == full) return 1;
      auto it = memo.find(used);
      if (it != memo.end()) return it->second;
      unsigned long long total = 0;
      for (int e = 0; e < n; ++e) {
        if (used & (1u << e)) continue;
        if ((preds[e] & ~used) != 0) continue;
        total += run(used | (1u << e));
      }
      memo.emplace(used, total);
      return total;
    }
  } rec{n, preds, full, memo};
  return rec.run(0);
}

}  // namespace ordrep
