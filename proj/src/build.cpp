#include "ordrep/build.hpp"

#include <algorithm>

#include "ordrep/errors.hpp"
#include "ordrep/labelings.hpp"
#include "ordrep/order_ops.hpp"
#include "ordrep/verify.hpp"

namespace ordrep {

const char* build_mode_name(BuildMode m) {
  return m == BuildMode::Exact ? "exact" : "greedy";
}

BuildMode build_mode_from_name(const std::string& name) {
  if (name == "exact") return BuildMode::Exact;
  if (name == "greedy") return BuildMode::Greedy;
  throw ParseError("unknown mode '" + name + "' (expected exact or greedy)");
}

ReprFamily build_indicator_mu(const Relation& r) {
  const auto props = classify(r);
  if (!props.preorder.holds)
    throw NotAPreorder("indicator construction requires a preorder");
  ReprFamily family{ReprKind::MultiUtility, {}};
  const int n = r.size();
  for (int x = 0; x < n; ++x) {
    PartialFn u(r.ground());
    for (int z = 0; z < n; ++z) u.set(z, Rational(r.leq(x, z) ? 1 : 0));
    family.functions.push_back(std::move(u));
  }
  return family;
}

ReprFamily build_labeling_rp_mu(const Relation& r, int cap) {
  const QuotientResult q = quotient(r);
  ReprFamily family{ReprKind::RpMultiUtility, {}};
  LabelingStream stream(q.order, cap);
  std::vector<int> order;
  while (stream.next(order)) {
    std::vector<Rational> value_of_class(order.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos)
      value_of_class[order[pos]] = Rational(static_cast<long long>(pos) + 1);
    PartialFn u(r.ground());
    for (int x = 0; x < r.size(); ++x) u.set(x, value_of_class[q.class_of[x]]);
    family.functions.push_back(std::move(u));
  }
  return family;
}

ReprFamily build_rp_combination(const Relation& r, const ReprFamily& base,
                                const PartialFn& f,
                                const std::vector<Rational>& alphas) {
  if (base.kind != ReprKind::MultiUtility && base.kind != ReprKind::PartialMu)
    throw PreconditionFailed(
        "base family must have kind mu or partial-mu, got " +
        std::string(repr_kind_name(base.kind)));
  ReprFamily as_partial{ReprKind::PartialMu, base.functions};
  const Verdict base_ok = verify_partial_mu(r, as_partial);
  if (!base_ok.ok)
    throw PreconditionFailed(
        "base family is not a partial multi-utility representation: clause " +
        base_ok.violations.front().clause + ", " +
        base_ok.violations.front().detail);
  if (!(f.ground() == r.ground()))
    throw PreconditionFailed(
        "combining function uses a different ground set than the relation");

  std::vector<bool> isolated(static_cast<std::size_t>(r.size()), false);
  for (int x : isolated_points(r)) isolated[x] = true;
  for (int x = 0; x < r.size(); ++x)
    if (!isolated[x] && !f.defined(x))
      throw PreconditionFailed(
          "combining function is undefined at non-isolated element " +
          r.ground().label(x));
  for (int x = 0; x < r.size(); ++x) {
    if (!f.defined(x)) continue;
    for (int y = 0; y < r.size(); ++y) {
      if (x == y || !f.defined(y)) continue;
      if (r.leq(x, y) && !(f.at(x) <= f.at(y)))
        throw PreconditionFailed("combining function is not order-preserving on (" +
                                 r.ground().label(x) + "," + r.ground().label(y) +
                                 ")");
      if (r.lt(x, y) && !(f.at(x) < f.at(y)))
        throw PreconditionFailed(
            "combining function is not Richter-Peleg on strict pair (" +
            r.ground().label(x) + "," + r.ground().label(y) + ")");
    }
  }

  ReprFamily out{ReprKind::PartialRpMu, {}};
  for (const PartialFn& v : base.functions)
    for (const Rational& a : alphas) out.functions.push_back(scale_add(v, f, a));
  return out;
}

namespace {

// All maximal chains of a finite partial order, as class-index sequences in
// depth-first lexicographic order. A maximal chain runs from a minimal to a
// maximal element along covering edges, so it is a maximal path in the
// Hasse diagram.
std::vector<std::vector<int>> maximal_chains(const Relation& hasse) {
  const int k = hasse.size();
  std::vector<std::vector<int>> succ(static_cast<std::size_t>(k));
  std::vector<bool> has_pred(static_cast<std::size_t>(k), false);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (a != b && hasse.leq(a, b)) {
        succ[a].push_back(b);
        has_pred[b] = true;
      }
  std::vector<std::vector<int>> chains;
  std::vector<int> path;
  constexpr std::size_t kChainCap = 100000;
  auto dfs = [&](auto&& self, int v) -> void {
    path.push_back(v);
    if (succ[v].empty()) {
      if (chains.size() >= kChainCap)
        throw CapExceeded("maximal chain enumeration exceeded " +
                          std::to_string(kChainCap) + " chains");
      chains.push_back(path);
    } else {
      for (int w : succ[v]) self(self, w);
    }
    path.pop_back();
  };
  for (int v = 0; v < k; ++v)
    if (!has_pred[v] && !succ[v].empty()) dfs(dfs, v);
  return chains;
}

// True when chain a precedes chain b under the greedy tie order:
// longer first, then lexicographically smaller sequence.
bool greedy_tie_before(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a < b;
}

std::vector<int> greedy_cover(const std::vector<std::vector<int>>& chains,
                              const std::vector<std::vector<int>>& covered_pairs,
                              std::size_t pair_count) {
  std::vector<int> picked;
  std::vector<bool> covered(pair_count, false);
  std::size_t remaining = pair_count;
  while (remaining) {
    int best = -1;
    int best_gain = 0;
    for (std::size_t c = 0; c < chains.size(); ++c) {
      int gain = 0;
      for (int p : covered_pairs[c]) gain += !covered[p];
      if (gain > best_gain ||
          (gain == best_gain && gain > 0 &&
           greedy_tie_before(chains[c], chains[best]))) {
        best = static_cast<int>(c);
        best_gain = gain;
      }
    }
    // Every strict pair extends to a maximal chain, so progress is certain.
    picked.push_back(best);
    for (int p : covered_pairs[best]) {
      remaining -= !covered[p];
      covered[p] = true;
    }
  }
  return picked;
}

struct CoverSearch {
  const std::vector<std::uint64_t>& coverage;
  std::vector<std::vector<int>> chains_covering;  // per pair index
  std::vector<int> best;
  std::vector<int> chosen;
  long long nodes = 0;

  void run(std::uint64_t uncovered) {
    ++nodes;
    if (!uncovered) {
      if (chosen.size() < best.size()) best = chosen;
      return;
    }
    int max_gain = 0;
    for (std::uint64_t c : coverage) {
      const int g = __builtin_popcountll(c & uncovered);
      max_gain = std::max(max_gain, g);
    }
    const int lower =
        (__builtin_popcountll(uncovered) + max_gain - 1) / max_gain;
    if (chosen.size() + static_cast<std::size_t>(lower) >= best.size()) return;
    // Branch on the uncovered pair with the fewest covering chains.
    int pick = -1;
    std::size_t fewest = ~std::size_t{0};
    for (std::size_t p = 0; p < chains_covering.size(); ++p) {
      if (!(uncovered >> p & 1)) continue;
      if (chains_covering[p].size() < fewest) {
        fewest = chains_covering[p].size();
        pick = static_cast<int>(p);
      }
    }
    for (int c : chains_covering[pick]) {
      chosen.push_back(c);
      run(uncovered & ~coverage[c]);
      chosen.pop_back();
    }
  }
};

}  // namespace

BuildReport build_minimal_partial_rp_mu(const Relation& r, BuildMode mode) {
  const QuotientResult q = quotient(r);
  const int k = q.order.size();

  // Universe of ordered strictly comparable class pairs.
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> pair_id(static_cast<std::size_t>(k) * k, -1);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (q.order.lt(a, b)) {
        pair_id[static_cast<std::size_t>(a) * k + b] =
            static_cast<int>(pairs.size());
        pairs.emplace_back(a, b);
      }

  BuildReport report;
  report.family.kind = ReprKind::PartialRpMu;
  std::vector<int> picked;
  std::vector<std::vector<int>> chains;

  if (!pairs.empty()) {
    if (mode == BuildMode::Exact && k > kExactCoverCap)
      throw CapExceeded("exact chain cover supports at most " +
                        std::to_string(kExactCoverCap) + " classes, got " +
                        std::to_string(k));
    chains = maximal_chains(transitive_reduction(q.order));
    std::vector<std::vector<int>> covered_pairs(chains.size());
    for (std::size_t c = 0; c < chains.size(); ++c)
      for (std::size_t i = 0; i < chains[c].size(); ++i)
        for (std::size_t j = i + 1; j < chains[c].size(); ++j)
          covered_pairs[c].push_back(
              pair_id[static_cast<std::size_t>(chains[c][i]) * k +
                      chains[c][j]]);

    picked = greedy_cover(chains, covered_pairs, pairs.size());
    report.stats.initial_bound = static_cast<int>(picked.size());
    if (mode == BuildMode::Exact) {
      // At most kExactCoverCap(kExactCoverCap-1)/2 = 45 pairs: one word.
      std::vector<std::uint64_t> coverage(chains.size(), 0);
      for (std::size_t c = 0; c < chains.size(); ++c)
        for (int p : covered_pairs[c]) coverage[c] |= 1ull << p;
      const std::uint64_t universe = (1ull << pairs.size()) - 1;
      CoverSearch search{coverage, {}, picked, {}, 0};
      search.chains_covering.resize(pairs.size());
      for (std::size_t c = 0; c < chains.size(); ++c)
        for (int p : covered_pairs[c])
          search.chains_covering[p].push_back(static_cast<int>(c));
      search.run(universe);
      picked = search.best;
      report.stats.nodes = search.nodes;
      report.optimal = true;
    } else {
      report.optimal = picked.size() <= 1;
    }
  } else {
    report.optimal = true;
  }

  std::vector<bool> touched(static_cast<std::size_t>(k), false);
  for (int c : picked) {
    const std::vector<int>& chain = chains[c];
    PartialFn u(r.ground());
    std::vector<std::string> chain_labels;
    for (std::size_t t = 0; t < chain.size(); ++t) {
      touched[chain[t]] = true;
      chain_labels.push_back(q.order.ground().label(chain[t]));
      for (int x : q.members[chain[t]])
        u.set(x, Rational(static_cast<long long>(t) + 1));
    }
    report.family.functions.push_back(std::move(u));
    report.chains.push_back(std::move(chain_labels));
  }
  // ∼-tied elements must still share a function; give each untouched
  // non-singleton class a constant one.
  for (int c = 0; c < k; ++c) {
    if (touched[c] || q.members[c].size() < 2) continue;
    PartialFn u(r.ground());
    for (int x : q.members[c]) u.set(x, Rational(1));
    report.family.functions.push_back(std::move(u));
  }
  return report;
}

}  // namespace ordrep
