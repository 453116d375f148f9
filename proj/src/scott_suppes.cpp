#include "ordrep/scott_suppes.hpp"

#include <vector>

#include "ordrep/errors.hpp"
#include "ordrep/order_ops.hpp"

namespace ordrep {

namespace {

struct EpsValue {
  Rational a;  // rational part
  Rational b;  // coefficient of the infinitesimal ε
  bool operator<(const EpsValue& o) const {
    if (!(a == o.a)) return a < o.a;
    return b < o.b;
  }
  EpsValue operator+(const EpsValue& o) const { return {a + o.a, b + o.b}; }
};

struct Edge {
  int from, to;
  EpsValue weight;
};

}  // namespace

BuildReport build_ss(const Relation& s) {
  const auto props = classify(s);
  if (!props.semiorder.holds) {
    std::vector<std::string> witness;
    for (int i : props.semiorder.counterexample)
      witness.push_back(s.ground().label(i));
    throw NotASemiorder("relation is not a semiorder", witness);
  }

  const int n = s.size();
  // Node n is a virtual source fixing a common reference point.
  std::vector<Edge> edges;
  for (int x = 0; x < n; ++x) edges.push_back({n, x, {Rational(0), Rational(0)}});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      if (s.lt(x, y))
        edges.push_back({y, x, {Rational(-1), Rational(-1)}});
      else if (s.equiv(x, y))
        edges.push_back({y, x, {Rational(1), Rational(0)}});
    }

  std::vector<EpsValue> dist(static_cast<std::size_t>(n) + 1,
                             {Rational(0), Rational(0)});
  std::vector<bool> reached(static_cast<std::size_t>(n) + 1, false);
  reached[n] = true;
  for (int round = 0; round <= n; ++round) {
    bool changed = false;
    for (const Edge& e : edges) {
      if (!reached[e.from]) continue;
      const EpsValue candidate = dist[e.from] + e.weight;
      if (!reached[e.to] || candidate < dist[e.to]) {
        if (round == n)
          throw Error("negative constraint cycle on a classified semiorder");
        dist[e.to] = candidate;
        reached[e.to] = true;
        changed = true;
      }
    }
    if (!changed) break;
  }

  const Rational eps(1, 2ll * n);
  BuildReport report;
  report.family.kind = ReprKind::ScottSuppes;
  PartialFn u(s.ground());
  for (int x = 0; x < n; ++x) u.set(x, dist[x].a + dist[x].b * eps);
  report.family.functions.push_back(std::move(u));
  report.optimal = true;
  return report;
}

}  // namespace ordrep
