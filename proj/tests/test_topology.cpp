#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "ordrep/build.hpp"
#include "ordrep/examples.hpp"
#include "ordrep/order_ops.hpp"
#include "ordrep/topology.hpp"
#include "ordrep/verify.hpp"
#include "test_support.hpp"

using namespace ordrep;
using test_support::ground_of;

namespace {

// Fixpoint closure under pairwise union and intersection, plus ∅ and X:
// an independent oracle for topology generation.
std::vector<std::uint64_t> closure_oracle(int n,
                                          std::vector<std::uint64_t> sets) {
  std::set<std::uint64_t> family(sets.begin(), sets.end());
  family.insert(0);
  family.insert((1ull << n) - 1);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::uint64_t> now(family.begin(), family.end());
    for (std::uint64_t a : now)
      for (std::uint64_t b : now) {
        if (family.insert(a | b).second) grew = true;
        if (family.insert(a & b).second) grew = true;
      }
  }
  return {family.begin(), family.end()};
}

Relation value_chain(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  Relation r{GroundSet(names)};
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) r.add(i, j);
  return r;
}

std::uint64_t mask_of(const GroundSet& g,
                      const std::vector<std::string>& labels) {
  std::uint64_t m = 0;
  for (const auto& l : labels) m |= 1ull << g.index(l);
  return m;
}

const HypothesisCheck& hypothesis(const HarnessReport& rep,
                                  const std::string& name) {
  for (const auto& h : rep.hypotheses)
    if (h.name == name) return h;
  REQUIRE_MESSAGE(false, "hypothesis not found: " << name);
  static HypothesisCheck dummy;
  return dummy;
}

}  // namespace

TEST_CASE("topology constructor validates closure and caps") {
  GroundSet g({"a", "b", "c"});
  // Sierpiński-like: fine.
  FiniteTopology ok(g, {0b001, 0b011});
  CHECK(ok.opens().size() == 4);  // with ∅ and X
  CHECK(ok.is_open(0b001));
  CHECK(!ok.is_open(0b010));
  CHECK(ok.is_closed(0b110));

  // {a} and {b} without their union is rejected, naming the missing set.
  try {
    FiniteTopology bad(g, {0b001, 0b010});
    FAIL("union-incomplete family accepted");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("{a,b}") != std::string::npos);
  }

  CHECK_THROWS_AS(FiniteTopology(g, {0b1000}), ParseError);  // out of range
  CHECK_THROWS_AS(FiniteTopology(ground_of(kMaxTopologyElements + 1), {}),
                  CapExceeded);
}

TEST_CASE("generated topology equals the closure oracle") {
  std::mt19937_64 rng(51);
  for (int round = 0; round < 300; ++round) {
    const int n = 1 + round % 5;
    const std::uint64_t full = (1ull << n) - 1;
    std::vector<std::uint64_t> basis;
    const int count = static_cast<int>(rng() % 4);
    for (int i = 0; i < count; ++i) basis.push_back(rng() & full);
    const FiniteTopology t = FiniteTopology::generate(ground_of(n), basis);
    CHECK(t.opens() == closure_oracle(n, basis));
    // And the constructor accepts its own output.
    const FiniteTopology again(ground_of(n), t.opens());
    CHECK(again == t);
  }
}

TEST_CASE("up-set topology opens are exactly the up-sets") {
  std::mt19937_64 rng(52);
  for (int round = 0; round < 200; ++round) {
    const int n = 1 + round % 6;
    Relation r = round % 2 ? test_support::random_poset(n, rng)
                           : test_support::random_preorder(n, rng);
    const FiniteTopology t = upset_topology(r);
    for (std::uint64_t s = 0; s < (1ull << n); ++s) {
      bool upset = true;
      for (int x = 0; x < n && upset; ++x)
        for (int y = 0; y < n; ++y)
          if ((s >> x & 1) && r.leq(x, y) && !(s >> y & 1)) {
            upset = false;
            break;
          }
      CHECK(t.is_open(s) == upset);
    }
  }
}

TEST_CASE("Scott topology requires antisymmetry") {
  Relation tied = Relation::from_pairs(ground_of(2), {{0, 1}, {1, 0}}, true);
  CHECK_THROWS_AS(scott_topology(tied), NotAPartialOrder);
  CHECK(upset_topology(tied).opens().size() == 2);  // only ∅ and X
  Relation loose = Relation::from_pairs(ground_of(3), {{0, 1}, {1, 2}}, true);
  CHECK_THROWS_AS(scott_topology(loose), NotAPartialOrder);  // not transitive
}

TEST_CASE("minimal neighborhoods") {
  std::mt19937_64 rng(53);
  for (int round = 0; round < 100; ++round) {
    const int n = 1 + round % 5;
    Relation p = test_support::random_poset(n, rng);
    const FiniteTopology t = scott_topology(p);
    for (int x = 0; x < n; ++x) {
      const std::uint64_t nb = t.minimal_neighborhood(x);
      // In the up-set topology the least neighborhood of x is its
      // principal up-set.
      std::uint64_t up = 0;
      for (int y = 0; y < n; ++y)
        if (p.leq(x, y)) up |= 1ull << y;
      CHECK(nb == up);
      CHECK(t.is_open(nb));
      for (std::uint64_t o : t.opens())
        if (o >> x & 1) CHECK((nb & ~o) == 0);
    }
  }
}

TEST_CASE("connectedness") {
  GroundSet g2 = ground_of(2);
  CHECK(is_connected(FiniteTopology(g2, {})));            // indiscrete
  CHECK(!is_connected(FiniteTopology(g2, {0b01, 0b10}))); // discrete
  CHECK(is_connected(FiniteTopology(g2, {0b01})));        // Sierpiński

  // The up-set topology of a poset is connected iff the comparability
  // graph is connected.
  const ExampleBundle b = generate_example("fence4");
  CHECK(is_connected(scott_topology(b.relation)));
  Relation split = Relation::from_pairs(ground_of(4), {{0, 1}, {2, 3}}, true);
  CHECK(!is_connected(scott_topology(split)));
}

TEST_CASE("continuity between explicit spaces") {
  // Identity-like map from Sierpiński to Sierpiński.
  GroundSet g({"a", "b"});
  FiniteTopology sier(g, {0b01});
  Relation chain2 = value_chain(2);
  const FiniteTopology ty = scott_topology(chain2);
  PartialFn f{g};
  f.set(0, Rational(1));
  f.set(1, Rational(2));
  // Preimage of {"2"} (open ray) is {b}: not open in sier.
  CHECK(!is_continuous(f, sier, ty).ok);
  PartialFn rev{g};
  rev.set(0, Rational(2));
  rev.set(1, Rational(1));
  // Preimage of {"2"} is {a}: open. Continuous.
  CHECK(is_continuous(rev, sier, ty).ok);
  // A value with no matching codomain element is an unknown label.
  PartialFn out{g};
  out.set(0, Rational(7));
  CHECK_THROWS_AS(is_continuous(out, sier, ty), UnknownLabel);
  // Ground mismatch between function and domain space.
  PartialFn other{ground_of(3)};
  CHECK_THROWS_AS(is_continuous(other, sier, ty), ParseError);
}

TEST_CASE("partial functions are continuous relative to their domain") {
  // u defined on {a}: every preimage is ∅ or {a}; the subspace of the
  // indiscrete topology on {a,b} has opens {∅, {a}}. Continuous even
  // though {a} is not open in the whole space.
  GroundSet g({"a", "b"});
  FiniteTopology indiscrete(g, {});
  PartialFn u{g};
  u.set(0, Rational(1));
  CHECK(is_continuous(u, indiscrete, scott_topology(value_chain(1))).ok);
}

TEST_CASE("labelings are exactly the Scott-to-Scott continuous bijections") {
  std::mt19937_64 rng(54);
  for (int round = 0; round < 120; ++round) {
    const int n = 1 + round % 4;
    Relation p = test_support::random_poset(n, rng);
    const FiniteTopology tx = scott_topology(p);
    const FiniteTopology ty = scott_topology(value_chain(n));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      PartialFn u{p.ground()};
      for (int x = 0; x < n; ++x) u.set(x, Rational(perm[x] + 1));
      const bool labeling = verify_labeling(p, u).ok;
      const bool continuous = is_continuous(u, tx, ty).ok;
      CHECK(labeling == continuous);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("contour closedness and openness checks") {
  Relation chain2 = Relation::from_pairs(GroundSet({"a", "b"}), {{0, 1}},
                                         true);
  const GroundSet g = chain2.ground();

  SUBCASE("discrete topology satisfies both") {
    FiniteTopology disc(g, {0b01, 0b10});
    CHECK(check_regular_preorder(chain2, disc).ok);
    CHECK(check_contour_openness(chain2, disc).ok);
  }
  SUBCASE("indiscrete topology fails both with named witnesses") {
    FiniteTopology indisc(g, {});
    const Verdict reg = check_regular_preorder(chain2, indisc);
    REQUIRE(!reg.ok);
    CHECK(reg.violations[0].clause == "d-closed");
    CHECK(reg.violations[0].x == 0);
    const Verdict open = check_contour_openness(chain2, indisc);
    REQUIRE(!open.ok);
    CHECK(open.violations[0].clause == "r-open");
    CHECK(open.violations[0].x == 0);
  }
  SUBCASE("up-set topology of a chain fails regularity at i(b)") {
    const Verdict reg = check_regular_preorder(chain2, upset_topology(chain2));
    REQUIRE(!reg.ok);
    CHECK(reg.violations[0].clause == "i-closed");
    CHECK(g.label(reg.violations[0].x) == "b");
  }
  SUBCASE("equivalence classes give clopen contours") {
    Relation eq = Relation::from_pairs(ground_of(3), {{0, 1}, {1, 0}}, true);
    const FiniteTopology t = upset_topology(eq);
    CHECK(check_regular_preorder(eq, t).ok);
    CHECK(check_contour_openness(eq, t).ok);
  }
  SUBCASE("non-preorders are rejected") {
    Relation bad = Relation::from_pairs(ground_of(3), {{0, 1}, {1, 2}}, true);
    FiniteTopology disc = FiniteTopology::generate(
        ground_of(3), {0b001, 0b010, 0b100});
    CHECK_THROWS_AS(check_regular_preorder(bad, disc), NotAPreorder);
    CHECK_THROWS_AS(check_contour_openness(bad, disc), NotAPreorder);
  }
}

TEST_CASE("totality harness passes on an all-indifferent pair") {
  Relation r = Relation::from_pairs(GroundSet({"a", "b"}), {{0, 1}, {1, 0}},
                                    true);
  FiniteTopology t(r.ground(), {});
  ReprFamily f{ReprKind::PartialRpMu, {PartialFn{r.ground()}}};
  f.functions[0].set(0, Rational(5));
  f.functions[0].set(1, Rational(5));
  const HarnessReport rep = totality_harness(r, t, f);
  CHECK(rep.applicable);
  CHECK(rep.conclusion_holds);
  CHECK(!rep.alarm);
  CHECK(rep.outcome == "pass");
  CHECK(rep.harness == "totality");
  CHECK(rep.hypotheses.size() == 6);
}

TEST_CASE("totality harness reports the failing hypothesis only") {
  // A chain plus an isolated point, glued by a particular-point topology:
  // every hypothesis holds except no-isolated-points.
  Relation r = Relation::from_pairs(GroundSet({"a", "b", "c", "p"}),
                                    {{0, 1}, {0, 2}, {1, 2}}, true);
  const GroundSet& g = r.ground();
  const FiniteTopology t = FiniteTopology::generate(
      g, {mask_of(g, {"a", "p"}), mask_of(g, {"b", "p"}),
          mask_of(g, {"c", "p"})});
  const BuildReport built = build_minimal_partial_rp_mu(r, BuildMode::Exact);
  const HarnessReport rep = totality_harness(r, t, built.family);
  CHECK(!rep.applicable);
  CHECK(rep.outcome == "hypotheses-not-met");
  CHECK(!rep.alarm);
  CHECK(hypothesis(rep, "preorder").holds);
  CHECK(hypothesis(rep, "connected").holds);
  CHECK(hypothesis(rep, "family-verifies").holds);
  CHECK(hypothesis(rep, "functions-continuous").holds);
  CHECK(hypothesis(rep, "function-domains-closed").holds);
  const HypothesisCheck& iso = hypothesis(rep, "no-isolated-points");
  CHECK(!iso.holds);
  CHECK(iso.detail.find("p") != std::string::npos);
}

TEST_CASE("closed-contours harness on the bundled two-topology example") {
  const ExampleBundle b = generate_example("e05");
  REQUIRE(b.family.has_value());
  REQUIRE(b.topologies.size() == 2);
  for (const auto& [name, t] : b.topologies) {
    CAPTURE(name);
    const HarnessReport rep = closed_contours_harness(b.relation, t, *b.family);
    // The family is not locally constant on either topology, so the
    // instance is out of scope for the theorem — and must not alarm.
    CHECK(!rep.applicable);
    CHECK(rep.outcome == "hypotheses-not-met");
    CHECK(!rep.alarm);
    CHECK(!hypothesis(rep, "functions-continuous").holds);
    CHECK(!hypothesis(rep, "function-domains-closed").holds);
    CHECK(hypothesis(rep, "family-verifies").holds);
    CHECK(hypothesis(rep, "no-isolated-points").holds);
    // No connectedness hypothesis for this harness.
    for (const auto& h : rep.hypotheses) CHECK(h.name != "connected");
  }
}

TEST_CASE("closed-contours harness passes on discrete instances") {
  const ExampleBundle b = generate_example("fence4");
  std::vector<std::uint64_t> singletons;
  for (int i = 0; i < 4; ++i) singletons.push_back(1ull << i);
  const FiniteTopology disc =
      FiniteTopology::generate(b.relation.ground(), singletons);
  const HarnessReport rep =
      closed_contours_harness(b.relation, disc, *b.family);
  CHECK(rep.applicable);
  CHECK(rep.conclusion_holds);
  CHECK(rep.outcome == "pass");

  // The totality harness is inapplicable here twice over: discrete spaces
  // on more than one point are disconnected, and the fence is not total.
  const HarnessReport tot = totality_harness(b.relation, disc, *b.family);
  CHECK(!hypothesis(tot, "connected").holds);
  CHECK(tot.outcome == "hypotheses-not-met");
  CHECK(!tot.alarm);
}

TEST_CASE("harness hypothesis details name the failure") {
  Relation bad = Relation::from_pairs(ground_of(2), {{0, 1}}, false);
  FiniteTopology t(ground_of(2), {});
  ReprFamily f{ReprKind::PartialRpMu, {}};
  const HarnessReport rep = totality_harness(bad, t, f);
  const HypothesisCheck& pre = hypothesis(rep, "preorder");
  CHECK(!pre.holds);
  CHECK(pre.detail.find("not reflexive") != std::string::npos);
  CHECK(rep.outcome == "hypotheses-not-met");
}

TEST_CASE("no alarms over every small preorder-topology-family instance") {
  // Exhaustive n = 3 sweep: all preorders × all topologies (as up-set
  // topologies of all preorders) × two constructed families × both
  // harnesses. The acceptance suite runs the larger n = 4 sweep.
  const auto preorders = test_support::all_preorders(3);
  CHECK(preorders.size() == 29);
  std::vector<FiniteTopology> topologies;
  for (const Relation& q : preorders) topologies.push_back(upset_topology(q));
  long long runs = 0;
  for (const Relation& p : preorders) {
    const ReprFamily minimal =
        build_minimal_partial_rp_mu(p, BuildMode::Exact).family;
    const ReprFamily indicators = build_indicator_mu(p);
    for (const FiniteTopology& t : topologies) {
      for (const ReprFamily* fam : {&minimal, &indicators}) {
        const HarnessReport a = totality_harness(p, t, *fam);
        const HarnessReport b = closed_contours_harness(p, t, *fam);
        CHECK(!a.alarm);
        CHECK(!b.alarm);
        CHECK(a.outcome != "alarm");
        CHECK(b.outcome != "alarm");
        runs += 2;
      }
    }
  }
  CHECK(runs == 29LL * 29 * 2 * 2);
}
