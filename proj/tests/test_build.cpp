#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "ordrep/build.hpp"
#include "ordrep/examples.hpp"
#include "ordrep/labelings.hpp"
#include "ordrep/order_ops.hpp"
#include "ordrep/scott_suppes.hpp"
#include "ordrep/verify.hpp"
#include "test_support.hpp"

using namespace ordrep;
using test_support::ground_of;

namespace {

Relation threshold_semiorder(const std::vector<long long>& vals) {
  const int n = static_cast<int>(vals.size());
  Relation r{ground_of(n)};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (vals[x] <= vals[y] + 1) r.add(x, y);
  return r;
}

}  // namespace

TEST_CASE("indicator construction is a multi-utility for any preorder") {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 200; ++round) {
    Relation r = test_support::random_preorder(1 + round % 7, rng);
    const ReprFamily f = build_indicator_mu(r);
    CHECK(static_cast<int>(f.functions.size()) == r.size());
    CHECK(verify_multi_utility(r, f).ok);
    CHECK(verify_partial_mu(r, f).ok);
  }
  Relation bad = Relation::from_pairs(ground_of(3), {{0, 1}, {1, 2}}, true);
  CHECK_THROWS_AS(build_indicator_mu(bad), NotAPreorder);
}

TEST_CASE("fence minimal family matches the known two chains") {
  const ExampleBundle b = generate_example("fence4");
  const BuildReport rep =
      build_minimal_partial_rp_mu(b.relation, BuildMode::Exact);
  CHECK(rep.optimal);
  REQUIRE(rep.family.functions.size() == 2);
  CHECK(rep.family.kind == ReprKind::PartialRpMu);
  REQUIRE(rep.chains.size() == 2);
  CHECK(rep.chains[0] == std::vector<std::string>{"x1", "x2", "x4"});
  CHECK(rep.chains[1] == std::vector<std::string>{"x3", "x4"});
  // The functions enumerate chain positions 1, 2, ...
  const PartialFn& u1 = rep.family.functions[0];
  CHECK(u1.at(0) == Rational(1));
  CHECK(u1.at(1) == Rational(2));
  CHECK(u1.at(3) == Rational(3));
  CHECK(!u1.defined(2));
  const PartialFn& u2 = rep.family.functions[1];
  CHECK(u2.at(2) == Rational(1));
  CHECK(u2.at(3) == Rational(2));
  CHECK(!u2.defined(0));
  CHECK(verify_partial_rp_mu(b.relation, rep.family).ok);
  // This example is also the bundled family.
  REQUIRE(b.family.has_value());
  CHECK(b.family->functions == rep.family.functions);
}

TEST_CASE("known chain-cover sizes") {
  struct Case {
    const char* what;
    std::vector<std::pair<int, int>> strict;
    int n;
    std::size_t functions;
  };
  // Cover sizes for hand-checked posets.
  const std::vector<Case> cases = {
      {"three disjoint 2-chains", {{0, 1}, {2, 3}, {4, 5}}, 6, 3},
      {"diamond", {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {0, 3}}, 4, 2},
      {"3-antichain under a top", {{0, 3}, {1, 3}, {2, 3}}, 4, 3},
      {"N shape", {{0, 2}, {1, 2}, {1, 3}}, 4, 3},
      {"antichain", {}, 4, 0},
      {"single chain", {{0, 1}, {0, 2}, {1, 2}}, 3, 1},
  };
  for (const Case& c : cases) {
    CAPTURE(c.what);
    Relation r = Relation::from_pairs(ground_of(c.n), c.strict, true);
    const BuildReport rep = build_minimal_partial_rp_mu(r, BuildMode::Exact);
    CHECK(rep.optimal);
    CHECK(rep.family.functions.size() == c.functions);
    CHECK(verify_partial_rp_mu(r, rep.family).ok);
  }
}

TEST_CASE("the N poset needs more chains than its width") {
  Relation r = Relation::from_pairs(ground_of(4), {{0, 2}, {1, 2}, {1, 3}},
                                    true);
  CHECK(width(r).width == 2);
  const BuildReport rep = build_minimal_partial_rp_mu(r, BuildMode::Exact);
  CHECK(rep.family.functions.size() == 3);
}

TEST_CASE("exact cover size matches the brute-force oracle") {
  std::mt19937_64 rng(42);
  int nontrivial = 0;
  for (int round = 0; round < 160; ++round) {
    const int n = 2 + round % 6;
    Relation r = round % 2 ? test_support::random_poset(n, rng, 0.4)
                           : test_support::random_preorder(n, rng, 0.3);
    const QuotientResult q = quotient(r);
    if (q.order.size() > 8) continue;
    const int oracle = test_support::min_chain_cover_oracle(q.order);
    REQUIRE(oracle >= 0);
    const BuildReport rep = build_minimal_partial_rp_mu(r, BuildMode::Exact);
    CHECK(rep.optimal);
    // Some functions are constants for untouched nontrivial classes, not
    // chain functions; only the chain count is the cover size.
    CHECK(rep.chains.size() == static_cast<std::size_t>(oracle));
    if (oracle >= 2) ++nontrivial;
  }
  CHECK(nontrivial > 20);
}

TEST_CASE("greedy never beats exact and both verify") {
  std::mt19937_64 rng(43);
  for (int round = 0; round < 150; ++round) {
    const int n = 2 + round % 6;
    Relation r = test_support::random_preorder(n, rng, 0.35);
    const BuildReport exact =
        build_minimal_partial_rp_mu(r, BuildMode::Exact);
    const BuildReport greedy =
        build_minimal_partial_rp_mu(r, BuildMode::Greedy);
    CHECK(exact.chains.size() <= greedy.chains.size());
    CHECK(exact.stats.initial_bound == static_cast<int>(greedy.chains.size()));
    CHECK(verify_partial_rp_mu(r, exact.family).ok);
    CHECK(verify_partial_rp_mu(r, greedy.family).ok);
    if (greedy.optimal) CHECK(greedy.chains.size() <= 1);
  }
}

TEST_CASE("elements outside every domain are exactly the isolated points") {
  std::mt19937_64 rng(44);
  for (int round = 0; round < 150; ++round) {
    const int n = 1 + round % 7;
    Relation r = test_support::random_preorder(n, rng, 0.25);
    const BuildReport rep = build_minimal_partial_rp_mu(
        r, round % 2 ? BuildMode::Greedy : BuildMode::Exact);
    std::vector<bool> in_domain(n, false);
    for (const PartialFn& u : rep.family.functions)
      for (int x : u.domain()) in_domain[x] = true;
    std::vector<int> outside;
    for (int x = 0; x < n; ++x)
      if (!in_domain[x]) outside.push_back(x);
    CHECK(outside == isolated_points(r));
  }
}

TEST_CASE("nontrivial classes untouched by chains get constant functions") {
  // a ∼ b isolated as a class; c ⊏ d a separate chain.
  Relation r = Relation::from_pairs(ground_of(4), {{0, 1}, {1, 0}, {2, 3}},
                                    true);
  const BuildReport rep = build_minimal_partial_rp_mu(r, BuildMode::Exact);
  REQUIRE(rep.family.functions.size() == 2);
  CHECK(rep.chains.size() == 1);  // only c ⊏ d needs a chain
  const PartialFn& constant = rep.family.functions[1];
  CHECK(constant.domain() == std::vector<int>{0, 1});
  CHECK(constant.at(0) == constant.at(1));
  CHECK(verify_partial_rp_mu(r, rep.family).ok);
}

TEST_CASE("exact mode refuses oversized quotients, greedy still works") {
  const int n = kExactCoverCap + 1;
  // A fence a0 ⊏ b0 ⊐ a1 ⊏ b1 ... has many classes and strict pairs.
  std::vector<std::pair<int, int>> strict;
  for (int i = 0; i + 1 < n; ++i) {
    if (i % 2 == 0) strict.push_back({i, i + 1});
    else strict.push_back({i + 1, i});
  }
  Relation r = Relation::from_pairs(ground_of(n), strict, true);
  CHECK_THROWS_AS(build_minimal_partial_rp_mu(r, BuildMode::Exact),
                  CapExceeded);
  const BuildReport rep = build_minimal_partial_rp_mu(r, BuildMode::Greedy);
  CHECK(verify_partial_rp_mu(r, rep.family).ok);
}

TEST_CASE("two-element chain with an isolated point") {
  const ExampleBundle b = generate_example("chain2_isolated");
  const BuildReport rep =
      build_minimal_partial_rp_mu(b.relation, BuildMode::Exact);
  REQUIRE(rep.family.functions.size() == 1);
  const int x3 = b.relation.ground().index("x3");
  CHECK(!rep.family.functions[0].defined(x3));
  CHECK(verify_partial_rp_mu(b.relation, rep.family).ok);

  // No single total function is even a multi-utility here: over values
  // {1..3} (enough since only the value order matters on 3 elements),
  // every candidate fails.
  const int n = b.relation.size();
  int candidates = 0;
  for (int v0 = 1; v0 <= 3; ++v0)
    for (int v1 = 1; v1 <= 3; ++v1)
      for (int v2 = 1; v2 <= 3; ++v2) {
        PartialFn u{b.relation.ground()};
        u.set(0, Rational(v0));
        u.set(1, Rational(v1));
        u.set(2, Rational(v2));
        ReprFamily single{ReprKind::RpMultiUtility, {u}};
        if (verify_rp_multi_utility(b.relation, single).ok) ++candidates;
      }
  CHECK(n == 3);
  CHECK(candidates == 0);
}

TEST_CASE("labeling family is a Richter-Peleg multi-utility") {
  std::mt19937_64 rng(45);
  for (int round = 0; round < 60; ++round) {
    Relation r = test_support::random_preorder(1 + round % 6, rng, 0.4);
    const ReprFamily f = build_labeling_rp_mu(r);
    CHECK(!f.functions.empty());
    CHECK(verify_rp_multi_utility(r, f).ok);
    CHECK(verify_partial_rp_mu(r, f).ok);
  }
}

TEST_CASE("combination construction: happy path") {
  const ExampleBundle b = generate_example("fence4");
  const ReprFamily base = build_indicator_mu(b.relation);
  PartialFn f{b.relation.ground()};
  f.set(0, Rational(0));
  f.set(1, Rational(1));
  f.set(2, Rational(0));
  f.set(3, Rational(2));
  const std::vector<Rational> alphas = {Rational(1), Rational(1, 2)};
  const ReprFamily out = build_rp_combination(b.relation, base, f, alphas);
  CHECK(out.kind == ReprKind::PartialRpMu);
  CHECK(out.functions.size() == base.functions.size() * alphas.size());
  CHECK(verify_rp_multi_utility(
            b.relation, ReprFamily{ReprKind::RpMultiUtility, out.functions})
            .ok);
  CHECK(verify_partial_rp_mu(b.relation, out).ok);
}

TEST_CASE("combination construction: violated hypotheses") {
  const ExampleBundle b = generate_example("fence4");
  const ReprFamily base = build_indicator_mu(b.relation);
  PartialFn good{b.relation.ground()};
  good.set(0, Rational(0));
  good.set(1, Rational(1));
  good.set(2, Rational(0));
  good.set(3, Rational(2));

  SUBCASE("base of the wrong kind") {
    ReprFamily wrong{ReprKind::PartialRpMu, base.functions};
    CHECK_THROWS_AS(build_rp_combination(b.relation, wrong, good, {Rational(1)}),
                    PreconditionFailed);
  }
  SUBCASE("base that does not verify") {
    ReprFamily broken{ReprKind::MultiUtility, {}};
    PartialFn u{b.relation.ground()};
    for (int i = 0; i < 4; ++i) u.set(i, Rational(0));
    u.set(0, Rational(9));
    broken.functions.push_back(u);
    CHECK_THROWS_AS(
        build_rp_combination(b.relation, broken, good, {Rational(1)}),
        PreconditionFailed);
  }
  SUBCASE("combining function undefined at a non-isolated element") {
    PartialFn f = good;
    f.unset(1);
    CHECK_THROWS_AS(build_rp_combination(b.relation, base, f, {Rational(1)}),
                    PreconditionFailed);
  }
  SUBCASE("combining function decreasing on a related pair") {
    PartialFn f = good;
    f.set(0, Rational(5));
    CHECK_THROWS_AS(build_rp_combination(b.relation, base, f, {Rational(1)}),
                    PreconditionFailed);
  }
  SUBCASE("combining function tying a strict pair") {
    PartialFn f = good;
    f.set(1, Rational(0));  // now f(x1) = f(x2) on x1 ⊏ x2
    CHECK_THROWS_AS(build_rp_combination(b.relation, base, f, {Rational(1)}),
                    PreconditionFailed);
  }
  SUBCASE("non-positive alpha") {
    CHECK_THROWS_AS(build_rp_combination(b.relation, base, good,
                                         {Rational(1), Rational(0)}),
                    NonPositiveAlpha);
  }
}

TEST_CASE("labeling enumeration on the fence") {
  const ExampleBundle b = generate_example("fence4");
  CHECK(count_labelings(b.relation) == 3);
  const std::vector<PartialFn> all = enumerate_labelings(b.relation);
  REQUIRE(all.size() == 3);
  for (const PartialFn& u : all) CHECK(verify_labeling(b.relation, u).ok);
  // Known value maps: (x1,x2,x3,x4), (x1,x3,x2,x4), (x3,x1,x2,x4) as the
  // orders of placement, i.e. label vectors by element:
  std::set<std::vector<long long>> got;
  for (const PartialFn& u : all) {
    std::vector<long long> v;
    for (int x = 0; x < 4; ++x) v.push_back(u.at(x).num());
    got.insert(v);
  }
  const std::set<std::vector<long long>> expected = {
      {1, 2, 3, 4},  // x1 x2 x3 x4
      {1, 3, 2, 4},  // x1 x3 x2 x4
      {2, 3, 1, 4},  // x3 x1 x2 x4
  };
  CHECK(got == expected);
}

TEST_CASE("labeling counts match enumeration on random posets") {
  std::mt19937_64 rng(46);
  for (int round = 0; round < 120; ++round) {
    Relation p = test_support::random_poset(1 + round % 6, rng);
    const auto all = enumerate_labelings(p);
    CHECK(count_labelings(p) == all.size());
    std::set<std::vector<long long>> distinct;
    for (const PartialFn& u : all) {
      CHECK(verify_labeling(p, u).ok);
      std::vector<long long> v;
      for (int x = 0; x < p.size(); ++x) v.push_back(u.at(x).num());
      distinct.insert(v);
    }
    CHECK(distinct.size() == all.size());
  }
}

TEST_CASE("labeling edge cases") {
  // A chain has exactly one labeling, an antichain n! of them.
  Relation chain = Relation::from_pairs(ground_of(3), {{0, 1}, {0, 2}, {1, 2}},
                                        true);
  CHECK(count_labelings(chain) == 1);
  Relation anti{ground_of(4)};
  anti.add_reflexive();
  CHECK(count_labelings(anti) == 24);

  Relation tied = Relation::from_pairs(ground_of(2), {{0, 1}, {1, 0}}, true);
  CHECK_THROWS_AS(count_labelings(tied), NotAPartialOrder);
  CHECK_THROWS_AS(enumerate_labelings(tied), NotAPartialOrder);

  Relation big{ground_of(kCountCap + 1)};
  big.add_reflexive();
  CHECK_THROWS_AS(count_labelings(big), CapExceeded);
  Relation medium{ground_of(kEnumerationCap + 1)};
  medium.add_reflexive();
  CHECK_THROWS_AS(enumerate_labelings(medium), CapExceeded);
}

TEST_CASE("labeling stream is resumable and deterministic") {
  const ExampleBundle b = generate_example("fence4");
  LabelingStream s(b.relation);
  std::vector<std::vector<int>> orders;
  std::vector<int> order;
  while (s.next(order)) orders.push_back(order);
  REQUIRE(orders.size() == 3);
  // Depth-first, least minimal element first.
  CHECK(orders[0] == std::vector<int>{0, 1, 2, 3});
  CHECK(orders[1] == std::vector<int>{0, 2, 1, 3});
  CHECK(orders[2] == std::vector<int>{2, 0, 1, 3});
  CHECK(!s.next(order));  // stays exhausted
}

TEST_CASE("threshold utility construction on semiorders") {
  std::mt19937_64 rng(47);
  for (int round = 0; round < 200; ++round) {
    const int n = 1 + round % 6;
    std::vector<long long> vals(n);
    for (auto& v : vals) v = static_cast<long long>(rng() % 6);
    Relation s = threshold_semiorder(vals);
    const BuildReport rep = build_ss(s);
    CHECK(rep.optimal);
    REQUIRE(rep.family.functions.size() == 1);
    CHECK(rep.family.kind == ReprKind::ScottSuppes);
    CHECK(verify_ss(s, rep.family.functions[0]).ok);
  }
}

TEST_CASE("non-semiorders are rejected with the classifying witness") {
  std::mt19937_64 rng(48);
  int rejected = 0;
  for (int round = 0; round < 400 && rejected < 60; ++round) {
    Relation r = test_support::random_relation(2 + round % 5, rng, 0.5, true);
    const PropertyReport p = classify(r);
    if (p.semiorder.holds) continue;
    ++rejected;
    try {
      build_ss(r);
      FAIL("build_ss accepted a non-semiorder");
    } catch (const NotASemiorder& e) {
      std::vector<std::string> expected;
      for (int i : p.semiorder.counterexample)
        expected.push_back(r.ground().label(i));
      CHECK(e.quadruple == expected);
    }
  }
  CHECK(rejected >= 60);
}

TEST_CASE("threshold utility on the three-chain is within bounds") {
  Relation chain3 = Relation::from_pairs(GroundSet({"a", "b", "c"}),
                                         {{0, 1}, {0, 2}, {1, 2}}, true);
  const BuildReport rep = build_ss(chain3);
  const PartialFn& u = rep.family.functions[0];
  // A strict chain under threshold 1 needs gaps > 1 between consecutive
  // values; the shortest-path solution keeps everything at most 0.
  CHECK(u.at(2) == Rational(0));
  CHECK(u.at(1) + Rational(1) < u.at(2));
  CHECK(u.at(0) + Rational(1) < u.at(1));
  CHECK(verify_ss(chain3, u).ok);
}
