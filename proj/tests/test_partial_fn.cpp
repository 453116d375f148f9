#include "doctest.h"

#include <random>
#include <vector>

#include "ordrep/partial_fn.hpp"
#include "test_support.hpp"

using namespace ordrep;
using test_support::ground_of;

TEST_CASE("rational construction normalizes") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(-1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational(-7, 3).str() == "-7/3");
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("rational parse round trips") {
  for (const char* text : {"0", "5", "-5", "1/2", "-7/3", "10/4"}) {
    const Rational r = Rational::parse(text);
    CHECK(Rational::parse(r.str()) == r);
  }
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
  CHECK_THROWS_AS(Rational::parse("a"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), ParseError);
  CHECK_THROWS_AS(Rational::parse(" 1"), ParseError);
}

TEST_CASE("rational arithmetic and ordering against doubles") {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 2000; ++round) {
    const long long an = static_cast<long long>(rng() % 41) - 20;
    const long long ad = 1 + static_cast<long long>(rng() % 12);
    const long long bn = static_cast<long long>(rng() % 41) - 20;
    const long long bd = 1 + static_cast<long long>(rng() % 12);
    const Rational a(an, ad), b(bn, bd);
    const double da = static_cast<double>(an) / static_cast<double>(ad);
    const double db = static_cast<double>(bn) / static_cast<double>(bd);
    CHECK((a + b).num() * 1.0 / (a + b).den() == doctest::Approx(da + db));
    CHECK((a - b).num() * 1.0 / (a - b).den() == doctest::Approx(da - db));
    CHECK((a * b).num() * 1.0 / (a * b).den() == doctest::Approx(da * db));
    CHECK((a < b) == (an * bd < bn * ad));
    CHECK((a == b) == (an * bd == bn * ad));
    CHECK((-a) + a == Rational(0));
  }
}

TEST_CASE("rational ordering is exact where doubles are not") {
  // 1/3 = 333333333/999999999 < 333333334/999999999; as doubles the two
  // sides collide, exact arithmetic keeps them apart.
  const Rational third(1, 3);
  const Rational close(333333334, 999999999);
  CHECK(third < close);
  CHECK(!(close < third));
}

TEST_CASE("partial function definition and domain") {
  PartialFn f{ground_of(4)};
  CHECK(!f.total());
  CHECK(f.domain().empty());
  f.set(2, Rational(5));
  f.set(0, Rational(1, 2));
  CHECK(f.defined(0));
  CHECK(!f.defined(1));
  CHECK(f.domain() == std::vector<int>{0, 2});
  CHECK(f.at(2) == Rational(5));
  CHECK(f.eval(1) == std::nullopt);
  f.unset(2);
  CHECK(f.domain() == std::vector<int>{0});
  f.set(1, Rational(0));
  f.set(2, Rational(0));
  f.set(3, Rational(0));
  CHECK(f.total());
}

TEST_CASE("scale_add combines on the domain intersection") {
  PartialFn v{ground_of(3)};
  v.set(0, Rational(1));
  v.set(1, Rational(2));
  PartialFn f{ground_of(3)};
  f.set(1, Rational(3));
  f.set(2, Rational(4));
  const PartialFn sum = scale_add(v, f, Rational(1, 2));
  CHECK(sum.domain() == std::vector<int>{1});
  CHECK(sum.at(1) == Rational(2) + Rational(1, 2) * Rational(3));
  CHECK_THROWS_AS(scale_add(v, f, Rational(0)), NonPositiveAlpha);
  CHECK_THROWS_AS(scale_add(v, f, Rational(-1, 3)), NonPositiveAlpha);
}

TEST_CASE("restrict_to drops values outside the subset") {
  PartialFn f{ground_of(4)};
  for (int i = 0; i < 4; ++i) f.set(i, Rational(i));
  const PartialFn g = restrict_to(f, {1, 3});
  CHECK(g.domain() == std::vector<int>{1, 3});
  CHECK(g.at(3) == Rational(3));
  const PartialFn h = restrict_to(f, {});
  CHECK(h.domain().empty());
}

TEST_CASE("representation kind names round trip") {
  for (ReprKind k :
       {ReprKind::MultiUtility, ReprKind::RpMultiUtility, ReprKind::PartialMu,
        ReprKind::PartialRpMu, ReprKind::ScottSuppes, ReprKind::PartialSs,
        ReprKind::PartialRpSs}) {
    CHECK(repr_kind_from_name(repr_kind_name(k)) == k);
  }
  CHECK(repr_kind_name(ReprKind::PartialRpMu) == "partial-rp-mu");
  CHECK(repr_kind_name(ReprKind::ScottSuppes) == "ss");
  CHECK_THROWS_AS(repr_kind_from_name("nonsense"), ParseError);
  CHECK(repr_kind_is_threshold(ReprKind::PartialSs));
  CHECK(!repr_kind_is_threshold(ReprKind::PartialMu));
  CHECK(repr_kind_is_partial(ReprKind::PartialRpSs));
  CHECK(!repr_kind_is_partial(ReprKind::MultiUtility));
}
