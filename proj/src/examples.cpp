#include "ordrep/examples.hpp"

#include "ordrep/errors.hpp"

namespace ordrep {

namespace {

long long get_param(const std::map<std::string, long long>& params,
                    const std::string& key, long long fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

long long floor_mod(long long a, long long b) { return a - floor_div(a, b) * b; }

Relation fence4_relation() {
  GroundSet g({"x1", "x2", "x3", "x4"});
  return Relation::from_pairs(std::move(g), {{0, 1}, {0, 3}, {1, 3}, {2, 3}},
                              true);
}

ExampleBundle fence4() {
  ExampleBundle b("fence4", fence4_relation());
  ReprFamily fam{ReprKind::PartialRpMu, {}};
  PartialFn u1(b.relation.ground());
  u1.set(0, Rational(1));
  u1.set(1, Rational(2));
  u1.set(3, Rational(3));
  PartialFn u2(b.relation.ground());
  u2.set(2, Rational(1));
  u2.set(3, Rational(2));
  fam.functions = {u1, u2};
  b.family = std::move(fam);
  return b;
}

ExampleBundle chain2_isolated() {
  ExampleBundle b("chain2_isolated",
                  Relation::from_pairs(GroundSet({"x1", "x2", "x3"}), {{0, 1}},
                                       true));
  ReprFamily fam{ReprKind::PartialRpMu, {}};
  PartialFn u(b.relation.ground());
  u.set(0, Rational(1));
  u.set(1, Rational(2));
  fam.functions = {u};
  b.family = std::move(fam);
  return b;
}

ExampleBundle esemiz_window(long long lo, long long hi) {
  if (lo > hi)
    throw PreconditionFailed("esemiz_window requires lo <= hi");
  if (hi - lo + 1 > 64)
    throw CapExceeded("esemiz_window supports at most 64 elements");
  const int n = static_cast<int>(hi - lo + 1);
  std::vector<std::string> labels;
  for (long long m = lo; m <= hi; ++m) labels.push_back(std::to_string(m));
  Relation r{GroundSet(labels)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (lo + i <= lo + j + 1) r.add(i, j);
  ExampleBundle b("esemiz_window", std::move(r));

  // Three partial functions with interleaved two-residue domains:
  //   u defined at m ≡ 0,1 (mod 3), v at m ≡ 1,2, w at m ≡ 2,0;
  // each maps its pair {3q+s, 3q+s+1} of consecutive points to q.
  ReprFamily fam{ReprKind::PartialRpMu, {}};
  PartialFn u(b.relation.ground()), v(b.relation.ground()), w(b.relation.ground());
  for (int i = 0; i < n; ++i) {
    const long long m = lo + i;
    const long long res = floor_mod(m, 3);
    if (res == 0 || res == 1) u.set(i, Rational(floor_div(m, 3)));
    if (res == 1 || res == 2) v.set(i, Rational(floor_div(m, 3)));
    if (res == 2) w.set(i, Rational(floor_div(m, 3)));
    if (res == 0) w.set(i, Rational(floor_div(m, 3) - 1));
  }
  fam.functions = {u, v, w};
  b.family = std::move(fam);
  return b;
}

ExampleBundle eseq_truncation(long long k) {
  if (k < 1) throw PreconditionFailed("eseq_truncation requires k >= 1");
  if (k > 30) throw CapExceeded("eseq_truncation supports k <= 30");
  std::vector<std::string> labels;
  for (long long i = 1; i <= k; ++i) labels.push_back(Rational(1, i).str());
  labels.push_back("0");
  const int n = static_cast<int>(k) + 1;
  Relation r{GroundSet(labels)};
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) r.add(i, j);
  ExampleBundle b("eseq_truncation", std::move(r));

  ReprFamily fam{ReprKind::PartialSs, {}};
  PartialFn u(b.relation.ground()), v(b.relation.ground());
  for (int i = 0; i < n - 1; ++i) {
    u.set(i, Rational(2 * (static_cast<long long>(i) + 1)));
    v.set(i, Rational(0));
  }
  v.set(n - 1, Rational(2));
  fam.functions = {u, v};
  b.family = std::move(fam);
  return b;
}

ExampleBundle e05() {
  ExampleBundle b = fence4();
  b.name = "e05";
  const GroundSet& g = b.relation.ground();
  auto mask = [&](std::initializer_list<const char*> labels) {
    std::uint64_t m = 0;
    for (const char* l : labels) m |= 1ull << g.index(l);
    return m;
  };
  b.topologies.emplace_back(
      "tau1",
      FiniteTopology(g, {mask({"x4"}), mask({"x2", "x3", "x4"}),
                         mask({"x1", "x2", "x4"}), mask({"x2", "x4"})}));
  b.topologies.emplace_back(
      "tau2",
      FiniteTopology(g, {mask({"x4"}), mask({"x2", "x4"}), mask({"x3", "x4"}),
                         mask({"x2", "x3", "x4"})}));
  return b;
}

}  // namespace

std::vector<std::string> example_names() {
  return {"fence4", "chain2_isolated", "esemiz_window", "eseq_truncation",
          "e05"};
}

ExampleBundle generate_example(const std::string& name,
                               const std::map<std::string, long long>& params) {
  if (name == "fence4") return fence4();
  if (name == "chain2_isolated") return chain2_isolated();
  if (name == "esemiz_window")
    return esemiz_window(get_param(params, "lo", 0), get_param(params, "hi", 5));
  if (name == "eseq_truncation") return eseq_truncation(get_param(params, "k", 3));
  if (name == "e05") return e05();
  throw UnknownExample("unknown example '" + name + "'");
}

}  // namespace ordrep
