#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordrep/rational.hpp"
#include "ordrep/relation.hpp"

namespace ordrep {

// Rational-valued function on an explicit subset of a ground set.
// Undefinedness is a first-class value (eval returns nullopt), never an
// error: partial representations reason about where functions are defined.
class PartialFn {
 public:
  explicit PartialFn(GroundSet ground)
      : ground_(std::move(ground)), values_(ground_.size()) {}

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }

  bool defined(int x) const { return values_.at(x).has_value(); }
  std::optional<Rational> eval(int x) const { return values_.at(x); }
  const Rational& at(int x) const { return *values_.at(x); }

  void set(int x, Rational v) { values_.at(x) = std::move(v); }
  void unset(int x) { values_.at(x).reset(); }

  bool total() const;
  std::vector<int> domain() const;  // ascending indices

  bool operator==(const PartialFn& o) const {
    return ground_ == o.ground_ && values_ == o.values_;
  }

 private:
  GroundSet ground_;
  std::vector<std::optional<Rational>> values_;
};

// v + alpha*f with pointwise sum; defined exactly on dom(v) ∩ dom(f).
// alpha must be positive (NonPositiveAlpha otherwise).
PartialFn scale_add(const PartialFn& v, const PartialFn& f,
                    const Rational& alpha);

// Restriction to the given element indices (values elsewhere dropped).
PartialFn restrict_to(const PartialFn& f, const std::vector<int>& subset);

// Representation kinds. Threshold kinds (ScottSuppes and its partial
// variants) use the fixed threshold 1.
enum class ReprKind {
  MultiUtility,
  RpMultiUtility,
  PartialMu,
  PartialRpMu,
  ScottSuppes,
  PartialSs,
  PartialRpSs,
};

std::string repr_kind_name(ReprKind k);
ReprKind repr_kind_from_name(const std::string& name);
bool repr_kind_is_threshold(ReprKind k);
bool repr_kind_is_partial(ReprKind k);

// A finite family of functions tagged with the representation kind it is
// meant to realize. Functions in non-partial kinds must be total; that is
// enforced by the verifiers, not the container.
struct ReprFamily {
  ReprKind kind = ReprKind::PartialMu;
  std::vector<PartialFn> functions;
};

}  // namespace ordrep
