#include "ordrep/partial_fn.hpp"

#include <algorithm>

namespace ordrep {

bool PartialFn::total() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const auto& v) { return v.has_value(); });
}

std::vector<int> PartialFn::domain() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (defined(i)) out.push_back(i);
  }
  return out;
}

PartialFn scale_add(const PartialFn& v, const PartialFn& f,
                    const Rational& alpha) {
  if (v.ground() != f.ground()) {
    throw Error("scale_add requires functions on the same ground set");
  }
  if (!(Rational(0) < alpha)) {
    throw NonPositiveAlpha("alpha must be positive, got " + alpha.str());
  }
  PartialFn out{v.ground()};
  for (int x = 0; x < v.size(); ++x) {
    if (v.defined(x) && f.defined(x)) {
      out.set(x, v.at(x) + alpha * f.at(x));
    }
  }
  return out;
}

PartialFn restrict_to(const PartialFn& f, const std::vector<int>& subset) {
  PartialFn out{f.ground()};
  for (int x : subset) {
    if (x < 0 || x >= f.size()) {
      throw UnknownLabel(std::to_string(x));
    }
    if (f.defined(x)) out.set(x, f.at(x));
  }
  return out;
}

std::string repr_kind_name(ReprKind k) {
  switch (k) {
    case ReprKind::MultiUtility:
      return "mu";
    case ReprKind::RpMultiUtility:
      return "rp-mu";
    case ReprKind::PartialMu:
      return "partial-mu";
    case ReprKind::PartialRpMu:
      return "partial-rp-mu";
    case ReprKind::ScottSuppes:
      return "ss";
    case ReprKind::PartialSs:
      return "partial-ss";
    case ReprKind::PartialRpSs:
      return "partial-rpss";
  }
  throw Error("bad repr kind");
}

ReprKind repr_kind_from_name(const std::string& name) {
  if (name == "mu") return ReprKind::MultiUtility;
  if (name == "rp-mu") return ReprKind::RpMultiUtility;
  if (name == "partial-mu") return ReprKind::PartialMu;
  if (name == "partial-rp-mu") return ReprKind::PartialRpMu;
  if (name == "ss") return ReprKind::ScottSuppes;
  if (name == "partial-ss") return ReprKind::PartialSs;
  if (name == "partial-rpss") return ReprKind::PartialRpSs;
  throw ParseError("unknown representation kind: " + name);
}

bool repr_kind_is_threshold(ReprKind k) {
  return k == ReprKind::ScottSuppes || k == ReprKind::PartialSs ||
         k == ReprKind::PartialRpSs;
}

bool repr_kind_is_partial(ReprKind k) {
  return k == ReprKind::PartialMu || k == ReprKind::PartialRpMu ||
         k == ReprKind::PartialSs || k == ReprKind::PartialRpSs;
}

}  // namespace ordrep
