#include "ordrep/verify.hpp"

#include <vector>

namespace ordrep {

namespace {

const Rational kOne{1};

void check_grounds(const Relation& r, const ReprFamily& f) {
  for (const auto& fn : f.functions) {
    if (fn.ground() != r.ground()) {
      throw Error("family function ground set differs from relation");
    }
  }
}

void require_total(const ReprFamily& f) {
  for (std::size_t i = 0; i < f.functions.size(); ++i) {
    if (!f.functions[i].total()) {
      throw PartialFunctionInTotalKind(
          "function " + std::to_string(i) +
          " is partial but the representation kind needs total functions");
    }
  }
}

std::string val(const ReprFamily& f, std::size_t i, int x) {
  return "u[" + std::to_string(i) + "](" +
         f.functions[i].ground().label(x) +
         ")=" + f.functions[i].at(x).str();
}

// First function (by index) defined on both x and y failing pred; -1 if all
// pass. pred(a, b) is the required clause on the pair of values.
template <typename Pred>
int first_common_violating(const ReprFamily& f, int x, int y, Pred pred) {
  for (std::size_t i = 0; i < f.functions.size(); ++i) {
    const PartialFn& u = f.functions[i];
    if (u.defined(x) && u.defined(y) && !pred(u.at(x), u.at(y))) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

bool any_common(const ReprFamily& f, int x, int y) {
  for (const auto& u : f.functions) {
    if (u.defined(x) && u.defined(y)) return true;
  }
  return false;
}

template <typename Pred>
bool exists_common_with(const ReprFamily& f, int x, int y, Pred pred) {
  for (const auto& u : f.functions) {
    if (u.defined(x) && u.defined(y) && pred(u.at(x), u.at(y))) return true;
  }
  return false;
}

Verdict fail(int x, int y, std::string clause, std::string detail) {
  Verdict v;
  v.ok = false;
  v.violations.push_back({x, y, std::move(clause), std::move(detail)});
  return v;
}

auto le = [](const Rational& a, const Rational& b) { return a <= b; };
auto lt_strict = [](const Rational& a, const Rational& b) { return a < b; };
auto le_thresh = [](const Rational& a, const Rational& b) {
  return a <= b + kOne;
};
auto lt_thresh = [](const Rational& a, const Rational& b) {
  return a + kOne < b;
};

Verdict verify_total_mu_impl(const Relation& r, const ReprFamily& f,
                             bool richter_peleg) {
  check_grounds(r, f);
  require_total(f);
  const int n = r.size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (r.leq(x, y)) {
        int i = first_common_violating(f, x, y, le);
        if (i >= 0) {
          return fail(x, y, "mu-forward",
                      val(f, i, x) + " > " + val(f, i, y) +
                          " although the pair is related");
        }
        if (richter_peleg && r.lt(x, y)) {
          int j = first_common_violating(f, x, y, lt_strict);
          if (j >= 0) {
            return fail(x, y, "rp-strict",
                        val(f, j, x) + " !< " + val(f, j, y) +
                            " although the pair is strictly related");
          }
        }
      } else {
        int i = first_common_violating(f, x, y, le);
        if (i < 0) {
          return fail(x, y, "mu-reverse",
                      "every function is non-decreasing on an unrelated "
                      "pair");
        }
      }
    }
  }
  return {};
}

// Shared biconditional core for the partial multi-utility kinds.
// strict_pred is applied to strict pairs only when not null behavior via
// template; kept simple with a flag instead.
Verdict verify_partial_mu_impl(const Relation& r, const ReprFamily& f,
                               bool richter_peleg) {
  check_grounds(r, f);
  const int n = r.size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;  // diagonal exempt for partial kinds
      if (r.leq(x, y)) {
        int i = first_common_violating(f, x, y, le);
        if (i >= 0) {
          return fail(x, y, "pmu-forall",
                      val(f, i, x) + " > " + val(f, i, y) +
                          " although the pair is related");
        }
        if (!any_common(f, x, y)) {
          return fail(x, y, "pmu-exists",
                      "no function is defined on both elements of a "
                      "related pair");
        }
        if (richter_peleg && r.lt(x, y)) {
          int j = first_common_violating(f, x, y, lt_strict);
          if (j >= 0) {
            return fail(x, y, "prp-strict-forall",
                        val(f, j, x) + " !< " + val(f, j, y) +
                            " although the pair is strictly related");
          }
          if (!exists_common_with(f, x, y, lt_strict)) {
            return fail(x, y, "prp-strict-exists",
                        "no function defined on both is strictly "
                        "increasing on a strict pair");
          }
        }
      } else {
        // RHS of the biconditional must be false on unrelated pairs;
        // with at least one common function, "all common non-decreasing"
        // already implies the existential clause.
        if (any_common(f, x, y) &&
            first_common_violating(f, x, y, le) < 0) {
          return fail(x, y, "pmu-reverse",
                      "every common function is non-decreasing on an "
                      "unrelated pair");
        }
      }
    }
  }
  return {};
}

Verdict verify_partial_threshold_impl(const Relation& r, const ReprFamily& f,
                                      bool richter_peleg) {
  check_grounds(r, f);
  const int n = r.size();
  const char* tag = richter_peleg ? "prpss" : "pss";
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      // Clause (i): x≾y ⟺ ∃ common u(x)≤u(y)+1 ∧ ∀ common v(x)≤v(y)+1.
      if (r.leq(x, y)) {
        int i = first_common_violating(f, x, y, le_thresh);
        if (i >= 0) {
          return fail(x, y, std::string(tag) + "-i-forall",
                      val(f, i, x) + " exceeds " + val(f, i, y) +
                          "+1 although the pair is related");
        }
        if (!any_common(f, x, y)) {
          return fail(x, y, std::string(tag) + "-i-exists",
                      "no function is defined on both elements of a "
                      "related pair");
        }
      } else {
        if (any_common(f, x, y) &&
            first_common_violating(f, x, y, le_thresh) < 0) {
          return fail(x, y, std::string(tag) + "-i-reverse",
                      "every common function is within threshold on an "
                      "unrelated pair");
        }
      }
      // Clause (ii): the universal part is within-threshold for the plain
      // kind and strict-beyond-threshold for the Richter-Peleg kind.
      if (r.lt(x, y)) {
        if (richter_peleg) {
          int i = first_common_violating(f, x, y, lt_thresh);
          if (i >= 0) {
            return fail(x, y, "prpss-ii-forall",
                        val(f, i, x) + "+1 !< " + val(f, i, y) +
                            " although the pair is strictly related");
          }
        }
        if (!exists_common_with(f, x, y, lt_thresh)) {
          return fail(x, y, std::string(tag) + "-ii-exists",
                      "no function defined on both clears the threshold "
                      "gap on a strict pair");
        }
      } else {
        bool rhs;
        if (richter_peleg) {
          rhs = any_common(f, x, y) &&
                first_common_violating(f, x, y, lt_thresh) < 0;
        } else {
          rhs = exists_common_with(f, x, y, lt_thresh) &&
                first_common_violating(f, x, y, le_thresh) < 0;
        }
        if (rhs) {
          return fail(x, y, std::string(tag) + "-ii-reverse",
                      "threshold clause asserts a strict pair that the "
                      "relation does not contain");
        }
      }
    }
  }
  return {};
}

}  // namespace

Verdict verify_multi_utility(const Relation& r, const ReprFamily& f) {
  return verify_total_mu_impl(r, f, false);
}

Verdict verify_rp_multi_utility(const Relation& r, const ReprFamily& f) {
  return verify_total_mu_impl(r, f, true);
}

Verdict verify_partial_mu(const Relation& r, const ReprFamily& f) {
  return verify_partial_mu_impl(r, f, false);
}

Verdict verify_partial_rp_mu(const Relation& r, const ReprFamily& f) {
  return verify_partial_mu_impl(r, f, true);
}

Verdict verify_ss(const Relation& r, const PartialFn& u) {
  if (u.ground() != r.ground()) {
    throw Error("utility ground set differs from relation");
  }
  if (!u.total()) {
    throw PartialUtilityForSS("threshold representation needs a total "
                              "utility");
  }
  const int n = r.size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      bool rhs = u.at(x) <= u.at(y) + kOne;
      if (r.leq(x, y) && !rhs) {
        return fail(x, y, "ss-forward",
                    "u(" + r.ground().label(x) + ")=" + u.at(x).str() +
                        " exceeds u(" + r.ground().label(y) + ")+1=" +
                        (u.at(y) + kOne).str() +
                        " although the pair is related");
      }
      if (!r.leq(x, y) && rhs) {
        return fail(x, y, "ss-reverse",
                    "u(" + r.ground().label(x) + ")=" + u.at(x).str() +
                        " is within threshold of u(" + r.ground().label(y) +
                        ")=" + u.at(y).str() + " on an unrelated pair");
      }
    }
  }
  return {};
}

Verdict verify_partial_ss(const Relation& r, const ReprFamily& f) {
  return verify_partial_threshold_impl(r, f, false);
}

Verdict verify_partial_rpss(const Relation& r, const ReprFamily& f) {
  return verify_partial_threshold_impl(r, f, true);
}

Verdict verify_labeling(const Relation& r, const PartialFn& u) {
  if (u.ground() != r.ground()) {
    throw Error("labeling ground set differs from relation");
  }
  const int n = r.size();
  for (int x = 0; x < n; ++x) {
    if (!u.defined(x)) {
      return fail(x, x, "label-total",
                  "no label assigned to " + r.ground().label(x));
    }
  }
  std::vector<int> seen(n + 1, -1);
  for (int x = 0; x < n; ++x) {
    const Rational& v = u.at(x);
    if (v.den() != 1 || v.num() < 1 || v.num() > n) {
      return fail(x, x, "label-range",
                  "label " + v.str() + " of " + r.ground().label(x) +
                      " is outside 1.." + std::to_string(n));
    }
    int k = static_cast<int>(v.num());
    if (seen[k] >= 0) {
      return fail(seen[k], x, "label-bijection",
                  r.ground().label(seen[k]) + " and " + r.ground().label(x) +
                      " share label " + std::to_string(k));
    }
    seen[k] = x;
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (r.lt(x, y) && !(u.at(x) < u.at(y))) {
        return fail(x, y, "label-order",
                    "label of " + r.ground().label(x) +
                        " is not below label of " + r.ground().label(y) +
                        " on a strict pair");
      }
    }
  }
  return {};
}

}  // namespace ordrep
