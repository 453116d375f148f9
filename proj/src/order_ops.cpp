#include "ordrep/order_ops.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace ordrep {

namespace {

bool find_unary(const Relation& r, bool want, Flag& flag) {
  // want=true: witness x with x≾x (irreflexivity failure);
  // want=false: witness x with ¬(x≾x).
  for (int x = 0; x < r.size(); ++x) {
    if (r.leq(x, x) == want) {
      flag.holds = false;
      flag.counterexample = {x};
      return true;
    }
  }
  return false;
}

bool is_reflexive(const Relation& r) {
  for (int x = 0; x < r.size(); ++x) {
    if (!r.leq(x, x)) return false;
  }
  return true;
}

bool is_transitive(const Relation& r) {
  return transitive_closure(r) == r;
}

void require_preorder(const Relation& r, const char* op) {
  if (!is_reflexive(r) || !is_transitive(r)) {
    throw NotAPreorder(std::string(op) + " requires a preorder");
  }
}

// Kuhn augmenting-path matching on the strict order of quotient classes.
// match_r[j] = left class matched to right copy j, or -1.
bool try_augment(const std::vector<std::vector<int>>& adj, int u,
                 std::vector<char>& used, std::vector<int>& match_r) {
  for (int v : adj[u]) {
    if (used[v]) continue;
    used[v] = 1;
    if (match_r[v] < 0 || try_augment(adj, match_r[v], used, match_r)) {
      match_r[v] = u;
      return true;
    }
  }
  return false;
}

}  // namespace

PropertyReport classify(const Relation& r) {
  PropertyReport p;
  const int n = r.size();

  find_unary(r, false, p.reflexive);
  find_unary(r, true, p.irreflexive);

  for (int x = 0; x < n && p.symmetric.holds; ++x) {
    for (int y = 0; y < n && p.symmetric.holds; ++y) {
      if (r.leq(x, y) && !r.leq(y, x)) {
        p.symmetric = {false, {x, y}};
      }
    }
  }
  for (int x = 0; x < n && p.antisymmetric.holds; ++x) {
    for (int y = 0; y < n && p.antisymmetric.holds; ++y) {
      if (x != y && r.leq(x, y) && r.leq(y, x)) {
        p.antisymmetric = {false, {x, y}};
      }
    }
  }
  for (int x = 0; x < n && p.asymmetric.holds; ++x) {
    for (int y = 0; y < n && p.asymmetric.holds; ++y) {
      if (r.leq(x, y) && r.leq(y, x)) {
        p.asymmetric = {false, {x, y}};
      }
    }
  }
  for (int x = 0; x < n && p.total.holds; ++x) {
    for (int y = 0; y < n && p.total.holds; ++y) {
      if (!r.leq(x, y) && !r.leq(y, x)) {
        p.total = {false, {x, y}};
      }
    }
  }
  for (int x = 0; x < n && p.transitive.holds; ++x) {
    for (int y = 0; y < n && p.transitive.holds; ++y) {
      if (!r.leq(x, y)) continue;
      for (int z = 0; z < n && p.transitive.holds; ++z) {
        if (r.leq(y, z) && !r.leq(x, z)) {
          p.transitive = {false, {x, y, z}};
        }
      }
    }
  }

  p.preorder = p.reflexive.holds ? p.transitive : p.reflexive;
  p.partial_order = p.preorder.holds ? p.antisymmetric : p.preorder;

  if (!p.reflexive.holds) {
    p.interval_order = p.reflexive;
  } else {
    for (int x = 0; x < n && p.interval_order.holds; ++x) {
      for (int y = 0; y < n && p.interval_order.holds; ++y) {
        for (int z = 0; z < n && p.interval_order.holds; ++z) {
          if (!r.leq(x, z)) continue;
          for (int w = 0; w < n && p.interval_order.holds; ++w) {
            if (r.leq(y, w) && !r.leq(x, w) && !r.leq(y, z)) {
              p.interval_order = {false, {x, y, z, w}};
            }
          }
        }
      }
    }
  }

  if (!p.interval_order.holds) {
    p.semiorder = p.interval_order;
  } else {
    for (int x = 0; x < n && p.semiorder.holds; ++x) {
      for (int y = 0; y < n && p.semiorder.holds; ++y) {
        if (!r.leq(x, y)) continue;
        for (int z = 0; z < n && p.semiorder.holds; ++z) {
          if (!r.leq(y, z)) continue;
          for (int w = 0; w < n && p.semiorder.holds; ++w) {
            if (!r.leq(x, w) && !r.leq(w, z)) {
              p.semiorder = {false, {x, y, z, w}};
            }
          }
        }
      }
    }
  }

  return p;
}

Contours contours(const Relation& r, int x) {
  if (x < 0 || x >= r.size()) throw UnknownLabel(std::to_string(x));
  Contours c;
  for (int y = 0; y < r.size(); ++y) {
    if (r.lt(y, x)) c.lower.push_back(y);
    if (r.lt(x, y)) c.upper.push_back(y);
    if (r.leq(y, x)) c.down.push_back(y);
    if (r.leq(x, y)) c.up.push_back(y);
  }
  return c;
}

std::vector<int> isolated_points(const Relation& r) {
  std::vector<int> out;
  for (int x = 0; x < r.size(); ++x) {
    bool isolated = true;
    for (int y = 0; y < r.size() && isolated; ++y) {
      if (y != x && (r.leq(x, y) || r.leq(y, x))) isolated = false;
    }
    if (isolated) out.push_back(x);
  }
  return out;
}

QuotientResult quotient(const Relation& r) {
  require_preorder(r, "quotient");
  const int n = r.size();
  std::vector<int> class_of(n, -1);
  std::vector<std::vector<int>> members;
  for (int i = 0; i < n; ++i) {
    if (class_of[i] >= 0) continue;
    int c = static_cast<int>(members.size());
    members.emplace_back();
    for (int j = i; j < n; ++j) {
      if (r.equiv(i, j)) {
        class_of[j] = c;
        members[c].push_back(j);
      }
    }
  }

  std::vector<std::string> labels;
  labels.reserve(members.size());
  for (const auto& cls : members) {
    std::string label;
    for (std::size_t k = 0; k < cls.size(); ++k) {
      if (k) label += '|';
      label += r.ground().label(cls[k]);
    }
    labels.push_back(std::move(label));
  }

  Relation q{GroundSet(std::move(labels))};
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = 0; b < members.size(); ++b) {
      if (r.leq(members[a][0], members[b][0])) {
        q.add(static_cast<int>(a), static_cast<int>(b));
      }
    }
  }
  return {std::move(q), std::move(class_of), std::move(members)};
}

WidthResult width(const Relation& r) {
  QuotientResult q = quotient(r);  // throws NotAPreorder when not applicable
  const Relation& P = q.order;
  const int k = P.size();

  std::vector<std::vector<int>> adj(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i != j && P.leq(i, j)) adj[i].push_back(j);
    }
  }
  std::vector<int> match_r(k, -1);
  int matched = 0;
  for (int u = 0; u < k; ++u) {
    std::vector<char> used(k, 0);
    if (try_augment(adj, u, used, match_r)) ++matched;
  }
  int w = k - matched;

  // Koenig: alternating reachability from unmatched left vertices; the
  // complement of the vertex cover, taken on both sides, is a maximum
  // antichain of classes.
  std::vector<int> match_l(k, -1);
  for (int j = 0; j < k; ++j) {
    if (match_r[j] >= 0) match_l[match_r[j]] = j;
  }
  std::vector<char> zl(k, 0), zr(k, 0);
  std::vector<int> stack;
  for (int u = 0; u < k; ++u) {
    if (match_l[u] < 0) {
      zl[u] = 1;
      stack.push_back(u);
    }
  }
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u]) {
      if (v == match_l[u] || zr[v]) continue;
      zr[v] = 1;
      int u2 = match_r[v];
      if (u2 >= 0 && !zl[u2]) {
        zl[u2] = 1;
        stack.push_back(u2);
      }
    }
  }
  std::vector<int> antichain;
  for (int v = 0; v < k; ++v) {
    if (zl[v] && !zr[v]) antichain.push_back(v);
  }
  assert(static_cast<int>(antichain.size()) == w);

  if (k <= 15) {
    // Subset brute force: independent recomputation of w and the lex-least
    // maximum antichain. Disagreement with the matching bound is a logic
    // error, not an input error.
    int best = 0;
    std::uint32_t best_mask = 0;
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      bool anti = true;
      for (int i = 0; i < k && anti; ++i) {
        if (!(mask >> i & 1)) continue;
        for (int j = i + 1; j < k && anti; ++j) {
          if ((mask >> j & 1) && (P.leq(i, j) || P.leq(j, i))) anti = false;
        }
      }
      if (!anti) continue;
      int sz = __builtin_popcount(mask);
      if (sz > best) {
        best = sz;
        best_mask = mask;
      } else if (sz == best) {
        // Lower set bits first means lexicographically smaller index list;
        // keep the mask whose lowest differing bit is set.
        std::uint32_t diff = best_mask ^ mask;
        if (diff != 0 && (mask & (diff & -diff))) best_mask = mask;
      }
    }
    if (best != w) {
      throw Error("width cross-check mismatch: matching=" +
                  std::to_string(w) + " brute=" + std::to_string(best));
    }
    antichain.clear();
    for (int v = 0; v < k; ++v) {
      if (best_mask >> v & 1) antichain.push_back(v);
    }
  }

  WidthResult out;
  out.width = w;
  for (int cls : antichain) out.witness.push_back(q.members[cls][0]);
  std::sort(out.witness.begin(), out.witness.end());
  return out;
}

Relation transitive_closure(const Relation& r) {
  Relation c = r;
  const int n = r.size();
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (i != k && c.leq(i, k)) c.or_row(i, k);
    }
  }
  return c;
}

Relation transitive_reduction(const Relation& r) {
  const int n = r.size();
  Relation c = transitive_closure(r);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && c.leq(i, j) && c.leq(j, i)) {
        throw CyclicStrictPart("relation has a cycle through " +
                               r.ground().label(i) + " and " +
                               r.ground().label(j));
      }
    }
  }
  Relation out{r.ground()};
  for (int i = 0; i < n; ++i) {
    if (r.leq(i, i)) out.add(i, i);
    for (int j = 0; j < n; ++j) {
      if (i == j || !c.leq(i, j)) continue;
      bool cover = true;
      for (int k = 0; k < n && cover; ++k) {
        if (k != i && k != j && c.leq(i, k) && c.leq(k, j)) cover = false;
      }
      if (cover) out.add(i, j);
    }
  }
  return out;
}

std::string dot_hasse(const Relation& r) {
  QuotientResult q = quotient(r);
  Relation h = transitive_reduction(q.order);
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n";
  for (int i = 0; i < h.size(); ++i) {
    os << "  \"" << h.ground().label(i) << "\";\n";
  }
  for (int i = 0; i < h.size(); ++i) {
    for (int j = 0; j < h.size(); ++j) {
      if (i != j && h.leq(i, j)) {
        os << "  \"" << h.ground().label(i) << "\" -> \""
           << h.ground().label(j) << "\";\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace ordrep
