#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ordrep/errors.hpp"

namespace ordrep {

// Hard cap on ground-set size for the bit-matrix backend.
inline constexpr int kMaxElements = 4096;

// Ordered set of distinct element labels. Indices are stable and define the
// deterministic scan order used for witnesses everywhere in the library.
class GroundSet {
 public:
  explicit GroundSet(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& label(int i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  bool has(const std::string& label) const {
    return index_.count(label) != 0;
  }
  int index(const std::string& label) const;

  bool operator==(const GroundSet& o) const { return names_ == o.names_; }
  bool operator!=(const GroundSet& o) const { return !(*this == o); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

// Square bit matrix, row-major in 64-bit words.
class BitMatrix {
 public:
  explicit BitMatrix(int n);

  int size() const { return n_; }
  bool get(int i, int j) const {
    return (w_[static_cast<std::size_t>(i) * stride_ + (j >> 6)] >>
            (j & 63)) & 1u;
  }
  void set(int i, int j) {
    w_[static_cast<std::size_t>(i) * stride_ + (j >> 6)] |= 1ull << (j & 63);
  }
  void reset(int i, int j) {
    w_[static_cast<std::size_t>(i) * stride_ + (j >> 6)] &=
        ~(1ull << (j & 63));
  }
  // row[dst] |= row[src]; the word-parallel step of transitive closure.
  void or_row_into(int dst, int src);

  bool operator==(const BitMatrix& o) const {
    return n_ == o.n_ && w_ == o.w_;
  }

 private:
  int n_;
  int stride_;
  std::vector<std::uint64_t> w_;
};

// A binary relation x ≾ y on a ground set, stored with an explicit diagonal.
// Derived parts: strict x ≺ y, indifference x ∼ y, incomparability x ⋈ y.
// Values are immutable once built; mutation is limited to construction code.
class Relation {
 public:
  explicit Relation(GroundSet ground);

  // pairs are (x, y) index pairs meaning x ≾ y; with reflexive_closure the
  // full diagonal is added afterwards.
  static Relation from_pairs(GroundSet ground,
                             const std::vector<std::pair<int, int>>& pairs,
                             bool reflexive_closure);

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }

  bool leq(int i, int j) const { return m_.get(i, j); }
  bool lt(int i, int j) const { return m_.get(i, j) && !m_.get(j, i); }
  bool equiv(int i, int j) const { return m_.get(i, j) && m_.get(j, i); }
  bool incomparable(int i, int j) const {
    return !m_.get(i, j) && !m_.get(j, i);
  }

  void add(int i, int j) { m_.set(i, j); }
  void add_reflexive();
  void or_row(int dst, int src) { m_.or_row_into(dst, src); }

  const BitMatrix& matrix() const { return m_; }
  bool operator==(const Relation& o) const {
    return ground_ == o.ground_ && m_ == o.m_;
  }

  std::vector<std::pair<int, int>> pairs() const;

 private:
  GroundSet ground_;
  BitMatrix m_;
};

}  // namespace ordrep
