#include "ordrep/relation.hpp"

namespace ordrep {

GroundSet::GroundSet(std::vector<std::string> names)
    : names_(std::move(names)) {
  if (names_.empty()) throw ParseError("ground set must be nonempty");
  if (static_cast<int>(names_.size()) > kMaxElements) {
    throw CapExceeded("ground set exceeds element cap");
  }
  for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
    if (names_[i].empty()) throw ParseError("empty element label");
    if (!index_.emplace(names_[i], i).second) {
      throw ParseError("duplicate element label: " + names_[i]);
    }
  }
}

int GroundSet::index(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw UnknownLabel(label);
  return it->second;
}

BitMatrix::BitMatrix(int n)
    : n_(n),
      stride_((n + 63) / 64),
      w_(static_cast<std::size_t>(n) * ((n + 63) / 64), 0) {}

void BitMatrix::or_row_into(int dst, int src) {
  std::size_t d = static_cast<std::size_t>(dst) * stride_;
  std::size_t s = static_cast<std::size_t>(src) * stride_;
  for (int k = 0; k < stride_; ++k) w_[d + k] |= w_[s + k];
}

Relation::Relation(GroundSet ground)
    : ground_(std::move(ground)), m_(ground_.size()) {}

Relation Relation::from_pairs(GroundSet ground,
                              const std::vector<std::pair<int, int>>& pairs,
                              bool reflexive_closure) {
  Relation r(std::move(ground));
  int n = r.size();
  for (const auto& [x, y] : pairs) {
    if (x < 0 || x >= n || y < 0 || y >= n) {
      throw ParseError("pair index out of range");
    }
    r.add(x, y);
  }
  if (reflexive_closure) r.add_reflexive();
  return r;
}

void Relation::add_reflexive() {
  for (int i = 0; i < size(); ++i) m_.set(i, i);
}

std::vector<std::pair<int, int>> Relation::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < size(); ++j) {
      if (m_.get(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

}  // namespace ordrep
