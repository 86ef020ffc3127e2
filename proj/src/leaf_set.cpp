#include "treecycles/leaf_set.hpp"

#include <algorithm>

#include "treecycles/error.hpp"

namespace treecycles {

LeafSet LeafSet::single(int label) {
  if (label < 1 || label > kMaxLabel) {
    throw DomainError("leaf label " + std::to_string(label) + " outside 1.." +
                      std::to_string(kMaxLabel));
  }
  return LeafSet(std::uint64_t{1} << label);
}

LeafSet LeafSet::interval(int first, int last) {
  LeafSet out;
  for (int l = first; l <= last; ++l) out = out | single(l);
  return out;
}

std::vector<int> LeafSet::labels() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest));
  }
  return out;
}

std::string LeafSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int l : labels()) {
    if (!first) out += ",";
    out += std::to_string(l);
    first = false;
  }
  return out + "}";
}

bool canonical_less(LeafSet a, LeafSet b) {
  if (a.size() != b.size()) return a.size() > b.size();
  // Sorted label lists of equal length: the first differing label decides,
  // and it is the smallest label in the symmetric difference.
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const std::uint64_t lowest = diff & (~diff + 1);
  return (a.bits() & lowest) != 0;
}

}  // namespace treecycles
