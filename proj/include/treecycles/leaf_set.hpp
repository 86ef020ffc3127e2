#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace treecycles {

// A subset of the leaf labels {1, ..., 63}, stored as a bitmask where bit l
// stands for label l. Bit 0 is never set.
class LeafSet {
 public:
  static constexpr int kMaxLabel = 63;

  constexpr LeafSet() = default;
  constexpr explicit LeafSet(std::uint64_t bits) : bits_(bits) {}

  static LeafSet single(int label);
  // {first, ..., last}; empty when last < first.
  static LeafSet interval(int first, int last);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }
  // Smallest label; the set must be nonempty.
  int min() const { return std::countr_zero(bits_); }
  // Largest label; the set must be nonempty.
  int max() const { return 63 - std::countl_zero(bits_); }

  bool contains(int label) const {
    return label >= 1 && label <= kMaxLabel && ((bits_ >> label) & 1U) != 0;
  }
  constexpr bool includes(LeafSet other) const { return (other.bits_ & ~bits_) == 0; }
  constexpr bool intersects(LeafSet other) const { return (bits_ & other.bits_) != 0; }
  constexpr bool nested_or_disjoint(LeafSet other) const {
    return !intersects(other) || includes(other) || other.includes(*this);
  }

  std::vector<int> labels() const;
  // "{1,2,5}"
  std::string to_string() const;

  constexpr LeafSet operator|(LeafSet o) const { return LeafSet(bits_ | o.bits_); }
  constexpr LeafSet operator&(LeafSet o) const { return LeafSet(bits_ & o.bits_); }
  constexpr LeafSet operator-(LeafSet o) const { return LeafSet(bits_ & ~o.bits_); }

  friend constexpr bool operator==(LeafSet, LeafSet) = default;
  // Plain bitmask order, for use as a map key. Not the canonical node order.
  friend constexpr auto operator<=>(LeafSet a, LeafSet b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

// Canonical internal-node order: larger sets first, equal sizes compared
// lexicographically on their sorted label lists.
bool canonical_less(LeafSet a, LeafSet b);

}  // namespace treecycles
