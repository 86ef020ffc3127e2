#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace treecycles {

// A sequence (k_1, ..., k_{g-2}) with 1 <= k_i <= i. Indexes both the top
// cohomology basis W_k and the balanced trees of genus g.
class KSequence {
 public:
  explicit KSequence(std::vector<int> entries);
  // Comma-separated list, e.g. "1,1,2".
  static KSequence parse(std::string_view text);

  int genus() const { return static_cast<int>(entries_.size()) + 2; }
  int length() const { return static_cast<int>(entries_.size()); }
  std::span<const int> entries() const { return entries_; }
  // 1-based, matching k_i.
  int at(int i) const { return entries_[static_cast<std::size_t>(i - 1)]; }

  // "(1,1,2)"
  std::string to_string() const;

  friend auto operator<=>(const KSequence&, const KSequence&) = default;

 private:
  std::vector<int> entries_;
};

// All (g-2)! sequences in lexicographic order.
std::vector<KSequence> k_sequences(int g);

}  // namespace treecycles
