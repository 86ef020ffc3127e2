#include "treecycles/k_sequence.hpp"

#include <cctype>
#include <utility>

#include "treecycles/error.hpp"

namespace treecycles {

KSequence::KSequence(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DomainError("k sequence must have at least one entry (g >= 3)");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const int bound = static_cast<int>(i) + 1;
    if (entries_[i] < 1 || entries_[i] > bound) {
      throw DomainError("k_" + std::to_string(bound) + " = " + std::to_string(entries_[i]) +
                        " violates 1 <= k_i <= i");
    }
  }
}

KSequence KSequence::parse(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  while (true) {
    skip();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw DomainError("malformed k sequence '" + std::string(text) + "'");
    }
    long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos++] - '0');
      if (value > 1000000) throw DomainError("k entry too large");
    }
    out.push_back(static_cast<int>(value));
    skip();
    if (pos == text.size()) break;
    if (text[pos] != ',') throw DomainError("malformed k sequence '" + std::string(text) + "'");
    ++pos;
  }
  return KSequence(std::move(out));
}

std::string KSequence::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(entries_[i]);
  }
  return out + ")";
}

std::vector<KSequence> k_sequences(int g) {
  if (g < 3) throw DomainError("genus must be at least 3, got " + std::to_string(g));
  const int len = g - 2;
  std::vector<KSequence> out;
  std::vector<int> current(static_cast<std::size_t>(len), 1);
  // Odometer in lexicographic order; position i runs over 1..i+1.
  while (true) {
    out.emplace_back(current);
    int i = len - 1;
    while (i >= 0 && current[static_cast<std::size_t>(i)] == i + 1) {
      current[static_cast<std::size_t>(i)] = 1;
      --i;
    }
    if (i < 0) break;
    ++current[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace treecycles
