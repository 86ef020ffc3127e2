#include "treecycles/expression.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "treecycles/error.hpp"

namespace treecycles {
namespace {

constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, int strands) : text_(text), strands_(strands) {}

  CohomologyClass run() {
    CohomologyClass out(strands_);
    skip_space();
    bool negative = false;
    if (accept_sign(negative)) skip_space();
    while (true) {
      CohomologyClass term = parse_term();
      if (negative) term *= -1;
      out += term;
      skip_space();
      if (at_end()) break;
      if (!accept_sign(negative)) fail("expected '+' or '-'");
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("expression syntax error at offset " + std::to_string(pos_) + ": " + what);
  }

  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept_sign(bool& negative) {
    if (at_end()) return false;
    if (text_[pos_] == '+') {
      negative = false;
      ++pos_;
      return true;
    }
    if (text_[pos_] == '-') {
      negative = true;
      ++pos_;
      return true;
    }
    if (text_.substr(pos_).starts_with(kUnicodeMinus)) {
      negative = true;
      pos_ += kUnicodeMinus.size();
      return true;
    }
    return false;
  }

  bool accept(char c) {
    skip_space();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string parse_digits() {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected an integer");
    return std::string(text_.substr(start, pos_ - start));
  }

  int parse_index() {
    const std::string digits = parse_digits();
    if (digits.size() > 6) fail("strand index too large");
    return std::stoi(digits);
  }

  Generator parse_factor() {
    skip_space();
    if (at_end() || text_[pos_] != 'w') fail("expected 'w('");
    ++pos_;
    expect('(');
    const int a = parse_index();
    expect(',');
    const int b = parse_index();
    expect(')');
    if (a > strands_ || b > strands_ || a < 1 || b < 1) {
      throw DomainError("w(" + std::to_string(a) + "," + std::to_string(b) + ") out of range for " +
                        std::to_string(strands_) + " strands");
    }
    return Generator::make(a, b);
  }

  CohomologyClass parse_term() {
    skip_space();
    BigInt coeff = 1;
    std::vector<Generator> factors;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      coeff = BigInt(parse_digits());
      if (!accept('*')) {
        CohomologyClass scalar = CohomologyClass::unit(strands_);
        return scalar *= coeff;
      }
    }
    factors.push_back(parse_factor());
    while (accept('*')) factors.push_back(parse_factor());
    CohomologyClass term = straighten(strands_, factors);
    return term *= coeff;
  }

  std::string_view text_;
  int strands_;
  std::size_t pos_ = 0;
};

}  // namespace

CohomologyClass parse_expression(std::string_view text, int strands) {
  return ExpressionParser(text, strands).run();
}

}  // namespace treecycles
