#include "treecycles/arnold.hpp"

#include <algorithm>
#include <utility>

#include "treecycles/error.hpp"

namespace treecycles {

Generator Generator::make(int a, int b) {
  if (a == b) throw DomainError("w(" + std::to_string(a) + "," + std::to_string(b) + ") needs distinct indices");
  if (a < 1 || b < 1) throw DomainError("strand indices must be positive");
  return a < b ? Generator{a, b} : Generator{b, a};
}

bool Monomial::is_admissible() const {
  for (std::size_t p = 0; p < factors_.size(); ++p) {
    if (factors_[p].i >= factors_[p].j) return false;
    if (p > 0 && factors_[p - 1].j >= factors_[p].j) return false;
  }
  return true;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const Generator& f : factors_) {
    if (!out.empty()) out += "*";
    out += "w(" + std::to_string(f.i) + "," + std::to_string(f.j) + ")";
  }
  return out;
}

CohomologyClass::CohomologyClass(int strands) : strands_(strands) {
  if (strands < 1) throw DomainError("strand count must be positive");
}

CohomologyClass CohomologyClass::unit(int strands) {
  CohomologyClass c(strands);
  c.add_term(Monomial{}, 1);
  return c;
}

CohomologyClass CohomologyClass::generator(int strands, int a, int b) {
  const Generator gen = Generator::make(a, b);
  return straighten(strands, std::span<const Generator>(&gen, 1));
}

CohomologyClass CohomologyClass::monomial(int strands, const Monomial& admissible) {
  CohomologyClass c(strands);
  c.add_term(admissible, 1);
  return c;
}

std::optional<int> CohomologyClass::degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_) {
    if (m.degree() != d) return std::nullopt;
  }
  return d;
}

BigInt CohomologyClass::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void CohomologyClass::add_term(const Monomial& m, const BigInt& coeff) {
  if (!m.is_admissible()) throw DomainError("monomial " + m.to_string() + " is not admissible");
  if (!m.factors().empty() && m.factors().back().j > strands_) {
    throw DomainError("monomial " + m.to_string() + " exceeds " + std::to_string(strands_) + " strands");
  }
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void CohomologyClass::require_same_strands(const CohomologyClass& other) const {
  if (other.strands_ != strands_) {
    throw DomainError("strand count mismatch: " + std::to_string(strands_) + " vs " +
                      std::to_string(other.strands_));
  }
}

CohomologyClass& CohomologyClass::operator+=(const CohomologyClass& other) {
  require_same_strands(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

CohomologyClass& CohomologyClass::operator-=(const CohomologyClass& other) {
  require_same_strands(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

CohomologyClass& CohomologyClass::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

std::string CohomologyClass::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (m.degree() == 0) {
      out += magnitude.str();
    } else {
      if (magnitude != 1) out += magnitude.str() + "*";
      out += m.to_string();
    }
  }
  return out;
}

namespace {

struct PendingTerm {
  BigInt coeff;
  std::vector<Generator> factors;
};

// Sorts by (larger, smaller) index with the exterior sign. Returns false when
// a factor repeats, i.e. the product vanishes.
bool sort_with_sign(std::vector<Generator>& factors, BigInt& coeff) {
  bool odd = false;
  for (std::size_t a = 1; a < factors.size(); ++a) {
    for (std::size_t b = a; b > 0; --b) {
      if (factors[b - 1] == factors[b]) return false;
      if (factors[b] < factors[b - 1]) {
        std::swap(factors[b - 1], factors[b]);
        odd = !odd;
      } else {
        break;
      }
    }
  }
  if (odd) coeff = -coeff;
  return true;
}

}  // namespace

CohomologyClass straighten(int strands, std::span<const Generator> factors) {
  CohomologyClass out(strands);
  for (const Generator& f : factors) {
    if (f.i < 1 || f.j > strands || f.i >= f.j) {
      throw DomainError("generator w(" + std::to_string(f.i) + "," + std::to_string(f.j) +
                        ") out of range for " + std::to_string(strands) + " strands");
    }
  }
  std::vector<PendingTerm> work;
  work.push_back(PendingTerm{1, {factors.begin(), factors.end()}});
  while (!work.empty()) {
    PendingTerm term = std::move(work.back());
    work.pop_back();
    if (!sort_with_sign(term.factors, term.coeff)) continue;
    // Rewrite the pair sharing the largest repeated larger index.
    std::size_t p = term.factors.size();
    for (std::size_t q = term.factors.size(); q-- > 1;) {
      if (term.factors[q - 1].j == term.factors[q].j) {
        p = q - 1;
        break;
      }
    }
    if (p == term.factors.size()) {
      out.add_term(Monomial(std::move(term.factors)), term.coeff);
      continue;
    }
    const int a = term.factors[p].i;
    const int b = term.factors[p + 1].i;
    const int l = term.factors[p].j;
    PendingTerm first{term.coeff, term.factors};
    first.factors[p] = Generator{a, b};
    first.factors[p + 1] = Generator{b, l};
    PendingTerm second{-term.coeff, std::move(term.factors)};
    second.factors[p] = Generator{a, b};
    second.factors[p + 1] = Generator{a, l};
    work.push_back(std::move(first));
    work.push_back(std::move(second));
  }
  return out;
}

CohomologyClass multiply(const CohomologyClass& a, const CohomologyClass& b) {
  if (a.strands() != b.strands()) {
    throw DomainError("strand count mismatch: " + std::to_string(a.strands()) + " vs " +
                      std::to_string(b.strands()));
  }
  CohomologyClass out(a.strands());
  std::vector<Generator> joined;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      joined.assign(ma.factors().begin(), ma.factors().end());
      joined.insert(joined.end(), mb.factors().begin(), mb.factors().end());
      CohomologyClass product = straighten(a.strands(), joined);
      product *= ca * cb;
      out += product;
    }
  }
  return out;
}

namespace {

void extend_basis(int strands, int remaining, int next_larger, std::vector<Generator>& prefix,
                  std::vector<Monomial>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int l = next_larger; l <= strands - remaining + 1; ++l) {
    for (int k = 1; k < l; ++k) {
      prefix.push_back(Generator{k, l});
      extend_basis(strands, remaining - 1, l + 1, prefix, out);
      prefix.pop_back();
    }
  }
}

}  // namespace

std::vector<Monomial> basis(int strands, int p) {
  if (strands < 2) throw DomainError("basis needs at least 2 strands");
  std::vector<Monomial> out;
  if (p < 0 || p > strands - 1) return out;
  std::vector<Generator> prefix;
  extend_basis(strands, p, 2, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t rank(int strands, int p) { return static_cast<std::int64_t>(basis(strands, p).size()); }

Monomial w_basis_index(const KSequence& k) {
  std::vector<Generator> factors;
  factors.reserve(static_cast<std::size_t>(k.length()));
  for (int i = 1; i <= k.length(); ++i) factors.push_back(Generator{k.at(i), i + 1});
  return Monomial(std::move(factors));
}

std::optional<KSequence> top_degree_index(const Monomial& m, int strands) {
  if (m.degree() != strands - 1 || !m.is_admissible()) return std::nullopt;
  std::vector<int> entries;
  for (int p = 0; p < m.degree(); ++p) {
    const Generator& f = m.factors()[static_cast<std::size_t>(p)];
    if (f.j != p + 2) return std::nullopt;
    entries.push_back(f.i);
  }
  return KSequence(std::move(entries));
}

}  // namespace treecycles
