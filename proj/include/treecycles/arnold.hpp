#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "treecycles/k_sequence.hpp"

namespace treecycles {

using BigInt = boost::multiprecision::cpp_int;

// Degree-one class w(i,j) of H^*(PB_n); stored with i < j since w(j,i) = w(i,j).
struct Generator {
  int i = 1;
  int j = 2;

  static Generator make(int a, int b);

  // Ordered by the larger index, then the smaller one.
  friend constexpr std::strong_ordering operator<=>(const Generator& x, const Generator& y) {
    if (auto c = x.j <=> y.j; c != 0) return c;
    return x.i <=> y.i;
  }
  friend constexpr bool operator==(const Generator&, const Generator&) = default;
};

// An ordered product of generators.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Generator> factors) : factors_(std::move(factors)) {}

  std::span<const Generator> factors() const { return factors_; }
  int degree() const { return static_cast<int>(factors_.size()); }
  // Strictly increasing larger indices; the additive basis of the ring.
  bool is_admissible() const;
  // "w(1,2)*w(2,3)", or "1" for the empty product.
  std::string to_string() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Generator> factors_;
};

// An element of H^*(PB_n; Z) in admissible normal form. Terms may have mixed
// degrees; operations that need homogeneity check it themselves.
class CohomologyClass {
 public:
  explicit CohomologyClass(int strands);

  static CohomologyClass unit(int strands);
  static CohomologyClass generator(int strands, int a, int b);
  static CohomologyClass monomial(int strands, const Monomial& admissible);

  int strands() const { return strands_; }
  const std::map<Monomial, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Common degree of all terms; nullopt for zero or mixed classes.
  std::optional<int> degree() const;
  BigInt coefficient(const Monomial& m) const;

  // `m` must be admissible on this strand count.
  void add_term(const Monomial& m, const BigInt& coeff);

  CohomologyClass& operator+=(const CohomologyClass& other);
  CohomologyClass& operator-=(const CohomologyClass& other);
  CohomologyClass& operator*=(const BigInt& scalar);

  friend CohomologyClass operator+(CohomologyClass a, const CohomologyClass& b) { return a += b; }
  friend CohomologyClass operator-(CohomologyClass a, const CohomologyClass& b) { return a -= b; }
  friend CohomologyClass operator*(const BigInt& s, CohomologyClass a) { return a *= s; }
  friend bool operator==(const CohomologyClass&, const CohomologyClass&) = default;

  // "w(1,2)*w(2,3) - w(1,2)*w(1,3)", or "0".
  std::string to_string() const;

 private:
  void require_same_strands(const CohomologyClass& other) const;

  int strands_;
  std::map<Monomial, BigInt> terms_;
};

// Expands the product of `factors` in admissible monomials using
// antisymmetry and w(a,l)w(b,l) = w(a,b)w(b,l) - w(a,b)w(a,l) for a < b < l.
CohomologyClass straighten(int strands, std::span<const Generator> factors);
CohomologyClass multiply(const CohomologyClass& a, const CohomologyClass& b);

// Admissible monomials of degree p in sorted order; empty when p is outside 0..n-1.
std::vector<Monomial> basis(int strands, int p);
std::int64_t rank(int strands, int p);

// W_k = w(k_1,2) w(k_2,3) ... w(k_{g-2},g-1), on g-1 strands.
Monomial w_basis_index(const KSequence& k);
// Inverse of w_basis_index for admissible monomials of top degree n-1.
std::optional<KSequence> top_degree_index(const Monomial& m, int strands);

}  // namespace treecycles
