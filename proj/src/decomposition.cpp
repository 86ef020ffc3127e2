#include "treecycles/decomposition.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "treecycles/error.hpp"

namespace treecycles {

std::int64_t CycleDecomposition::coefficient(const KSequence& k) const {
  auto it = coefficients.find(k);
  return it == coefficients.end() ? 0 : it->second;
}

Tree build_balanced_tree(const KSequence& k) {
  const int g = k.genus();
  if (g - 1 > LeafSet::kMaxLabel) throw DomainError("genus too large");
  // cluster[r] is the leaf set currently represented by label r.
  std::vector<LeafSet> cluster(static_cast<std::size_t>(g));
  for (int r = 1; r <= g - 1; ++r) cluster[static_cast<std::size_t>(r)] = LeafSet::single(r);
  std::vector<LeafSet> sets;
  sets.reserve(static_cast<std::size_t>(g - 2));
  for (int i = g - 2; i >= 1; --i) {
    auto& keep = cluster[static_cast<std::size_t>(k.at(i))];
    auto& absorbed = cluster[static_cast<std::size_t>(i + 1)];
    keep = keep | absorbed;
    absorbed = LeafSet{};
    sets.push_back(keep);
  }
  return Tree::from_sets(g - 1, std::move(sets));
}

std::vector<int> construction_positions(const Tree& t) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(t.node_count()));
  for (const InternalNode& n : t.nodes()) {
    out.push_back(n.children[1].leaves.min() - 1);
  }
  return out;
}

std::vector<LeafSet> construction_columns(const Tree& t) {
  const std::vector<int> pos = construction_positions(t);
  std::vector<LeafSet> out(pos.size());
  for (std::size_t j = 0; j < pos.size(); ++j) {
    out[static_cast<std::size_t>(pos[j] - 1)] = t.nodes()[j].leaves;
  }
  return out;
}

namespace {

// Sign of a permutation given as 1-based images.
int permutation_sign(std::vector<int> images) {
  int sign = 1;
  for (std::size_t a = 0; a < images.size(); ++a) {
    while (images[a] != static_cast<int>(a) + 1) {
      std::swap(images[a], images[static_cast<std::size_t>(images[a] - 1)]);
      sign = -sign;
    }
  }
  return sign;
}

void require_same_genus(const KSequence& k, int g) {
  if (k.genus() != g) {
    throw DomainError("genus mismatch: k " + k.to_string() + " has genus " + std::to_string(k.genus()) +
                      ", tree has genus " + std::to_string(g));
  }
}

}  // namespace

int construction_parity(const Tree& t) { return permutation_sign(construction_positions(t)); }

KSequence balanced_tree_to_k(const Tree& t) {
  if (!is_balanced(t)) throw DomainError("tree is not balanced");
  // The node merging clusters with minima a < b was created at step b-1 with k_{b-1} = a.
  std::vector<int> entries(static_cast<std::size_t>(t.node_count()), 0);
  for (const InternalNode& n : t.nodes()) {
    const int a = n.children[0].leaves.min();
    const int b = n.children[1].leaves.min();
    entries[static_cast<std::size_t>(b - 2)] = a;
  }
  return KSequence(std::move(entries));
}

SquareMatrix incidence_matrix(const KSequence& k, std::span<const LeafSet> columns) {
  const int size = k.length();
  if (static_cast<int>(columns.size()) != size) {
    throw DomainError("genus mismatch: k " + k.to_string() + " against " +
                      std::to_string(columns.size()) + " curves");
  }
  SquareMatrix x(size);
  for (int i = 1; i <= size; ++i) {
    assert(k.at(i) < i + 1);
    const LeafSet pair = LeafSet::single(k.at(i)) | LeafSet::single(i + 1);
    for (int j = 0; j < size; ++j) {
      x.at(i - 1, j) = columns[static_cast<std::size_t>(j)].includes(pair) ? 1 : 0;
    }
  }
  return x;
}

SquareMatrix incidence_matrix(const KSequence& k, const Tree& t) {
  require_same_genus(k, t.genus());
  const std::vector<LeafSet> columns = t.sets();
  return incidence_matrix(k, columns);
}

int pairing_sign(int g) {
  const int m = g - 2;
  return (m * (m - 1) / 2) % 2 == 0 ? 1 : -1;
}

std::int64_t pair(const KSequence& k, const Tree& t) {
  return pairing_sign(t.genus()) * det(incidence_matrix(k, t));
}

BigInt pair_class(const CohomologyClass& c, const Tree& t) {
  const int g = t.genus();
  if (c.strands() != g - 1) {
    throw DomainError("class lives on " + std::to_string(c.strands()) + " strands, tree needs " +
                      std::to_string(g - 1));
  }
  BigInt total = 0;
  for (const auto& [m, coeff] : c.terms()) {
    const std::optional<KSequence> k = top_degree_index(m, g - 1);
    if (!k) throw DomainError("term " + m.to_string() + " is not of degree " + std::to_string(g - 2));
    total += coeff * pair(*k, t);
  }
  return total;
}

CycleDecomposition decompose(const Tree& t) {
  CycleDecomposition out;
  out.genus = t.genus();
  const std::vector<LeafSet> columns = t.sets();
  for (const KSequence& k : k_sequences(t.genus())) {
    const std::int64_t d = det(incidence_matrix(k, columns));
    if (d != 0) out.coefficients.emplace(k, d);
  }
  return out;
}

std::vector<std::vector<std::int64_t>> duality_table(int g) {
  const std::vector<KSequence> ks = k_sequences(g);
  std::vector<std::vector<LeafSet>> columns;
  columns.reserve(ks.size());
  for (const KSequence& k : ks) columns.push_back(build_balanced_tree(k).sets());
  std::vector<std::vector<std::int64_t>> table(ks.size(), std::vector<std::int64_t>(ks.size(), 0));
  for (std::size_t row = 0; row < ks.size(); ++row) {
    for (std::size_t col = 0; col < ks.size(); ++col) {
      table[row][col] = det(incidence_matrix(ks[row], columns[col]));
    }
  }
  return table;
}

}  // namespace treecycles
