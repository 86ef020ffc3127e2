#include "treecycles/serialization.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "treecycles/error.hpp"

namespace treecycles {

nlohmann::json tree_to_json(const Tree& t) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const InternalNode& n : t.nodes()) nodes.push_back(n.leaves.labels());
  return {{"g", t.genus()}, {"newick", render_tree(t)}, {"nodes", std::move(nodes)}};
}

Tree tree_from_json(const nlohmann::json& j) {
  try {
    const std::optional<int> g = j.contains("g") ? std::optional<int>(j.at("g").get<int>()) : std::nullopt;
    Tree t = parse_tree(j.at("newick").get<std::string>(), g);
    if (j.contains("nodes")) {
      std::vector<LeafSet> sets;
      for (const auto& node : j.at("nodes")) {
        LeafSet s;
        for (int label : node.get<std::vector<int>>()) s = s | LeafSet::single(label);
        sets.push_back(s);
      }
      if (sets != t.sets()) throw DomainError("\"nodes\" disagrees with \"newick\"");
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed tree JSON: ") + e.what());
  }
}

nlohmann::json decomposition_to_json(const CycleDecomposition& d) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [k, coeff] : d.coefficients) {
    terms.push_back({{"k", std::vector<int>(k.entries().begin(), k.entries().end())}, {"coeff", coeff}});
  }
  return {{"g", d.genus}, {"basis", "balanced-construction"}, {"terms", std::move(terms)}};
}

CycleDecomposition decomposition_from_json(const nlohmann::json& j) {
  try {
    CycleDecomposition d;
    d.genus = j.at("g").get<int>();
    if (j.at("basis").get<std::string>() != "balanced-construction") throw DomainError("unknown basis");
    for (const auto& term : j.at("terms")) {
      KSequence k(term.at("k").get<std::vector<int>>());
      if (k.genus() != d.genus) throw DomainError("term " + k.to_string() + " has the wrong genus");
      const auto coeff = term.at("coeff").get<std::int64_t>();
      if (coeff != 0) d.coefficients[k] += coeff;
    }
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed decomposition JSON: ") + e.what());
  }
}

nlohmann::json signed_sum_to_json(const SignedTreeSum& s) {
  std::vector<std::pair<std::string, std::int64_t>> rows;
  for (const auto& [tree, coeff] : s.terms) rows.emplace_back(render_tree(tree), coeff);
  std::sort(rows.begin(), rows.end());
  nlohmann::json terms = nlohmann::json::array();
  for (auto& [tree, coeff] : rows) terms.push_back({{"tree", std::move(tree)}, {"coeff", coeff}});
  return {{"g", s.genus}, {"terms", std::move(terms)}};
}

nlohmann::json rotation_to_json(const RotationStep& step) {
  return {{"at", step.at}, {"triple", {step.triple[0], step.triple[1], step.triple[2]}}};
}

namespace {

nlohmann::json coefficient_json(const BigInt& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
    return c.convert_to<std::int64_t>();
  }
  return c.str();
}

}  // namespace

nlohmann::json class_to_json(const CohomologyClass& c) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, coeff] : c.terms()) {
    terms.push_back({{"monomial", m.to_string()}, {"coeff", coefficient_json(coeff)}});
  }
  return {{"n", c.strands()}, {"terms", std::move(terms)}, {"text", c.to_string()}};
}

}  // namespace treecycles
