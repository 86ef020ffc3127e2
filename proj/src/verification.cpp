#include "treecycles/verification.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <set>
#include <thread>
#include <utility>

#include "treecycles/arnold.hpp"
#include "treecycles/decomposition.hpp"
#include "treecycles/error.hpp"
#include "treecycles/rewrite.hpp"
#include "treecycles/serialization.hpp"
#include "treecycles/tree.hpp"

namespace treecycles {

using nlohmann::json;

json report_to_json(const SuiteReport& r) {
  return {{"suite", r.suite},
          {"param", r.param},
          {"cases", r.cases},
          {"failures", r.failures},
          {"millis", r.millis}};
}

std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw DomainError("empty sampling range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  while (true) {
    const std::uint64_t draw = rng();
    if (draw < limit) return draw % bound;
  }
}

std::int64_t expected_tree_count(int g) {
  std::int64_t out = 1;
  for (int f = 1; f <= 2 * g - 5; f += 2) out *= f;
  return out;
}

std::int64_t expected_balanced_count(int g) {
  std::int64_t out = 1;
  for (int f = 2; f <= g - 2; ++f) out *= f;
  return out;
}

std::vector<std::int64_t> poincare_coefficients(int strands) {
  std::vector<std::int64_t> poly{1};
  for (int i = 1; i <= strands - 1; ++i) {
    std::vector<std::int64_t> next(poly.size() + 1, 0);
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d] += poly[d];
      next[d + 1] += i * poly[d];
    }
    poly = std::move(next);
  }
  return poly;
}

namespace {

class Stopwatch {
 public:
  std::int64_t millis() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Runs `count` independent cases on up to `threads` workers. Each worker gets
// its own checker from `make_checker`; failures come back ordered by case index.
template <class MakeChecker>
std::vector<json> run_cases(std::size_t count, int threads, MakeChecker make_checker) {
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), count));
  std::vector<std::vector<std::pair<std::size_t, json>>> found(workers);
  auto work = [&](std::size_t w) {
    auto check = make_checker();
    for (std::size_t i = w; i < count; i += workers) {
      if (std::optional<json> failure = check(i)) found[w].emplace_back(i, std::move(*failure));
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  std::vector<std::pair<std::size_t, json>> merged;
  for (auto& part : found) std::move(part.begin(), part.end(), std::back_inserter(merged));
  std::sort(merged.begin(), merged.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<json> out;
  out.reserve(merged.size());
  for (auto& [i, failure] : merged) out.push_back(std::move(failure));
  return out;
}

void require_at_least_genus_three(int g) {
  if (g < 3) throw DomainError("genus must be at least 3, got " + std::to_string(g));
}

json k_json(const KSequence& k) { return std::vector<int>(k.entries().begin(), k.entries().end()); }

}  // namespace

SuiteReport verify_counts(int g, const VerifyOptions& options) {
  if (g < 3 || g > options.counts_ceiling) {
    throw DomainError("counts suite needs 3 <= g <= " + std::to_string(options.counts_ceiling));
  }
  Stopwatch clock;
  SuiteReport report{"counts", g, 0, {}, 0};
  const std::vector<Tree> trees = enumerate_trees(g);
  const std::vector<Tree> balanced = enumerate_balanced(g);
  report.cases = static_cast<std::int64_t>(trees.size() + balanced.size());

  const auto n_trees = static_cast<std::int64_t>(trees.size());
  const auto n_balanced = static_cast<std::int64_t>(balanced.size());
  if (n_trees != expected_tree_count(g)) {
    report.failures.push_back({{"check", "tree count"}, {"expected", expected_tree_count(g)}, {"actual", n_trees}});
  }
  if (n_balanced != expected_balanced_count(g)) {
    report.failures.push_back(
        {{"check", "balanced count"}, {"expected", expected_balanced_count(g)}, {"actual", n_balanced}});
  }
  if (std::set<Tree>(trees.begin(), trees.end()).size() != trees.size()) {
    report.failures.push_back({{"check", "trees distinct"}});
  }
  std::vector<Tree> filtered;
  std::copy_if(trees.begin(), trees.end(), std::back_inserter(filtered), [](const Tree& t) { return is_balanced(t); });
  if (filtered != balanced) {
    report.failures.push_back({{"check", "balanced equals filtered"},
                               {"filtered", static_cast<std::int64_t>(filtered.size())},
                               {"generated", n_balanced}});
  }
  report.millis = clock.millis();
  return report;
}

SuiteReport verify_duality(int g, const VerifyOptions& options) {
  if (g < 3 || g > options.duality_ceiling) {
    throw DomainError("duality suite needs 3 <= g <= " + std::to_string(options.duality_ceiling));
  }
  Stopwatch clock;
  SuiteReport report{"duality", g, 0, {}, 0};
  const std::vector<KSequence> ks = k_sequences(g);
  std::vector<Tree> trees;
  trees.reserve(ks.size());
  for (const KSequence& k : ks) trees.push_back(build_balanced_tree(k));
  const std::size_t n = ks.size();
  report.cases = static_cast<std::int64_t>(n * n);

  report.failures = run_cases(n, options.threads, [&] {
    return [&](std::size_t col) -> std::optional<json> {
      const KSequence& k = ks[col];
      const Tree& tk = trees[col];
      const std::vector<LeafSet> canonical = tk.sets();
      const std::vector<LeafSet> constructed = construction_columns(tk);
      const int epsilon = construction_parity(tk);
      json problems = json::array();
      if (!is_balanced(tk)) problems.push_back("T_k is not balanced");
      if (balanced_tree_to_k(tk) != k) problems.push_back("balanced_tree_to_k does not invert");
      const SquareMatrix own = incidence_matrix(k, constructed);
      if (!is_lower_unitriangular(own)) {
        problems.push_back({{"lower_unitriangular", false}, {"matrix", own.rows()}});
      }
      for (std::size_t row = 0; row < n; ++row) {
        const std::int64_t entry = det(incidence_matrix(ks[row], canonical));
        const std::int64_t want = row == col ? epsilon : 0;
        const std::int64_t built = det(incidence_matrix(ks[row], constructed));
        if (entry != want || built != (row == col ? 1 : 0)) {
          problems.push_back({{"k_prime", k_json(ks[row])},
                              {"canonical_det", entry},
                              {"construction_det", built},
                              {"expected_canonical", want},
                              {"matrix", incidence_matrix(ks[row], canonical).rows()}});
        }
      }
      if (problems.empty()) return std::nullopt;
      return json{{"k", k_json(k)}, {"tree", render_tree(tk)}, {"epsilon", epsilon}, {"problems", problems}};
    };
  });
  report.millis = clock.millis();
  return report;
}

namespace {

struct RotationCase {
  std::size_t tree;
  NodeRef pivot;
  NodeRef inner;
};

std::vector<std::pair<NodeRef, NodeRef>> eligible_rotations(const Tree& t) {
  std::vector<std::pair<NodeRef, NodeRef>> out;
  for (int j = 1; j <= t.node_count(); ++j) {
    for (const Subtree& child : t.node(NodeRef{j}).children) {
      if (!child.is_leaf) out.emplace_back(NodeRef{j}, NodeRef{child.id + 1});
    }
  }
  return out;
}

std::optional<json> check_rotation(const Tree& t, NodeRef pivot, NodeRef inner) {
  const Rotation r = rotate(OrderedTree(t), pivot, inner);
  json witness = {{"tree", render_tree(t)},
                  {"pivot", pivot.index},
                  {"inner", inner.index},
                  {"triple", {render_tree(t), render_tree(r.first.tree()), render_tree(r.second.tree())}}};
  const std::optional<CyclicTriple> triple = is_cyclic_triple(t, r.first.tree(), r.second.tree());
  if (!triple) {
    witness["problem"] = "not recognized as a cyclic triple";
    return witness;
  }
  if (!(triple->trees[1] == r.first) || !(triple->trees[2] == r.second)) {
    witness["problem"] = "recognized alignment differs from the rotation's";
    return witness;
  }
  if (!verify_cyclic_determinant_identity(*triple)) {
    json sums = json::array();
    for (const KSequence& k : k_sequences(t.genus())) {
      std::int64_t total = 0;
      for (const OrderedTree& member : triple->trees) total += det(incidence_matrix(k, member.columns()));
      if (total != 0) sums.push_back({{"k", k_json(k)}, {"sum", total}});
    }
    witness["problem"] = "aligned determinants do not cancel";
    witness["nonzero"] = sums;
    return witness;
  }
  return std::nullopt;
}

}  // namespace

SuiteReport verify_relations(int g, std::int64_t sample, const VerifyOptions& options) {
  require_at_least_genus_three(g);
  Stopwatch clock;
  SuiteReport report{"relations", g, 0, {}, 0};
  const std::vector<Tree> trees = enumerate_trees(g);
  std::vector<RotationCase> cases;
  if (g <= options.relations_exhaustive_ceiling || sample <= 0) {
    for (std::size_t i = 0; i < trees.size(); ++i) {
      for (const auto& [pivot, inner] : eligible_rotations(trees[i])) cases.push_back({i, pivot, inner});
    }
  } else {
    std::mt19937_64 rng(options.seed);
    while (static_cast<std::int64_t>(cases.size()) < sample) {
      const std::size_t i = uniform_index(rng, trees.size());
      const auto choices = eligible_rotations(trees[i]);
      if (choices.empty()) continue;
      const auto& [pivot, inner] = choices[uniform_index(rng, choices.size())];
      cases.push_back({i, pivot, inner});
    }
  }
  report.cases = static_cast<std::int64_t>(cases.size());
  report.failures = run_cases(cases.size(), options.threads, [&] {
    return [&](std::size_t c) {
      return check_rotation(trees[cases[c].tree], cases[c].pivot, cases[c].inner);
    };
  });
  report.millis = clock.millis();
  return report;
}

SuiteReport verify_crosspath(int g, const VerifyOptions& options) {
  require_at_least_genus_three(g);
  Stopwatch clock;
  SuiteReport report{"crosspath", g, 0, {}, 0};
  const std::vector<Tree> trees = enumerate_trees(g);
  report.cases = static_cast<std::int64_t>(trees.size());
  report.failures = run_cases(trees.size(), options.threads, [&] {
    return [&, reducer = Reducer()](std::size_t i) mutable -> std::optional<json> {
      const CycleDecomposition by_det = decompose(trees[i]);
      const SignedTreeSum sum = reducer.reduce(trees[i]);
      const CycleDecomposition by_rewrite = to_k_coordinates(sum);
      if (by_det == by_rewrite) return std::nullopt;
      return json{{"tree", render_tree(trees[i])},
                  {"det", decomposition_to_json(by_det)},
                  {"rewrite", decomposition_to_json(by_rewrite)},
                  {"balanced_sum", signed_sum_to_json(sum)}};
    };
  });
  report.millis = clock.millis();
  return report;
}

namespace {

CohomologyClass straighten_product(int n, std::initializer_list<Generator> factors) {
  return straighten(n, std::vector<Generator>(factors));
}

}  // namespace

SuiteReport verify_arnold(int n, const VerifyOptions& options) {
  if (n < 2 || n > 6) throw DomainError("arnold suite needs 2 <= n <= 6");
  Stopwatch clock;
  SuiteReport report{"arnold", n, 0, {}, 0};

  const std::vector<std::int64_t> poincare = poincare_coefficients(n);
  for (int p = 0; p <= n; ++p) {
    ++report.cases;
    const std::int64_t want = p < static_cast<int>(poincare.size()) ? poincare[static_cast<std::size_t>(p)] : 0;
    if (rank(n, p) != want) {
      report.failures.push_back({{"check", "rank"}, {"n", n}, {"p", p}, {"expected", want}, {"actual", rank(n, p)}});
    }
  }

  // Every ordered instance of the relation, alone and multiplied on either
  // side by each basis monomial of complementary degree.
  std::vector<Monomial> multipliers;
  for (int p = 0; p <= n - 3; ++p) {
    for (Monomial& m : basis(n, p)) multipliers.push_back(std::move(m));
  }
  for (int k = 1; k <= n; ++k) {
    for (int l = 1; l <= n; ++l) {
      for (int m = 1; m <= n; ++m) {
        if (k == l || l == m || k == m) continue;
        const Generator kl = Generator::make(k, l);
        const Generator lm = Generator::make(l, m);
        const Generator mk = Generator::make(m, k);
        const CohomologyClass relation = straighten_product(n, {kl, lm}) + straighten_product(n, {lm, mk}) +
                                         straighten_product(n, {mk, kl});
        for (const Monomial& mult : multipliers) {
          ++report.cases;
          const CohomologyClass factor = CohomologyClass::monomial(n, mult);
          const CohomologyClass left = multiply(factor, relation);
          const CohomologyClass right = multiply(relation, factor);
          if (!left.is_zero() || !right.is_zero() || !relation.is_zero()) {
            report.failures.push_back({{"check", "relation"},
                                       {"klm", {k, l, m}},
                                       {"multiplier", mult.to_string()},
                                       {"left", left.to_string()},
                                       {"right", right.to_string()}});
          }
        }
      }
    }
  }

  std::mt19937_64 rng(options.seed);
  const int max_degree = std::min(4, n * (n - 1) / 2);
  for (int sample = 0; sample < options.confluence_samples; ++sample) {
    ++report.cases;
    const auto degree = static_cast<int>(1 + uniform_index(rng, static_cast<std::uint64_t>(max_degree)));
    std::vector<Generator> factors;
    for (int f = 0; f < degree; ++f) {
      const auto a = static_cast<int>(1 + uniform_index(rng, static_cast<std::uint64_t>(n)));
      auto b = static_cast<int>(1 + uniform_index(rng, static_cast<std::uint64_t>(n - 1)));
      if (b >= a) ++b;
      factors.push_back(Generator::make(a, b));
    }
    std::vector<std::size_t> perm(factors.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[uniform_index(rng, i)]);
    std::vector<Generator> shuffled;
    for (std::size_t i : perm) shuffled.push_back(factors[i]);
    int sign = 1;
    for (std::size_t a = 0; a < perm.size(); ++a) {
      for (std::size_t b = a + 1; b < perm.size(); ++b) {
        if (perm[a] > perm[b]) sign = -sign;
      }
    }
    CohomologyClass expected = straighten(n, factors);
    expected *= sign;
    const CohomologyClass actual = straighten(n, shuffled);
    if (actual != expected) {
      std::vector<std::string> original_text;
      for (const Generator& f : factors) original_text.push_back(Monomial({f}).to_string());
      std::vector<std::string> shuffled_text;
      for (const Generator& f : shuffled) shuffled_text.push_back(Monomial({f}).to_string());
      report.failures.push_back({{"check", "confluence"},
                                 {"factors", original_text},
                                 {"shuffled", shuffled_text},
                                 {"expected", expected.to_string()},
                                 {"actual", actual.to_string()}});
    }
  }
  report.millis = clock.millis();
  return report;
}

SuiteReport run_suite(std::string_view name, int param, const VerifyOptions& options) {
  if (name == "counts") return verify_counts(param, options);
  if (name == "duality") return verify_duality(param, options);
  if (name == "relations") return verify_relations(param, options.sample, options);
  if (name == "crosspath") return verify_crosspath(param, options);
  if (name == "arnold") return verify_arnold(param, options);
  throw DomainError("unknown suite '" + std::string(name) + "'");
}

}  // namespace treecycles
