// treecycles: enumerate trees, decompose tree cycles, pair, straighten Arnold
// expressions and run the verification suites.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <set>
#include <string>

#include "treecycles/arnold.hpp"
#include "treecycles/decomposition.hpp"
#include "treecycles/error.hpp"
#include "treecycles/expression.hpp"
#include "treecycles/k_sequence.hpp"
#include "treecycles/rewrite.hpp"
#include "treecycles/serialization.hpp"
#include "treecycles/tree.hpp"
#include "treecycles/verification.hpp"

namespace {

using nlohmann::json;
using namespace treecycles;

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kVerificationFailed = 2;

constexpr const char* kGrammars = R"txt(Input grammars:
  TREE   := LEAF | "(" TREE "," TREE ")"      LEAF := INT
            leaves are 1..g-1, each exactly once; whitespace is ignored
  K      := INT ("," INT)*                    g-2 entries with 1 <= k_i <= i
  EXPR   := TERM (("+"|"-") TERM)*
  TERM   := [INT "*"] FACTOR ("*" FACTOR)*
  FACTOR := "w(" INT "," INT ")"

Exit codes: 0 success, 1 bad input, 2 verification failure or disagreement.)txt";

struct Globals {
  std::string format = "json";
  std::uint64_t seed = 1;
  int threads = 1;

  bool text() const { return format == "text"; }
};

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string k_text(const KSequence& k) { return k.to_string(); }

void emit_decomposition(const Globals& g, const CycleDecomposition& d, const json& extra) {
  if (!g.text()) {
    json j = decomposition_to_json(d);
    j.update(extra);
    emit(j);
    return;
  }
  for (const auto& [k, coeff] : d.coefficients) std::cout << k_text(k) << ' ' << coeff << '\n';
  if (extra.contains("agree")) std::cout << "agree " << (extra["agree"].get<bool>() ? "true" : "false") << '\n';
  if (extra.contains("trace")) {
    for (const json& step : extra["trace"]) {
      std::cout << "rotate " << step["at"].get<int>();
      for (const json& t : step["triple"]) std::cout << ' ' << t.get<std::string>();
      std::cout << '\n';
    }
  }
}

int run_trees(const Globals& g, int genus, bool balanced, bool count, bool detail) {
  const std::vector<Tree> trees = balanced ? enumerate_balanced(genus) : enumerate_trees(genus);
  if (count) {
    std::cout << trees.size() << '\n';
    return kOk;
  }
  if (g.text()) {
    for (const Tree& t : trees) std::cout << render_tree(t) << '\n';
    return kOk;
  }
  json out = json::array();
  for (const Tree& t : trees) out.push_back(detail ? tree_to_json(t) : json(render_tree(t)));
  emit(out);
  return kOk;
}

int run_decompose(const Globals& g, const std::string& text, const std::string& method, bool trace,
                  bool as_trees) {
  const Tree t = parse_tree(text);
  if (as_trees && method != "rewrite") throw DomainError("--as-trees needs --method rewrite");
  if (trace && method == "det") throw DomainError("--trace needs --method rewrite or both");

  json extra = json::object();
  std::optional<CycleDecomposition> by_det;
  std::optional<CycleDecomposition> by_rewrite;
  if (method != "rewrite") by_det = decompose(t);
  if (method != "det") {
    std::vector<RotationStep> steps;
    const SignedTreeSum sum = reduce_to_balanced(t, trace ? &steps : nullptr);
    if (trace) {
      extra["trace"] = json::array();
      for (const RotationStep& s : steps) extra["trace"].push_back(rotation_to_json(s));
    }
    if (as_trees) {
      if (g.text()) {
        for (const auto& [tree, coeff] : sum.terms) std::cout << render_tree(tree) << ' ' << coeff << '\n';
      } else {
        json j = signed_sum_to_json(sum);
        j.update(extra);
        emit(j);
      }
      return kOk;
    }
    by_rewrite = to_k_coordinates(sum);
  }
  if (by_det && by_rewrite) {
    const bool agree = *by_det == *by_rewrite;
    extra["agree"] = agree;
    if (!agree) extra["rewrite"] = decomposition_to_json(*by_rewrite)["terms"];
    emit_decomposition(g, *by_det, extra);
    return agree ? kOk : kVerificationFailed;
  }
  emit_decomposition(g, by_det ? *by_det : *by_rewrite, extra);
  return kOk;
}

int run_pair(const std::string& k_text_in, const std::string& tree_text) {
  const KSequence k = KSequence::parse(k_text_in);
  const Tree t = parse_tree(tree_text);
  std::cout << pair(k, t) << '\n';
  return kOk;
}

int run_arnold(const Globals& g, int strands, const std::string& expr) {
  const CohomologyClass c = parse_expression(expr, strands);
  if (g.text()) {
    std::cout << c.to_string() << '\n';
  } else {
    emit(class_to_json(c));
  }
  return kOk;
}

int run_verify(const Globals& g, const std::string& suite, std::optional<int> param, std::int64_t sample,
               std::optional<int> ceiling) {
  static const std::set<std::string> known = {"counts", "duality", "relations", "crosspath", "arnold"};
  if (!known.contains(suite)) throw DomainError("unknown suite: " + suite);
  if (!param) throw DomainError(suite == "arnold" ? "verify arnold needs --n" : "verify " + suite + " needs --g");
  VerifyOptions options;
  options.seed = g.seed;
  options.sample = sample;
  options.threads = g.threads;
  if (ceiling) {
    options.counts_ceiling = *ceiling;
    options.duality_ceiling = *ceiling;
  }
  const SuiteReport report = run_suite(suite, *param, options);
  if (g.text()) {
    std::cout << report.suite << ' ' << report.param << ": " << (report.passed() ? "pass" : "FAIL") << ", "
              << report.cases << " cases, " << report.failures.size() << " failures, " << report.millis << " ms\n";
    for (const json& f : report.failures) std::cout << f.dump() << '\n';
  } else {
    emit(report_to_json(report));
  }
  return report.passed() ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tree-indexed abelian cycles: enumeration, decomposition and verification."};
  app.footer(kGrammars);
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  app.add_option("--format", globals.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", globals.seed, "Seed for sampled suites");
  app.add_option("--threads", globals.threads, "Worker threads for verification")->check(CLI::Range(1, 256));

  int genus = 0;
  bool balanced = false;
  bool count = false;
  bool detail = false;
  auto* trees = app.add_subcommand("trees", "List trees T_g, or the balanced ones");
  trees->add_option("--g", genus, "Genus (g-1 labelled leaves)")->required();
  trees->add_flag("--balanced", balanced, "Balanced trees only");
  trees->add_flag("--count", count, "Print only the count");
  trees->add_flag("--detail", detail, "Emit tree objects with node sets");

  std::string tree_text;
  std::string method = "det";
  bool trace = false;
  bool as_trees = false;
  auto* dec = app.add_subcommand("decompose", "Coordinates of a tree cycle in the balanced basis");
  dec->add_option("--tree", tree_text, "Tree (TREE grammar)")->required();
  dec->add_option("--method", method, "det, rewrite or both")->check(CLI::IsMember({"det", "rewrite", "both"}));
  dec->add_flag("--trace", trace, "Include the rotations performed by the rewrite path");
  dec->add_flag("--as-trees", as_trees, "Report the rewrite result as a signed sum of balanced trees");

  std::string k_text_in;
  auto* pr = app.add_subcommand("pair", "Evaluate W_k on a tree cycle");
  pr->add_option("--k", k_text_in, "k sequence (K grammar)")->required();
  pr->add_option("--tree", tree_text, "Tree (TREE grammar)")->required();

  int strands = 0;
  std::string expr;
  auto* arn = app.add_subcommand("arnold", "Normal form of a cohomology expression");
  arn->add_option("--n", strands, "Number of strands")->required();
  arn->add_option("--expr", expr, "Expression (EXPR grammar)")->required();

  std::string suite;
  std::optional<int> param;
  std::int64_t sample = 10000;
  std::optional<int> ceiling;
  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("--suite", suite, "counts, duality, relations, crosspath or arnold")->required();
  ver->add_option("--g,--n", param, "Genus, or strand count for arnold");
  ver->add_option("--sample", sample, "Sampled cases for relations above the exhaustive range");
  ver->add_option("--ceiling", ceiling, "Largest genus accepted by counts and duality");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kDomainError;
  }

  try {
    if (*trees) return run_trees(globals, genus, balanced, count, detail);
    if (*dec) return run_decompose(globals, tree_text, method, trace, as_trees);
    if (*pr) return run_pair(k_text_in, tree_text);
    if (*arn) return run_arnold(globals, strands, expr);
    return run_verify(globals, suite, param, sample, ceiling);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainError;
  }
}
