#pragma once

#include <cstdint>
#include <json.hpp>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace treecycles {

// Outcome of one verification suite. Failures carry enough data (trees, k,
// matrices) to replay the case through the CLI.
struct SuiteReport {
  std::string suite;
  int param = 0;
  std::int64_t cases = 0;
  std::vector<nlohmann::json> failures;
  std::int64_t millis = 0;

  bool passed() const { return failures.empty(); }
};

// {"suite": str, "param": int, "cases": int, "failures": [...], "millis": int}
nlohmann::json report_to_json(const SuiteReport& r);

struct VerifyOptions {
  std::uint64_t seed = 1;
  // Sampled rotation cases for verify_relations above the exhaustive ceiling.
  std::int64_t sample = 10000;
  int threads = 1;
  int counts_ceiling = 8;
  int duality_ceiling = 7;
  int relations_exhaustive_ceiling = 5;
  int confluence_samples = 1000;
};

// Sampling uses std::mt19937_64 (seeded with VerifyOptions::seed) and this
// rejection sampler on its raw output, so reports replay bit-for-bit on any
// standard library. Returns a value in [0, bound).
std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t bound);

SuiteReport verify_counts(int g, const VerifyOptions& options = {});
SuiteReport verify_duality(int g, const VerifyOptions& options = {});
SuiteReport verify_relations(int g, std::int64_t sample, const VerifyOptions& options = {});
SuiteReport verify_crosspath(int g, const VerifyOptions& options = {});
SuiteReport verify_arnold(int n, const VerifyOptions& options = {});

// Dispatches on "counts", "duality", "relations", "crosspath" or "arnold";
// throws DomainError for anything else.
SuiteReport run_suite(std::string_view name, int param, const VerifyOptions& options = {});

// (2g-5)!! and (g-2)!
std::int64_t expected_tree_count(int g);
std::int64_t expected_balanced_count(int g);
// Coefficients of prod_{i=1}^{n-1} (1 + i t), lowest degree first.
std::vector<std::int64_t> poincare_coefficients(int strands);

}  // namespace treecycles
