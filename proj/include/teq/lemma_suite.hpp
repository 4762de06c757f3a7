#pragma once

#include <string>
#include <vector>

#include "teq/decide.hpp"
#include "teq/oracle.hpp"
#include "teq/random_words.hpp"

namespace teq {

struct PropertyResult {
  std::string name;
  std::uint64_t cases = 0;
  bool passed = true;
  std::string counterexample;  // empty when passed
};

struct SuiteOptions {
  std::uint64_t samples = 1000;
  std::size_t max_len = 100;
  std::uint64_t seed = kDefaultSeed;
  // Adds the decision-engine properties (full searches per case; much
  // slower, so they run at their own internal sample caps).
  bool full = false;
};

// Randomized verification of the algebraic facts the decision procedure
// rests on. Every property draws from one deterministic stream seeded by
// options.seed.
std::vector<PropertyResult> run_lemma_suite(const SuiteOptions& options);

bool all_passed(const std::vector<PropertyResult>& results);

}  // namespace teq
