#pragma once

#include <optional>

#include "teq/chain.hpp"

namespace teq {

// Depth cap for the brute-force mixed search: 4*3^(d-1) leaves at depth d.
inline constexpr unsigned kMixedDepthCap = 12;

// Brute-force second opinion: enumerates every freely reduced chain over all
// four generators up to the given depth and compares image cyclic lengths.
// Returns the canonically least mismatching chain (shorter first, then
// sigma < sigma^-1 < tau < tau^-1 in application order), or nullopt when all
// lengths agree. Throws std::invalid_argument above the depth cap.
//
// Unlike decide(), a nullopt is not a certificate of equivalence; it only
// says no mismatch exists within the searched depth.
std::optional<MixedChain> decide_mixed(const Word& u, const Word& v, unsigned depth);

// Empirical check that sign-separated normal forms lose nothing: for random
// mixed chains, normalize_chain's output must give the same image cyclic
// lengths as the original chain on random words.
struct ConsistencyReport {
  std::uint64_t passes = 0;
  std::uint64_t failures = 0;
  std::string first_failure;
};

ConsistencyReport normalization_consistency(std::uint64_t samples, std::size_t max_len,
                                            unsigned depth, std::uint64_t seed);

}  // namespace teq
