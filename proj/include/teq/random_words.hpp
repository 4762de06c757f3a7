#pragma once

#include <random>

#include "teq/chain.hpp"
#include "teq/cyclic_word.hpp"

namespace teq {

inline constexpr std::uint64_t kDefaultSeed = 1729;

// Uniformly random freely reduced word of exactly the given length.
Word random_reduced_word(std::mt19937_64& rng, std::size_t length);

// Random cyclic word of size <= max_len (cyclic reduction of a random
// reduced word; may shrink).
CyclicWord random_cyclic_word(std::mt19937_64& rng, std::size_t max_len);

// Random cyclic word of exactly the given size (resamples until cyclically
// reduced at that length; cheap for the small sizes the suites use).
CyclicWord random_cyclic_word_exact(std::mt19937_64& rng, std::size_t len);

// Uniformly random freely reduced chain over all four generators of exactly
// the given length.
MixedChain random_mixed_chain(std::mt19937_64& rng, std::size_t length);

// Random single-sign chain of the given family and length.
GeneratorChain random_single_sign_chain(std::mt19937_64& rng, ChainFamily family,
                                        std::size_t length);

}  // namespace teq
