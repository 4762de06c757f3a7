#include "teq/random_words.hpp"

namespace teq {

Word random_reduced_word(std::mt19937_64& rng, std::size_t length) {
  LetterSeq letters;
  letters.reserve(length);
  if (length > 0) {
    std::uniform_int_distribution<int> first(0, 3);
    letters.push_back(letter_from_code(static_cast<std::uint8_t>(first(rng))));
    std::uniform_int_distribution<int> next(0, 2);
    for (std::size_t i = 1; i < length; ++i) {
      const Letter banned = inverse(letters.back());
      int pick = next(rng);
      for (Letter cand : kAllLetters) {
        if (cand == banned) continue;
        if (pick-- == 0) {
          letters.push_back(cand);
          break;
        }
      }
    }
  }
  return Word::reduce(letters);
}

CyclicWord random_cyclic_word(std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  return cyclic_reduce(random_reduced_word(rng, len(rng)));
}

CyclicWord random_cyclic_word_exact(std::mt19937_64& rng, std::size_t len) {
  if (len == 0) return CyclicWord();
  for (;;) {
    CyclicWord w = cyclic_reduce(random_reduced_word(rng, len));
    if (w.size() == len) return w;
  }
}

MixedChain random_mixed_chain(std::mt19937_64& rng, std::size_t length) {
  MixedChain chain;
  chain.steps.reserve(length);
  if (length > 0) {
    std::uniform_int_distribution<int> first(0, 3);
    chain.steps.push_back(static_cast<Gen>(first(rng)));
    std::uniform_int_distribution<int> next(0, 2);
    for (std::size_t i = 1; i < length; ++i) {
      const Gen banned = inverse(chain.steps.back());
      int pick = next(rng);
      for (Gen cand : kAllGens) {
        if (cand == banned) continue;
        if (pick-- == 0) {
          chain.steps.push_back(cand);
          break;
        }
      }
    }
  }
  return chain;
}

GeneratorChain random_single_sign_chain(std::mt19937_64& rng, ChainFamily family,
                                        std::size_t length) {
  GeneratorChain chain;
  chain.family = family;
  chain.steps.reserve(length);
  std::uniform_int_distribution<int> coin(0, 1);
  for (std::size_t i = 0; i < length; ++i) {
    const std::uint8_t idx = static_cast<std::uint8_t>(coin(rng));
    chain.steps.push_back(
        static_cast<Gen>((idx << 1) | (family == ChainFamily::C2 ? 1 : 0)));
  }
  return chain;
}

}  // namespace teq
