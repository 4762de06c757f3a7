#pragma once

#include <array>
#include <string>

#include "teq/word.hpp"

namespace teq {

// A cyclic word: the conjugacy class of a cyclically reduced word, stored as
// its lexicographically least rotation (letter order x < x^-1 < y < y^-1).
// Equality of canonical rotations is equality of cyclic words.
class CyclicWord {
 public:
  CyclicWord() = default;

  // Cyclic reduction of a freely reduced word, then canonical rotation.
  static CyclicWord reduce(const Word& w);

  // Canonicalizes a buffer that is already cyclically reduced (as produced by
  // the search core). Debug-asserts the invariant.
  static CyclicWord from_cyclically_reduced(LetterSeq letters);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  std::span<const Letter> letters() const noexcept { return letters_; }

  // The canonical rotation as a plain word (cyclically reduced words are
  // freely reduced).
  Word representative() const;
  std::string str() const;

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend auto operator<=>(const CyclicWord&, const CyclicWord&) = default;

 private:
  LetterSeq letters_;
};

// Index of the lexicographically least rotation (Booth's algorithm, O(n)).
std::size_t least_rotation_index(std::span<const Letter> s);

CyclicWord cyclic_reduce(const Word& w);
std::size_t cyclic_length(const Word& w);

// n(w; a): occurrences of a and a^-1 in w.
std::size_t count_letter(const CyclicWord& w, Letter a);
std::size_t count_letter(std::span<const Letter> w, Letter a);

// n(w; a, b): cyclic positions carrying the subword ab or b^-1 a^-1. A
// position where the two patterns coincide (b = a^-1) counts once.
std::size_t count_pair(const CyclicWord& w, Letter a, Letter b);
std::size_t count_pair(std::span<const Letter> w, Letter a, Letter b);

// All letter and ordered-pair counts of a cyclic word in one pass.
struct PairCounts {
  std::array<std::size_t, 2> letter{};          // n(w; x), n(w; y)
  std::array<std::array<std::size_t, 4>, 4> pair{};  // pair[code(a)][code(b)] = n(w; a, b)

  static PairCounts of(const CyclicWord& w);
};

}  // namespace teq
