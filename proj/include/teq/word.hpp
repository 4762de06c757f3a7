#pragma once

#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "teq/letter.hpp"

namespace teq {

// Raised when a word string contains a character outside {x, X, y, Y}.
// Positions are 1-based.
class WordParseError : public std::runtime_error {
 public:
  WordParseError(char offending, std::size_t position);

  char offending() const noexcept { return offending_; }
  std::size_t position() const noexcept { return position_; }

 private:
  char offending_;
  std::size_t position_;
};

// A freely reduced word over {x, x^-1, y, y^-1}; the invariant (no adjacent
// inverse pair) is established on construction and preserved by every
// operation. The empty word is the identity.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> raw) : Word(reduce(std::span<const Letter>(raw.begin(), raw.size()))) {}

  // Free reduction of an arbitrary letter sequence.
  static Word reduce(std::span<const Letter> raw);

  // External format: x = x, X = x^-1, y = y, Y = y^-1, no separators,
  // empty string = identity. The result is freely reduced.
  static Word parse(std::string_view text);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  std::span<const Letter> letters() const noexcept { return letters_; }

  Word inverse() const;
  std::string str() const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  struct AlreadyReduced {};
  Word(LetterSeq letters, AlreadyReduced) : letters_(std::move(letters)) {}

  LetterSeq letters_;
};

// g * w * g^-1.
Word conjugate(const Word& w, const Word& g);

// In-place free reduction of a letter buffer.
void free_reduce_inplace(LetterSeq& letters);

}  // namespace teq
