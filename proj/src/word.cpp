#include "teq/word.hpp"

namespace teq {

WordParseError::WordParseError(char offending, std::size_t position)
    : std::runtime_error("invalid letter '" + std::string(1, offending) + "' at position " +
                         std::to_string(position)),
      offending_(offending),
      position_(position) {}

void free_reduce_inplace(LetterSeq& letters) {
  std::size_t top = 0;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (top > 0 && letters[top - 1] == inverse(letters[i])) {
      --top;
    } else {
      letters[top++] = letters[i];
    }
  }
  letters.resize(top);
}

Word Word::reduce(std::span<const Letter> raw) {
  LetterSeq out(raw.begin(), raw.end());
  free_reduce_inplace(out);
  return Word(std::move(out), AlreadyReduced{});
}

Word Word::parse(std::string_view text) {
  LetterSeq raw;
  raw.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto l = letter_from_char(text[i]);
    if (!l) throw WordParseError(text[i], i + 1);
    raw.push_back(*l);
  }
  free_reduce_inplace(raw);
  return Word(std::move(raw), AlreadyReduced{});
}

Word Word::inverse() const {
  LetterSeq out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.push_back(teq::inverse(*it));
  }
  return Word(std::move(out), AlreadyReduced{});
}

std::string Word::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter l : letters_) s.push_back(to_char(l));
  return s;
}

Word operator*(const Word& a, const Word& b) {
  LetterSeq out;
  out.reserve(a.size() + b.size());
  out.assign(a.letters_.begin(), a.letters_.end());
  for (Letter l : b.letters_) {
    if (!out.empty() && out.back() == inverse(l)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out), Word::AlreadyReduced{});
}

Word conjugate(const Word& w, const Word& g) { return g * w * g.inverse(); }

}  // namespace teq
