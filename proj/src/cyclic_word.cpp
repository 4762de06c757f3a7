#include "teq/cyclic_word.hpp"

#include <cassert>

namespace teq {

namespace {

void rotate_to_canonical(LetterSeq& letters) {
  std::size_t k = least_rotation_index(letters);
  if (k != 0) {
    LetterSeq rotated;
    rotated.reserve(letters.size());
    rotated.insert(rotated.end(), letters.begin() + static_cast<std::ptrdiff_t>(k), letters.end());
    rotated.insert(rotated.end(), letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(k));
    letters = std::move(rotated);
  }
}

[[maybe_unused]] bool is_cyclically_reduced(std::span<const Letter> s) {
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] == inverse(s[i + 1])) return false;
  }
  return s.size() < 2 || s.front() != inverse(s.back());
}

}  // namespace

std::size_t least_rotation_index(std::span<const Letter> s) {
  const std::size_t n = s.size();
  if (n == 0) return 0;
  // Booth's least-rotation algorithm over the doubled index range.
  std::vector<std::ptrdiff_t> f(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const Letter sj = s[j % n];
    std::ptrdiff_t i = f[j - k - 1];
    while (i != -1 && sj != s[(k + static_cast<std::size_t>(i) + 1) % n]) {
      if (sj < s[(k + static_cast<std::size_t>(i) + 1) % n]) {
        k = j - static_cast<std::size_t>(i) - 1;
      }
      i = f[static_cast<std::size_t>(i)];
    }
    if (i == -1) {
      if (sj != s[k % n]) {
        if (sj < s[k % n]) k = j;
        f[j - k] = -1;
      } else {
        f[j - k] = 0;
      }
    } else {
      f[j - k] = i + 1;  // loop exited with a match
    }
  }
  return k % n;
}

CyclicWord CyclicWord::reduce(const Word& w) {
  auto span = w.letters();
  std::size_t lo = 0, hi = span.size();
  while (hi - lo >= 2 && span[lo] == inverse(span[hi - 1])) {
    ++lo;
    --hi;
  }
  LetterSeq core(span.begin() + static_cast<std::ptrdiff_t>(lo),
                 span.begin() + static_cast<std::ptrdiff_t>(hi));
  return from_cyclically_reduced(std::move(core));
}

CyclicWord CyclicWord::from_cyclically_reduced(LetterSeq letters) {
  assert(is_cyclically_reduced(letters));
  rotate_to_canonical(letters);
  CyclicWord cw;
  cw.letters_ = std::move(letters);
  return cw;
}

Word CyclicWord::representative() const { return Word::reduce(letters_); }

std::string CyclicWord::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter l : letters_) s.push_back(to_char(l));
  return s;
}

CyclicWord cyclic_reduce(const Word& w) { return CyclicWord::reduce(w); }

std::size_t cyclic_length(const Word& w) { return CyclicWord::reduce(w).size(); }

std::size_t count_letter(std::span<const Letter> w, Letter a) {
  std::size_t n = 0;
  for (Letter l : w) {
    if (base(l) == base(a)) ++n;
  }
  return n;
}

std::size_t count_letter(const CyclicWord& w, Letter a) { return count_letter(w.letters(), a); }

std::size_t count_pair(std::span<const Letter> w, Letter a, Letter b) {
  const std::size_t n = w.size();
  if (n == 0) return 0;
  const Letter a2 = inverse(b), b2 = inverse(a);  // the mirrored pattern b^-1 a^-1
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Letter c = w[i];
    const Letter d = w[(i + 1 == n) ? 0 : i + 1];
    if ((c == a && d == b) || (c == a2 && d == b2)) ++count;
  }
  return count;
}

std::size_t count_pair(const CyclicWord& w, Letter a, Letter b) {
  return count_pair(w.letters(), a, b);
}

PairCounts PairCounts::of(const CyclicWord& w) {
  PairCounts pc;
  auto s = w.letters();
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Letter c = s[i];
    const Letter d = s[(i + 1 == n) ? 0 : i + 1];
    pc.letter[base(c)]++;
    // Position i is an occurrence for the pair (c, d) and for the mirrored
    // pair (d^-1, c^-1); when the two coincide it counts once.
    pc.pair[code(c)][code(d)]++;
    if (c != inverse(d)) pc.pair[code(inverse(d))][code(inverse(c))]++;
  }
  return pc;
}

}  // namespace teq
