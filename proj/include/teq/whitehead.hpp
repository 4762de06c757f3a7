#pragma once

#include <cstdint>
#include <utility>

#include "teq/cyclic_word.hpp"

namespace teq {

// Type (W2) Whitehead automorphism (S, a) of F2: a is the multiplier, S a set
// of letters with a, a^-1 both outside S. Letters in S with inverse outside
// map c -> ca, letters with both c and c^-1 in S map c -> a^-1 c a, letters
// outside S (and a itself) are fixed. An empty S acts as the identity; it
// arises as bar() of a full-pair S and is accepted.
class WhiteheadW2 {
 public:
  // set_mask: bit code(l) set iff l in S. Throws std::invalid_argument when
  // the multiplier or its inverse lies in S.
  WhiteheadW2(Letter multiplier, std::uint8_t set_mask);

  Letter multiplier() const noexcept { return multiplier_; }
  std::uint8_t set_mask() const noexcept { return set_mask_; }
  bool contains(Letter l) const noexcept { return (set_mask_ >> code(l)) & 1u; }
  bool is_identity() const noexcept { return set_mask_ == 0; }

  Word apply(const Word& w) const;
  CyclicWord apply(const CyclicWord& w) const;

  friend bool operator==(const WhiteheadW2&, const WhiteheadW2&) = default;

 private:
  Letter multiplier_;
  std::uint8_t set_mask_;
};

// ({x}, y): x -> xy.
WhiteheadW2 sigma_w2();
// ({x}, y^-1): x -> xy^-1.
WhiteheadW2 sigma_inv_w2();
// ({y}, x): y -> yx.
WhiteheadW2 tau_w2();
// ({y}, x^-1): y -> yx^-1.
WhiteheadW2 tau_inv_w2();

// The complementary automorphism (Sigma^{+-1} - S - a^{+-1}, a^-1); agrees
// with the original on every cyclic word and is an involution.
WhiteheadW2 bar(const WhiteheadW2& a);

// The twelve (W2) automorphisms of F2 with nonempty S.
const std::array<WhiteheadW2, 12>& all_w2_rank2();

// Representative of a (W2) automorphism over cyclic words: exactly one of
// identity, sigma, sigma^-1, tau, tau^-1.
enum class W2Class : std::uint8_t { Identity, Sigma, SigmaInv, Tau, TauInv };
W2Class classify(const WhiteheadW2& a);

// Type (W1) Whitehead automorphism: a permutation of the four letters that
// commutes with inversion. There are exactly eight for F2.
class WhiteheadW1 {
 public:
  // Throws std::invalid_argument unless images form a bijection commuting
  // with inversion.
  explicit WhiteheadW1(std::array<Letter, 4> images);

  static WhiteheadW1 identity();
  // x -> y, y -> x^-1; has order 4.
  static WhiteheadW1 pi();
  static WhiteheadW1 pi_power(int r);
  static const std::array<WhiteheadW1, 8>& all();

  Letter operator()(Letter l) const noexcept { return images_[code(l)]; }
  bool is_identity() const;

  Word apply(const Word& w) const;
  CyclicWord apply(const CyclicWord& w) const;

  // Composition this∘first (first applied first).
  WhiteheadW1 after(const WhiteheadW1& first) const;
  WhiteheadW1 inverse() const;

  friend bool operator==(const WhiteheadW1&, const WhiteheadW1&) = default;

 private:
  struct Unchecked {};
  WhiteheadW1(std::array<Letter, 4> images, Unchecked) : images_(images) {}

  std::array<Letter, 4> images_;
};

// The four single-letter (W2) generators sigma = ({x}, y), sigma^-1,
// tau = ({y}, x), tau^-1, in canonical order.
enum class Gen : std::uint8_t { Sigma = 0, SigmaInv = 1, Tau = 2, TauInv = 3 };

inline constexpr std::array<Gen, 4> kAllGens = {Gen::Sigma, Gen::SigmaInv, Gen::Tau, Gen::TauInv};

constexpr Gen inverse(Gen g) noexcept {
  return static_cast<Gen>(static_cast<std::uint8_t>(g) ^ 1u);
}

constexpr bool positive(Gen g) noexcept { return (static_cast<std::uint8_t>(g) & 1u) == 0; }

constexpr char gen_char(Gen g) noexcept {
  constexpr char chars[4] = {'s', 'S', 't', 'T'};
  return chars[static_cast<std::uint8_t>(g)];
}

const WhiteheadW2& as_w2(Gen g);

// The letter whose images carry the multiplier: x for sigma^{+-1}, y for
// tau^{+-1}.
constexpr Letter moved_letter(Gen g) noexcept {
  return (static_cast<std::uint8_t>(g) < 2) ? Letter::X : Letter::Y;
}

constexpr Letter gen_multiplier(Gen g) noexcept {
  switch (g) {
    case Gen::Sigma: return Letter::Y;
    case Gen::SigmaInv: return Letter::YInv;
    case Gen::Tau: return Letter::X;
    case Gen::TauInv: return Letter::XInv;
  }
  return Letter::X;
}

// Applies g to a cyclic word given as any cyclically reduced rotation; out
// receives a cyclically reduced rotation of the image. out must not alias w.
void apply_gen_cyclic(Gen g, std::span<const Letter> w, LetterSeq& out);

CyclicWord apply_gen(Gen g, const CyclicWord& w);

// Cyclic length of the image of w under g, computed from counts of w alone:
//   tau:     |w| + n(w;y) - 2 n(w; y, x^-1)      sigma:    |w| + n(w;x) - 2 n(w; x, y^-1)
//   tau^-1:  |w| + n(w;y) - 2 n(w; y, x)         sigma^-1: |w| + n(w;x) - 2 n(w; x, y)
std::size_t predicted_length(Gen g, std::span<const Letter> w);
std::size_t predicted_length(Gen g, const CyclicWord& w);

// All four image lengths from one counting pass; index by code(Gen).
std::array<std::size_t, 4> predicted_lengths_all(std::span<const Letter> w);

// Cancellation bookkeeping for one generator application. A cancellation is
// trivial when it happens inside an invariant subword b m^r b^-1 (b the moved
// letter, m the multiplier, r != 0); every other cancellation is proper. Each
// cancellation removes one inverse pair: 2*(trivial+proper) letters total.
struct CancellationReport {
  std::size_t trivial = 0;
  std::size_t proper = 0;
};

CancellationReport cancellation_report(Gen g, std::span<const Letter> w);

std::pair<CyclicWord, CancellationReport> apply_generator(Gen g, const CyclicWord& w);

}  // namespace teq
