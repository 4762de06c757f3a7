#include "teq/whitehead.hpp"

#include <cassert>
#include <stdexcept>

namespace teq {

namespace {

constexpr std::uint8_t bit(Letter l) { return static_cast<std::uint8_t>(1u << code(l)); }

// Image of one letter under (S, a), appended with on-the-fly cancellation.
void push_reduced(LetterSeq& out, Letter l) {
  if (!out.empty() && out.back() == inverse(l)) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

void append_w2_image(const WhiteheadW2& a, Letter c, LetterSeq& out) {
  const bool in = a.contains(c);
  const bool inv_in = a.contains(inverse(c));
  if (in && !inv_in) {
    push_reduced(out, c);
    push_reduced(out, a.multiplier());
  } else if (!in && inv_in) {
    push_reduced(out, inverse(a.multiplier()));
    push_reduced(out, c);
  } else if (in && inv_in) {
    push_reduced(out, inverse(a.multiplier()));
    push_reduced(out, c);
    push_reduced(out, a.multiplier());
  } else {
    push_reduced(out, c);
  }
}

void trim_cyclic(LetterSeq& buf) {
  std::size_t lo = 0, hi = buf.size();
  while (hi - lo >= 2 && buf[lo] == inverse(buf[hi - 1])) {
    ++lo;
    --hi;
  }
  if (lo != 0) {
    std::copy(buf.begin() + static_cast<std::ptrdiff_t>(lo),
              buf.begin() + static_cast<std::ptrdiff_t>(hi), buf.begin());
  }
  buf.resize(hi - lo);
}

}  // namespace

WhiteheadW2::WhiteheadW2(Letter multiplier, std::uint8_t set_mask)
    : multiplier_(multiplier), set_mask_(set_mask) {
  if (set_mask_ & ~0x0fu) throw std::invalid_argument("W2 set mask out of range");
  if (set_mask_ & (bit(multiplier_) | bit(inverse(multiplier_)))) {
    throw std::invalid_argument("W2 multiplier must not lie in S");
  }
}

Word WhiteheadW2::apply(const Word& w) const {
  LetterSeq out;
  out.reserve(2 * w.size());
  for (Letter c : w.letters()) append_w2_image(*this, c, out);
  return Word::reduce(out);
}

CyclicWord WhiteheadW2::apply(const CyclicWord& w) const {
  LetterSeq out;
  out.reserve(2 * w.size());
  for (Letter c : w.letters()) append_w2_image(*this, c, out);
  free_reduce_inplace(out);
  trim_cyclic(out);
  return CyclicWord::from_cyclically_reduced(std::move(out));
}

WhiteheadW2 sigma_w2() { return WhiteheadW2(Letter::Y, bit(Letter::X)); }
WhiteheadW2 sigma_inv_w2() { return WhiteheadW2(Letter::YInv, bit(Letter::X)); }
WhiteheadW2 tau_w2() { return WhiteheadW2(Letter::X, bit(Letter::Y)); }
WhiteheadW2 tau_inv_w2() { return WhiteheadW2(Letter::XInv, bit(Letter::Y)); }

WhiteheadW2 bar(const WhiteheadW2& a) {
  const std::uint8_t full = 0x0f;
  const std::uint8_t excluded =
      static_cast<std::uint8_t>(bit(a.multiplier()) | bit(inverse(a.multiplier())));
  const std::uint8_t mask = static_cast<std::uint8_t>(full & ~a.set_mask() & ~excluded);
  return WhiteheadW2(inverse(a.multiplier()), mask);
}

const std::array<WhiteheadW2, 12>& all_w2_rank2() {
  static const std::array<WhiteheadW2, 12> all = [] {
    std::vector<WhiteheadW2> v;
    for (Letter a : kAllLetters) {
      const Letter b = (base(a) == 0) ? Letter::Y : Letter::X;  // the other base
      const std::uint8_t b1 = bit(b), b2 = bit(inverse(b));
      v.push_back(WhiteheadW2(a, b1));
      v.push_back(WhiteheadW2(a, b2));
      v.push_back(WhiteheadW2(a, static_cast<std::uint8_t>(b1 | b2)));
    }
    std::array<WhiteheadW2, 12> out = {v[0], v[1], v[2], v[3], v[4],  v[5],
                                       v[6], v[7], v[8], v[9], v[10], v[11]};
    return out;
  }();
  return all;
}

W2Class classify(const WhiteheadW2& a) {
  if (a.is_identity()) return W2Class::Identity;
  const Letter b = (base(a.multiplier()) == 0) ? Letter::Y : Letter::X;
  if (a.contains(b) && a.contains(inverse(b))) return W2Class::Identity;
  // Single-letter S; reduce the inverse-letter case via bar().
  if (a.contains(inverse(b))) return classify(bar(a));
  if (b == Letter::X) return positive(a.multiplier()) ? W2Class::Sigma : W2Class::SigmaInv;
  return positive(a.multiplier()) ? W2Class::Tau : W2Class::TauInv;
}

WhiteheadW1::WhiteheadW1(std::array<Letter, 4> images) : images_(images) {
  std::uint8_t seen = 0;
  for (Letter l : kAllLetters) {
    seen |= bit(images_[code(l)]);
    if (images_[code(teq::inverse(l))] != teq::inverse(images_[code(l)])) {
      throw std::invalid_argument("W1 permutation must commute with inversion");
    }
  }
  if (seen != 0x0f) throw std::invalid_argument("W1 images must be a bijection");
}

WhiteheadW1 WhiteheadW1::identity() {
  return WhiteheadW1({Letter::X, Letter::XInv, Letter::Y, Letter::YInv}, Unchecked{});
}

WhiteheadW1 WhiteheadW1::pi() {
  // x -> y, y -> x^-1.
  return WhiteheadW1({Letter::Y, Letter::YInv, Letter::XInv, Letter::X}, Unchecked{});
}

WhiteheadW1 WhiteheadW1::pi_power(int r) {
  int e = r % 4;
  if (e < 0) e += 4;
  WhiteheadW1 acc = identity();
  for (int i = 0; i < e; ++i) acc = pi().after(acc);
  return acc;
}

const std::array<WhiteheadW1, 8>& WhiteheadW1::all() {
  static const std::array<WhiteheadW1, 8> values = [] {
    std::vector<WhiteheadW1> v;
    for (Letter ix : kAllLetters) {
      for (Letter iy : kAllLetters) {
        if (base(iy) == base(ix)) continue;
        std::array<Letter, 4> img{};
        img[code(Letter::X)] = ix;
        img[code(Letter::XInv)] = teq::inverse(ix);
        img[code(Letter::Y)] = iy;
        img[code(Letter::YInv)] = teq::inverse(iy);
        v.push_back(WhiteheadW1(img));
      }
    }
    assert(v.size() == 8);
    return std::array<WhiteheadW1, 8>{v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
  }();
  return values;
}

bool WhiteheadW1::is_identity() const { return *this == identity(); }

Word WhiteheadW1::apply(const Word& w) const {
  LetterSeq out;
  out.reserve(w.size());
  for (Letter l : w.letters()) out.push_back((*this)(l));
  // A letter permutation maps reduced words to reduced words.
  return Word::reduce(out);
}

CyclicWord WhiteheadW1::apply(const CyclicWord& w) const {
  LetterSeq out;
  out.reserve(w.size());
  for (Letter l : w.letters()) out.push_back((*this)(l));
  return CyclicWord::from_cyclically_reduced(std::move(out));
}

WhiteheadW1 WhiteheadW1::after(const WhiteheadW1& first) const {
  std::array<Letter, 4> img{};
  for (Letter l : kAllLetters) img[code(l)] = (*this)(first(l));
  return WhiteheadW1(img, Unchecked{});
}

WhiteheadW1 WhiteheadW1::inverse() const {
  std::array<Letter, 4> img{};
  for (Letter l : kAllLetters) img[code((*this)(l))] = l;
  return WhiteheadW1(img, Unchecked{});
}

const WhiteheadW2& as_w2(Gen g) {
  static const std::array<WhiteheadW2, 4> table = {sigma_w2(), sigma_inv_w2(), tau_w2(),
                                                   tau_inv_w2()};
  return table[static_cast<std::uint8_t>(g)];
}

void apply_gen_cyclic(Gen g, std::span<const Letter> w, LetterSeq& out) {
  const Letter b = moved_letter(g);
  const Letter bi = inverse(b);
  const Letter m = gen_multiplier(g);
  const Letter mi = inverse(m);
  out.clear();
  out.reserve(2 * w.size());
  for (Letter c : w) {
    if (c == b) {
      push_reduced(out, b);
      push_reduced(out, m);
    } else if (c == bi) {
      push_reduced(out, mi);
      push_reduced(out, bi);
    } else {
      push_reduced(out, c);
    }
  }
  trim_cyclic(out);
}

CyclicWord apply_gen(Gen g, const CyclicWord& w) {
  LetterSeq out;
  apply_gen_cyclic(g, w.letters(), out);
  return CyclicWord::from_cyclically_reduced(std::move(out));
}

std::size_t predicted_length(Gen g, std::span<const Letter> w) {
  const std::size_t n = w.size();
  if (n == 0) return 0;
  const Letter b = moved_letter(g);
  const Letter m = gen_multiplier(g);
  // Cancellation sites are the cyclic occurrences of b m^-1 and m b^-1,
  // i.e. n(w; b, m^-1).
  const Letter mi = inverse(m), bi = inverse(b);
  std::size_t moved = 0, sites = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Letter c = w[i];
    const Letter d = w[(i + 1 == n) ? 0 : i + 1];
    moved += (base(c) == base(b));
    sites += (c == b && d == mi) || (c == m && d == bi);
  }
  return n + moved - 2 * sites;
}

std::size_t predicted_length(Gen g, const CyclicWord& w) {
  return predicted_length(g, w.letters());
}

std::array<std::size_t, 4> predicted_lengths_all(std::span<const Letter> w) {
  const std::size_t n = w.size();
  if (n == 0) return {0, 0, 0, 0};
  std::size_t nx = 0, ny = 0;
  // Cancellation sites per generator: sigma and tau share {xY, yX}; the
  // inverse generators use {xy, YX} and {yx, XY}.
  std::size_t s_pos = 0, s_sigma_inv = 0, s_tau_inv = 0;
  Letter c = w[n - 1];
  for (std::size_t i = 0; i < n; ++i) {
    const Letter d = w[i];
    nx += (base(c) == 0);
    const std::uint8_t pair = static_cast<std::uint8_t>((code(c) << 2) | code(d));
    // pair codes: x=0 X=1 y=2 Y=3, (c<<2)|d
    s_pos += (pair == 0x3) | (pair == 0x9);        // xY, yX
    s_sigma_inv += (pair == 0x2) | (pair == 0xd);  // xy, YX
    s_tau_inv += (pair == 0x8) | (pair == 0x7);    // yx, XY
    c = d;
  }
  ny = n - nx;
  return {n + nx - 2 * s_pos, n + nx - 2 * s_sigma_inv, n + ny - 2 * s_pos,
          n + ny - 2 * s_tau_inv};
}

CancellationReport cancellation_report(Gen g, std::span<const Letter> w) {
  CancellationReport report;
  const std::size_t n = w.size();
  if (n == 0) return report;
  const Letter b = moved_letter(g);
  const Letter bi = inverse(b);
  const Letter m = gen_multiplier(g);
  const Letter mi = inverse(m);
  auto next = [&](std::size_t i) { return (i + 1 == n) ? 0 : i + 1; };
  auto prev = [&](std::size_t i) { return (i == 0) ? n - 1 : i - 1; };
  for (std::size_t i = 0; i < n; ++i) {
    const Letter c = w[i];
    const Letter d = w[next(i)];
    if (c == b && d == mi) {
      // b m^-s ...: trivial exactly when the m^-1 run ends at b^-1.
      std::size_t j = next(i);
      while (w[j] == mi) j = next(j);
      (w[j] == bi ? report.trivial : report.proper)++;
    } else if (c == m && d == bi) {
      // ... m^s b^-1: trivial exactly when the m run starts after b.
      std::size_t j = i;
      while (w[j] == m) j = prev(j);
      (w[j] == b ? report.trivial : report.proper)++;
    }
  }
  return report;
}

std::pair<CyclicWord, CancellationReport> apply_generator(Gen g, const CyclicWord& w) {
  CancellationReport report = cancellation_report(g, w.letters());
  LetterSeq out;
  apply_gen_cyclic(g, w.letters(), out);
  assert(out.size() == w.size() + count_letter(w.letters(), moved_letter(g)) -
                           2 * (report.trivial + report.proper));
  return {CyclicWord::from_cyclically_reduced(std::move(out)), report};
}

}  // namespace teq
