#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace teq {

// The four letters of F2 = <x, y>, ordered x < x^-1 < y < y^-1.
// The low bit flips under inversion, the high bit selects the base,
// so inverse() is an involution and enum order is the letter order.
enum class Letter : std::uint8_t { X = 0, XInv = 1, Y = 2, YInv = 3 };

constexpr std::uint8_t code(Letter l) noexcept { return static_cast<std::uint8_t>(l); }

constexpr Letter letter_from_code(std::uint8_t c) noexcept { return static_cast<Letter>(c); }

constexpr Letter inverse(Letter l) noexcept { return letter_from_code(code(l) ^ 1u); }

// 0 for x-type letters, 1 for y-type.
constexpr std::uint8_t base(Letter l) noexcept { return code(l) >> 1; }

constexpr bool positive(Letter l) noexcept { return (code(l) & 1u) == 0; }

constexpr char to_char(Letter l) noexcept {
  constexpr char chars[4] = {'x', 'X', 'y', 'Y'};
  return chars[code(l)];
}

constexpr std::optional<Letter> letter_from_char(char c) noexcept {
  switch (c) {
    case 'x': return Letter::X;
    case 'X': return Letter::XInv;
    case 'y': return Letter::Y;
    case 'Y': return Letter::YInv;
    default: return std::nullopt;
  }
}

inline constexpr std::array<Letter, 4> kAllLetters = {Letter::X, Letter::XInv, Letter::Y,
                                                      Letter::YInv};

using LetterSeq = std::vector<Letter>;

}  // namespace teq
