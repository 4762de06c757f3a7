#pragma once

#include <string>
#include <string_view>

#include "teq/whitehead.hpp"

namespace teq {

// Families of single-sign generator chains: (C1) over {sigma, tau}, (C2)
// over {sigma^-1, tau^-1}.
enum class ChainFamily : std::uint8_t { C1, C2 };

constexpr char family_name(ChainFamily f) { return f == ChainFamily::C1 ? '1' : '2'; }
std::string family_str(ChainFamily f);

// A single-sign chain; steps are stored in application order (steps[0] acts
// first). The empty chain is the identity and belongs to C1 by convention.
struct GeneratorChain {
  ChainFamily family = ChainFamily::C1;
  std::vector<Gen> steps;

  std::size_t length() const noexcept { return steps.size(); }
  bool valid() const noexcept;

  friend bool operator==(const GeneratorChain&, const GeneratorChain&) = default;
};

// A freely reduced chain over all four generators, application order.
struct MixedChain {
  std::vector<Gen> steps;

  std::size_t length() const noexcept { return steps.size(); }
  bool valid() const noexcept;  // no adjacent mutually-inverse steps

  friend bool operator==(const MixedChain&, const MixedChain&) = default;
};

// Chain text format: s S t T for sigma, sigma^-1, tau, tau^-1; the string is
// read right-to-left in application order ("ts" applies sigma first).
std::string chain_text(std::span<const Gen> steps_in_application_order);
std::string chain_text(const GeneratorChain& chain);
std::string chain_text(const MixedChain& chain);

CyclicWord apply_chain(std::span<const Gen> steps_in_application_order, const CyclicWord& w);
CyclicWord apply_chain(const GeneratorChain& chain, const CyclicWord& w);
CyclicWord apply_chain(const MixedChain& chain, const CyclicWord& w);

// Symbols accepted by normalize_chain; p and P extend the text format with
// pi and pi^-1.
enum class ChainSymbol : std::uint8_t { Sigma, SigmaInv, Tau, TauInv, Pi, PiInv };

class ChainParseError : public std::runtime_error {
 public:
  ChainParseError(char offending, std::size_t position);

  char offending() const noexcept { return offending_; }
  std::size_t position() const noexcept { return position_; }

 private:
  char offending_;
  std::size_t position_;
};

// Parses chain text (right-to-left application) into application order.
std::vector<ChainSymbol> parse_chain_text(std::string_view text);

// Inverse of parse_chain_text.
std::string symbols_text(std::span<const ChainSymbol> steps_in_application_order);

CyclicWord apply_symbols(std::span<const ChainSymbol> steps_in_application_order,
                         const CyclicWord& w);

// Result of rewriting a composition into the normal form beta * chain, where
// beta is a (W1) map (always a power of pi here) and the chain is single-sign.
// The pair agrees with the input composition on every cyclic word.
struct ChainNormalForm {
  WhiteheadW1 w1_part = WhiteheadW1::identity();
  GeneratorChain chain;
};

ChainNormalForm normalize_chain(std::span<const ChainSymbol> seq_in_application_order);

}  // namespace teq
