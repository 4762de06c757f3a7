#include "teq/chain.hpp"

#include <algorithm>
#include <cassert>

namespace teq {

namespace {

constexpr bool is_pi(ChainSymbol s) { return s == ChainSymbol::Pi || s == ChainSymbol::PiInv; }

constexpr bool is_gen(ChainSymbol s) { return !is_pi(s); }

constexpr ChainSymbol sym_inverse(ChainSymbol s) {
  switch (s) {
    case ChainSymbol::Sigma: return ChainSymbol::SigmaInv;
    case ChainSymbol::SigmaInv: return ChainSymbol::Sigma;
    case ChainSymbol::Tau: return ChainSymbol::TauInv;
    case ChainSymbol::TauInv: return ChainSymbol::Tau;
    case ChainSymbol::Pi: return ChainSymbol::PiInv;
    case ChainSymbol::PiInv: return ChainSymbol::Pi;
  }
  return ChainSymbol::Sigma;
}

constexpr Gen gen_of(ChainSymbol s) {
  assert(is_gen(s));
  return static_cast<Gen>(static_cast<std::uint8_t>(s));
}

constexpr ChainSymbol sym_of(Gen g) {
  return static_cast<ChainSymbol>(static_cast<std::uint8_t>(g));
}

constexpr bool positive_gen_sym(ChainSymbol s) { return positive(gen_of(s)); }

// Conjugation tables from the generator/pi relations: in composition order,
// g pi^e rewrites to pi^e g' with g' independent of e:
//   tau pi -> pi sigma^-1    sigma pi -> pi tau^-1
//   tau^-1 pi -> pi sigma    sigma^-1 pi -> pi tau
// (and the same right-hand generators for pi^-1).
constexpr ChainSymbol pi_conjugate(ChainSymbol g) {
  switch (g) {
    case ChainSymbol::Tau: return ChainSymbol::SigmaInv;
    case ChainSymbol::Sigma: return ChainSymbol::TauInv;
    case ChainSymbol::TauInv: return ChainSymbol::Sigma;
    case ChainSymbol::SigmaInv: return ChainSymbol::Tau;
    default: return g;
  }
}

// Mixed-sign adjacent generators in composition order rewrite to a pi power
// followed by one generator:
//   tau^-1 sigma -> pi tau        sigma tau^-1 -> pi sigma^-1
//   tau sigma^-1 -> pi^-1 tau^-1  sigma^-1 tau -> pi^-1 sigma
struct MixedRewrite {
  ChainSymbol pi;
  ChainSymbol gen;
};

constexpr MixedRewrite mixed_rewrite(ChainSymbol a, ChainSymbol b) {
  if (a == ChainSymbol::TauInv && b == ChainSymbol::Sigma) {
    return {ChainSymbol::Pi, ChainSymbol::Tau};
  }
  if (a == ChainSymbol::Sigma && b == ChainSymbol::TauInv) {
    return {ChainSymbol::Pi, ChainSymbol::SigmaInv};
  }
  if (a == ChainSymbol::Tau && b == ChainSymbol::SigmaInv) {
    return {ChainSymbol::PiInv, ChainSymbol::TauInv};
  }
  assert(a == ChainSymbol::SigmaInv && b == ChainSymbol::Tau);
  return {ChainSymbol::PiInv, ChainSymbol::Sigma};
}

constexpr char symbol_char(ChainSymbol s) {
  constexpr char chars[6] = {'s', 'S', 't', 'T', 'p', 'P'};
  return chars[static_cast<std::uint8_t>(s)];
}

}  // namespace

std::string family_str(ChainFamily f) { return f == ChainFamily::C1 ? "C1" : "C2"; }

bool GeneratorChain::valid() const noexcept {
  for (Gen g : steps) {
    if (positive(g) != (family == ChainFamily::C1)) return false;
  }
  return true;
}

bool MixedChain::valid() const noexcept {
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
    if (steps[i + 1] == inverse(steps[i])) return false;
  }
  return true;
}

std::string chain_text(std::span<const Gen> steps) {
  std::string s;
  s.reserve(steps.size());
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) s.push_back(gen_char(*it));
  return s;
}

std::string chain_text(const GeneratorChain& chain) { return chain_text(chain.steps); }

std::string chain_text(const MixedChain& chain) { return chain_text(chain.steps); }

CyclicWord apply_chain(std::span<const Gen> steps, const CyclicWord& w) {
  LetterSeq cur(w.letters().begin(), w.letters().end());
  LetterSeq next;
  for (Gen g : steps) {
    apply_gen_cyclic(g, cur, next);
    cur.swap(next);
  }
  return CyclicWord::from_cyclically_reduced(std::move(cur));
}

CyclicWord apply_chain(const GeneratorChain& chain, const CyclicWord& w) {
  return apply_chain(chain.steps, w);
}

CyclicWord apply_chain(const MixedChain& chain, const CyclicWord& w) {
  return apply_chain(chain.steps, w);
}

ChainParseError::ChainParseError(char offending, std::size_t position)
    : std::runtime_error("invalid chain symbol '" + std::string(1, offending) + "' at position " +
                         std::to_string(position)),
      offending_(offending),
      position_(position) {}

std::vector<ChainSymbol> parse_chain_text(std::string_view text) {
  std::vector<ChainSymbol> comp;
  comp.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    ChainSymbol s;
    switch (text[i]) {
      case 's': s = ChainSymbol::Sigma; break;
      case 'S': s = ChainSymbol::SigmaInv; break;
      case 't': s = ChainSymbol::Tau; break;
      case 'T': s = ChainSymbol::TauInv; break;
      case 'p': s = ChainSymbol::Pi; break;
      case 'P': s = ChainSymbol::PiInv; break;
      default: throw ChainParseError(text[i], i + 1);
    }
    comp.push_back(s);
  }
  // Text is written in composition order; application order is the reverse.
  std::reverse(comp.begin(), comp.end());
  return comp;
}

CyclicWord apply_symbols(std::span<const ChainSymbol> steps, const CyclicWord& w) {
  CyclicWord cur = w;
  for (ChainSymbol s : steps) {
    if (is_pi(s)) {
      cur = (s == ChainSymbol::Pi ? WhiteheadW1::pi() : WhiteheadW1::pi().inverse()).apply(cur);
    } else {
      cur = apply_gen(gen_of(s), cur);
    }
  }
  return cur;
}

ChainNormalForm normalize_chain(std::span<const ChainSymbol> seq) {
  // Rewrite in composition order (leftmost symbol applied last): cancel
  // inverse pairs, push pi factors left, and resolve mixed-sign generator
  // pairs via the relation table until the word is a pi power followed by a
  // single-sign generator chain.
  std::vector<ChainSymbol> comp(seq.rbegin(), seq.rend());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < comp.size(); ++i) {
      const ChainSymbol a = comp[i], b = comp[i + 1];
      if (b == sym_inverse(a)) {
        comp.erase(comp.begin() + static_cast<std::ptrdiff_t>(i),
                   comp.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
      if (is_gen(a) && is_pi(b)) {
        comp[i] = b;
        comp[i + 1] = pi_conjugate(a);
        changed = true;
        break;
      }
      if (is_gen(a) && is_gen(b) && positive_gen_sym(a) != positive_gen_sym(b)) {
        const MixedRewrite r = mixed_rewrite(a, b);
        comp[i] = r.pi;
        comp[i + 1] = r.gen;
        changed = true;
        break;
      }
    }
  }

  ChainNormalForm nf;
  std::size_t i = 0;
  int pi_exp = 0;
  for (; i < comp.size() && is_pi(comp[i]); ++i) {
    pi_exp += (comp[i] == ChainSymbol::Pi) ? 1 : -1;
  }
  nf.w1_part = WhiteheadW1::pi_power(pi_exp);
  nf.chain.steps.reserve(comp.size() - i);
  for (std::size_t j = comp.size(); j > i; --j) {
    assert(is_gen(comp[j - 1]));
    nf.chain.steps.push_back(gen_of(comp[j - 1]));
  }
  nf.chain.family = (!nf.chain.steps.empty() && !positive(nf.chain.steps.front()))
                        ? ChainFamily::C2
                        : ChainFamily::C1;
  assert(nf.chain.valid());
  return nf;
}

std::string symbols_text(std::span<const ChainSymbol> steps) {
  std::string s;
  s.reserve(steps.size());
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) s.push_back(symbol_char(*it));
  return s;
}

}  // namespace teq
