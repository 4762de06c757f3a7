#include "teq/oracle.hpp"

#include <stdexcept>

#include "teq/random_words.hpp"

namespace teq {

namespace {

// DFS over freely reduced generator sequences of exactly `level` steps, in
// lexicographic order. Returns true when a mismatch was found (steps holds
// the chain).
class MixedWalker {
 public:
  explicit MixedWalker(unsigned level) : level_(level) {
    bufs_u_.resize(level);
    bufs_v_.resize(level);
    steps_.resize(level);
  }

  bool run(std::span<const Letter> u0, std::span<const Letter> v0, std::size_t* out_lu,
           std::size_t* out_lv) {
    if (level_ == 0) {
      *out_lu = u0.size();
      *out_lv = v0.size();
      return u0.size() != v0.size();
    }
    return descend(u0, v0, 0, out_lu, out_lv);
  }

  std::span<const Gen> steps() const { return steps_; }

 private:
  bool descend(std::span<const Letter> u, std::span<const Letter> v, std::size_t depth,
               std::size_t* out_lu, std::size_t* out_lv) {
    std::array<std::size_t, 4> all_u{}, all_v{};
    if (depth + 1 == level_) {
      all_u = predicted_lengths_all(u);
      all_v = predicted_lengths_all(v);
    }
    for (Gen g : kAllGens) {
      if (depth > 0 && g == inverse(steps_[depth - 1])) continue;
      steps_[depth] = g;
      if (depth + 1 == level_) {
        const std::size_t lu = all_u[static_cast<std::uint8_t>(g)];
        const std::size_t lv = all_v[static_cast<std::uint8_t>(g)];
        if (lu != lv) {
          *out_lu = lu;
          *out_lv = lv;
          return true;
        }
      } else {
        apply_gen_cyclic(g, u, bufs_u_[depth]);
        apply_gen_cyclic(g, v, bufs_v_[depth]);
        if (descend(bufs_u_[depth], bufs_v_[depth], depth + 1, out_lu, out_lv)) return true;
      }
    }
    return false;
  }

  unsigned level_;
  std::vector<LetterSeq> bufs_u_, bufs_v_;
  std::vector<Gen> steps_;
};

}  // namespace

std::optional<MixedChain> decide_mixed(const Word& u, const Word& v, unsigned depth) {
  if (depth > kMixedDepthCap) {
    throw std::invalid_argument("mixed search depth " + std::to_string(depth) +
                                " exceeds the cap of " + std::to_string(kMixedDepthCap));
  }
  const CyclicWord cu = cyclic_reduce(u);
  const CyclicWord cv = cyclic_reduce(v);
  for (unsigned level = 0; level <= depth; ++level) {
    MixedWalker walker(level);
    std::size_t lu = 0, lv = 0;
    if (walker.run(cu.letters(), cv.letters(), &lu, &lv)) {
      MixedChain chain;
      chain.steps.assign(walker.steps().begin(), walker.steps().end());
      return chain;
    }
  }
  return std::nullopt;
}

ConsistencyReport normalization_consistency(std::uint64_t samples, std::size_t max_len,
                                            unsigned depth, std::uint64_t seed) {
  ConsistencyReport report;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> chain_len(0, depth);
  for (std::uint64_t i = 0; i < samples; ++i) {
    const MixedChain mixed = random_mixed_chain(rng, chain_len(rng));
    std::vector<ChainSymbol> symbols;
    symbols.reserve(mixed.steps.size());
    for (Gen g : mixed.steps) {
      symbols.push_back(static_cast<ChainSymbol>(static_cast<std::uint8_t>(g)));
    }
    const ChainNormalForm nf = normalize_chain(symbols);
    bool ok = true;
    for (int k = 0; k < 5 && ok; ++k) {
      const CyclicWord w = random_cyclic_word(rng, max_len);
      const std::size_t direct = apply_chain(mixed, w).size();
      const std::size_t via_normal = apply_chain(nf.chain, w).size();
      if (direct != via_normal) {
        ok = false;
        if (report.first_failure.empty()) {
          report.first_failure = "chain " + chain_text(mixed) + " on " + w.str() + ": " +
                                 std::to_string(direct) + " vs " + std::to_string(via_normal);
        }
      }
    }
    (ok ? report.passes : report.failures)++;
  }
  return report;
}

}  // namespace teq
