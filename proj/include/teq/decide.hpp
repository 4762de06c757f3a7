#pragma once

#include <functional>
#include <optional>

#include "teq/chain.hpp"

namespace teq {

struct SearchStats {
  std::uint64_t nodes_visited = 0;
  std::size_t max_word_length = 0;
  unsigned bound_used = 0;
};

struct WitnessInfo {
  GeneratorChain chain;
  std::size_t length_u = 0;
  std::size_t length_v = 0;
};

// Outcome of a decision run. equivalent == false always carries a witness:
// the shortest mismatching chain, ties broken by family (C1 first) and then
// lexicographically (sigma before tau) in application order.
struct DecisionResult {
  bool equivalent = false;
  std::optional<WitnessInfo> witness;
  SearchStats stats;
};

struct DecideOptions {
  std::optional<unsigned> bound;  // overrides the theorem bound 2||u||+3
  unsigned threads = 1;
  // Cross-checks every built word length against the count-based prediction
  // from its parent; throws std::logic_error on disagreement.
  bool check_predictions = false;
};

// The chain-length bound of the decision procedure, 2||u|| + 3.
unsigned omega_bound(const Word& u);
unsigned omega_bound_for_length(std::size_t cyclic_len);

// Decides translation equivalence of u and v by checking that every chain of
// family C1 or C2 up to the bound maps them to equal cyclic lengths. With the
// default bound the verdict is exact; with an override it only reports what
// the bounded check saw.
DecisionResult decide(const Word& u, const Word& v, const DecideOptions& opts = {});

// Walks every chain of one family with |chain| <= bound in canonical order
// (shorter first, then lexicographic), invoking on_node once per chain with
// the two image cyclic lengths. Returns the first mismatch, if any.
// Precondition: ||u|| == ||v|| is not required, but the identity chain is
// part of the walk, so a length mismatch surfaces at the root.
using NodeFn = std::function<void(const GeneratorChain&, std::size_t, std::size_t)>;
std::optional<WitnessInfo> search_tree(const CyclicWord& u, const CyclicWord& v,
                                       ChainFamily family, unsigned bound,
                                       const NodeFn& on_node = {});

inline constexpr unsigned kSpectrumDepthCap = 14;

struct SpectrumEntry {
  ChainFamily family;
  std::string chain;  // chain text (composition order)
  std::size_t length;
};

// ||psi(u)|| for every chain psi of both families with |psi| <= depth, in
// canonical chain order. Throws std::invalid_argument above the depth cap.
std::vector<SpectrumEntry> orbit_length_spectrum(const Word& u, unsigned depth);

}  // namespace teq
