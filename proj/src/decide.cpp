#include "teq/decide.hpp"

#include <atomic>
#include <algorithm>
#include <stdexcept>
#include <thread>

namespace teq {

namespace {

constexpr Gen family_gen(ChainFamily f, std::uint8_t idx) {
  // C1: sigma < tau; C2: sigma^-1 < tau^-1.
  return static_cast<Gen>((idx << 1) | (f == ChainFamily::C2 ? 1 : 0));
}

GeneratorChain chain_from_path(ChainFamily f, std::span<const std::uint8_t> path) {
  GeneratorChain c;
  c.family = f;
  c.steps.reserve(path.size());
  for (std::uint8_t b : path) c.steps.push_back(family_gen(f, b));
  return c;
}

struct LevelMismatch {
  std::vector<std::uint8_t> path;  // one branch bit per step, application order
  std::size_t len_u = 0;
  std::size_t len_v = 0;
};

bool path_less(const LevelMismatch& a, const LevelMismatch& b) { return a.path < b.path; }

struct LevelOutcome {
  std::uint64_t nodes = 0;
  std::size_t max_len = 0;
  std::optional<LevelMismatch> mismatch;

  void merge(const LevelOutcome& other) {
    nodes += other.nodes;
    max_len = std::max(max_len, other.max_len);
    if (other.mismatch && (!mismatch || path_less(*other.mismatch, *mismatch))) {
      mismatch = other.mismatch;
    }
  }
};

[[noreturn]] void prediction_failure(Gen g, std::size_t predicted, std::size_t actual) {
  throw std::logic_error("prediction mismatch: generator " + std::string(1, gen_char(g)) +
                         " predicted " + std::to_string(predicted) + ", applied " +
                         std::to_string(actual));
}

// Walks the subtree of one family below a fixed prefix, testing exactly the
// chains of length `level`. Lengths at the target depth come from the
// count-based prediction; interior nodes are materialized for their children.
class LevelWalker {
 public:
  LevelWalker(ChainFamily family, unsigned level, bool check_predictions)
      : family_(family), level_(level), check_(check_predictions) {
    bufs_u_.resize(level);
    bufs_v_.resize(level);
    path_.resize(level);
  }

  // prefix: branch bits for depths [0, prefix_len); root words are given as
  // spans valid for the duration of the call.
  void run(std::span<const Letter> u0, std::span<const Letter> v0,
           std::span<const std::uint8_t> prefix, LevelOutcome& out) {
    if (level_ == 0) {
      out.nodes += 1;
      out.max_len = std::max({out.max_len, u0.size(), v0.size()});
      if (u0.size() != v0.size() && !out.mismatch) {
        out.mismatch = LevelMismatch{{}, u0.size(), v0.size()};
      }
      return;
    }
    std::span<const Letter> u = u0;
    std::span<const Letter> v = v0;
    for (std::size_t d = 0; d < prefix.size(); ++d) {
      path_[d] = prefix[d];
      const Gen g = family_gen(family_, prefix[d]);
      step(g, u, v, d);
      u = bufs_u_[d];
      v = bufs_v_[d];
    }
    descend(u, v, prefix.size(), out);
  }

 private:
  void step(Gen g, std::span<const Letter> u, std::span<const Letter> v, std::size_t depth) {
    if (check_) {
      const std::size_t pu = predicted_length(g, u);
      const std::size_t pv = predicted_length(g, v);
      apply_gen_cyclic(g, u, bufs_u_[depth]);
      apply_gen_cyclic(g, v, bufs_v_[depth]);
      if (bufs_u_[depth].size() != pu) prediction_failure(g, pu, bufs_u_[depth].size());
      if (bufs_v_[depth].size() != pv) prediction_failure(g, pv, bufs_v_[depth].size());
    } else {
      apply_gen_cyclic(g, u, bufs_u_[depth]);
      apply_gen_cyclic(g, v, bufs_v_[depth]);
    }
  }

  void descend(std::span<const Letter> u, std::span<const Letter> v, std::size_t depth,
               LevelOutcome& out) {
    if (depth + 1 == level_) {
      const std::array<std::size_t, 4> all_u = predicted_lengths_all(u);
      const std::array<std::size_t, 4> all_v = predicted_lengths_all(v);
      for (std::uint8_t b = 0; b < 2; ++b) {
        const Gen g = family_gen(family_, b);
        const std::size_t lu = all_u[static_cast<std::uint8_t>(g)];
        const std::size_t lv = all_v[static_cast<std::uint8_t>(g)];
        out.nodes += 1;
        out.max_len = std::max({out.max_len, lu, lv});
        if (lu != lv) {
          path_[depth] = b;
          // Tasks may run out of order; keep the lexicographically least path.
          if (!out.mismatch ||
              std::lexicographical_compare(path_.begin(),
                                           path_.begin() + static_cast<std::ptrdiff_t>(depth) + 1,
                                           out.mismatch->path.begin(),
                                           out.mismatch->path.end())) {
            out.mismatch = LevelMismatch{
                {path_.begin(), path_.begin() + static_cast<std::ptrdiff_t>(depth) + 1}, lu, lv};
          }
        }
      }
      return;
    }
    for (std::uint8_t b = 0; b < 2; ++b) {
      path_[depth] = b;
      const Gen g = family_gen(family_, b);
      step(g, u, v, depth);
      out.max_len = std::max({out.max_len, bufs_u_[depth].size(), bufs_v_[depth].size()});
      descend(bufs_u_[depth], bufs_v_[depth], depth + 1, out);
    }
  }

  ChainFamily family_;
  unsigned level_;
  bool check_;
  std::vector<LetterSeq> bufs_u_, bufs_v_;
  std::vector<std::uint8_t> path_;
};

// Runs one level of one family, splitting the tree at a fixed prefix depth
// across threads. The outcome is independent of the thread count: every chain
// of the level is tested and the least mismatch path wins.
LevelOutcome run_level(ChainFamily family, unsigned level, std::span<const Letter> u0,
                       std::span<const Letter> v0, unsigned threads, bool check) {
  unsigned split = 0;
  if (threads > 1 && level >= 5) {
    split = std::min(level - 1, 6u);
  }
  const std::size_t tasks = std::size_t{1} << split;
  if (tasks <= 1 || threads <= 1) {
    LevelOutcome out;
    LevelWalker walker(family, level, check);
    walker.run(u0, v0, {}, out);
    return out;
  }

  std::atomic<std::size_t> next{0};
  const unsigned workers = std::min<unsigned>(threads, static_cast<unsigned>(tasks));
  std::vector<LevelOutcome> results(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned wi = 0; wi < workers; ++wi) {
    pool.emplace_back([&, wi] {
      LevelWalker walker(family, level, check);
      std::vector<std::uint8_t> prefix(split);
      for (;;) {
        const std::size_t task = next.fetch_add(1, std::memory_order_relaxed);
        if (task >= tasks) break;
        for (unsigned d = 0; d < split; ++d) prefix[d] = (task >> d) & 1u;
        walker.run(u0, v0, prefix, results[wi]);
      }
    });
  }
  for (auto& t : pool) t.join();
  LevelOutcome out;
  for (const auto& r : results) out.merge(r);
  return out;
}

}  // namespace

unsigned omega_bound_for_length(std::size_t cyclic_len) {
  return static_cast<unsigned>(2 * cyclic_len + 3);
}

unsigned omega_bound(const Word& u) { return omega_bound_for_length(cyclic_length(u)); }

DecisionResult decide(const Word& u, const Word& v, const DecideOptions& opts) {
  const CyclicWord cu = cyclic_reduce(u);
  const CyclicWord cv = cyclic_reduce(v);
  const unsigned bound = opts.bound.value_or(omega_bound_for_length(cu.size()));

  DecisionResult result;
  result.stats.bound_used = bound;

  for (unsigned level = 0; level <= bound; ++level) {
    std::optional<LevelMismatch> best;
    ChainFamily best_family = ChainFamily::C1;
    for (ChainFamily family : {ChainFamily::C1, ChainFamily::C2}) {
      LevelOutcome out = run_level(family, level, cu.letters(), cv.letters(), opts.threads,
                                   opts.check_predictions);
      result.stats.nodes_visited += out.nodes;
      result.stats.max_word_length = std::max(result.stats.max_word_length, out.max_len);
      // C1 runs first; an equal-length C2 mismatch never displaces it.
      if (out.mismatch && !best) {
        best = out.mismatch;
        best_family = family;
      }
    }
    if (best) {
      result.equivalent = false;
      result.witness = WitnessInfo{chain_from_path(best_family, best->path), best->len_u,
                                   best->len_v};
      return result;
    }
  }
  result.equivalent = true;
  return result;
}

std::optional<WitnessInfo> search_tree(const CyclicWord& u, const CyclicWord& v,
                                       ChainFamily family, unsigned bound, const NodeFn& on_node) {
  std::optional<WitnessInfo> witness;
  for (unsigned level = 0; level <= bound; ++level) {
    if (on_node) {
      // Re-walk the level sequentially, reporting every chain in order.
      std::vector<std::uint8_t> path(level);
      std::vector<LetterSeq> su(level + 1), sv(level + 1);
      su[0].assign(u.letters().begin(), u.letters().end());
      sv[0].assign(v.letters().begin(), v.letters().end());
      auto emit = [&](std::size_t depth) {
        on_node(chain_from_path(family, std::span(path.data(), depth)), su[depth].size(),
                sv[depth].size());
      };
      if (level == 0) {
        emit(0);
      } else {
        auto walk = [&](auto&& self, std::size_t depth) -> void {
          for (std::uint8_t b = 0; b < 2; ++b) {
            path[depth] = b;
            const Gen g = family_gen(family, b);
            apply_gen_cyclic(g, su[depth], su[depth + 1]);
            apply_gen_cyclic(g, sv[depth], sv[depth + 1]);
            if (depth + 1 == level) {
              emit(depth + 1);
            } else {
              self(self, depth + 1);
            }
          }
        };
        walk(walk, 0);
      }
    }
    LevelOutcome out = run_level(family, level, u.letters(), v.letters(), 1, false);
    if (out.mismatch) {
      witness = WitnessInfo{chain_from_path(family, out.mismatch->path), out.mismatch->len_u,
                            out.mismatch->len_v};
      return witness;
    }
  }
  return witness;
}

std::vector<SpectrumEntry> orbit_length_spectrum(const Word& u, unsigned depth) {
  if (depth > kSpectrumDepthCap) {
    throw std::invalid_argument("spectrum depth " + std::to_string(depth) +
                                " exceeds the cap of " + std::to_string(kSpectrumDepthCap));
  }
  const CyclicWord cu = cyclic_reduce(u);
  std::vector<SpectrumEntry> entries;
  entries.reserve((std::size_t{2} << (depth + 1)) - 2);
  for (unsigned level = 0; level <= depth; ++level) {
    for (ChainFamily family : {ChainFamily::C1, ChainFamily::C2}) {
      std::vector<std::uint8_t> path(level);
      std::vector<LetterSeq> stack(level + 1);
      stack[0].assign(cu.letters().begin(), cu.letters().end());
      auto emit = [&](std::size_t depth_now) {
        entries.push_back(SpectrumEntry{
            family,
            chain_text(chain_from_path(family, std::span(path.data(), depth_now))),
            stack[depth_now].size()});
      };
      if (level == 0) {
        emit(0);
        continue;
      }
      auto walk = [&](auto&& self, std::size_t d) -> void {
        for (std::uint8_t b = 0; b < 2; ++b) {
          path[d] = b;
          apply_gen_cyclic(family_gen(family, b), stack[d], stack[d + 1]);
          if (d + 1 == level) {
            emit(d + 1);
          } else {
            self(self, d + 1);
          }
        }
      };
      walk(walk, 0);
    }
  }
  return entries;
}

}  // namespace teq
