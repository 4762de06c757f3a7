#include "teq/lemma_suite.hpp"

#include <algorithm>
#include <sstream>

namespace teq {

namespace {

using Sym = ChainSymbol;

CyclicWord apply_class(W2Class cls, const CyclicWord& w) {
  switch (cls) {
    case W2Class::Identity: return w;
    case W2Class::Sigma: return apply_gen(Gen::Sigma, w);
    case W2Class::SigmaInv: return apply_gen(Gen::SigmaInv, w);
    case W2Class::Tau: return apply_gen(Gen::Tau, w);
    case W2Class::TauInv: return apply_gen(Gen::TauInv, w);
  }
  return w;
}

std::string class_name(W2Class cls) {
  switch (cls) {
    case W2Class::Identity: return "1";
    case W2Class::Sigma: return "s";
    case W2Class::SigmaInv: return "S";
    case W2Class::Tau: return "t";
    case W2Class::TauInv: return "T";
  }
  return "?";
}

std::string describe_w2(const WhiteheadW2& a) {
  std::string s = "({";
  for (Letter l : kAllLetters) {
    if (a.contains(l)) s.push_back(to_char(l));
  }
  s += "}, ";
  s.push_back(to_char(a.multiplier()));
  s += ")";
  return s;
}

// Applies a symbol sequence written in composition order (as the relation
// tables read) to a cyclic word.
CyclicWord apply_composition(std::initializer_list<Sym> comp, const CyclicWord& w) {
  std::vector<Sym> app(comp);
  std::reverse(app.begin(), app.end());
  return apply_symbols(app, w);
}

struct Relation {
  const char* name;
  std::initializer_list<Sym> lhs;  // composition order
  std::initializer_list<Sym> rhs;
};

const Relation kRelations[12] = {
    {"T s = p t", {Sym::TauInv, Sym::Sigma}, {Sym::Pi, Sym::Tau}},
    {"T p = p s", {Sym::TauInv, Sym::Pi}, {Sym::Pi, Sym::Sigma}},
    {"S p = p t", {Sym::SigmaInv, Sym::Pi}, {Sym::Pi, Sym::Tau}},
    {"s T = p S", {Sym::Sigma, Sym::TauInv}, {Sym::Pi, Sym::SigmaInv}},
    {"t p = p S", {Sym::Tau, Sym::Pi}, {Sym::Pi, Sym::SigmaInv}},
    {"s p = p T", {Sym::Sigma, Sym::Pi}, {Sym::Pi, Sym::TauInv}},
    {"t S = P T", {Sym::Tau, Sym::SigmaInv}, {Sym::PiInv, Sym::TauInv}},
    {"t P = P S", {Sym::Tau, Sym::PiInv}, {Sym::PiInv, Sym::SigmaInv}},
    {"s P = P T", {Sym::Sigma, Sym::PiInv}, {Sym::PiInv, Sym::TauInv}},
    {"S t = P s", {Sym::SigmaInv, Sym::Tau}, {Sym::PiInv, Sym::Sigma}},
    {"T P = P s", {Sym::TauInv, Sym::PiInv}, {Sym::PiInv, Sym::Sigma}},
    {"S P = P t", {Sym::SigmaInv, Sym::PiInv}, {Sym::PiInv, Sym::Tau}},
};

class Suite {
 public:
  explicit Suite(const SuiteOptions& opt) : opt_(opt), rng_(opt.seed) {}

  std::vector<PropertyResult> run() {
    bar_identity();
    classification();
    class_distinctness();
    relations();
    normalize_soundness();
    count_equalities();
    no_proper_cancellation();
    predicted_lengths();
    automorphism_property();
    w1_length_preservation();
    if (opt_.full) {
      decide_reflexivity();
      decide_symmetry();
      monotone_bound();
      oracle_agreement();
      node_counts();
      prefix_consistency();
      mixed_normalization();
    }
    return std::move(results_);
  }

 private:
  PropertyResult& begin(std::string name) {
    results_.push_back(PropertyResult{std::move(name), 0, true, ""});
    return results_.back();
  }

  void fail(PropertyResult& r, const std::string& counterexample) {
    if (r.passed) {
      r.passed = false;
      r.counterexample = counterexample;
    }
  }

  CyclicWord word(std::size_t max_len) { return random_cyclic_word(rng_, max_len); }

  // --- (S, a) and its complement (bar S, a^-1) agree on cyclic words ---
  void bar_identity() {
    auto& r = begin("bar_complement_agreement");
    for (std::uint64_t i = 0; i < opt_.samples; ++i) {
      const CyclicWord w = word(opt_.max_len);
      for (const WhiteheadW2& a : all_w2_rank2()) {
        ++r.cases;
        if (a.apply(w) != bar(a).apply(w)) {
          fail(r, describe_w2(a) + " vs bar on " + w.str());
        }
      }
    }
  }

  // --- every (W2) map matches its representative class ---
  void classification() {
    auto& r = begin("w2_classification");
    for (std::uint64_t i = 0; i < opt_.samples; ++i) {
      const CyclicWord w = word(opt_.max_len);
      for (const WhiteheadW2& a : all_w2_rank2()) {
        ++r.cases;
        const W2Class cls = classify(a);
        if (a.apply(w) != apply_class(cls, w)) {
          fail(r, describe_w2(a) + " != class " + class_name(cls) + " on " + w.str());
        }
      }
    }
  }

  void class_distinctness() {
    auto& r = begin("w2_distinct_classes");
    std::vector<CyclicWord> corpus = {cyclic_reduce(Word::parse("x")),
                                      cyclic_reduce(Word::parse("y")),
                                      cyclic_reduce(Word::parse("xy")),
                                      cyclic_reduce(Word::parse("xY")),
                                      cyclic_reduce(Word::parse("xxy"))};
    for (int k = 0; k < 20; ++k) corpus.push_back(word(12));
    constexpr W2Class classes[5] = {W2Class::Identity, W2Class::Sigma, W2Class::SigmaInv,
                                    W2Class::Tau, W2Class::TauInv};
    for (int i = 0; i < 5; ++i) {
      for (int j = i + 1; j < 5; ++j) {
        ++r.cases;
        bool separated = false;
        for (const CyclicWord& w : corpus) {
          if (apply_class(classes[i], w) != apply_class(classes[j], w)) {
            separated = true;
            break;
          }
        }
        if (!separated) {
          fail(r, "classes " + class_name(classes[i]) + " and " + class_name(classes[j]) +
                      " agree on the whole corpus");
        }
      }
    }
  }

  // --- the twelve rewriting relations over cyclic words ---
  void relations() {
    auto& r = begin("pi_rewriting_relations");
    for (std::uint64_t i = 0; i < opt_.samples; ++i) {
      const CyclicWord w = word(opt_.max_len);
      for (const Relation& rel : kRelations) {
        ++r.cases;
        if (apply_composition(rel.lhs, w) != apply_composition(rel.rhs, w)) {
          fail(r, std::string(rel.name) + " fails on " + w.str());
        }
      }
    }
  }

  // --- normalize_chain agrees with the input composition ---
  void normalize_soundness() {
    auto& r = begin("chain_normalization_soundness");
    std::uniform_int_distribution<std::size_t> len(0, 12);
    std::uniform_int_distribution<int> sym(0, 5);
    for (std::uint64_t i = 0; i < opt_.samples; ++i) {
      std::vector<Sym> seq(len(rng_));
      for (auto& s : seq) s = static_cast<Sym>(sym(rng_));
      const ChainNormalForm nf = normalize_chain(seq);
      for (int k = 0; k < 100; ++k) {
        ++r.cases;
        const CyclicWord w = word(opt_.max_len);
        const CyclicWord direct = apply_symbols(seq, w);
        const CyclicWord via_nf = nf.w1_part.apply(apply_chain(nf.chain, w));
        if (direct != via_nf) {
          fail(r, "seq " + symbols_text(seq) + " on " + w.str() + ": " + direct.str() + " vs " +
                      via_nf.str());
        }
      }
    }
  }

  // --- equal lengths along an orbit force equal letter counts ---
  void count_equalities() {
    auto& r = begin("orbit_count_equalities");
    constexpr unsigned kDepth = 4;
    std::uniform_int_distribution<std::size_t> len(0, std::min<std::size_t>(opt_.max_len, 60));
    for (std::uint64_t i = 0; i < opt_.samples; ++i) {
      const Word u = random_reduced_word(rng_, len(rng_));
      const Word g = random_reduced_word(rng_, 6);
      const Word v = (i % 2 == 0) ? conjugate(u, g) : u.inverse();
      const CyclicWord cu = cyclic_reduce(u);
      const CyclicWord cv = cyclic_reduce(v);
      bool bad = false;
      for (ChainFamily family : {ChainFamily::C1, ChainFamily::C2}) {
        search_tree(cu, cv, family, kDepth,
                    [&](const GeneratorChain& chain, std::size_t lu, std::size_t lv) {
                      ++r.cases;
                      if (bad) return;
                      const CyclicWord iu = apply_chain(chain, cu);
                      const CyclicWord iv = apply_chain(chain, cv);
                      if (lu != lv || count_letter(iu, Letter::X) != count_letter(iv, Letter::X) ||
                          count_letter(iu, Letter::Y) != count_letter(iv, Letter::Y)) {
                        bad = true;
                        fail(r, "u=" + u.str() + " v=" + v.str() + " chain=" + chain_text(chain));
                      }
                    });
      }
    }
  }

  // --- enough same-sign factors rule out proper cancellation ---
  void no_proper_cancellation() {
    auto& r = begin("saturated_chain_no_proper_cancellation");
    std::uniform_int_distribution<std::size_t> wlen(0, 8);
    std::uniform_int_distribution<std::size_t> extra(0, 4);
    std::uniform_int_distribution<int> coin(0, 1);
    for (std::uint64_t i = 0; i < opt_.samples; ++i) {
      const CyclicWord w = random_cyclic_word(rng_, wlen(rng_));
      for (ChainFamily family : {ChainFamily::C1, ChainFamily::C2}) {
        for (int which = 0; which < 2; ++which) {
          // which == 0 checks the sigma-type step, 1 the tau-type step.
          const Gen step = static_cast<Gen>((which << 1) | (family == ChainFamily::C2 ? 1 : 0));
          const Gen other = static_cast<Gen>(static_cast<std::uint8_t>(step) ^ 2u);
          std::vector<Gen> steps(w.size(), step);
          const std::size_t pad = extra(rng_);
          for (std::size_t k = 0; k < pad; ++k) {
            steps.push_back(coin(rng_) ? other : step);
          }
          std::shuffle(steps.begin(), steps.end(), rng_);
          const CyclicWord image = apply_chain(steps, w);
          ++r.cases;
          const CancellationReport report = cancellation_report(step, image.letters());
          if (report.proper != 0) {
            GeneratorChain chain{family, steps};
            fail(r, "w=" + w.str() + " chain=" + chain_text(chain) + " step " +
                        std::string(1, gen_char(step)) + ": " + std::to_string(report.proper) +
                        " proper cancellations");
          }
        }
      }
    }
  }

  // --- the count-based length formulas for all four generators ---
  void predicted_lengths() {
    auto& r = begin("predicted_length_agreement");
    for (std::uint64_t i = 0; i < opt_.samples; ++i) {
      const CyclicWord w = word(opt_.max_len);
      for (Gen g : kAllGens) {
        ++r.cases;
        const std::size_t predicted = predicted_length(g, w);
        const std::size_t actual = apply_gen(g, w).size();
        if (predicted != actual) {
          fail(r, std::string(1, gen_char(g)) + " on " + w.str() + ": predicted " +
                      std::to_string(predicted) + ", applied " + std::to_string(actual));
        }
      }
    }
  }

  void automorphism_property() {
    auto& r = begin("w2_automorphism_property");
    std::uniform_int_distribution<std::size_t> len(0, opt_.max_len);
    for (std::uint64_t i = 0; i < opt_.samples; ++i) {
      const Word a = random_reduced_word(rng_, len(rng_));
      const Word b = random_reduced_word(rng_, len(rng_));
      for (const WhiteheadW2& alpha : all_w2_rank2()) {
        ++r.cases;
        if (alpha.apply(a * b) != alpha.apply(a) * alpha.apply(b)) {
          fail(r, describe_w2(alpha) + " on " + a.str() + " . " + b.str());
        }
      }
    }
  }

  void w1_length_preservation() {
    auto& r = begin("w1_length_preservation");
    for (std::uint64_t i = 0; i < opt_.samples; ++i) {
      const CyclicWord w = word(opt_.max_len);
      for (const WhiteheadW1& beta : WhiteheadW1::all()) {
        ++r.cases;
        if (beta.apply(w).size() != w.size()) {
          fail(r, "W1 map changes cyclic length of " + w.str());
        }
      }
    }
  }

  // --- full-mode properties (decision engine; internally capped) ---

  std::uint64_t capped(std::uint64_t cap) const { return std::min(opt_.samples, cap); }

  void decide_reflexivity() {
    auto& r = begin("decide_reflexivity_congruence");
    for (std::uint64_t i = 0; i < capped(200); ++i) {
      const CyclicWord cw = random_cyclic_word(rng_, 6);
      const Word u = cw.representative();
      const Word g = random_reduced_word(rng_, 4);
      ++r.cases;
      if (!decide(u, u).equivalent || !decide(u, conjugate(u, g)).equivalent ||
          !decide(u, u.inverse()).equivalent) {
        fail(r, "u=" + u.str() + " g=" + g.str());
      }
    }
  }

  void decide_symmetry() {
    auto& r = begin("decide_symmetry");
    for (std::uint64_t i = 0; i < capped(100); ++i) {
      const Word u = random_cyclic_word_exact(rng_, 1 + (i % 4)).representative();
      const Word v = random_cyclic_word(rng_, 4).representative();
      ++r.cases;
      const DecisionResult uv = decide(u, v);
      const DecisionResult vu = decide(v, u);
      if (cyclic_length(u) == cyclic_length(v)) {
        if (uv.equivalent != vu.equivalent) fail(r, "u=" + u.str() + " v=" + v.str());
      } else if (uv.equivalent || vu.equivalent) {
        fail(r, "length mismatch not refused: u=" + u.str() + " v=" + v.str());
      }
    }
  }

  void monotone_bound() {
    auto& r = begin("decide_monotone_bound");
    for (std::uint64_t i = 0; i < capped(50); ++i) {
      const CyclicWord cw = random_cyclic_word_exact(rng_, 1 + (i % 4));
      const Word u = cw.representative();
      const Word g = random_reduced_word(rng_, 3);
      const Word v = (i % 2 == 0) ? conjugate(u, g) : u.inverse();
      ++r.cases;
      const unsigned bound = omega_bound(u);
      DecideOptions wider;
      wider.bound = bound + 4;
      if (!decide(u, v).equivalent || !decide(u, v, wider).equivalent) {
        fail(r, "equivalent pair fails at a wider bound: u=" + u.str() + " v=" + v.str());
      }
    }
    for (std::uint64_t i = 0; i < capped(100); ++i) {
      const Word u = random_cyclic_word(rng_, 4).representative();
      const Word v = random_cyclic_word(rng_, 4).representative();
      ++r.cases;
      const DecisionResult base = decide(u, v);
      if (!base.equivalent) {
        DecideOptions wider;
        wider.bound = base.stats.bound_used + 2;
        if (decide(u, v, wider).equivalent) {
          fail(r, "mismatch vanished at a wider bound: u=" + u.str() + " v=" + v.str());
        }
      }
    }
  }

  void oracle_agreement() {
    auto& r = begin("decide_vs_mixed_oracle");
    for (std::uint64_t i = 0; i < capped(200); ++i) {
      const std::size_t n = 1 + (i % 5);
      const Word u = random_cyclic_word_exact(rng_, n).representative();
      const Word v = random_cyclic_word_exact(rng_, n).representative();
      ++r.cases;
      const DecisionResult verdict = decide(u, v);
      const unsigned depth = std::min(omega_bound(u), 9u);
      const auto mixed = decide_mixed(u, v, depth);
      if (mixed.has_value() && verdict.equivalent) {
        fail(r, "oracle mismatch on equivalent pair: u=" + u.str() + " v=" + v.str());
      }
      if (!verdict.equivalent && verdict.witness->chain.length() <= depth && !mixed.has_value()) {
        fail(r, "oracle missed witness " + chain_text(verdict.witness->chain) + ": u=" + u.str() +
                    " v=" + v.str());
      }
    }
  }

  void node_counts() {
    auto& r = begin("decide_node_count");
    for (unsigned bound = 0; bound <= 6; ++bound) {
      const Word u = random_cyclic_word_exact(rng_, 3).representative();
      ++r.cases;
      DecideOptions opts;
      opts.bound = bound;
      const DecisionResult res = decide(u, u, opts);
      const std::uint64_t expected = 2 * ((std::uint64_t{1} << (bound + 1)) - 1);
      if (!res.equivalent || res.stats.nodes_visited != expected) {
        fail(r, "bound " + std::to_string(bound) + ": " +
                    std::to_string(res.stats.nodes_visited) + " nodes, expected " +
                    std::to_string(expected));
      }
    }
  }

  void prefix_consistency() {
    auto& r = begin("decide_prefix_consistency");
    for (std::uint64_t i = 0; i < capped(50); ++i) {
      const Word u = random_cyclic_word(rng_, 5).representative();
      const Word v = random_cyclic_word(rng_, 5).representative();
      ++r.cases;
      DecideOptions opts;
      opts.check_predictions = true;
      try {
        decide(u, v, opts);
      } catch (const std::logic_error& e) {
        fail(r, std::string(e.what()) + ": u=" + u.str() + " v=" + v.str());
      }
    }
  }

  void mixed_normalization() {
    auto& r = begin("mixed_chain_normalization");
    const ConsistencyReport report =
        normalization_consistency(capped(1000), std::min<std::size_t>(opt_.max_len, 40), 8,
                                  rng_());
    r.cases = report.passes + report.failures;
    if (report.failures != 0) fail(r, report.first_failure);
  }

  SuiteOptions opt_;
  std::mt19937_64 rng_;
  std::vector<PropertyResult> results_;
};

}  // namespace

std::vector<PropertyResult> run_lemma_suite(const SuiteOptions& options) {
  return Suite(options).run();
}

bool all_passed(const std::vector<PropertyResult>& results) {
  for (const auto& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

}  // namespace teq
