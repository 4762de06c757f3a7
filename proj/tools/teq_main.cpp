#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "teq/lemma_suite.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace teq;

// Bounds above this need --force: the tree has 2^(B+1) nodes per family, so
// 27 (a cyclic length of 12) is already 2^28 nodes.
constexpr unsigned kBoundCap = 27;

int fail_usage(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return 2;
}

std::int64_t elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               start)
      .count();
}

struct DecideArgs {
  std::string u_text, v_text;
  bool witness = false;
  bool emit_json = false;
  bool force = false;
  unsigned threads = 1;
  std::optional<unsigned> bound;
};

json decide_record(const std::string& u_text, const std::string& v_text,
                   const DecisionResult& result, std::int64_t ms) {
  json record;
  record["u"] = u_text;
  record["v"] = v_text;
  record["equivalent"] = result.equivalent;
  record["bound"] = result.stats.bound_used;
  if (result.witness) {
    json w;
    w["family"] = family_str(result.witness->chain.family);
    w["chain"] = chain_text(result.witness->chain);
    w["len_u"] = result.witness->length_u;
    w["len_v"] = result.witness->length_v;
    record["witness"] = w;
  } else {
    record["witness"] = nullptr;
  }
  record["nodes"] = result.stats.nodes_visited;
  record["ms"] = ms;
  return record;
}

// Returns the effective bound or an error message via exception-free check.
std::optional<std::string> bound_refusal(std::size_t cyclic_len_u,
                                         const std::optional<unsigned>& override_bound,
                                         bool force) {
  const unsigned bound = override_bound.value_or(omega_bound_for_length(cyclic_len_u));
  if (bound > kBoundCap && !force) {
    return "bound " + std::to_string(bound) + " exceeds the cap of " + std::to_string(kBoundCap) +
           " (cyclic length over 12); the tree has 2^" + std::to_string(bound + 1) +
           " nodes per family. Pass --force to run anyway.";
  }
  return std::nullopt;
}

int run_decide(const DecideArgs& args) {
  Word u, v;
  try {
    u = Word::parse(args.u_text);
    v = Word::parse(args.v_text);
  } catch (const WordParseError& e) {
    return fail_usage(e.what());
  }
  if (auto refusal = bound_refusal(cyclic_length(u), args.bound, args.force)) {
    return fail_usage(*refusal);
  }
  DecideOptions opts;
  opts.bound = args.bound;
  opts.threads = args.threads;
  const auto start = std::chrono::steady_clock::now();
  const DecisionResult result = decide(u, v, opts);
  const std::int64_t ms = elapsed_ms(start);
  if (args.emit_json) {
    std::cout << decide_record(args.u_text, args.v_text, result, ms).dump() << "\n";
  } else {
    std::cout << (result.equivalent ? "equivalent" : "not equivalent") << "\n";
    if (args.witness) {
      if (result.witness) {
        std::cout << "witness: " << family_str(result.witness->chain.family) << " chain \""
                  << chain_text(result.witness->chain) << "\"  lengths "
                  << result.witness->length_u << " != " << result.witness->length_v << "\n";
      } else {
        std::cout << "witness: none (all " << result.stats.nodes_visited
                  << " chains up to length " << result.stats.bound_used << " agree)\n";
      }
    }
  }
  return result.equivalent ? 0 : 1;
}

int run_batch(const std::string& path, const DecideArgs& shared) {
  std::ifstream in(path);
  if (!in) return fail_usage("cannot open batch file '" + path + "'");
  std::size_t lines = 0, decided = 0, errors = 0, equivalent = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    ++lines;
    const std::size_t tab = line.find('\t');
    json record;
    if (tab == std::string::npos) {
      ++errors;
      record["line"] = line_no;
      record["error"] = "expected '<u><TAB><v>'";
      std::cout << record.dump() << "\n";
      continue;
    }
    const std::string u_text = line.substr(0, tab);
    const std::string v_text = line.substr(tab + 1);
    try {
      const Word u = Word::parse(u_text);
      const Word v = Word::parse(v_text);
      if (auto refusal = bound_refusal(cyclic_length(u), shared.bound, shared.force)) {
        throw std::invalid_argument(*refusal);
      }
      DecideOptions opts;
      opts.bound = shared.bound;
      opts.threads = shared.threads;
      const auto start = std::chrono::steady_clock::now();
      const DecisionResult result = decide(u, v, opts);
      std::cout << decide_record(u_text, v_text, result, elapsed_ms(start)).dump() << "\n";
      ++decided;
      if (result.equivalent) ++equivalent;
    } catch (const std::exception& e) {
      ++errors;
      record["line"] = line_no;
      record["error"] = e.what();
      std::cout << record.dump() << "\n";
    }
  }
  json summary;
  summary["summary"]["lines"] = lines;
  summary["summary"]["decided"] = decided;
  summary["summary"]["errors"] = errors;
  summary["summary"]["equivalent"] = equivalent;
  summary["summary"]["not_equivalent"] = decided - equivalent;
  std::cout << summary.dump() << "\n";
  return 0;
}

int run_spectrum(const std::string& u_text, unsigned depth, bool emit_json) {
  Word u;
  try {
    u = Word::parse(u_text);
  } catch (const WordParseError& e) {
    return fail_usage(e.what());
  }
  std::vector<SpectrumEntry> entries;
  try {
    entries = orbit_length_spectrum(u, depth);
  } catch (const std::invalid_argument& e) {
    return fail_usage(e.what());
  }
  if (emit_json) {
    json out;
    out["u"] = u_text;
    out["depth"] = depth;
    json list = json::array();
    for (const auto& e : entries) {
      json item;
      item["family"] = family_str(e.family);
      item["chain"] = e.chain;
      item["len"] = e.length;
      list.push_back(item);
    }
    out["spectrum"] = list;
    std::cout << out.dump() << "\n";
  } else {
    for (const auto& e : entries) {
      std::cout << family_str(e.family) << "\t" << (e.chain.empty() ? "-" : e.chain) << "\t"
                << e.length << "\n";
    }
  }
  return 0;
}

int run_oracle(const std::string& u_text, const std::string& v_text, unsigned depth,
               bool emit_json) {
  Word u, v;
  try {
    u = Word::parse(u_text);
    v = Word::parse(v_text);
  } catch (const WordParseError& e) {
    return fail_usage(e.what());
  }
  std::optional<MixedChain> mismatch;
  try {
    mismatch = decide_mixed(u, v, depth);
  } catch (const std::invalid_argument& e) {
    return fail_usage(e.what());
  }
  std::size_t len_u = 0, len_v = 0;
  if (mismatch) {
    len_u = apply_chain(*mismatch, cyclic_reduce(u)).size();
    len_v = apply_chain(*mismatch, cyclic_reduce(v)).size();
  }
  if (emit_json) {
    json out;
    out["u"] = u_text;
    out["v"] = v_text;
    out["depth"] = depth;
    if (mismatch) {
      json w;
      w["chain"] = chain_text(*mismatch);
      w["len_u"] = len_u;
      w["len_v"] = len_v;
      out["witness"] = w;
    } else {
      out["witness"] = nullptr;
    }
    std::cout << out.dump() << "\n";
  } else if (mismatch) {
    std::cout << "mismatch: chain \"" << chain_text(*mismatch) << "\"  lengths " << len_u
              << " != " << len_v << "\n";
  } else {
    std::cout << "no mismatch up to depth " << depth << " (not a certificate of equivalence)\n";
  }
  return mismatch ? 1 : 0;
}

int run_verify(std::uint64_t samples, std::size_t max_len, std::uint64_t seed, bool full) {
  std::cout << "seed " << seed << "  samples " << samples << "  max-len " << max_len << "\n";
  if (samples == 0) {
    std::cout << "warning: --samples 0, all properties pass vacuously\n";
  }
  SuiteOptions opts;
  opts.samples = samples;
  opts.max_len = max_len;
  opts.seed = seed;
  opts.full = full;
  const auto results = run_lemma_suite(opts);
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)\n";
    if (!r.passed) {
      std::cout << "  counterexample: " << r.counterexample << "\n";
    }
  }
  const bool ok = all_passed(results);
  std::cout << (ok ? "all properties passed" : "FAILURES present") << "\n";
  return ok ? 0 : 1;
}

int run_normalize(const std::string& chain_str) {
  std::vector<ChainSymbol> seq;
  try {
    seq = parse_chain_text(chain_str);
  } catch (const ChainParseError& e) {
    return fail_usage(e.what());
  }
  const ChainNormalForm nf = normalize_chain(seq);
  int exponent = 0;
  for (int k = 0; k < 4; ++k) {
    if (nf.w1_part == WhiteheadW1::pi_power(k)) {
      exponent = k;
      break;
    }
  }
  std::cout << "w1: pi^" << exponent << "  (";
  std::cout << "x->" << to_char(nf.w1_part(Letter::X)) << " y->" << to_char(nf.w1_part(Letter::Y))
            << ")\n";
  std::cout << "chain: \"" << chain_text(nf.chain) << "\"\n";
  std::cout << "family: " << family_str(nf.chain.family) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"translation equivalence in the rank-2 free group"};
  app.require_subcommand(1);

  DecideArgs dargs;
  unsigned decide_bound = 0;
  auto* cmd_decide = app.add_subcommand("decide", "decide whether two words are translation equivalent");
  cmd_decide->add_option("u", dargs.u_text, "first word (x X y Y)")->required();
  cmd_decide->add_option("v", dargs.v_text, "second word")->required();
  cmd_decide->add_flag("--witness", dargs.witness, "print the canonical shortest witness chain");
  cmd_decide->add_flag("--json", dargs.emit_json, "emit a JSON record");
  auto* decide_bound_opt =
      cmd_decide->add_option("--bound", decide_bound, "override the search bound (default 2||u||+3)");
  cmd_decide->add_flag("--force", dargs.force, "allow bounds above the safety cap");
  cmd_decide->add_option("--threads", dargs.threads, "worker threads for the search");

  std::string batch_path;
  DecideArgs bargs;
  unsigned batch_bound = 0;
  auto* cmd_batch = app.add_subcommand("batch", "decide tab-separated pairs from a file (JSON lines)");
  cmd_batch->add_option("file", batch_path, "file of '<u><TAB><v>' lines")->required();
  auto* batch_bound_opt = cmd_batch->add_option("--bound", batch_bound, "override the search bound");
  cmd_batch->add_flag("--force", bargs.force, "allow bounds above the safety cap");
  cmd_batch->add_option("--threads", bargs.threads, "worker threads for the search");

  std::string spectrum_u;
  unsigned spectrum_depth = 0;
  bool spectrum_json = false;
  auto* cmd_spectrum = app.add_subcommand("spectrum", "image cyclic lengths over all chains up to a depth");
  cmd_spectrum->add_option("u", spectrum_u, "word")->required();
  cmd_spectrum->add_option("--depth", spectrum_depth, "chain depth")->required();
  cmd_spectrum->add_flag("--json", spectrum_json, "emit JSON");

  std::string oracle_u, oracle_v;
  unsigned oracle_depth = 0;
  bool oracle_json = false;
  auto* cmd_oracle = app.add_subcommand("oracle", "brute-force mixed-sign chain search (second opinion)");
  cmd_oracle->add_option("u", oracle_u, "first word")->required();
  cmd_oracle->add_option("v", oracle_v, "second word")->required();
  cmd_oracle->add_option("--depth", oracle_depth, "chain depth (max 12)")->required();
  cmd_oracle->add_flag("--json", oracle_json, "emit JSON");

  std::uint64_t samples = 1000;
  std::size_t max_len = 100;
  std::uint64_t seed = kDefaultSeed;
  bool full = false;
  auto* cmd_verify = app.add_subcommand("verify-lemmas", "run the randomized property suites");
  cmd_verify->add_option("--samples", samples, "samples per property (default 1000)");
  cmd_verify->add_option("--max-len", max_len, "maximum word length (default 100)");
  cmd_verify->add_option("--seed", seed, "RNG seed (default 1729)");
  cmd_verify->add_flag("--full", full, "also run the decision-engine properties");

  std::string chain_str;
  auto* cmd_normalize = app.add_subcommand("normalize-chain", "rewrite a chain into pi-power * single-sign form");
  cmd_normalize->add_option("chain", chain_str, "chain text over s S t T p P, applied right to left")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (decide_bound_opt->count() > 0) dargs.bound = decide_bound;
  if (batch_bound_opt->count() > 0) bargs.bound = batch_bound;

  if (cmd_decide->parsed()) return run_decide(dargs);
  if (cmd_batch->parsed()) return run_batch(batch_path, bargs);
  if (cmd_spectrum->parsed()) return run_spectrum(spectrum_u, spectrum_depth, spectrum_json);
  if (cmd_oracle->parsed()) return run_oracle(oracle_u, oracle_v, oracle_depth, oracle_json);
  if (cmd_verify->parsed()) return run_verify(samples, max_len, seed, full);
  if (cmd_normalize->parsed()) return run_normalize(chain_str);
  return 2;
}
