// Acceptance suite: one pass/fail line per criterion.
// usage: acceptance <path-to-cli> <path-to-fixtures.json>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "json.hpp"

#include "teq/lemma_suite.hpp"

using json = nlohmann::ordered_json;
using namespace teq;

namespace {

std::string g_cli_path;
int g_run_counter = 0;

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string out_path = "acceptance_out_" + std::to_string(g_run_counter++) + ".txt";
  const std::string cmd = g_cli_path + " " + args + " >" + out_path + " 2>&1";
  const int raw = std::system(cmd.c_str());
  RunResult r;
  r.status = WEXITSTATUS(raw);
  std::ifstream in(out_path);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  std::remove(out_path.c_str());
  return r;
}

std::string zero_ms(std::string text) {
  return std::regex_replace(text, std::regex("\"ms\":\\d+"), "\"ms\":0");
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Criterion {
  bool passed = true;
  std::string detail;

  void fail(const std::string& message) {
    if (passed) {
      passed = false;
      detail = message;
    }
  }
};

// 1. The lemma suite at 1000 samples, max length 100, default seed, < 60 s.
Criterion lemma_suite_criterion() {
  Criterion c;
  const auto start = std::chrono::steady_clock::now();
  const RunResult r = run_cli("verify-lemmas --samples 1000 --max-len 100");
  const double secs = seconds_since(start);
  if (r.status != 0) c.fail("verify-lemmas exited with " + std::to_string(r.status));
  for (const char* property :
       {"bar_complement_agreement", "w2_classification", "pi_rewriting_relations",
        "chain_normalization_soundness", "orbit_count_equalities",
        "saturated_chain_no_proper_cancellation", "predicted_length_agreement"}) {
    if (r.out.find(std::string("PASS ") + property) == std::string::npos) {
      c.fail(std::string("missing PASS for ") + property);
    }
  }
  if (secs >= 60.0) c.fail("runtime " + std::to_string(secs) + " s exceeds 60 s");
  if (c.passed) c.detail = "all properties passed in " + std::to_string(secs) + " s";
  return c;
}

// 2. Forced verdicts: conjugates and inverses are equivalent; length
// mismatches fail with the identity witness.
Criterion forced_cases_criterion() {
  Criterion c;
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(kDefaultSeed);
  std::uniform_int_distribution<std::size_t> ulen(0, 6);
  for (int i = 0; i < 200 && c.passed; ++i) {
    const Word u = random_cyclic_word(rng, ulen(rng)).representative();
    const Word g = random_reduced_word(rng, 4);
    if (!decide(u, conjugate(u, g)).equivalent) {
      c.fail("conjugate pair rejected: u=" + u.str() + " g=" + g.str());
    }
    if (!decide(u, u.inverse()).equivalent) {
      c.fail("inverse pair rejected: u=" + u.str());
    }
  }
  for (int i = 0; i < 200 && c.passed; ++i) {
    const std::size_t nu = 1 + (i % 6);
    const std::size_t nv = 1 + ((i + 1 + i / 6) % 7);
    if (nu == nv) continue;
    const Word u = random_cyclic_word_exact(rng, nu).representative();
    const Word v = random_cyclic_word_exact(rng, nv).representative();
    const DecisionResult r = decide(u, v);
    if (r.equivalent || !r.witness || r.witness->chain.length() != 0 ||
        r.witness->length_u != nu || r.witness->length_v != nv) {
      c.fail("length mismatch not refused by the identity chain: u=" + u.str() +
             " v=" + v.str());
    }
  }
  const double secs = seconds_since(start);
  if (secs >= 300.0) c.fail("runtime " + std::to_string(secs) + " s exceeds 5 min");
  if (c.passed) c.detail = "400 forced verdicts in " + std::to_string(secs) + " s";
  return c;
}

// 3. Verdict agreement between the bounded search and the mixed oracle.
Criterion oracle_agreement_criterion() {
  Criterion c;
  std::mt19937_64 rng(kDefaultSeed + 1);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + (i % 5);
    const Word u = random_cyclic_word_exact(rng, n).representative();
    const Word v = random_cyclic_word_exact(rng, n).representative();
    const DecisionResult verdict = decide(u, v);
    const unsigned depth = std::min(omega_bound(u), 9u);
    const auto mixed = decide_mixed(u, v, depth);
    ++checked;
    if (verdict.equivalent == mixed.has_value()) {
      c.fail("verdicts disagree: u=" + u.str() + " v=" + v.str());
      break;
    }
    if (!verdict.equivalent && verdict.witness->chain.length() <= depth && !mixed) {
      c.fail("oracle missed the witness " + chain_text(verdict.witness->chain) + " for u=" +
             u.str() + " v=" + v.str());
      break;
    }
  }
  if (c.passed) c.detail = std::to_string(checked) + " pairs, zero disagreements";
  return c;
}

// 4. Verdicts stable when the bound grows by 4.
Criterion bound_stability_criterion() {
  Criterion c;
  std::mt19937_64 rng(kDefaultSeed + 2);
  std::uniform_int_distribution<std::size_t> ulen(1, 5);
  std::uniform_int_distribution<int> kind(0, 2);
  int confirmed = 0;
  for (int i = 0; i < 100; ++i) {
    const Word u = random_cyclic_word_exact(rng, ulen(rng)).representative();
    Word v;
    switch (kind(rng)) {
      case 0: v = conjugate(u, random_reduced_word(rng, 3)); break;
      case 1: v = u.inverse(); break;
      default: v = conjugate(u.inverse(), random_reduced_word(rng, 2)); break;
    }
    const DecisionResult base = decide(u, v);
    if (!base.equivalent) {
      c.fail("constructed equivalent pair rejected: u=" + u.str() + " v=" + v.str());
      break;
    }
    DecideOptions wider;
    wider.bound = base.stats.bound_used + 4;
    if (!decide(u, v, wider).equivalent) {
      c.fail("verdict flips at bound+4: u=" + u.str() + " v=" + v.str());
      break;
    }
    ++confirmed;
  }
  if (c.passed) c.detail = std::to_string(confirmed) + " pairs stable at bound+4";
  return c;
}

// 5. Witness runs are byte-identical apart from the ms field.
Criterion determinism_criterion() {
  Criterion c;
  const std::string base = zero_ms(run_cli("decide x y --witness --json").out);
  for (int i = 0; i < 2; ++i) {
    if (zero_ms(run_cli("decide x y --witness --json").out) != base) {
      c.fail("repeated single-thread runs differ");
    }
    if (zero_ms(run_cli("decide x y --witness --json --threads 4").out) != base) {
      c.fail("threaded runs differ from single-thread output");
    }
  }
  if (c.passed) c.detail = "single- and 4-thread JSON byte-identical";
  return c;
}

// 6. Full-tree run at cyclic length 8: exact node count, under 120 s.
Criterion performance_criterion() {
  Criterion c;
  const auto start = std::chrono::steady_clock::now();
  const RunResult r = run_cli("decide xyxyxxyy YYXXYXYX --json --threads 4");
  const double secs = seconds_since(start);
  if (r.status != 0) {
    c.fail("expected an equivalent verdict, exit " + std::to_string(r.status));
    return c;
  }
  const json record = json::parse(r.out);
  const std::uint64_t expected_nodes = 2 * ((std::uint64_t{1} << 20) - 1);
  if (record["equivalent"] != true) c.fail("verdict is not equivalent");
  if (record["bound"] != 19) c.fail("bound is not 19");
  if (record["nodes"] != expected_nodes) {
    c.fail("nodes " + record["nodes"].dump() + " != " + std::to_string(expected_nodes));
  }
  if (secs >= 120.0) c.fail("runtime " + std::to_string(secs) + " s exceeds 120 s");
  if (c.passed) {
    c.detail = std::to_string(expected_nodes) + " nodes in " + std::to_string(secs) + " s";
  }
  return c;
}

// 7. Recorded derived values reproduce exactly.
Criterion fixtures_criterion(const std::string& fixtures_path) {
  Criterion c;
  std::ifstream in(fixtures_path);
  if (!in) {
    c.fail("cannot open fixtures file " + fixtures_path);
    return c;
  }
  json fixtures;
  try {
    fixtures = json::parse(in);
  } catch (const std::exception& e) {
    c.fail(std::string("fixtures parse error: ") + e.what());
    return c;
  }
  int verified = 0;
  for (const auto& entry : fixtures["entries"]) {
    const std::string name = entry["name"];
    const std::string kind = entry["kind"];
    if (kind == "cli-json") {
      const RunResult r = run_cli(entry["args"].get<std::string>());
      json got;
      try {
        got = json::parse(zero_ms(r.out));
      } catch (const std::exception&) {
        c.fail(name + ": output is not JSON");
        continue;
      }
      if (entry.contains("status") && r.status != entry["status"].get<int>()) {
        c.fail(name + ": exit " + std::to_string(r.status) + " != " +
               entry["status"].dump());
      }
      if (got != entry["expect"]) {
        c.fail(name + ": output drifted from the recorded value");
      }
    } else if (kind == "count_pair") {
      const CyclicWord w = cyclic_reduce(Word::parse(entry["w"].get<std::string>()));
      const Letter a = *letter_from_char(entry["a"].get<std::string>()[0]);
      const Letter b = *letter_from_char(entry["b"].get<std::string>()[0]);
      if (count_pair(w, a, b) != entry["expect"].get<std::size_t>()) {
        c.fail(name + ": count_pair drifted");
      }
    } else {
      c.fail(name + ": unknown fixture kind " + kind);
    }
    ++verified;
  }
  if (verified == 0) c.fail("fixtures file has no entries");
  if (c.passed) c.detail = std::to_string(verified) + " recorded values reproduced";
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <path-to-cli> <path-to-fixtures.json>\n";
    return 2;
  }
  g_cli_path = argv[1];
  const std::string fixtures_path = argv[2];

  struct Named {
    const char* name;
    Criterion result;
  };
  std::vector<Named> results;
  results.push_back({"1 lemma suite", lemma_suite_criterion()});
  results.push_back({"2 forced decision cases", forced_cases_criterion()});
  results.push_back({"3 oracle agreement", oracle_agreement_criterion()});
  results.push_back({"4 bound stability", bound_stability_criterion()});
  results.push_back({"5 witness determinism", determinism_criterion()});
  results.push_back({"6 performance envelope", performance_criterion()});
  results.push_back({"7 derived-value fixtures", fixtures_criterion(fixtures_path)});

  int failures = 0;
  for (const auto& [name, r] : results) {
    std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << name;
    if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
    std::cout << "\n";
    if (!r.passed) ++failures;
  }
  std::cout << (failures == 0 ? "acceptance: all criteria passed"
                              : "acceptance: " + std::to_string(failures) + " criteria FAILED")
            << "\n";
  return failures == 0 ? 0 : 1;
}
