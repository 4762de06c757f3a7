#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

#include "json.hpp"

using json = nlohmann::ordered_json;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run(const std::string& args) {
  static int counter = 0;
  const std::string out_path = "cli_out_" + std::to_string(counter) + ".txt";
  const std::string err_path = "cli_err_" + std::to_string(counter) + ".txt";
  ++counter;
  const std::string cmd =
      std::string(TEQ_CLI_PATH) + " " + args + " >" + out_path + " 2>" + err_path;
  const int raw = std::system(cmd.c_str());
  RunResult r;
  r.status = WEXITSTATUS(raw);
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

std::string zero_ms(std::string text) {
  return std::regex_replace(text, std::regex("\"ms\":\\d+"), "\"ms\":0");
}

}  // namespace

TEST_CASE("decide exit codes and witness output") {
  const RunResult verdict_ne = run("decide x y --witness");
  CHECK(verdict_ne.status == 1);
  CHECK(verdict_ne.out.find("not equivalent") != std::string::npos);
  CHECK(verdict_ne.out.find("C1 chain \"s\"") != std::string::npos);
  CHECK(verdict_ne.out.find("2 != 1") != std::string::npos);

  const RunResult eq = run("decide xyX y");
  CHECK(eq.status == 0);
  CHECK(eq.out.find("not") == std::string::npos);

  const RunResult bad = run("decide xz y");
  CHECK(bad.status == 2);
  CHECK(bad.err.find("invalid letter 'z' at position 2") != std::string::npos);

  const RunResult usage = run("decide x");
  CHECK(usage.status == 2);

  const RunResult bad_bound = run("decide x y --bound abc");
  CHECK(bad_bound.status == 2);
}

TEST_CASE("decide JSON schema") {
  const RunResult r = run("decide x y --json");
  CHECK(r.status == 1);
  const json record = json::parse(r.out);
  CHECK(record["u"] == "x");
  CHECK(record["v"] == "y");
  CHECK(record["equivalent"] == false);
  CHECK(record["bound"] == 5);
  CHECK(record["witness"]["family"] == "C1");
  CHECK(record["witness"]["chain"] == "s");
  CHECK(record["witness"]["len_u"] == 2);
  CHECK(record["witness"]["len_v"] == 1);
  CHECK(record["nodes"] == 6);
  CHECK(record.contains("ms"));
  // key order is part of the format
  const std::string text = zero_ms(r.out);
  CHECK(text.rfind("{\"u\":\"x\",\"v\":\"y\",\"equivalent\":false,\"bound\":5,\"witness\":", 0) ==
        0);

  const json eq = json::parse(run("decide xyX y --json").out);
  CHECK(eq["equivalent"] == true);
  CHECK(eq["witness"].is_null());
}

TEST_CASE("decide JSON output is deterministic and re-decidable") {
  const std::string first = zero_ms(run("decide x y --json").out);
  const std::string second = zero_ms(run("decide x y --json").out);
  CHECK(first == second);
  // feeding the recorded words back reproduces the record
  const json record = json::parse(first);
  const std::string again = zero_ms(
      run("decide " + record["u"].get<std::string>() + " " + record["v"].get<std::string>() +
          " --json")
          .out);
  CHECK(again == first);
}

TEST_CASE("decide honors the bound override and the cap") {
  // at bound 0 only the identity chain runs: x and y have equal length
  const RunResult shallow = run("decide x y --bound 0 --json");
  CHECK(shallow.status == 0);
  const json record = json::parse(shallow.out);
  CHECK(record["bound"] == 0);
  CHECK(record["nodes"] == 2);

  // a 13-letter word needs --force at the default bound
  const RunResult refused = run("decide xyxyxyxyxyxyx yxyxyxyxyxyxy");
  CHECK(refused.status == 2);
  CHECK(refused.err.find("--force") != std::string::npos);

  // a small override keeps it under the cap without --force; the pair
  // differs in x-count, so sigma separates it
  const RunResult overridden = run("decide xyxyxyxyxyxyx yxyxyxyxyxyxy --bound 2 --witness");
  CHECK(overridden.status == 1);
  CHECK(overridden.err.find("--force") == std::string::npos);
  CHECK(overridden.out.find("chain \"s\"") != std::string::npos);
}

TEST_CASE("spectrum output") {
  const RunResult human = run("spectrum x --depth 1");
  CHECK(human.status == 0);
  CHECK(human.out ==
        "C1\t-\t1\n"
        "C2\t-\t1\n"
        "C1\ts\t2\n"
        "C1\tt\t1\n"
        "C2\tS\t2\n"
        "C2\tT\t1\n");

  const RunResult js = run("spectrum y --depth 1 --json");
  const json record = json::parse(js.out);
  CHECK(record["u"] == "y");
  CHECK(record["spectrum"].size() == 6);
  CHECK(record["spectrum"][3]["chain"] == "t");
  CHECK(record["spectrum"][3]["len"] == 2);

  CHECK(run("spectrum x --depth 15").status == 2);
}

TEST_CASE("oracle command") {
  const RunResult none = run("oracle x X --depth 3");
  CHECK(none.status == 0);
  CHECK(none.out.find("no mismatch") != std::string::npos);

  const RunResult found = run("oracle x y --depth 1 --json");
  CHECK(found.status == 1);
  const json record = json::parse(found.out);
  CHECK(record["witness"]["chain"] == "s");
  CHECK(record["witness"]["len_u"] == 2);
  CHECK(record["witness"]["len_v"] == 1);

  CHECK(run("oracle x y --depth 13").status == 2);
}

TEST_CASE("normalize-chain command") {
  const RunResult r = run("normalize-chain Ts");
  CHECK(r.status == 0);
  CHECK(r.out.find("pi^1") != std::string::npos);
  CHECK(r.out.find("chain: \"t\"") != std::string::npos);
  CHECK(r.out.find("family: C1") != std::string::npos);

  CHECK(run("normalize-chain tq").status == 2);
}

TEST_CASE("batch command") {
  {
    std::ofstream f("batch_ok.tsv");
    f << "x\ty\n";
    f << "xyX\ty\n";
    f << "xx\tyy\n";
  }
  const RunResult ok = run("batch batch_ok.tsv");
  CHECK(ok.status == 0);
  std::istringstream lines(ok.out);
  std::string line;
  std::vector<json> records;
  while (std::getline(lines, line)) records.push_back(json::parse(line));
  REQUIRE(records.size() == 4);
  CHECK(records[0]["equivalent"] == false);
  CHECK(records[1]["equivalent"] == true);
  CHECK(records[2]["equivalent"] == false);
  CHECK(records[3]["summary"]["lines"] == 3);
  CHECK(records[3]["summary"]["decided"] == 3);
  CHECK(records[3]["summary"]["errors"] == 0);
  CHECK(records[3]["summary"]["equivalent"] == 1);
  CHECK(records[3]["summary"]["not_equivalent"] == 2);
  std::remove("batch_ok.tsv");

  {
    std::ofstream f("batch_mixed.tsv");
    f << "x\ty\n";
    f << "xq\ty\n";
    f << "x\tx\n";
  }
  const RunResult mixed = run("batch batch_mixed.tsv");
  CHECK(mixed.status == 0);
  records.clear();
  lines = std::istringstream(mixed.out);
  while (std::getline(lines, line)) records.push_back(json::parse(line));
  REQUIRE(records.size() == 4);
  CHECK(records[1].contains("error"));
  CHECK(records[1]["line"] == 2);
  CHECK(records[3]["summary"]["decided"] == 2);
  CHECK(records[3]["summary"]["errors"] == 1);
  std::remove("batch_mixed.tsv");

  {
    std::ofstream f("batch_empty.tsv");
  }
  const RunResult empty = run("batch batch_empty.tsv");
  CHECK(empty.status == 0);
  const json summary = json::parse(empty.out);
  CHECK(summary["summary"]["lines"] == 0);
  CHECK(summary["summary"]["decided"] == 0);
  std::remove("batch_empty.tsv");

  CHECK(run("batch no_such_file.tsv").status == 2);
}

TEST_CASE("verify-lemmas quick runs") {
  const RunResult vacuous = run("verify-lemmas --samples 0");
  CHECK(vacuous.status == 0);
  CHECK(vacuous.out.find("warning") != std::string::npos);
  CHECK(vacuous.out.find("seed 1729") != std::string::npos);

  const RunResult quick = run("verify-lemmas --samples 5 --max-len 12 --seed 9");
  CHECK(quick.status == 0);
  CHECK(quick.out.find("seed 9") != std::string::npos);
  CHECK(quick.out.find("all properties passed") != std::string::npos);
  CHECK(quick.out.find("FAIL") == std::string::npos);
}

TEST_CASE("witness JSON is identical under threads") {
  const std::string single = zero_ms(run("decide x y --witness --json").out);
  const std::string threaded = zero_ms(run("decide x y --witness --json --threads 4").out);
  CHECK(single == threaded);
}
