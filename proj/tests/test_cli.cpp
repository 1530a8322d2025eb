#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;
};

std::string temp_path(const char* tag) {
  static int counter = 0;
  return std::string("seqmon_cli_test_") + tag + "_" + std::to_string(counter++) + ".tmp";
}

CliResult run_cli(const std::string& args, const std::string& stdin_content = {}) {
  std::string in_path = temp_path("in");
  {
    std::ofstream in(in_path);
    in << stdin_content;
  }
  std::string cmd = std::string(SEQMON_CLI_PATH) + " " + args + " < " + in_path + " 2>/dev/null";
  CliResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[512];
  while (std::fgets(buf, sizeof buf, pipe) != nullptr) result.output += buf;
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::remove(in_path.c_str());
  return result;
}

const char* kNestedOnceTrace =
    "p,q\n"
    "1,0\n"
    "0,0\n"
    "0,0\n"
    "0,0\n"
    "0,1\n"
    "0,0\n";

const char* kFourChunkTrace =
    "time,phi1,phi2\n"
    "3,0,0\n7,0,1\n8,1,1\n30,1,0\n"
    "35,1,0\n38,0,0\n39,0,1\n47,1,0\n"
    "49,1,0\n63,0,0\n70,1,0\n75,1,1\n"
    "89,1,1\n99,1,0\n";

}  // namespace

TEST_CASE("monitor discrete: one output line per row") {
  auto r = run_cli("monitor --formula \"once[1:2] once[1:2] (p || q)\"", kNestedOnceTrace);
  CHECK(r.exit_code == 0);
  CHECK(r.output == "0\n0\n1\n1\n1\n0\n");
}

TEST_CASE("monitor dense: maximal periods per chunk") {
  auto r = run_cli("monitor --mode dense --formula \"phi1 since[18:24] phi2\" --chunk-rows 4",
                   kFourChunkTrace);
  CHECK(r.exit_code == 0);
  CHECK(r.output == "25,30\n30,32\n88,99\n");
}

TEST_CASE("monitor dense: chunking does not change the merged output") {
  for (int rows : {1, 3, 14}) {
    auto r = run_cli("monitor --mode dense --formula \"phi1 since[18:24] phi2\" --chunk-rows " +
                         std::to_string(rows),
                     kFourChunkTrace);
    CHECK(r.exit_code == 0);
    // merge abutting lines before comparing
    std::string merged;
    std::string prev_end;
    for (std::size_t pos = 0; pos < r.output.size();) {
      auto eol = r.output.find('\n', pos);
      std::string line = r.output.substr(pos, eol - pos);
      auto comma = line.find(',');
      if (!merged.empty() && line.substr(0, comma) == prev_end) {
        merged.erase(merged.rfind(prev_end));
        merged += line.substr(comma + 1) + "\n";
      } else {
        merged += line + "\n";
      }
      prev_end = line.substr(comma + 1);
      pos = eol + 1;
    }
    CHECK(merged == "25,32\n88,99\n");
  }
}

TEST_CASE("monitor: empty trace produces no output") {
  auto r = run_cli("monitor --formula \"p\"", "p\n");
  CHECK(r.exit_code == 0);
  CHECK(r.output.empty());
}

TEST_CASE("monitor exit codes") {
  CHECK(run_cli("monitor --formula \"p since[3:2] q\"", "p,q\n").exit_code == 2);
  CHECK(run_cli("monitor --formula \"p &&\"", "p\n").exit_code == 2);
  CHECK(run_cli("monitor --formula \"p\"", "p\n2\n").exit_code == 3);      // bad bit
  CHECK(run_cli("monitor --formula \"p\"", "q\n1\n").exit_code == 3);      // missing column
  CHECK(run_cli("monitor --mode dense --formula \"p\"", "time,p\n2,1\n1,1\n").exit_code == 3);
  CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("gen: delay pulses q every other step") {
  auto r = run_cli("gen --property \"delay(6)\" --length 6");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "p,q\n1,1\n1,0\n1,1\n1,0\n1,1\n1,0\n");
}

TEST_CASE("gen: pandq is constantly true") {
  auto r = run_cli("gen --property \"pandq(1,6)\" --length 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "p,q\n1,1\n1,1\n1,1\n");
}

TEST_CASE("gen: identical bytes for identical seeds") {
  auto a = run_cli("gen --property \"qpr(3,6)\" --length 50 --seed 42");
  auto b = run_cli("gen --property \"qpr(3,6)\" --length 50 --seed 42");
  auto c = run_cli("gen --property \"qpr(3,6)\" --length 50 --seed 43");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output != c.output);
}

TEST_CASE("gen feeds monitor end to end") {
  std::string trace = temp_path("trace");
  std::string cmd = std::string("gen --property \"delay(4)\" --length 12 --output ") + trace;
  CHECK(run_cli(cmd).exit_code == 0);
  auto r = run_cli("monitor --formula \"p since[4:4] q\" --input " + trace);
  std::remove(trace.c_str());
  CHECK(r.exit_code == 0);
  // q pulses at odd steps; the formula fires 4 steps after each pulse
  CHECK(r.output == "0\n0\n0\n0\n1\n0\n1\n0\n1\n0\n1\n0\n");
}

TEST_CASE("check: zero trials is a no-op") {
  CHECK(run_cli("check --trials 0").exit_code == 0);
}

TEST_CASE("check: small random battery passes") {
  CHECK(run_cli("check --trials 25 --seed 9").exit_code == 0);
}

TEST_CASE("bench: report is machine readable") {
  auto r = run_cli("bench --property \"delay(6)\" --length 2000 --mode both --chunk-rows 64");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("property,mode,length,elapsed_ms") != std::string::npos);
  CHECK(r.output.find("delay(6),discrete,2000") != std::string::npos);
  CHECK(r.output.find("delay(6),dense,2000") != std::string::npos);
}
