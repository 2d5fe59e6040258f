// End-to-end tests for the graev binary: output contracts, exit codes, and
// byte-level reproducibility. The binary path comes from GRAEV_CLI_PATH,
// injected by the build.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "graev/io.hpp"

namespace {

struct CmdResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

CmdResult run_cmd(const std::string& args) {
  const std::string cmd = std::string(GRAEV_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CmdResult result;
  char buf[4096];
  while (size_t got = fread(buf, 1, sizeof buf, pipe))
    result.output.append(buf, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::filesystem::path scratch_dir() {
  static const std::filesystem::path dir = [] {
    auto p = std::filesystem::temp_directory_path() /
             ("graev_cli_tests_" + std::to_string(::getpid()));
    std::filesystem::create_directories(p);
    return p;
  }();
  return dir;
}

std::string desk_file() {
  static const std::string path = [] {
    const auto p = scratch_dir() / "desk.json";
    std::ofstream out(p);
    out << graev::format_space(graev::testing::desk_space());
    return p.string();
  }();
  return path;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("dist prints the value, witness and scheme echo") {
  const auto r = run_cmd("dist " + desk_file() +
                         " --scheme sz \"a b^-1 a b^-1\" e");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "scheme: sz"));
  CHECK(contains(r.output, "1/4  witness=(0 1)(2 3)"));
}

TEST_CASE("dist of equal words is 0") {
  const auto r = run_cmd("dist " + desk_file() + " --scheme sz a a");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "\n0\n"));
}

TEST_CASE("dist under the graev scheme evaluates the basepoint extension") {
  const auto r =
      run_cmd("dist " + desk_file() + " --scheme graev --basepoint a a e");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "scheme: graev basepoint: a"));
  CHECK(contains(r.output, "\n1"));
}

TEST_CASE("dist oracle and dp methods agree") {
  const auto dp = run_cmd("dist " + desk_file() + " \"a c^-1 b a\" e --format json");
  const auto oracle = run_cmd("dist " + desk_file() +
                              " \"a c^-1 b a\" e --method oracle --format json");
  CHECK(dp.exit_code == 0);
  CHECK(oracle.exit_code == 0);
  const auto jd = nlohmann::json::parse(dp.output);
  const auto jo = nlohmann::json::parse(oracle.output);
  CHECK(jd.at("value") == jo.at("value"));
  CHECK(jd.at("scheme") == "sz");
}

TEST_CASE("GRAEV_ORACLE_CAP guards the oracle") {
  const std::string word = "\"a b a b a b a b a b a b a b a\"";  // 15 letters
  const auto def = run_cmd("dist " + desk_file() + " " + word + " e --method oracle");
  CHECK(def.exit_code == 2);
  CHECK(contains(def.output, "cap"));
  const std::string cmd = std::string("GRAEV_ORACLE_CAP=16 ") + GRAEV_CLI_PATH +
                          " dist " + desk_file() + " " + word +
                          " e --method oracle 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buf[4096];
  while (size_t got = fread(buf, 1, sizeof buf, pipe)) output.append(buf, got);
  const int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 0);
  CHECK(contains(output, "witness="));
}

TEST_CASE("dhat desk examples") {
  CHECK(contains(run_cmd("dhat " + desk_file() + " \"a b^-1 a b^-1\" e").output,
                 "1/4"));
  const auto alpha_case = run_cmd("dhat " + desk_file() + " \"a c^-1 b\" e");
  CHECK(alpha_case.exit_code == 0);
  CHECK(alpha_case.output == "1\n");
  CHECK(run_cmd("dhat " + desk_file() + " a a").output == "0\n");
}

TEST_CASE("gen is deterministic and round-trips") {
  const auto a = run_cmd("gen --n 3 --seed 1");
  const auto b = run_cmd("gen --n 3 --seed 1");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);

  const auto parsed = graev::space_from_json(nlohmann::json::parse(a.output));
  CHECK(parsed.size() == 3);
  CHECK(graev::format_space(parsed) == a.output);

  const auto c = run_cmd("gen --n 3 --seed 2");
  CHECK(c.output != a.output);
}

TEST_CASE("generated spaces feed back into dist") {
  const auto gen = run_cmd("gen --n 4 --seed 3");
  const auto path = scratch_dir() / "gen4.json";
  std::ofstream(path) << gen.output;
  const auto r = run_cmd("dist " + path.string() + " e e");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "0"));
}

TEST_CASE("verify exit codes and report shape") {
  const auto ok = run_cmd("verify --seed 7 --instances 5");
  CHECK(ok.exit_code == 0);
  CHECK(contains(ok.output, "all properties passed"));

  const auto one = run_cmd(
      "verify --properties coincidence --instances 1 --seed 7 --format json");
  CHECK(one.exit_code == 0);
  const auto j = nlohmann::json::parse(one.output);
  CHECK(j.at("properties").size() == 1);
  CHECK(j.at("properties")[0].at("id") == "coincidence");
  CHECK(j.at("properties")[0].at("checks") == 1);
  CHECK(j.at("all_pass") == true);

  CHECK(run_cmd("verify --properties bogus").exit_code == 2);
}

TEST_CASE("ball-check sweeps epsilons on the desk space") {
  const auto r = run_cmd("ball-check " + desk_file() + " --samples 40 --seed 5");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "epsilon=1/8"));
  CHECK(contains(r.output, "counterexamples=0"));

  const auto single =
      run_cmd("ball-check " + desk_file() + " --epsilon 1/2 --basepoint c");
  CHECK(single.exit_code == 0);
  CHECK(contains(single.output, "basepoint=c"));

  CHECK(run_cmd("ball-check " + desk_file() + " --epsilon 3/2").exit_code == 2);
}

TEST_CASE("bench prints a row per length") {
  const auto r = run_cmd("bench --lengths 32,64");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "length"));
  CHECK(contains(r.output, "32"));
  CHECK(contains(r.output, "64"));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cmd("dist").exit_code == 2);
  CHECK(run_cmd("nonsense").exit_code == 2);
  CHECK(run_cmd("dist " + desk_file() + " \"a d\" e").exit_code == 2);
}

TEST_SUITE_END();
