#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(GIBBSNUM_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  std::array<char, 4096> buffer;
  size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.out.append(buffer.data(), got);
  int status = pclose(pipe);
  result.exit_code = WEXITSTATUS(status);
  return result;
}

}  // namespace

TEST_CASE("cli: measure mu4 word 10 prints the exact value") {
  CliResult r = run_cli("measure --spec mu4 --word 10");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["value"] == "1/16");
  CHECK(j["valid"] == true);
  CHECK(j["word"] == "10");
}

TEST_CASE("cli: parry expansion of 1/2") {
  CliResult r = run_cli("expand --system parry --x 1/2 --digits 9");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  std::vector<int> expected = {0, 1, 0, 0, 1, 0, 0, 1, 0};
  CHECK(j["digits"].get<std::vector<int>>() == expected);
  CHECK(j["admissible"] == true);
}

TEST_CASE("cli: expansion with ternary recoding") {
  CliResult r = run_cli("expand --system parry --x 1/2 --digits 9 --encode3");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  std::vector<int> code = {1, 1, 1};
  CHECK(j["encode3"]["code"].get<std::vector<int>>() == code);
}

TEST_CASE("cli: stoch-sim output is byte deterministic") {
  std::string args = "stoch-sim --beta 4 --r 2 --p 1/2,1/2 --samples 1000 --seed 7";
  CliResult first = run_cli(args);
  CliResult second = run_cli(args);
  REQUIRE(first.exit_code == 0);
  CHECK(first.out == second.out);
  auto j = nlohmann::json::parse(first.out);
  CHECK(j["classification"]["kind"] == "SingularContinuous");
  CHECK(j["classification"]["product_value"].get<double>() == doctest::Approx(0.5));
}

TEST_CASE("cli: golden defaults print the mustar initial vector") {
  CliResult r = run_cli("golden --p 1/2 --q 1/2 --target mustar");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["vector"][0] == "1");
  CHECK(j["vector"][1] == "1/3");
  CHECK(j["vector"][2] == "2/3");
  CHECK(j["regime"] == "p>=q");
}

TEST_CASE("cli: baser exact value for the uniform parameters") {
  CliResult r = run_cli("baser --r 2 --p 1/3,1/3,1/3 --word 0");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["matrix_value"] == "1/2");
}

TEST_CASE("cli: golden lemma check") {
  CliResult r = run_cli("golden --p 2/3 --q 1/3 --lemma-check 1,1,2,1,2");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["lemma"]["all_hold"] == true);
  CHECK(j["lemma"]["alpha"] == "2");
}

TEST_CASE("cli: bad input exits nonzero") {
  CliResult r = run_cli("expand --system parry --x 3/2 --digits 4");
  CHECK(r.exit_code == 1);
  CliResult r2 = run_cli("measure --spec nonsense");
  CHECK(r2.exit_code == 1);
}
