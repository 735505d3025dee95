#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

const std::string kCli = TORSIONLAB_CLI;
const std::string kData = TEST_DATA_DIR;

int run(const std::string& args) {
  int status = std::system((kCli + " " + args + " > /dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string tmp(const std::string& name) { return "cli_test_" + name; }

}  // namespace

TEST_CASE("A2 report") {
  REQUIRE(run("run " + kData + "/a2.alg --json " + tmp("a2.json") + " --dot " + tmp("a2.dot")) == 0);
  auto j = nlohmann::json::parse(slurp(tmp("a2.json")));
  CHECK(j["schema_version"] == 1);
  CHECK(j["counts"]["torsion_classes"] == 5);
  CHECK(j["counts"]["bricks"] == 3);
  CHECK(j["counts"]["semibricks"] == 5);
  for (const auto& [id, c] : j["conditions"].items()) CHECK(c["verdict"] == "False");
  CHECK(j["covers"].size() == 5);
  const std::string dot = slurp(tmp("a2.dot"));
  CHECK(dot.rfind("digraph", 0) == 0);
  std::size_t edges = 0;
  for (std::size_t pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 2)) ++edges;
  CHECK(edges == 5);
}

TEST_CASE("product of two local algebras") {
  REQUIRE(run("run " + kData + "/two_locals.alg --json " + tmp("loc.json") + " --oracle") == 0);
  auto j = nlohmann::json::parse(slurp(tmp("loc.json")));
  CHECK(j["counts"]["torsion_classes"] == 4);
  CHECK(j["lattice"]["boolean_rank"] == 2);
  for (const auto& [id, c] : j["conditions"].items()) CHECK(c["verdict"] == "True");
  for (const auto& c : j["cross_validation"]) CHECK(c["status"] != "fail");
}

TEST_CASE("errors give a nonzero exit, verdicts do not") {
  CHECK(run("run " + kData + "/free_loop.alg") != 0);
  CHECK(run("run " + kData + "/does_not_exist.alg") != 0);
  CHECK(run("run " + kData + "/a2.alg --field 4") != 0);
  CHECK(run("run " + kData + "/kronecker.alg --json " + tmp("kr.json")) == 0);
  auto j = nlohmann::json::parse(slurp(tmp("kr.json")));
  CHECK(j["enumeration"]["complete"] == false);
  CHECK(j["conditions"]["a"]["verdict"] == "Inconclusive");
}

TEST_CASE("reports are byte-identical across runs and thread counts") {
  REQUIRE(run("run " + kData + "/a3.alg --json " + tmp("r1.json") + " --dot " + tmp("r1.dot")) == 0);
  REQUIRE(run("run " + kData + "/a3.alg --json " + tmp("r2.json") + " --dot " + tmp("r2.dot") +
              " --threads 4") == 0);
  CHECK(slurp(tmp("r1.json")) == slurp(tmp("r2.json")));
  CHECK(slurp(tmp("r1.dot")) == slurp(tmp("r2.dot")));
}

TEST_CASE("format subcommand prints the canonical form") {
  REQUIRE(run("format " + kData + "/two_locals.alg") == 0);
  int status = std::system((kCli + " format " + kData + "/two_locals.alg > " + tmp("fmt.alg")).c_str());
  REQUIRE(status == 0);
  const std::string once = slurp(tmp("fmt.alg"));
  std::system((kCli + " format " + tmp("fmt.alg") + " > " + tmp("fmt2.alg")).c_str());
  CHECK(once == slurp(tmp("fmt2.alg")));
  CHECK(once.find("relation y y y") != std::string::npos);
}
