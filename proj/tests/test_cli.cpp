#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

// End-to-end runs of the installed binary. STC_CLI_PATH is injected by the
// build.

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

fs::path work_dir() {
  static const fs::path dir = [] {
    fs::path p = fs::temp_directory_path() / "stc_cli_test";
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

RunResult run(const std::string& args) {
  const fs::path out_file = work_dir() / "stdout.txt";
  const std::string cmd = std::string(STC_CLI_PATH) + " " + args + " > " +
                          out_file.string() + " 2>/dev/null";
  const int raw = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(raw);
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

std::string path_of(const std::string& name) {
  return (work_dir() / name).string();
}

}  // namespace

TEST_CASE("gen writes parseable files") {
  const RunResult r =
      run("gen --family triangular --size 5 --out " + work_dir().string());
  CHECK(r.exit_code == 0);
  CHECK(fs::exists(path_of("T_5.pg")));
  CHECK(fs::exists(path_of("S_5.cts")));

  CHECK(run("gen --family spiderweb --rings 3 --spokes 4 --out " +
            work_dir().string())
            .exit_code == 0);
  CHECK(fs::exists(path_of("W_3x4.pg")));
  CHECK(fs::exists(path_of("W_3x4.tree")));
}

TEST_CASE("gen rejects bad parameters with exit 4") {
  CHECK(run("gen --family triangular --size 1").exit_code == 4);
  CHECK(run("gen --family nosuch --size 3").exit_code == 4);
  CHECK(run("gen").exit_code == 4);  // missing required flag
}

TEST_CASE("bounds certifies T_5 at 6") {
  const RunResult r = run("bounds " + path_of("T_5.pg"));
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["lower"] == 6);
  CHECK(j["upper"] == 6);
  CHECK(j["certified"] == 6);
  CHECK(j["lower_source"] == "canonical");
}

TEST_CASE("bounds accepts an explicit system file") {
  const RunResult r =
      run("bounds " + path_of("T_5.pg") + " --cts " + path_of("S_5.cts"));
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["lower"] == 6);
  CHECK(j["lower_source"] == "file");
}

TEST_CASE("bounds on a graph with no recognized system reports upper only") {
  REQUIRE(run("gen --family rectangular --rows 3 --cols 3 --out " +
              work_dir().string())
              .exit_code == 0);
  const RunResult r = run("bounds " + path_of("R_3x3.pg"));
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["lower"].is_null());
  CHECK(j["upper"].is_number());
  CHECK_FALSE(j.contains("certified"));
}

TEST_CASE("exact finds s(T_4) = 4 and writes the witness") {
  REQUIRE(run("gen --family triangular --size 4 --out " + work_dir().string())
              .exit_code == 0);
  const RunResult r =
      run("exact " + path_of("T_4.pg") + " --tree-out " + path_of("T_4.tree"));
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["value"] == 4);
  CHECK(j["optimal"] == true);
  CHECK(fs::exists(path_of("T_4.tree")));
}

TEST_CASE("exact exits 3 when the budget is too small") {
  REQUIRE(run("gen --family triangular --size 9 --out " + work_dir().string())
              .exit_code == 0);
  const RunResult r = run("exact " + path_of("T_9.pg") + " --limit-nodes 200");
  CHECK(r.exit_code == 3);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["optimal"] == false);
  CHECK(j["value"].get<int>() >= j["proven_lower"].get<int>());
}

TEST_CASE("table agrees with the closed form and exits 0") {
  const RunResult r = run("table --from 2 --to 10 --exact-upto 4 --format json");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["all_agree"] == true);
  for (const auto& row : j["rows"]) CHECK(row["agree"] == true);
}

TEST_CASE("render emits deterministic face labels") {
  const RunResult svg1 =
      run("render " + path_of("T_5.pg") + " --labels absolute-index");
  REQUIRE(svg1.exit_code == 0);
  // central face carries label 3, the apex label 1
  CHECK(svg1.out.find(">3</text>") != std::string::npos);
  const RunResult svg2 =
      run("render " + path_of("T_5.pg") + " --labels absolute-index");
  CHECK(svg1.out == svg2.out);

  const RunResult dot =
      run("render " + path_of("T_5.pg") + " --labels ibot:bottom --format dot");
  REQUIRE(dot.exit_code == 0);
  CHECK(dot.out.find("label=\"7\"") != std::string::npos);  // apex value

  CHECK(run("render " + path_of("T_5.pg") + " --labels nosuch").exit_code == 4);
}

TEST_CASE("render overlays a tree's congestion") {
  const RunResult svg = run("render " + path_of("T_4.pg") +
                            " --labels congestion:" + path_of("T_4.tree"));
  REQUIRE(svg.exit_code == 0);
  CHECK(svg.out.find("stroke-width=\"3\"") != std::string::npos);
  CHECK(svg.out.find(">4</text>") != std::string::npos);  // the max cut

  const RunResult dot = run("render " + path_of("W_3x4.pg") +
                            " --labels congestion:" + path_of("W_3x4.tree") +
                            " --format dot");
  REQUIRE(dot.exit_code == 0);
  CHECK(dot.out.find("penwidth=3") != std::string::npos);
}

TEST_CASE("round trip: emitted files parse back and agree") {
  const RunResult again = run("bounds " + path_of("T_5.pg") + " --format json");
  const RunResult once = run("bounds " + path_of("T_5.pg") + " --format json");
  auto strip = [](std::string s) {
    // elapsed_ms is the only run-dependent field
    const auto pos = s.find("elapsed_ms");
    return s.substr(0, pos);
  };
  CHECK(strip(again.out) == strip(once.out));
}

TEST_CASE("unreadable input exits 4") {
  CHECK(run("bounds /nonexistent.pg").exit_code == 4);
  CHECK(run("exact /nonexistent.pg").exit_code == 4);
}
