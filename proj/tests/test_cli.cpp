#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string command = std::string(ISOCUT_CLI_PATH) + " " + args + " 2>/dev/null";
  Run result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t got = 0;
  while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.out.append(buffer, got);
  }
  const int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

nlohmann::json run_json(const std::string& args) {
  const auto r = run(args + " --format json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("schema_version") == 1);
  return j;
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("isocut_cli_test_" + name);
}

} // namespace

TEST_CASE("xi") {
  const auto j = run_json("xi --L 4 --n 4 --m 10");
  CHECK(j.at("rows")[0].at("xi") == 78);
  CHECK(j.at("rows")[0].at("ex") == 42);
  CHECK(run_json("xi --L 2 --n 4 --m 5").at("rows")[0].at("xi") == 10);
  CHECK(run_json("xi --L 3 --n 1 --m 1").at("rows")[0].at("xi") == 2);
}

TEST_CASE("xi sweep as csv") {
  const auto r = run("xi --L 2 --n 3 --m-range 1..4 --format csv");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "L,n,m,decomposition,ex,xi\n"
        "2,3,1,1*2^0,0,3\n"
        "2,3,2,1*2^1,2,4\n"
        "2,3,3,1*2^1 + 1*2^0,4,5\n"
        "2,3,4,1*2^2,8,4\n");
}

TEST_CASE("lambda") {
  CHECK(run_json("lambda --kind cyclic --L 10 --n 3").at("value") == 75);
  CHECK(run_json("lambda --kind embedded --L 2 --n 5 --t 2").at("value") == 12);
  CHECK(run_json("lambda --kind extra --L 2 --n 4 --h 1").at("value") == 4);
  const auto scan = run_json("lambda --kind extra --L 2 --n 4 --h 6");
  CHECK(scan.at("method") == "scan");
  CHECK(scan.at("value") == 8);
}

TEST_CASE("construct") {
  const auto k3 = run_json("construct --L 3 --n 4 --m 8");
  CHECK(k3.at("report").at("cut_size") == 36);
  CHECK(k3.at("set").size() == 8);
  CHECK(k3.at("set").back() == "0021");
  const auto k10 = run_json("construct --L 10 --n 2 --m 12");
  CHECK(k10.at("report").at("cut_size") == 120);
  CHECK(k10.at("report").at("internal_edges") == 48);
  CHECK(run_json("construct --L 2 --n 2 --m 2").at("report").at("cut_size") == 2);
}

TEST_CASE("graph files") {
  const auto q3 = scratch("q3.txt");
  REQUIRE(run("graph --hamming --L 2 --n 3 --out " + q3.string()).code == 0);
  std::ifstream in(q3);
  std::string header;
  std::getline(in, header);
  CHECK(header.rfind("# vertices=8 edges=12", 0) == 0);

  const auto out = run("graph --bc --n 4 --policy seeded_random --seed 7 --out -");
  CHECK(out.code == 0);
  CHECK(out.out.rfind("# vertices=16 edges=32", 0) == 0);
  CHECK(run("graph --hamming --L 3 --n 2 --out -").out.rfind("# vertices=9 edges=18", 0) == 0);

  const auto oracle = run_json("oracle --graph " + q3.string() + " --measure xi --m 4");
  CHECK(oracle.at("result").at("optimum") == 4);
  std::filesystem::remove(q3);
}

TEST_CASE("output is deterministic") {
  const std::string args = "graph --bc --n 5 --policy seeded_random --seed 3 --out -";
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("verify") {
  const auto tables = run("verify --scope tables");
  CHECK(tables.code == 0);
  CHECK(tables.out.find("PASS") != std::string::npos);
  const auto j = run_json("verify --scope bc");
  CHECK(j.at("passed") == true);
}

TEST_CASE("exit codes") {
  CHECK(run("xi --L 2 --n 3 --m 9").code == 2);
  CHECK(run("xi --L 1 --n 3 --m 1").code == 2);
  CHECK(run("lambda --kind super --L 3 --n 3 --k 1").code == 2);
  CHECK(run("lambda --kind bogus --L 3 --n 3").code == 2);
  CHECK(run("xi --L 2").code == 2);
  CHECK(run("lambda --kind extra --L 2 --n 30 --h 100000 --scan-cap 10").code == 3);
  const auto q4 = scratch("q4.txt");
  REQUIRE(run("graph --hamming --L 2 --n 4 --out " + q4.string()).code == 0);
  CHECK(run("oracle --graph " + q4.string() + " --measure beta --m 5 --max-subsets 10").code == 3);
  CHECK(run("oracle --graph " + q4.string() + " --measure xi --m 2 --max-vertices 8").code == 3);
  CHECK(run("oracle --graph /nonexistent/graph.txt --measure xi --m 2").code == 2);
  std::filesystem::remove(q4);
  CHECK(run("--help").code == 0);
}

TEST_CASE("environment overrides") {
  CHECK(run("graph --hamming --L 2 --n 4 --out -").code == 0);
  const std::string cli(ISOCUT_CLI_PATH);
  const int capped =
      std::system(("ISOCUT_VERTEX_CAP=8 " + cli + " graph --hamming --L 2 --n 4 --out - "
                   ">/dev/null 2>&1")
                      .c_str());
  CHECK(WEXITSTATUS(capped) == 2);
  const int scalar =
      std::system(("ISOCUT_SIMD=scalar " + cli + " verify --scope oracle >/dev/null 2>&1").c_str());
  CHECK(WEXITSTATUS(scalar) == 0);
}
