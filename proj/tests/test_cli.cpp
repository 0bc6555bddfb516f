#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <nlohmann/json.hpp>
#include <string>
#include <sys/wait.h>

using json = nlohmann::json;

namespace {

struct RunResult {
  std::string out;
  int code = -1;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string("\"") + A3RES_CLI_PATH + "\" " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  RunResult r;
  r.out = out;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("cohomology: vanishing table as json") {
  auto r = run_cli("cohomology --flag 1,2,3 --lambda 3,2 --mu 3,1 --format json");
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["schema"] == "1");
  CHECK(j["flag"] == json::array({1, 2, 3}));
  CHECK(j["lambda"] == json::array({3, 2}));
  CHECK(j["mu"] == json::array({3, 1}));
  CHECK(j["method"] == "auto");
  CHECK(j["status"] == "exact");
  CHECK(j["cohomology"].empty());
}

TEST_CASE("cohomology: three summands in one degree") {
  auto r = run_cli("cohomology --flag 1,2,3 --lambda 4,1 --mu 4,1 --format json");
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  REQUIRE(j["cohomology"].contains("2"));
  const auto& deg2 = j["cohomology"]["2"];
  REQUIRE(deg2.size() == 3);
  CHECK(deg2[0]["weight"] == json::array({2, 0, -2}));
  CHECK(deg2[1]["weight"] == json::array({1, 0, -1}));
  CHECK(deg2[2]["weight"] == json::array({0, 0, 0}));
  for (const auto& e : deg2) CHECK(e["mult"] == 1);
  CHECK(j["cohomology"].size() == 1);
}

TEST_CASE("cohomology: trivial bundle defaults") {
  auto r = run_cli("cohomology --flag 1,2,3 --format json");
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["lambda"] == json::array());
  CHECK(j["mu"] == json::array());
  REQUIRE(j["cohomology"].contains("0"));
  CHECK(j["cohomology"]["0"][0]["weight"] == json::array({0, 0, 0}));
}

TEST_CASE("cohomology: text output") {
  auto r = run_cli("cohomology --flag 1,2,3 --lambda 4,1 --mu 4,1");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("status exact") != std::string::npos);
  CHECK(r.out.find("H^2:") != std::string::npos);
  CHECK(r.out.find("S(0,0,0)") != std::string::npos);

  auto zero = run_cli("cohomology --flag 1,2,3 --lambda 3,2 --mu 3,1");
  REQUIRE(zero.code == 0);
  CHECK(zero.out.find("all cohomology vanishes") != std::string::npos);
}

TEST_CASE("output is byte-identical across reruns") {
  const std::string cmd = "cohomology --flag 1,2,3 --lambda 4,1 --mu 4,1 --format json";
  auto a = run_cli(cmd);
  auto b = run_cli(cmd);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  const std::string res = "resolution --dim 1,1,1 --ranks 0,0,0 --format json";
  CHECK(run_cli(res).out == run_cli(res).out);
}

TEST_CASE("resolution: Koszul case as json") {
  auto r = run_cli("resolution --dim 1,1,1 --ranks 0,0,0 --format json");
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["schema"] == "1");
  CHECK(j["d"] == json::array({1, 1, 1}));
  CHECK(j["ranks"] == json::array({0, 0, 0}));
  CHECK(j["codim"] == 2);
  REQUIRE(j["terms"].size() == 3);
  CHECK(j["terms"][0]["i"] == 0);
  CHECK(j["terms"][0]["twist"] == 0);
  CHECK(j["terms"][0]["summands"].size() == 1);
  CHECK(j["terms"][1]["i"] == 1);
  CHECK(j["terms"][1]["summands"].size() == 2);
  CHECK(j["terms"][2]["i"] == 2);
  CHECK(j["terms"][2]["summands"][0]["w1"] == json::array({1}));
  CHECK(j["terms"][2]["summands"][0]["w2"] == json::array({0}));
  CHECK(j["terms"][2]["summands"][0]["w3"] == json::array({1}));
  for (const auto& t : j["terms"]) CHECK_FALSE(t.contains("ambiguous"));
}

TEST_CASE("resolution: text output lists term sizes") {
  auto r = run_cli("resolution --dim 1,1,1 --ranks 0,0,0 --max-term 3");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("codim 2") != std::string::npos);
  CHECK(r.out.find("F_0: 1 summand") != std::string::npos);
  CHECK(r.out.find("F_1: 2 summands") != std::string::npos);
  CHECK(r.out.find("F_3: 0 summands") != std::string::npos);
}

TEST_CASE("generators: json and exit code") {
  auto r = run_cli("generators --dim 3,4,3 --ranks 1,1,0 --format json");
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["schema"] == "1");
  REQUIRE(j["families"].size() == 3);
  CHECK(j["families"][0]["name"] == "X-minors");
  CHECK(j["families"][0]["size"] == 2);
  CHECK(j["families"][1]["name"] == "Y-minors");
  CHECK(j["families"][2]["name"] == "YX-minors");
  CHECK(j["families"][2]["size"] == 1);
  CHECK(j["f1_crosscheck"] == "pass");
  CHECK_FALSE(j.contains("computed_f1"));
}

TEST_CASE("scan: small sweep is clean") {
  auto r = run_cli("scan --max-n 3 --max-lambda1 1 --max-mu1 1 --format json");
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["schema"] == "1");
  CHECK(j["bounds"]["max_n"] == 3);
  CHECK(j["cases"].get<long long>() >= 1);
  CHECK(j["violations"].empty());
  CHECK(j["ambiguous"].empty());
}

TEST_CASE("exit codes") {
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("cohomology --help").code == 0);
  CHECK(run_cli("frobnicate").code == 2);                       // unknown subcommand
  CHECK(run_cli("cohomology").code == 2);                       // missing --flag
  CHECK(run_cli("cohomology --flag 1,2").code == 2);            // malformed tuple
  CHECK(run_cli("cohomology --flag 2,1,3").code == 2);          // invalid context
  CHECK(run_cli("cohomology --flag 1,2,3 --lambda 1,2").code == 2);  // not a partition
  CHECK(run_cli("--method bogus cohomology --flag 1,2,3").code == 2);
  CHECK(run_cli("resolution --dim 1,1,1 --ranks 1,1,0").code == 2);  // infeasible ranks
  // A one-monomial cap trips the direct method immediately.
  CHECK(run_cli("--method definitive --max-block 1 cohomology --flag 1,2,3 "
                "--lambda 2,1 --mu 2")
            .code == 3);
}
