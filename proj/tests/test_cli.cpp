#include "doctest.h"

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(SATDIV_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json report(const std::string& args, int expected_code = 0) {
  const Run r = run(args);
  CAPTURE(args);
  CHECK(r.code == expected_code);
  return nlohmann::json::parse(r.out);
}

std::string data(const std::string& rel) { return std::string(SATDIV_DATA) + "/" + rel; }

std::string temp(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("satdiv_cli_" + name)).string();
}

}  // namespace

TEST_CASE("check") {
  auto r = report("check instance1 0.3,0.6,0.1 --tau 2", 1);
  CHECK(r["satisfied_count"] == 3);
  CHECK(r["rho"] == "3/4");
  CHECK(r["satisfied"] == nlohmann::json::array({1, 2, 4}));

  r = report("check " + data("instances/instance1.json") + " 1,1,1");
  CHECK(r["satisfied_count"] == 4);
  CHECK(r["warnings"].size() == 1);
  CHECK(r["within_budget"] == false);

  r = report("check mat1 " + data("instances/mat1_line.json") + " --tau 3");
  CHECK(r["satisfied_count"] == 3);
  CHECK(r["total"] == "22/25");
  CHECK(r["total_decimal"] == "0.88");

  CHECK(run("check instance1 0.3,0.6").code == 2);
  CHECK(run("check no_such_thing 0.3").code == 2);
}

TEST_CASE("solve") {
  CHECK(report("solve all-sat instance1 --tau 2", 1)["status"] == "NO");
  auto r = report("solve dictator tight_dictator_m5 --tau half");
  CHECK(r["dictator"] == 1);
  CHECK(r["satisfied_count"] == 3);
  CHECK(report("solve min-budget abo_m3_eps1-3 --tau 2")["min_budget"] == "4/3");
  CHECK(report("solve max-sat instance1 --tau 2")["satisfied_count"] == 3);
  CHECK(report("solve utilitarian instance1")["pair_count"] == 8);
  r = report("solve three-agent mat1 --certificate");
  CHECK(r["satisfied_count"] == 3);
  CHECK(r["certificate_verified"] == true);
  CHECK(r["within_budget"] == true);

  r = report("solve max-sat mat1 --tau 3 --node-limit 2", 3);
  CHECK(r["status"] == "TooLarge");
  CHECK(run("solve max-sat mat1 --tau 3", "SATDIV_NODE_LIMIT=2").code == 3);
  CHECK(run("solve max-sat mat1 --tau 3", "SATDIV_NODE_LIMIT=many").code == 2);
  CHECK(run("solve two-agent-four instance1").code == 2);
}

TEST_CASE("solve output is deterministic and re-verifies") {
  for (const char* mode : {"max-sat", "all-sat", "min-budget", "utilitarian", "dictator", "three-agent"}) {
    const std::string args = std::string("solve ") + mode + " mat1";
    const Run a = run(args), b = run(args);
    CHECK(a.out == b.out);
    const auto r = nlohmann::json::parse(a.out);
    REQUIRE(r.contains("solution"));
    std::string coords;
    for (const auto& v : r["solution"]) coords += (coords.empty() ? "" : ",") + v.get<std::string>();
    const Run c = run("check mat1 " + coords + " --tau " + std::to_string(r["tau"].get<int>()));
    CHECK(nlohmann::json::parse(c.out)["satisfied_count"] == r["satisfied_count"]);
  }
}

TEST_CASE("gen") {
  const std::string out = temp("td5.json");
  CHECK(run("gen tight-dictator --m 5 -o " + out).code == 0);
  auto r = report("check " + out + " 1,1,1,1,1");
  CHECK(r["agents"] == 5);
  CHECK(r["projects"] == 5);
  r = nlohmann::json::parse(run("gen cyclic --m 6").out);
  CHECK(r["agents"].size() == 6);
  CHECK(r["family"]["name"] == "cyclic");
  r = nlohmann::json::parse(run("gen fixture --name nocover_four").out);
  CHECK(r["agents"].size() == 3);
  CHECK(run("gen tight-dictator --m 4").code == 2);
  CHECK(run("gen half-min-budget --m 6").code == 3);
}

TEST_CASE("reduce") {
  auto r = nlohmann::json::parse(run("reduce vc-allsat-m1 " + data("graphs/k3.graph") + " --k 2").out);
  CHECK(r["agents"].size() == 3);
  CHECK(r["projects"] == 3);
  CHECK(r["tau"] == nlohmann::json({{"all_but", 1}}));

  const std::string out = temp("c6.json");
  CHECK(run("reduce is-minbudget-half " + data("graphs/c6.graph") + " --k 2 -o " + out).code == 0);
  const auto doc = nlohmann::json::parse(run("check " + out + " 0,0,0,0,0,0").out);
  CHECK(doc["agents"] == 6);
  CHECK(doc["projects"] == 6);
  CHECK(std::filesystem::exists(temp("c6.mapping.json")));

  r = nlohmann::json::parse(run("reduce vc-minbudget-tau1 " + data("graphs/k3.graph") + " --k 2").out);
  CHECK(r["tight"] == true);
  CHECK(r["family"]["target_budget"] == "2/9");
  CHECK(run("reduce vc-allsat-m1 " + data("graphs/k3.graph") + " --k 1").code == 2);
}

TEST_CASE("verify tables") {
  const Run r = run("verify tables");
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("PASS C1") != std::string::npos);
}
