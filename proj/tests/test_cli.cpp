// Copyright 2026 The trailfrac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "trailfrac/counting.hpp"
#include "trailfrac/generators.hpp"
#include "trailfrac/graph.hpp"

using namespace trailfrac;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& body) {
  const auto path = fs::temp_directory_path() / ("trailfrac_cli_" + name);
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST_CASE("check reports a disconnected subset") {
  const auto path = write_temp("path3.txt", serialize_graph(gen_path(3)));
  const auto r = run_cli({"check", path, "--subset", "0,2", "--witness", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out == "not a trail: disconnected\n");

  const auto j = run_cli({"check", path, "--subset", "0,2", "--witness"});
  CHECK(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["is_trail"] == false);
  CHECK(doc["failure_reason"] == "disconnected");
}

TEST_CASE("check with witness and oracle") {
  const auto path = write_temp("fam4.txt", serialize_graph(gen_family(4)));
  const auto r = run_cli({"check", path, "--subset", "0,1,2,3", "--witness", "--oracle"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["is_trail"] == true);
  CHECK(doc["witness"] == std::vector<int>{0, 2, 1, 3});
  CHECK(doc["oracle_agrees"] == true);

  const auto text = run_cli({"check", path, "--subset", "1,3", "--witness", "--oracle", "--format", "text"});
  CHECK(text.out == "trail: witness 1,3\noracle: agrees\n");

  CHECK(run_cli({"check", path, "--subset", "0,9"}).code == 1);
  CHECK(run_cli({"check", path, "--subset", "0,x"}).code == 2);
}

TEST_CASE("check oracle guard surfaces as a domain error") {
  const auto path = write_temp("path9.txt", serialize_graph(gen_path(9)));
  const auto r = run_cli({"check", path, "--subset", "0,1,2,3,4,5,6,7,8", "--oracle"});
  CHECK(r.code == 1);
  CHECK(r.err.find("too large for permutation oracle") != std::string::npos);
}

TEST_CASE("count emits JSON") {
  const auto path = write_temp("fam4c.txt", serialize_graph(gen_family(4)));
  const auto r = run_cli({"count", path, "--lanes", "2"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["d"] == 13);
  CHECK(doc["f"] == "13/16");
  CHECK(doc["lanes"] == 2);
  CHECK_FALSE(doc.contains("elapsed_seconds"));

  const auto timed = run_cli({"count", path, "--lanes", "1", "--timing"});
  CHECK(nlohmann::json::parse(timed.out).contains("elapsed_seconds"));

  const auto csv = run_cli({"count", path, "--lanes", "1", "--format", "csv"});
  CHECK(csv.out == "m,d,f,f_decimal,lanes\n4,13,13/16,0.8125,1\n");
}

TEST_CASE("count refuses graphs beyond the enumeration cap") {
  const auto path = write_temp("path31.txt", serialize_graph(gen_path(31)));
  const auto r = run_cli({"count", path, "--lanes", "1"});
  CHECK(r.code == 1);
  CHECK(r.err.find("m too large") != std::string::npos);
}

TEST_CASE("TRAILFRAC_LANES supplies the default lane count") {
  const auto path = write_temp("fam6.txt", serialize_graph(gen_family(6)));
  ::setenv("TRAILFRAC_LANES", "4", 1);
  auto r = run_cli({"count", path});
  CHECK(nlohmann::json::parse(r.out)["lanes"] == 4);
  ::setenv("TRAILFRAC_LANES", "zero", 1);
  r = run_cli({"count", path});
  CHECK(r.code == 2);
  ::unsetenv("TRAILFRAC_LANES");
}

TEST_CASE("scan emits the family CSV") {
  const auto r = run_cli({"scan", "--m-min", "6", "--m-max", "24"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "m,d,f,f_sqrt_m,theorem_bound");
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  REQUIRE(rows.size() == 10);
  std::istringstream first(rows[0]);
  std::string m, d, f;
  std::getline(first, m, ',');
  std::getline(first, d, ',');
  std::getline(first, f, ',');
  CHECK(m == "6");
  CHECK(d == "49");
  CHECK(std::stod(f) == doctest::Approx(0.765625));

  CHECK(run_cli({"scan", "--m-min", "7", "--m-max", "24"}).code == 1);
}

TEST_CASE("estimate is byte-identical across invocations") {
  const auto path = write_temp("fam6e.txt", serialize_graph(gen_family(6)));
  const std::vector<std::string> args{"estimate", path, "--samples", "20000", "--seed", "12345"};
  const auto a = run_cli(args);
  const auto b = run_cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto doc = nlohmann::json::parse(a.out);
  CHECK(doc["samples"] == 20000);
  CHECK(doc["seed"] == 12345);
  CHECK(doc["confidence"] == 0.95);
  CHECK(doc["ci_low"].get<double>() <= doc["estimate"].get<double>());

  CHECK(run_cli({"estimate", path, "--samples", "10", "--seed", "1", "--confidence", "1.0"}).code == 1);
  CHECK(run_cli({"estimate", path, "--seed", "1"}).code == 2);
}

TEST_CASE("eis command") {
  const auto path = write_temp("star4.txt", serialize_graph(gen_star(4)));
  const auto r = run_cli({"eis", path});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["vertices"] == std::vector<int>{1, 2, 3, 0});
  CHECK(doc["lemma_holds"] == true);
  CHECK(doc["verified"] == true);
}

TEST_CASE("gen commands produce parseable edge lists") {
  CHECK(run_cli({"gen", "family", "--m", "4"}).out == "2 4\n0 1\n0 1\n1 0\n1 0\n");
  CHECK(run_cli({"gen", "path", "--k", "2"}).out == "3 2\n0 1\n1 2\n");
  CHECK(run_cli({"gen", "cycle", "--k", "2"}).out == "2 2\n0 1\n1 0\n");
  CHECK(run_cli({"gen", "star", "--k", "1"}).out == "2 1\n0 1\n");
  const auto random = run_cli({"gen", "random", "--n", "5", "--m", "9", "--seed", "3"});
  CHECK(parse_graph(random.out) == gen_random_multigraph(5, 9, 3));
  CHECK(run_cli({"gen", "family", "--m", "3"}).code == 1);
  CHECK(run_cli({"gen"}).code == 2);
}

TEST_CASE("--out writes to a file") {
  const auto target = (fs::temp_directory_path() / "trailfrac_cli_out.txt").string();
  const auto r = run_cli({"gen", "path", "--k", "1", "--out", target});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(target);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == "2 1\n0 1\n");
}

TEST_CASE("bounds command") {
  const auto r = run_cli({"bounds", "--m", "16"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["theorem_bound"] == 0.5);
  CHECK(doc["family"]["d"] == to_string(count_family_closed_form(16).total));
  for (const auto& [name, check] : doc["checks"].items()) CHECK_MESSAGE(check["holds"] == true, name);
  CHECK(run_cli({"bounds", "--m", "1"}).code == 1);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"count", "x.txt", "--bogus"}).code == 2);
  const auto path = write_temp("fam2.txt", serialize_graph(gen_family(2)));
  CHECK(run_cli({"eis", path, "--format", "csv"}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("domain errors exit with 1 and name the problem") {
  const auto loop = write_temp("loop.txt", "2 1\n0 0\n");
  auto r = run_cli({"count", loop, "--lanes", "1"});
  CHECK(r.code == 1);
  CHECK(r.err.find("self-loop") != std::string::npos);
  r = run_cli({"count", "/nonexistent/graph.txt", "--lanes", "1"});
  CHECK(r.code == 1);
  CHECK(r.err.find("cannot open") != std::string::npos);
}

TEST_CASE("the installed binary runs") {
  const std::string cmd = std::string(TRAILFRAC_CLI_PATH) + " gen family --m 2 > /dev/null";
  CHECK(std::system(cmd.c_str()) == 0);
}
