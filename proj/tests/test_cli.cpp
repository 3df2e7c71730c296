#include "hopf/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::ostringstream out, err;
  std::istringstream in(input);
  int code = hopf::cli::run(args, out, err, in);
  std::string text = out.str();
  while (!text.empty() && text.back() == '\n') text.pop_back();
  return {code, text, err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("hopf_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("worked examples") {
  CHECK(run({"gl", "mul", "(;())", "(;())"}).out == "(;()()) + (;(;()))");
  CHECK(run({"trees", "count", "--family", "hot", "--degree", "4"}).out == "24");
  CHECK(run({"perm", "rho", "(1 3)(4)(5 7)"}).out == "(4 5)(3)(1 2)");
  CHECK(run({"shuffle", "mul", "x1", "x1"}).out == "2*x1.x1");
  CHECK(run({"ck", "pair", "(;()())", "()*()"}).out == "2");
  CHECK(run({"perm", "to-tree", "(1 3 2)"}).out == "(;(1;(2)(3)))");
}

TEST_CASE("cancellation report") {
  auto env = write_temp("env3.json", R"({"n": 2, "E1": ["x1", "x2"], "E2": ["x2", "1"], "E3": ["x1^2", "0"]})");
  auto r = run({"psi", "expand", "--word", "E3,E2,E1 - E3,E1,E2 - E2,E1,E3 + E1,E2,E3", "--env", env, "--report"});
  CHECK(r.code == 0);
  CHECK(r.out == "raw_trees: 24, cancelled: 18, surviving: 6");
}

TEST_CASE("psi and connection commands") {
  auto env = write_temp("env1.json", R"({"n": 1, "E1": ["x"], "E2": ["x^2"]})");
  auto conn = write_temp("conn1.json", R"({"n": 1, "gamma": {"1,1,1": "1"}})");
  CHECK(run({"psi", "apply", "--tree", "(;(E2;(E1)))", "--env", env, "--f", "x^3"}).out == "6*x1^4");
  CHECK(run({"psi", "check-diagram", "--word", "E1,E2", "--env", env, "--f", "x^3"}).code == 0);
  CHECK(run({"conn", "apply", "--tree", "(;(E1))", "--env", env, "--conn", conn, "--f", "x^3"}).out == "3*x1^3");
  CHECK(run({"conn", "check-module", "--tree", "(;(E1;(E2)))", "--env", env, "--conn", conn, "--a", "x+1", "--b",
             "x^2"})
            .code == 0);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--algebra", "perm", "--max-degree", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(run({"verify", "--algebra", "gl", "--flavor", "hot", "--max-degree", "2"}).code == 0);
}

TEST_CASE("exit codes") {
  auto bad = run({"gl", "mul", "(;(", "()"});
  CHECK(bad.code == hopf::cli::kExitParseError);
  CHECK(bad.err.find("position") != std::string::npos);
  CHECK(run({"gl", "frobnicate"}).code == hopf::cli::kExitParseError);
  CHECK(run({}).code == hopf::cli::kExitParseError);
  CHECK(run({"perm", "mul", "(1 1)", "(1)"}).code == hopf::cli::kExitParseError);
  CHECK(run({"gl", "mul", "(;())", "(;())", "--format", "yaml"}).code == hopf::cli::kExitParseError);
}

TEST_CASE("stdin element") {
  CHECK(run({"gl", "coprod", "-"}, "(;())\n").out == "() ⊗ (;()) + (;()) ⊗ ()");
}

TEST_CASE("degree cap from the environment") {
  CHECK(run({"trees", "count", "--family", "hot", "--degree", "7"}).code == hopf::cli::kExitParseError);
  ::setenv("HOPF_MAX_DEGREE", "7", 1);
  CHECK(run({"trees", "count", "--family", "hot", "--degree", "7"}).out == "5040");
  ::unsetenv("HOPF_MAX_DEGREE");
}

TEST_CASE("json output round-trips") {
  const std::vector<std::vector<std::string>> commands = {
      {"gl", "mul", "(;())", "(;())"},
      {"gl", "coprod", "(;()())"},
      {"gl", "antipode", "(;()())"},
      {"ck", "coprod", "(;()())"},
      {"shuffle", "mul", "x1.x2", "x3"},
      {"perm", "mul", "(2)(1)", "(1)"},
      {"perm", "coprod", "(2)(1)"},
      {"trees", "enum", "--family", "rooted", "--degree", "3"},
      {"verify", "--algebra", "shuffle", "--max-degree", "2"},
  };
  for (auto args : commands) {
    args.push_back("--format");
    args.push_back("json");
    auto r = run(args);
    CAPTURE(r.out);
    REQUIRE(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.dump(2) == r.out);
  }
  auto doc = nlohmann::json::parse(run({"gl", "coprod", "(;())", "--format", "json"}).out);
  CHECK(doc["terms"][0]["basis"].is_array());
  CHECK(doc["terms"][0]["coeff"] == "1");
}

TEST_CASE("output is deterministic") {
  auto a = run({"gl", "mul", "(;()(;()))", "(;()())"});
  auto b = run({"gl", "mul", "(;(;())())", "(;()())"});
  CHECK(a.out == b.out);
}
