#include "ellschub/cli.hpp"
#include "ellschub/expr_json.hpp"

#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace ellschub;
using nlohmann::json;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("ellschub_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("table SL2") {
  const auto r = run({"table", "--family", "A", "--n", "2", "--parabolic", "none"});
  CHECK(r.status == kExitOk);
  CHECK(r.out.find("12: 1") != std::string::npos);
  CHECK(r.out.find("delta(z2/z1, mu2/mu1)") != std::string::npos);
  CHECK(r.out.find("delta(z1/z2, h)") != std::string::npos);
}

TEST_CASE("table Sp2 shows the three-summand entry") {
  const auto r = run({"table", "--family", "C", "--rank", "2", "--parabolic", "1", "--format", "csv"});
  CHECK(r.status == kExitOk);
  bool found = false;
  std::istringstream lines(r.out);
  for (std::string line; std::getline(lines, line);)
    if (line.rfind("s2 s1 s2,1,", 0) == 0) {
      found = true;
      CHECK(std::count(line.begin(), line.end(), '+') == 2);
    }
  CHECK(found);
}

TEST_CASE("table json round-trips through the expression schema") {
  const auto r = run({"table", "--family", "A", "--n", "4", "--blocks", "2,2", "--format", "json"});
  REQUIRE(r.status == kExitOk);
  const auto doc = json::parse(r.out);
  CHECK(doc.at("entries").size() == 36);
  for (const auto& e : doc.at("entries")) CHECK(to_json(expr_from_json(e.at("expr"))) == e.at("expr"));
}

TEST_CASE("table methods agree in latex form") {
  const auto a = run({"table", "--n", "3", "--format", "latex"});
  const auto b = run({"table", "--n", "3", "--format", "latex", "--method", "localization"});
  CHECK(a.status == kExitOk);
  CHECK(a.out.find("\\begin{tabular}") == 0);
  CHECK(b.out.find("\\delta") != std::string::npos);
}

TEST_CASE("verify reports") {
  auto r = run({"verify", "two-method", "--family", "C", "--rank", "2", "--parabolic", "1", "--format", "json"});
  CHECK(r.status == kExitOk);
  auto doc = json::parse(r.out);
  CHECK(doc.at("cases") == 16);
  CHECK(doc.at("failures") == 0);
  CHECK(doc.at("suite") == "two-method");
  CHECK(doc.at("config").at("truncation") == 40);

  r = run({"verify", "weightfn", "--blocks", "1,1", "--format", "json"});
  CHECK(r.status == kExitOk);
  doc = json::parse(r.out);
  CHECK(doc.at("cases") == 4);
  CHECK(doc.at("failures") == 0);

  r = run({"verify", "transformation", "--family", "C", "--rank", "2", "--parabolic", "1"});
  CHECK(r.status == kExitOk);
  CHECK(r.out.find("16 cases, 0 failures") != std::string::npos);
}

TEST_CASE("every suite runs") {
  for (const std::string suite : {"two-method", "pushforward", "transformation", "normalization", "triangularity",
                                  "positivity"})
    CHECK(run({"verify", suite, "--n", "3"}).status == kExitOk);
  for (const std::string suite : {"weightfn", "rmatrix", "initial", "identity"})
    CHECK(run({"verify", suite, "--blocks", "1,2"}).status == kExitOk);
  CHECK(run({"verify", "identity", "--n", "5"}).status == kExitOk);
}

TEST_CASE("reports are reproducible") {
  const std::vector<std::string> args{"verify", "weightfn", "--blocks", "2,1", "--format", "json", "--seed", "11"};
  CHECK(run(args).out == run(args).out);
  auto other = args;
  other.back() = "12";
  CHECK(json::parse(run(other).out).at("details") != json::parse(run(args).out).at("details"));
}

TEST_CASE("an impossible tolerance fails with exit status 1") {
  const auto r = run({"verify", "weightfn", "--blocks", "2,1", "--tol", "1e-30", "--format", "json"});
  CHECK(r.status == kExitFailures);
  CHECK(json::parse(r.out).at("failures").get<int>() > 0);
}

TEST_CASE("usage errors") {
  CHECK(run({"verify", "nosuch", "--n", "2"}).status == kExitUsage);
  CHECK(run({"table", "--family", "C", "--rank", "2", "--blocks", "1,1"}).status == kExitUsage);
  CHECK(run({"table", "--blocks", "2,2", "--parabolic", "1,2"}).status == kExitUsage);
  CHECK(run({"table", "--blocks", "2,2", "--parabolic", "3,1"}).status == kExitOk);
  CHECK(run({"table", "--blocks", "2,2", "--n", "5"}).status == kExitUsage);
  CHECK(run({"table", "--n", "2", "--format", "xml"}).status == kExitUsage);
  CHECK(run({"table", "--n", "2", "--q", "1.5"}).status == kExitUsage);
  CHECK(run({"table"}).status == kExitUsage);
  CHECK(run({}).status == kExitUsage);
  CHECK(run({"verify", "weightfn", "--blocks", "3,3"}).status == kExitUsage);
  CHECK(run({"--help"}).status == kExitOk);
}

TEST_CASE("eval of the constant 1") {
  const auto expr = temp_file("one.json", "1");
  const auto r = run({"eval", "--expr", expr});
  CHECK(r.status == kExitOk);
  CHECK(r.out == "value = 1 + 0i\n");
}

TEST_CASE("eval errors") {
  const auto bad = temp_file("bad.json", R"({"terms": [{"factors": [{"kind": "nope"}]}]})");
  CHECK(run({"eval", "--expr", bad}).status == kExitRuntime);
  CHECK(run({"eval", "--expr", "/nonexistent/file.json"}).status == kExitRuntime);
  const auto pole = temp_file("pole.json", R"({"terms": [{"factors": [{"kind": "delta", "arg1": {"z1": 1}, "arg2": {"h": 1}}]}]})");
  const auto point = temp_file("pole_point.json", R"({"z1": [0, 0], "h": [0.1, 0.2]})");
  const auto r = run({"eval", "--expr", pole, "--point", point});
  CHECK(r.status == kExitRuntime);
  CHECK(r.err.find("pole") != std::string::npos);
  const auto missing = temp_file("missing_point.json", R"({"z1": [0.3, 0]})");
  CHECK(run({"eval", "--expr", pole, "--point", missing}).status == kExitRuntime);
}

TEST_CASE("eval SL2 E(X_s)_1 at the seed-0 default point matches the golden value") {
  std::ifstream in(std::string(ELLSCHUB_TEST_DATA) + "/golden_sl2.json");
  REQUIRE(in);
  const auto golden = json::parse(in);

  const auto table = json::parse(run({"table", "--n", "2", "--format", "json"}).out);
  json expr;
  for (const auto& e : table.at("entries"))
    if (e.at("w") == "21" && e.at("v") == "12") expr = e.at("expr");
  const auto path = temp_file("sl2.json", expr.dump());
  const auto r = run({"eval", "--expr", path, "--format", "json", "--breakdown", "--seed", "0"});
  REQUIRE(r.status == kExitOk);
  const auto doc = json::parse(r.out);
  const Complex value(doc.at("value")[0].get<double>(), doc.at("value")[1].get<double>());
  const Complex expected(golden.at("value")[0].get<double>(), golden.at("value")[1].get<double>());
  CHECK(std::abs(value - expected) < 1e-12 * std::abs(expected));
  for (const auto& [v, l] : golden.at("point").items()) CHECK(doc.at("point").at(v) == l);
  CHECK(doc.at("terms").size() == 1);
}

TEST_CASE("out file") {
  const auto path = (std::filesystem::temp_directory_path() / "ellschub_test_out.txt").string();
  const auto r = run({"table", "--n", "2", "--out", path});
  CHECK(r.status == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str().find("delta(z1/z2, h)") != std::string::npos);
}
