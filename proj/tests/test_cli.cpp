#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <regex>
#include <sstream>

#include "tautcalc/cli.hpp"

using namespace tautcalc;
using namespace tautcalc::cli;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "tautcalc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_command_line(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("tautcalc_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

void collect_strings(const json& j, std::vector<std::string>& out) {
  if (j.is_string()) out.push_back(j.get<std::string>());
  if (j.is_structured())
    for (const auto& v : j) collect_strings(v, out);
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(invoke({"--help"}).code == 0);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"fp", "--r", "1"}).code == 2);
  CHECK(invoke({"fp", "--r", "3", "--m", "0"}).code == 2);
  CHECK(invoke({"fp", "--r", "3", "--degree-cap", "4"}).code == 2);
  CHECK(invoke({"class", "prym", "--r", "2"}).code == 2);
  CHECK(invoke({"class", "hodge", "--r", "3"}).code == 2);
  CHECK(invoke({"--emit", "xml", "nikulin"}).code == 2);
  CHECK(invoke({"--threads", "0", "fp", "--r", "2"}).code == 2);
  CHECK(invoke({"testcurve", "--name", "b7", "--r", "3"}).code == 2);

  const auto fp = invoke({"fp", "--r", "3", "--degree-cap", "8"});
  CHECK(fp.code == 0);
  CHECK(fp.err.empty());
}

TEST_CASE("class prym JSON") {
  const auto res = invoke({"--emit", "json", "class", "prym", "--r", "3"});
  REQUIRE(res.code == 0);
  const auto j = json::parse(res.out);
  CHECK(j["command"] == "class prym");
  CHECK(j["g"] == "6");
  CHECK(j["lambda"] == "7");
  CHECK(j["delta"]["0p"] == "1");
  CHECK(j["delta"]["0pp"] == "4");
  CHECK(j["delta"]["0ram"] == "3/2");
  CHECK(j["delta"]["5"] == "5");
  CHECK(j["unknown"] == json::array({"1:5", "2:4", "3:3"}));
  CHECK(j["status"] == "ok");
}

TEST_CASE("emitted rationals are in lowest terms") {
  const std::regex fraction(R"(-?[0-9]+/[0-9]+)");
  int fractions = 0;
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--emit", "json", "class", "prym", "--r", "7"},
           {"--emit", "json", "class", "strongly-bn", "--r", "4"},
           {"--emit", "json", "class", "pointed-bn", "--r", "5"},
           {"--emit", "json", "kodaira", "r14-2"},
           {"--emit", "json", "nikulin"}}) {
    const auto res = invoke(args);
    REQUIRE(res.code == 0);
    std::vector<std::string> values;
    collect_strings(json::parse(res.out), values);
    for (const auto& v : values) {
      if (!std::regex_match(v, fraction)) continue;
      ++fractions;
      Rational q(v);
      q.canonicalize();
      CHECK(to_string(q) == v);
      CHECK(q.get_den() != 1);
    }
  }
  CHECK(fractions > 10);
}

TEST_CASE("output is deterministic across runs and thread counts") {
  const auto a = invoke({"--emit", "json", "fp", "--r", "4"});
  const auto b = invoke({"--emit", "json", "fp", "--r", "4"});
  const auto c = invoke({"--emit", "json", "--threads", "2", "fp", "--r", "4"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);

  setenv("TAUTCALC_THREADS", "3", 1);
  CHECK(invoke({"--emit", "json", "fp", "--r", "4"}).out == a.out);
  setenv("TAUTCALC_THREADS", "zero", 1);
  CHECK(invoke({"fp", "--r", "2"}).code == 2);
  unsetenv("TAUTCALC_THREADS");
}

TEST_CASE("CSV layout") {
  const auto res = invoke({"--emit", "csv", "class", "prym", "--r", "3"});
  REQUIRE(res.code == 0);
  std::istringstream lines(res.out);
  std::string header, row;
  std::getline(lines, header);
  CHECK(header == "section,name,value,expected,status");
  int rows = 0;
  while (std::getline(lines, row)) {
    ++rows;
    CHECK(row.rfind("prym r=3,", 0) == 0);
  }
  CHECK(rows > 10);
}

TEST_CASE("rho with profile files") {
  const auto multi = temp_file("multi.json", R"({"orders":[0,2,4,6],"divisor_degrees":[0,2,4,6,8]})");
  const auto res = invoke({"--emit", "json", "rho", "--g", "5", "--r", "3", "--d", "8", "--multi", multi});
  REQUIRE(res.code == 0);
  const auto j = json::parse(res.out);
  std::map<std::string, std::string> values;
  for (const auto& row : j["checks"]) values[row["name"]] = row["value"];
  CHECK(values["rho"] == "5");
  CHECK(values["rho multivanishing"] == "-1");
  CHECK(values["rho multivanishing with g-r+d"] == "-41");

  const auto ram = temp_file("ram.json", R"([{"orders":[1,2,3,4]},{"orders":[0,1,2,4]}])");
  const auto three = invoke({"--emit", "json", "rho", "--g", "1", "--r", "3", "--d", "4", "--ram", ram, "--case", "III"});
  REQUIRE(three.code == 0);
  CHECK(three.out.find("\"-4\"") != std::string::npos);

  const auto bad = temp_file("bad.json", R"({"orders":[0,3,2,4]})");
  CHECK(invoke({"rho", "--g", "4", "--r", "3", "--d", "5", "--ram", bad}).code == 2);
  const auto junk = temp_file("junk.json", R"({"orders":"0,1"})");
  CHECK(invoke({"rho", "--g", "4", "--r", "3", "--d", "5", "--ram", junk}).code == 2);
}

TEST_CASE("subcommands that verify") {
  CHECK(invoke({"kodaira", "r14-2"}).code == 0);
  CHECK(invoke({"nikulin", "--r-min", "3", "--r-max", "10"}).code == 0);
  CHECK(invoke({"identities", "--r-max", "12"}).code == 0);
  const auto xi = invoke({"--emit", "json", "testcurve", "--name", "xi", "--r", "3"});
  REQUIRE(xi.code == 0);
  CHECK(json::parse(xi.out)["checks"][0]["value"] == "-1");
  const auto all = invoke({"verify-all", "--r-max", "3"});
  CHECK(all.code == 0);
  CHECK(all.out.find("FAIL") == std::string::npos);
}

TEST_CASE("a failed check yields a diff") {
  Report report("unit");
  report.check("s", "equal", Rational(1), Rational(1));
  report.check("s", "off", make_rational(1, 3), make_rational(2, 6) + 1);
  CHECK_FALSE(report.ok());
  CHECK(report.failures() == 1);
  CHECK(report.checks() == 2);
  std::ostringstream diff;
  report.write_diff(diff);
  CHECK(diff.str() == "FAIL s / off\n  - expected: 4/3\n  + computed: 1/3\n");
}
