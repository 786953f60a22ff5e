#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "numeric.hpp"

using legscale::Rational;
using nlohmann::json;
namespace cli = legscale::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> row;
    std::istringstream fields(line);
    std::string f;
    while (std::getline(fields, f, ',')) row.push_back(f);
    rows.push_back(row);
  }
  return rows;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("legscale_test_" + name);
}

}  // namespace

TEST_CASE("table b with lambda 2") {
  const auto r = run({"table", "b", "--lambda", "2", "--n-max", "2", "--format", "csv"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  CHECK(rows.front() == std::vector<std::string>{"n", "k", "value"});
  CHECK(rows[3] == std::vector<std::string>{"2", "0", "4"});
  CHECK(rows[4] == std::vector<std::string>{"2", "1", "3/2"});
}

TEST_CASE("table alpha lists the n=3, k=1, i=1 row") {
  const auto r = run({"table", "alpha", "--n-max", "3"});
  REQUIRE(r.code == 0);
  const auto doc = json::parse(r.out);
  bool found = false;
  for (const auto& row : doc["rows"]) {
    if (row["n"] == 3 && row["k"] == 1 && row["i"] == 1) {
      CHECK(row["value"] == "1");
      CHECK(row["degree"] == 0);
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("table a with lambda 1 is zero beyond k = 0") {
  const auto r = run({"table", "a", "--lambda", "1", "--n-max", "5", "--format", "csv"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i][2] == (rows[i][1] == "0" ? "1" : "0"));
}

TEST_CASE("csv and json tables carry identical rational strings") {
  const auto csv = run({"table", "b", "--lambda", "-3/5", "--n-max", "8", "--format", "csv", "--digits", "12"});
  const auto js = run({"table", "b", "--lambda", "-3/5", "--n-max", "8", "--digits", "12"});
  REQUIRE(csv.code == 0);
  REQUIRE(js.code == 0);
  const auto rows = parse_csv(csv.out);
  const auto doc = json::parse(js.out);
  REQUIRE(rows.size() == doc["rows"].size() + 1);
  for (std::size_t i = 0; i < doc["rows"].size(); ++i) {
    CHECK(rows[i + 1][2] == doc["rows"][i]["value"].get<std::string>());
    CHECK(rows[i + 1][3] == doc["rows"][i]["approx"].get<std::string>());
  }
}

TEST_CASE("table usage errors") {
  CHECK(run({"table", "b", "--lambda", "two", "--n-max", "2"}).code == cli::kUsage);
  CHECK(run({"table", "b", "--n-max", "2"}).code == cli::kUsage);
  CHECK(run({"table", "c", "--n-max", "2"}).code == cli::kUsage);
  CHECK(run({"table", "a", "--lambda", "1", "--n-max", "2", "--digits", "51"}).code == cli::kUsage);
  CHECK(run({"table", "a", "--lambda", "1", "--n-max", "2", "--digits", "0"}).code == cli::kUsage);
  CHECK(run({}).code == cli::kUsage);
}

TEST_CASE("unwritable destination exits 3") {
  const auto r = run({"table", "alpha", "--n-max", "2", "--output", "/nonexistent-dir/out.json"});
  CHECK(r.code == cli::kIoError);
  CHECK(run({"verify", "eq9", "--n-max", "1", "--output", "/nonexistent-dir/r.txt"}).code == cli::kIoError);
}

TEST_CASE("output to a file") {
  const auto path = temp_path("table.json");
  const auto r = run({"table", "a", "--lambda", "2", "--n-max", "3", "--output", path.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const auto doc = json::parse(in);
  CHECK(doc["lambda"] == "2");
  std::filesystem::remove(path);
}

TEST_CASE("expand scaled") {
  auto r = run({"expand", "scaled", "--n", "2", "--lambda", "2", "--form", "legendre"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["coeffs"] == json::parse(R"({"0": "4", "1": "3/2"})"));

  r = run({"expand", "scaled", "--n", "0", "--lambda", "-5/3"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["coeffs"] == json::parse(R"({"0": "1"})"));

  r = run({"expand", "scaled", "--n", "2", "--lambda", "2", "--form", "derivative"});
  CHECK(json::parse(r.out)["form"] == "derivative");

  CHECK(run({"expand", "scaled", "--n", "3", "--lambda", "2", "--k", "2"}).code == cli::kUsage);
  CHECK(run({"expand", "scaled", "--n", "4", "--lambda", "2", "--k", "2"}).code == 0);
  CHECK(run({"expand", "scaled", "--n", "2"}).code == cli::kUsage);
  CHECK(run({"expand", "scaled", "--n", "2", "--lambda", "1/0"}).code == cli::kUsage);
}

TEST_CASE("expand deriv") {
  for (const char* method : {"telescoping", "triangular", "recurrence"}) {
    const auto r = run({"expand", "deriv", "--n", "3", "--k", "1", "--method", method});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["alphas"] == json::parse(R"({"2": "5", "0": "1"})"));
  }
  const auto empty = run({"expand", "deriv", "--n", "2", "--k", "5"});
  REQUIRE(empty.code == 0);
  CHECK(json::parse(empty.out)["alphas"].empty());
  CHECK(run({"expand", "deriv", "--n", "3"}).code == cli::kUsage);
  CHECK(run({"expand", "deriv", "--n", "3", "--k", "-1"}).code == cli::kUsage);
}

TEST_CASE("verify exit codes") {
  auto r = run({"verify", "all", "--n-max", "8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("overall: PASS") != std::string::npos);

  r = run({"verify", "eq19", "--n-max", "0", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["status"] == "pass");

  r = run({"verify", "replay", "--n-max", "3", "--lambda", "2,0"});
  CHECK(r.code == cli::kUsage);
  CHECK(r.err.find("lambda=0 invalid for replay") != std::string::npos);

  CHECK(run({"verify", "replay", "--n-max", "4"}).code == 0);
  CHECK(run({"verify", "eq13", "--n-max", "4", "--seed", "9"}).code == 0);
  CHECK(run({"verify", "eq99", "--n-max", "4"}).code == cli::kUsage);
}

TEST_CASE("verify csv report") {
  const auto r = run({"verify", "eq13", "--n-max", "4", "--format", "csv", "--lambda", "2,1/2"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  CHECK(rows.front().front() == "subject");
  CHECK(rows.size() == 5);
}

TEST_CASE("identical invocations give byte-identical output") {
  const std::vector<std::string> args{"verify", "all", "--n-max", "5", "--seed", "3", "--format", "json"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> table{"table", "b", "--lambda", "7/3", "--n-max", "6", "--digits", "20"};
  CHECK(run(table).out == run(table).out);
}

TEST_CASE("eval examples") {
  for (const char* method : {"direct", "a-form", "b-form"}) {
    CHECK(run({"eval", "--n", "2", "--lambda", "2", "--x", "0.5", "--method", method}).out == "1.0\n");
    CHECK(run({"eval", "--n", "1", "--lambda", "3", "--x", "0.25", "--method", method}).out == "0.75\n");
    CHECK(run({"eval", "--n", "4", "--lambda", "1/2", "--x", "1.0", "--method", method}).out == "-0.2890625\n");
    CHECK(run({"eval", "--n", "3", "--lambda", "2", "--x", "0", "--method", method}).out == "0.0\n");
  }
  CHECK(run({"eval", "--n", "2", "--lambda", "2", "--x", "abc"}).code == cli::kUsage);
  CHECK(run({"eval", "--n", "2", "--lambda", "2", "--x", "0.1", "--method", "c-form"}).code == cli::kUsage);
  CHECK(run({"eval", "--n", "2", "--lambda", "2", "--x", "0.1", "--digits", "60"}).code == cli::kUsage);
}

TEST_CASE("decimal formatting") {
  CHECK(cli::format_significant(Rational(1), 12) == "1.0");
  CHECK(cli::format_significant(Rational(-37, 128), 15) == "-0.2890625");
  CHECK(cli::format_significant(Rational(2, 3), 5) == "0.66667");
  CHECK(cli::format_significant(Rational(1, 3), 1) == "0.3");
  CHECK(cli::format_significant(Rational(12345), 3) == "12300.0");
  CHECK(cli::format_significant(Rational(1, 1000000000), 4) == "1.0e-9");
  CHECK(cli::format_significant(Rational(0), 4) == "0.0");
  CHECK(cli::format_significant(Rational(1, 1000), 4) == "0.001");
  CHECK_THROWS_AS((void)cli::format_significant(Rational(1), 0), std::invalid_argument);
}

TEST_CASE("help exits 0") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify") != std::string::npos);
}
