#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "troplab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = troplab::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("seven-box orbit table") {
  const auto r = run({"evolve", "--bbs", "0100110", "-t", "5"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "t  b(t)     beta(b(t))     T^t(beta(b(0)))\n"
        "0  0100110  (0,1,2,1,2,1)  (0,1,2,1,2,1)\n"
        "1  1010001  (1,1,1,1,3,0)  (1,1,1,1,3,0)\n"
        "2  0101100  (0,1,2,1,1,2)  (1,2,0,1,2,1)\n"
        "3  0010011  (0,1,2,2,2,0)  (1,2,0,2,0,2)\n"
        "4  1101000  (2,1,0,1,3,0)  (1,0,2,3,0,1)\n"
        "5  0010110  (0,1,2,2,1,1)  (2,0,1,1,2,1)\n");
}

TEST_CASE("eight-box orbit rows") {
  const auto r = run({"evolve", "--bbs", "00111000", "-t", "5"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line.substr(3, 8));
  CHECK(rows == std::vector<std::string>{"00111000", "00000111", "11100000", "00011100", "10000011", "01110000"});
}

TEST_CASE("toda orbit and output formats") {
  auto r = run({"evolve", "--toda", R"({"Q":[0,3],"W":[2,3]})", "-t", "1"});
  CHECK(r.out == "t  T^t(s)\n0  (0,3,2,3)\n1  (0,3,5,0)\n");
  r = run({"evolve", "--bbs", "0100110", "-t", "1", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.is_array());
  CHECK(j.size() == 2);
  r = run({"evolve", "--bbs", "0100110", "-t", "1", "--format", "csv"});
  CHECK(r.out.rfind("t,b(t),", 0) == 0);
}

TEST_CASE("map arrows") {
  CHECK(run({"map", "beta", "--bbs", "1010001"}).out == "(1,1,1,1,3,0)\n");
  CHECK(run({"map", "rho", "--toda", R"({"Q":[1,1,1],"W":[1,3,0]})"}).out == "1010001\n");
  CHECK(run({"map", "shift", "--toda", R"({"Q":[0,1,2],"W":[1,2,1]})"}).out == "(1,2,0,2,1,1)\n");
  const auto pi = run({"map", "pi", "--bbs", "0100110"});
  CHECK(pi.code == 0);
  CHECK(pi.out.rfind("K:(", 0) == 0);
}

TEST_CASE("curve report") {
  auto r = run({"curve", "20", "7", "2", "0"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["lambda"] == nlohmann::json({"2", "5"}));
  CHECK(j["p"] == nlohmann::json({"12", "6"}));
  r = run({"curve", "-C", "7", "3", "1", "0"});
  j = nlohmann::json::parse(r.out);
  CHECK(j["periods"]["detLambda"] == "63");
  r = run({"curve", "6", "3", "0"});
  CHECK(r.code == 2);
  CHECK(r.err.find("C_{-1}") != std::string::npos);
}

TEST_CASE("verify and enumerate") {
  auto r = run({"verify", "counting", "-C", "7", "3", "1", "0", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("63 = 63") != std::string::npos);
  r = run({"enumerate", "toda", "-C", "8", "3", "0"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 17);
  r = run({"enumerate", "bbs", "-L", "7", "--lambda", "1", "2"});
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 22);
}

TEST_CASE("usage errors") {
  auto r = run({"evolve", "--bbs", "01x0"});
  CHECK(r.code == 2);
  CHECK(r.err.find("position 2") != std::string::npos);
  CHECK(run({"map", "frobnicate", "--bbs", "0100"}).code == 2);
  CHECK(run({"verify", "no-such-check"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
}

TEST_CASE("output is byte-stable") {
  const std::vector<std::string> args = {"verify", "conservation", "--trials", "20", "--seed", "3"};
  CHECK(run(args).out == run(args).out);
}
