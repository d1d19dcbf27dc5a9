#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "smallcover/cli.hpp"

using namespace smallcover;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "smallcover");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(SMALLCOVER_TEST_DATA) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = std::string(P_tmpdir) + "/smallcover_test_" + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("help and success") {
  CHECK(run({"--help"}).code == kExitOk);
  CHECK(run({"bounds", "--help"}).code == kExitOk);
  const Run v = run({"validate", data("pentagon.json")});
  CHECK(v.code == kExitOk);
  CHECK(v.out.find("valid: true") != std::string::npos);
  const Run b = run({"bounds", data("m3_101.json"), "--format", "json"});
  CHECK(b.code == kExitOk);
  CHECK(b.out.find("\"witness\": \"y1y2 (x) y1y2y3\"") != std::string::npos);
  // stdin input
  std::ifstream f(data("m3_101.json"));
  std::stringstream ss;
  ss << f.rdbuf();
  const Run c = run({"cohomology", "-", "--print-basis"}, ss.str());
  CHECK(c.code == kExitOk);
  CHECK(c.out.find("3: [y1y2y3]") != std::string::npos);
}

TEST_CASE("output is deterministic without --timing") {
  const Run a = run({"classify", "--dims", "1,2"});
  const Run b = run({"classify", "--dims", "1,2"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(a.out.find("4 matrices") != std::string::npos);
}

TEST_CASE("invalid input exits 1") {
  const Run v = run({"validate", data("square_invalid.json")});
  CHECK(v.code == kExitInvalid);
  CHECK(v.out.find("F_1^1, F_1^2") != std::string::npos);
  const Run c = run({"cohomology", data("square_invalid.json")});
  CHECK(c.code == kExitInvalid);
  CHECK(c.err.find("invalid input") != std::string::npos);
  CHECK(run({"bounds", "-"}, "{ not json").code == kExitInvalid);
  CHECK(run({"bounds", "/nonexistent/input.json"}).code == kExitInvalid);
  CHECK(run({"bounds", data("m3_101.json"), "--strategy", "greedy"}).code == kExitInvalid);
  CHECK(run({"frobnicate"}).code == kExitInvalid);
  CHECK(run({}).code == kExitInvalid);
}

TEST_CASE("budget exhaustion exits 2") {
  const Run c = run({"cohomology", data("m3_101.json"), "--budget", "2"});
  CHECK(c.code == kExitBudget);
  CHECK(c.out.find("budget_exhausted: true") != std::string::npos);
  const Run b = run({"bounds", data("m3_101.json"), "--budget", "1"});
  CHECK(b.code == kExitBudget);
  CHECK(b.out.find("budget_exhausted: true") != std::string::npos);
  CHECK(run({"classify", "--dims", "1,1,1,1", "--budget", "8"}).code == kExitBudget);
}

TEST_CASE("repro filter and tampered expectations") {
  const Run ok = run({"repro", "--filter", "m3/"});
  CHECK(ok.code == kExitOk);
  CHECK(ok.out.find("PASS m3/100-relations") != std::string::npos);
  CHECK(ok.out.find("rp/") == std::string::npos);
  CHECK(ok.out.find("4/4 rows passed") != std::string::npos);

  const std::string tampered = temp_file("tampered.json", R"({"m3/101": "tc=[7,7]"})");
  const Run bad = run({"repro", "--filter", "m3/", "--expectations", tampered});
  CHECK(bad.code == kExitMismatch);
  CHECK(bad.out.find("FAIL m3/101") != std::string::npos);
  CHECK(bad.out.find("expected: tc=[7,7]") != std::string::npos);
  std::remove(tampered.c_str());

  const std::string unknown = temp_file("unknown.json", R"({"no/such-row": "x"})");
  CHECK(run({"repro", "--expectations", unknown}).code == kExitInvalid);
  std::remove(unknown.c_str());
  CHECK(run({"repro", "--filter", "zzz"}).code == kExitInvalid);
}

TEST_CASE("external values file") {
  const std::string broken = temp_file("ext.json", "{\"rp\": 3}");
  CHECK(run({"bounds", data("m3_101.json"), "--external-values", broken}).code == kExitInvalid);
  std::remove(broken.c_str());
}

}  // TEST_SUITE
