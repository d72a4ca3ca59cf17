#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "cmw/cli.hpp"
#include "cmw/io.hpp"

using cmw::io::Json;

namespace {

const std::string kData = CMW_TEST_DATA_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cmw::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return kData + "/" + name; }

// Runs the installed binary through the shell.
Outcome run_binary(const std::string& args) {
  const std::string cmd = std::string(CMW_CLI_PATH) + " " + args + " 2>/dev/null";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out, ""};
}

}  // namespace

TEST(Cli, MatrixMulGoldens) {
  const auto r = run({"matrix", "mul", "--a", data("sol41_a.json"), "--b", data("sol41_b.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j["command"], "matrix mul");
  EXPECT_EQ(j["result"]["entries"].dump(), R"([["-50"],["8"],["-6"]])");
  const auto r2 = run({"matrix", "mul", "--a", data("sol42_a.json"), "--b", data("sol42_b.json")});
  EXPECT_EQ(r2.json()["result"]["entries"].dump(), R"([["-20","12"],["-5","179"],["-5","92"]])");
  const auto inline_json = run({"matrix", "mul", "--a", "[[1,2],[3,4]]", "--b", "[[0,1],[1,0]]"});
  EXPECT_EQ(inline_json.json()["result"]["entries"].dump(), R"([["2","1"],["4","3"]])");
}

TEST(Cli, EnvelopeShape) {
  const auto j = nlohmann::ordered_json::parse(run({"perm", "compose", "--p", "2 3 1", "--q", "2 1 3"}).out);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"command", "inputs", "result", "diagnostics"}));
  EXPECT_EQ(j["result"]["composition"], "3 2 1");
  EXPECT_EQ(j["inputs"]["p"], "2 3 1");
}

TEST(Cli, RealSupMatchesNewton) {
  const auto j = run({"real", "sup", "--bracket", "1,2", "--steps", "20", "--predicate", "sq_ge:2"}).json();
  double x = 1.5;
  for (int i = 0; i < 6; ++i) x = 0.5 * (x + 2.0 / x);
  EXPECT_NEAR(j["result"]["decimal"].get<double>(), x, std::ldexp(1.0, -20));
  EXPECT_EQ(j["result"]["width"], "1/1048576");
  const auto alias = run({"numbers", "real", "sup", "--bracket", "1,2", "--steps", "20", "--predicate", "sq_ge:2"});
  EXPECT_EQ(alias.json()["result"], j["result"]);
}

TEST(Cli, Subcommands) {
  EXPECT_EQ(run({"quotient", "--carrier", "-2,-1,0,1,2", "--relation", "mod:3"}).json()["result"]["class_count"], 3);
  EXPECT_EQ(run({"rat", "eval", "--expr", "(1/2+1/3)*6"}).json()["result"]["value"], "5");
  EXPECT_EQ(run({"numbers", "real", "approx", "--real", "harmonic", "--eps", "1/100"}).json()["result"]["value"], "1/301");
  EXPECT_EQ(run({"perm", "inverse", "--p", "2 3 1"}).json()["result"]["inverse"], "3 1 2");
  EXPECT_EQ(run({"perm", "subgroup", "--set", "1 2 3;2 1 3"}).json()["result"]["is_subgroup"], true);
  EXPECT_EQ(run({"perm", "subgroup", "--set", "2 3 1"}).json()["result"]["is_subgroup"], false);
  EXPECT_EQ(run({"perm", "cosets", "--set", "1 2 3;2 1 3"}).json()["result"]["index"], 3);
  EXPECT_EQ(run({"matrix", "inv", "--a", R"([["2","0"],["0","4"]])"}).json()["result"]["entries"].dump(),
            R"([["1/2","0"],["0","1/4"]])");
  EXPECT_EQ(run({"matrix", "kernel", "--a", R"([["1","2"],["2","4"]])"}).json()["result"]["basis"].dump(), R"([["-2","1"]])");
  const auto cls = run({"matrix", "classify", "--a", data("hermitian.json")}).json()["result"];
  EXPECT_EQ(cls["hermitian"], true);
  EXPECT_EQ(cls["symmetric"], false);
  EXPECT_EQ(run({"metric", "net", "--space", data("ints.json"), "--eps", "5/2"}).json()["result"]["centers"].dump(),
            R"(["0","3","6","9"])");
  const auto cd = run({"metric", "complete-dist", "--x", "const:0", "--y", "const:3", "--eps", "1/10"}).json();
  EXPECT_EQ(cd["result"]["distance"], "3");
  EXPECT_EQ(run({"measure", "measure", "--set", R"([["0","1"],["2","5"]])"}).json()["result"]["measure"], "4");
  EXPECT_EQ(run({"measure", "integrate", "--function", data("simple.json"), "--over", R"([["0","3"]])"}).json()["result"]["integral"],
            "12");
  EXPECT_NEAR(run({"norms", "lp", "--f", data("sine.json"), "--p", "inf"}).json()["result"]["value"].get<double>(), 1.0, 1e-12);
  EXPECT_NEAR(run({"norms", "cm", "--f", data("sine.json"), "--m", "2"}).json()["result"]["value"].get<double>(), 3.0, 1e-2);
  EXPECT_NEAR(run({"norms", "omega", "--f", data("ramp.csv"), "--t", "0.05"}).json()["result"]["value"].get<double>(), 3.0 / 64,
              1e-12);
  for (const char* n : {"holder", "zygmund", "besov"}) {
    const auto r = run({"norms", n, "--f", data("sine.json")});
    EXPECT_EQ(r.code, 0) << n << r.err;
  }
  const auto ty = run({"taylor", "--derivs", "1,1,1,1,1", "--x0", "0", "--x", "1", "--bound", "3"}).json();
  EXPECT_EQ(ty["result"]["value"], "65/24");
  EXPECT_EQ(ty["result"]["remainder_bound"], "1/40");
  const auto tn = run({"taylor", "--partials", R"({"":7,"0":8,"1":3,"0,0":2,"0,1":3,"1,1":0})", "--x0", "1,2", "--x", "2,1",
                       "--order", "2"})
                      .json();
  EXPECT_NEAR(tn["result"]["value"].get<double>(), 4.0 + 6.0, 1e-12);
  EXPECT_NEAR(run({"dist", "apply", "--functional", "dirac", "--testfn", "bump:0,1"}).json()["result"]["value"].get<double>(),
              std::exp(-1.0), 1e-11);
  EXPECT_NEAR(run({"dist", "apply", "--functional", "regular", "--testfn", "bump:0,1", "--f", "heaviside", "--derivative", "1"})
                  .json()["result"]["value"]
                  .get<double>(),
              std::exp(-1.0), 1e-5);
  const auto ft = run({"fourier", "--f", data("sine.json"), "--y", "0,1"}).json();
  EXPECT_EQ(ft["result"]["transform"].size(), 2u);
}

TEST(Cli, ErrorsAndExitCodes) {
  const auto sing = run({"matrix", "inv", "--a", R"([["1","2"],["2","4"]])"});
  EXPECT_EQ(sing.code, cmw::cli::kExitDomainError);
  EXPECT_NE(sing.err.find("Singular"), std::string::npos);
  EXPECT_EQ(run({"perm", "compose", "--p", "1 1 2", "--q", "1 2 3"}).code, cmw::cli::kExitDomainError);
  EXPECT_EQ(run({"matrix", "mul", "--a", data("missing.json"), "--b", "[[1]]"}).code, cmw::cli::kExitDomainError);
  EXPECT_EQ(run({"matrix", "mul", "--a", "[[1]]"}).code, cmw::cli::kExitUsage);
  EXPECT_EQ(run({"matrix", "mul", "--a", "[[1]]", "--b", "[[1]]", "--bogus", "1"}).code, cmw::cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cmw::cli::kExitUsage);
  EXPECT_EQ(run({}).code, cmw::cli::kExitUsage);
  EXPECT_EQ(run({"real", "sup", "--bracket", "1,2", "--steps", "5", "--predicate", "nonsense:1"}).code, cmw::cli::kExitUsage);
  EXPECT_EQ(run({"norms", "lp", "--f", data("ramp.csv"), "--p", "0.5"}).code, cmw::cli::kExitDomainError);
  EXPECT_EQ(run({"--help"}).code, cmw::cli::kExitOk);
}

TEST(Cli, ReportsAreDeterministic) {
  const std::vector<std::string> args{"norms", "besov", "--f", data("sine.json"), "--q", "3"};
  EXPECT_EQ(run(args).out, run(args).out);
  const auto v = run({"norms", "holder", "--f", data("sine.json")}).json()["result"]["value"].get<double>();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  EXPECT_EQ(std::strtod(buf, nullptr), v);
}

TEST(Cli, Binary) {
  const auto r = run_binary("perm compose --p '2 3 1' --q '2 1 3'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["result"]["composition"], "3 2 1");
  EXPECT_EQ(run_binary("matrix inv --a '[[0]]'").code, 1);
  EXPECT_EQ(run_binary("matrix nope").code, 2);
  EXPECT_EQ(run_binary("--version").out, "0.1.0\n");
}
