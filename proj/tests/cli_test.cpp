#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Invocation {
  int status;
  std::string out;
};

Invocation run(const std::string& args) {
  const std::string cmd = std::string(PISET_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string data(const char* name) { return std::string(PISET_TEST_DATA) + "/" + name; }

nlohmann::json structured(const std::string& args, int expected_status = 0) {
  const Invocation r = run(args + " --format structured");
  EXPECT_EQ(r.status, expected_status) << args;
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST(Cli, SpectrumBoth) {
  const Invocation r = run("spectrum Sz:8 --method both");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("{1, 2, 4, 5, 7, 13}"), std::string::npos);
  EXPECT_NE(r.out.find("order 29120"), std::string::npos);
  EXPECT_NE(r.out.find("match"), std::string::npos);
}

TEST(Cli, SpectrumFormulaStructured) {
  const auto j = structured("spectrum L2:32 --method formula");
  EXPECT_EQ(j["formula"], nlohmann::json::parse("[1,2,3,11,31,33]"));
  EXPECT_TRUE(j["enumerated"].is_null());
}

TEST(Cli, SpectrumDefaultsToFormula) {
  const auto j = structured("spectrum Sz:128");
  EXPECT_EQ(j["method"], "formula");
  EXPECT_EQ(j["formula"], nlohmann::json::parse("[1,2,4,5,29,113,127,145]"));
  EXPECT_EQ(structured("spectrum Alt:6")["method"], "enumerate");
}

TEST(Cli, SpectrumFromGeneratorFile) {
  const auto j = structured("spectrum --gens " + data("s3.json"));
  EXPECT_EQ(j["enumerated"], nlohmann::json::parse("[1,2,3]"));
  EXPECT_EQ(j["order"], 6);
}

TEST(Cli, Solvable) {
  auto j = structured("solvable A5");
  EXPECT_FALSE(j["solvable"].get<bool>());
  j = structured("solvable --gens " + data("s4.json"));
  EXPECT_TRUE(j["solvable"].get<bool>());
  EXPECT_EQ(j["series_orders"], nlohmann::json::parse("[24,12,4,1]"));
  EXPECT_TRUE(structured("solvable --gens " + data("c6.json"))["solvable"].get<bool>());
}

TEST(Cli, IesCommands) {
  const Invocation c = run("ies classify 3,5");
  EXPECT_EQ(c.status, 0);
  EXPECT_NE(c.out.find("IES, basis {3, 5}"), std::string::npos);

  const auto w = structured("ies witness 4,5");
  EXPECT_EQ(w["witness"], "L2:8");
  EXPECT_EQ(w["scanned"], nlohmann::json::parse(R"(["L2:4","L2:8"])"));

  EXPECT_EQ(run("ies check 3,4 --bound 3").status, 0);
  const auto report = structured("ies check 7 --bound 3");
  EXPECT_EQ(report["violations"].front(), "Alt:5");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("ies classify 1,3").status, 2);
  EXPECT_EQ(run("spectrum L2:6").status, 2);
  EXPECT_EQ(run("spectrum Sz:8 --method enumerate --cap 100").status, 2);
  EXPECT_EQ(run("spectrum --gens " + data("malformed.json")).status, 2);
  EXPECT_EQ(run("spectrum --gens " + data("s3.json") + " --method formula").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("verify-paper --cap 1000").status, 0);
}

TEST(Cli, StructuredOutputIsByteStable) {
  const Invocation a = run("ies witness 3,7,13,41 --format structured");
  const Invocation b = run("ies witness 3,7,13,41 --format structured");
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(nlohmann::ordered_json::parse(a.out).dump(2) + "\n", a.out);
}
