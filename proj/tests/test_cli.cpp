#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

using coxlab::cli::run;
using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, VerifyExamples) {
  EXPECT_EQ(invoke({"verify", "--family", "a", "--n", "4", "--max-length", "6"}).code, 0);
  const Result r = invoke({"verify", "--family", "affa", "--n", "2", "--max-length", "12"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("all predicates uniformly true"), std::string::npos);
  EXPECT_EQ(invoke({"verify", "--family", "x", "--n", "2"}).code, 2);
}

TEST(Cli, VerifyDegenerateJson) {
  const Result r =
      invoke({"verify", "--family", "affc", "--n", "1", "--max-length", "6", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["note"], "all predicates uniformly true");
  EXPECT_TRUE(j["isomorphism"]["passed"].get<bool>());
  EXPECT_EQ(j["config"]["family"], "affc");
  EXPECT_EQ(j["config"]["L"], 6);
}

TEST(Cli, EnumerateExamples) {
  const Result a5 = invoke({"enumerate", "--family", "a", "--n", "5", "--format", "json"});
  EXPECT_EQ(a5.code, 0);
  EXPECT_EQ(json::parse(a5.out)["census"]["avoider_total"], 42);
  EXPECT_TRUE(json::parse(a5.out)["recurrence"]["passed"].get<bool>());

  const Result b3 = invoke({"enumerate", "--family", "b", "--n", "3"});
  EXPECT_EQ(b3.code, 0);
  EXPECT_NE(b3.out.find("avoiders at q=1: 20"), std::string::npos);

  const Result csv = invoke(
      {"enumerate", "--family", "affc", "--n", "2", "--max-length", "8", "--format", "csv"});
  EXPECT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.rfind("length,count,avoiding\n", 0), 0u);
  EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 10);
}

TEST(Cli, InspectExamples) {
  const Result b = invoke({"inspect", "--family", "b", "--n", "2", "--window", "-1,-2",
                           "--format", "json"});
  ASSERT_EQ(b.code, 0) << b.err;
  const json j = json::parse(b.out);
  EXPECT_EQ(j["length"], 4);
  EXPECT_EQ(j["disarray"], 6);
  EXPECT_EQ(j["gap"], 1);
  EXPECT_EQ(j["witness_321"]["i"], -1);
  EXPECT_EQ(j["witness_321"]["j"], 1);
  EXPECT_EQ(j["witness_321"]["k"], 2);

  const Result a = invoke({"inspect", "--family", "a", "--n", "3", "--word", "1", "2", "1"});
  EXPECT_EQ(a.code, 0);
  EXPECT_NE(a.out.find("length: 3"), std::string::npos);
  EXPECT_NE(a.out.find("dis/2 = 2"), std::string::npos);
  EXPECT_NE(a.out.find("tight: no"), std::string::npos);

  const Result id = invoke({"inspect", "--family", "a", "--n", "2", "--window", "1,2"});
  EXPECT_EQ(id.code, 0);
  EXPECT_NE(id.out.find("tight: yes"), std::string::npos);
  EXPECT_NE(id.out.find("321 witness: none"), std::string::npos);
}

TEST(Cli, InspectErrors) {
  EXPECT_EQ(invoke({"inspect", "--family", "b", "--n", "2", "--window", "1,1"}).code, 2);
  EXPECT_EQ(invoke({"inspect", "--family", "b", "--n", "2", "--window", "1,x"}).code, 2);
  EXPECT_EQ(invoke({"inspect", "--family", "b", "--n", "2", "--word", "5"}).code, 2);
  EXPECT_EQ(invoke({"inspect", "--family", "b", "--n", "2"}).code, 2);
  EXPECT_EQ(invoke({"inspect", "--family", "affa", "--n", "1", "--window", "1"}).code, 2);
}

TEST(Cli, RootsExamples) {
  EXPECT_EQ(
      invoke({"roots", "--family", "affa", "--n", "3", "--max-height", "8", "--check-dis"}).code,
      0);
  EXPECT_EQ(
      invoke({"roots", "--family", "affc", "--n", "2", "--max-height", "8", "--check-dis"}).code,
      0);
  const Result lz =
      invoke({"roots", "--family", "b", "--n", "2", "--variant", "long-zero", "--check-dis"});
  EXPECT_EQ(lz.code, 1);
  EXPECT_NE(lz.out.find("MISMATCH"), std::string::npos);
  const Result p = invoke({"roots", "--family", "b", "--n", "3", "--check-prop43", "--format",
                           "json"});
  EXPECT_EQ(p.code, 0);
  EXPECT_TRUE(json::parse(p.out)["cost_tight_check"]["passed"].get<bool>());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"bogus"}).code, 2);
  EXPECT_EQ(invoke({"verify", "--family", "a"}).code, 2);
  EXPECT_EQ(invoke({"verify", "--family", "a", "--n", "0"}).code, 2);
  EXPECT_EQ(invoke({"verify", "--family", "a", "--n", "3", "--format", "xml"}).code, 2);
  EXPECT_EQ(invoke({"verify", "--family", "a", "--n", "3", "--budget", "0"}).code, 2);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Cli, BudgetPrecedence) {
  EXPECT_EQ(invoke({"enumerate", "--family", "affa", "--n", "3", "--max-length", "10",
                    "--budget", "10"})
                .code,
            2);
  ::setenv("COXLAB_BUDGET", "10", 1);
  EXPECT_EQ(invoke({"enumerate", "--family", "affa", "--n", "3", "--max-length", "10"}).code, 2);
  EXPECT_EQ(invoke({"enumerate", "--family", "affa", "--n", "3", "--max-length", "10",
                    "--budget", "100000"})
                .code,
            0);
  ::setenv("COXLAB_BUDGET", "abc", 1);
  EXPECT_EQ(invoke({"enumerate", "--family", "a", "--n", "3"}).code, 2);
  ::unsetenv("COXLAB_BUDGET");
}

TEST(Cli, JsonRoundTripIsByteIdentical) {
  const std::vector<std::vector<std::string>> runs = {
      {"verify", "--family", "b", "--n", "3", "--format", "json"},
      {"verify", "--family", "affa", "--n", "2", "--max-length", "6", "--format", "json"},
      {"enumerate", "--family", "affc", "--n", "2", "--max-length", "5", "--format", "json"},
      {"inspect", "--family", "affc", "--n", "2", "--word", "1", "2", "1", "--format", "json"},
      {"roots", "--family", "affc", "--n", "2", "--max-height", "6", "--check-prop43",
       "--max-length", "4", "--format", "json"}};
  for (const auto& args : runs) {
    const Result r = invoke(args);
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json::parse(r.out).dump(2) + "\n", r.out);
  }
}

TEST(Cli, WritesOutFile) {
  const auto path = std::filesystem::temp_directory_path() / "coxlab_cli_test.csv";
  std::filesystem::remove(path);
  const Result r = invoke({"roots", "--family", "b", "--n", "2", "--format", "csv", "--out",
                           path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "coeffs,height,reflection_window,witness_word,half_disarray,matches");
  std::filesystem::remove(path);
  EXPECT_EQ(invoke({"roots", "--family", "b", "--n", "2", "--format", "csv", "--out",
                    "/nonexistent/dir/x.csv"})
                .code,
            2);
}

}  // namespace
