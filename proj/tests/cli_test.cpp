#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "lcv/cache.hpp"
#include "lcv/cli.hpp"
#include "lcv/version.hpp"

namespace lcv {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("lcv-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

TEST(Compute, TextRows) {
  auto r = run({"compute", "--family", "lis", "--n-max", "3"});
  EXPECT_EQ(r.code, cli::kExitHolds);
  EXPECT_EQ(r.out, "1\n1 1\n1 4 1\n");
  r = run({"compute", "--family", "matching", "--n-max", "1"});
  EXPECT_EQ(r.out, "1\n");
  r = run({"compute", "--family", "boros-moll", "--n-max", "1"});
  EXPECT_EQ(r.out, "1\n3/2 1\n");
}

TEST(Compute, JsonUsesDecimalStrings) {
  const auto r = run({"compute", "--family", "lis", "--n-max", "18", "--route", "egf",
                      "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["tool_version"], std::string(tool_version()));
  EXPECT_EQ(j["rows"].size(), 18u);
  const auto& p18 = j["rows"][17];
  EXPECT_EQ(p18["n"], 18);
  EXPECT_TRUE(p18["coeffs"][3].is_string());
  EXPECT_EQ(p18["coeffs"][3], "207591285198178");
}

TEST(Compute, Csv) {
  const auto r = run({"compute", "--family", "lis", "--n-max", "2", "--format", "csv"});
  EXPECT_EQ(r.out, "family,n,degree,coefficient\nlis,1,1,1\nlis,2,1,1\nlis,2,2,1\n");
}

TEST(Compute, CapNeedsOverride) {
  auto r = run({"compute", "--family", "lis", "--n-max", "25"});
  EXPECT_EQ(r.code, cli::kExitError);
  EXPECT_NE(r.err.find("--allow-large"), std::string::npos);
  r = run({"compute", "--family", "matching", "--n-max", "21"});
  EXPECT_EQ(r.code, cli::kExitError);
}

TEST(Usage, ErrorsExitTwo) {
  EXPECT_EQ(run({}).code, cli::kExitError);
  EXPECT_EQ(run({"compute", "--family", "nope"}).code, cli::kExitError);
  EXPECT_EQ(run({"verify", "--family", "lis", "--suite", "nope"}).code, cli::kExitError);
  EXPECT_EQ(run({"verify", "--family", "lis", "--suite", "k-log-concave", "--n-max", "5"}).code,
            cli::kExitError);
  EXPECT_EQ(run({"--help"}).code, cli::kExitHolds);
}

TEST(Verify, ExitCodes) {
  auto r = run({"verify", "--family", "lis", "--suite", "k-log-concave", "--depth", "4",
                "--n-max", "12"});
  EXPECT_EQ(r.code, cli::kExitHolds);
  EXPECT_NE(r.out.find("result: all 12 verdicts hold"), std::string::npos);

  r = run({"verify", "--family", "matching", "--suite", "strong-q-log-concave", "--n-max", "4"});
  EXPECT_EQ(r.code, cli::kExitCounterexample);
  EXPECT_NE(r.out.find("exploratory"), std::string::npos);
  EXPECT_NE(r.out.find("index=2 partner=2 degree=2 value=-1"), std::string::npos);
}

TEST(Verify, ShortWindowIsAnError) {
  const auto r = run({"verify", "--family", "lis", "--suite", "k-q-log-convex", "--depth", "3",
                      "--n-max", "5"});
  EXPECT_EQ(r.code, cli::kExitError);
  EXPECT_NE(r.err.find("window"), std::string::npos);
}

TEST(Verify, JsonWitnessAndStabilityAcrossJobs) {
  const std::vector<std::string> base{"verify", "--family", "lis", "--suite", "order-k-log-concave",
                                      "--depth", "3", "--n-max", "10", "--format", "json"};
  auto one = base;
  one.insert(one.end(), {"--jobs", "1"});
  auto many = base;
  many.insert(many.end(), {"--jobs", "6"});
  const auto a = run(one);
  const auto b = run(many);
  EXPECT_EQ(a.code, cli::kExitCounterexample);
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_FALSE(j["all_hold"].get<bool>());
  const auto& w = j["verdicts"][0]["witness"];
  EXPECT_EQ(w["depth"], 3);
  EXPECT_TRUE(w["value"].is_string());
  EXPECT_EQ(w["value"], "-2761419280");
}

TEST(Verify, RowSuitesStableAcrossJobs) {
  const std::vector<std::string> base{"verify", "--family", "matching", "--suite", "k-log-concave",
                                      "--depth", "3", "--n-max", "12", "--format", "json"};
  auto many = base;
  many.insert(many.end(), {"--jobs", "5"});
  EXPECT_EQ(run(base).out, run(many).out);
}

TEST(GoldenDiff, StrictAndErrataModes) {
  auto r = run({"golden-diff", "--family", "matching"});
  EXPECT_EQ(r.code, cli::kExitCounterexample);
  EXPECT_NE(r.out.find("mismatch family=matching n=10 degree=4 expected=250367036 got=250367636"),
            std::string::npos);
  r = run({"golden-diff", "--family", "matching", "--errata"});
  EXPECT_EQ(r.code, cli::kExitHolds);
}

TEST(GoldenDiff, TamperedFileNamesTheCell) {
  TempDir dir;
  const auto file = dir.path() / "golden.txt";
  std::ofstream(file) << "P_1(x) = x\nP_2(x) = x + x^2\nP_3(x) = x + 4x^2 + x^3\n"
                         "P_4(x) = x + 13x^2 + 7x^3 + x^4\n";
  const auto r = run({"golden-diff", "--family", "lis", "--golden-file", file.string()});
  EXPECT_EQ(r.code, cli::kExitCounterexample);
  EXPECT_NE(r.out.find("n=4 degree=3 expected=7 got=9"), std::string::npos);
  EXPECT_NE(r.out.find("result: 3/4 rows match"), std::string::npos);
}

TEST(OracleCheck, SmallRanges) {
  auto r = run({"oracle-check", "--family", "lis", "--n-max", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "n=1 match 1:1\nresult: 1/1 rows match\n");
  r = run({"oracle-check", "--family", "matching", "--n-max", "3", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(run({"oracle-check", "--family", "lis", "--n-max", "10"}).code, cli::kExitError);
}

TEST(Bench, Smoke) {
  auto r = run({"bench", "--kernel", "determinant", "--sizes", "4", "--order", "10"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("seconds="), std::string::npos);
  r = run({"bench", "--kernel", "family", "--family", "lis", "--sizes", "6"});
  EXPECT_EQ(r.code, 0);
  r = run({"bench", "--kernel", "predicate", "--suite", "strong-q-log-convex", "--family", "lis",
           "--sizes", "7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(run({"bench", "--kernel", "nope"}).code, cli::kExitError);
}

TEST(Cache, HitsAndRejectsTampering) {
  TempDir dir;
  const auto first = run({"compute", "--family", "lis", "--n-max", "4", "--cache-dir",
                          dir.path().string()});
  ASSERT_EQ(first.code, 0);
  const FamilyCache cache(dir.path());
  const auto path = cache.path_for(FamilyId::Lis, 4);
  ASSERT_TRUE(fs::exists(path));
  EXPECT_TRUE(cache.load(FamilyId::Lis, 4).has_value());

  // Same sum and shape, but contradicts the golden row.
  std::ofstream(path) << R"({"schema_version":1,"tool_version":")" << tool_version()
                      << R"(","family":"lis","n":4,"coeffs":["1","12","10","1"]})";
  EXPECT_FALSE(cache.load(FamilyId::Lis, 4).has_value());
  std::ofstream(path) << "not json";
  EXPECT_FALSE(cache.load(FamilyId::Lis, 4).has_value());

  const auto again = run({"compute", "--family", "lis", "--n-max", "4", "--cache-dir",
                          dir.path().string()});
  EXPECT_EQ(again.out, first.out);
  EXPECT_TRUE(cache.load(FamilyId::Lis, 4).has_value());
}

TEST(Cache, EnvironmentVariableSelectsDirectory) {
  TempDir dir;
  ::setenv(kCacheDirEnv, dir.path().c_str(), 1);
  const auto resolved = FamilyCache::resolve(std::nullopt);
  ASSERT_TRUE(resolved.has_value());
  EXPECT_EQ(resolved->dir(), dir.path());
  EXPECT_EQ(FamilyCache::resolve(std::string("/elsewhere"))->dir(), fs::path("/elsewhere"));
  const auto r = run({"compute", "--family", "matching", "--n-max", "3"});
  ::unsetenv(kCacheDirEnv);
  EXPECT_EQ(r.out, "1\n2 1\n5 9 1\n");
  EXPECT_TRUE(fs::exists(resolved->path_for(FamilyId::Matching, 3)));
}

}  // namespace
}  // namespace lcv
