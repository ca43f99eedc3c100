#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "vcfam/cli.hpp"
#include "vcfam/constructions.hpp"
#include "vcfam/family_io.hpp"

namespace vcfam {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "vcfam");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("vcfam_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string path(const char* name) const { return (dir_ / name).string(); }
  std::string write(const char* name, const SetFamily& f) const {
    save_family(path(name), f);
    return path(name);
  }
  std::filesystem::path dir_;
};

TEST_F(CliTest, VcdimOfFullFamily) {
  const auto r = run({"vcdim", "--family", write("f.vcfam", full_family(5, 2))});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2\nwitness 1 2\nrefuted_size 3\n");
  const auto j = run({"vcdim", "--family", path("f.vcfam"), "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(j.out)["dimension"], 2);
}

TEST_F(CliTest, OracleSmall) {
  const auto r = run({"oracle", "-k", "1", "-s", "2", "-n", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.starts_with("1\nmethod branch-and-bound\nvcfam 1\nn=4 s=2\n")) << r.out;
  EXPECT_NE(r.err.find("nodes explored"), std::string::npos);
  // The witness section is a canonical family file.
  const auto fam = read_family(r.out.substr(r.out.find("vcfam 1")));
  EXPECT_EQ(fam.size(), 3u);

  const auto w = run({"oracle", "-k", "1", "-s", "2", "-n", "4", "--witness-out", path("w.vcfam")});
  EXPECT_EQ(load_family(path("w.vcfam")), fam);
  const auto e = run({"oracle", "-k", "1", "-s", "2", "-n", "4", "--fallback-enum"});
  EXPECT_TRUE(e.out.starts_with("1\nmethod exhaustive\n"));
}

TEST_F(CliTest, OracleCapExitCode) {
  const auto r = run({"oracle", "-k", "2", "-s", "3", "-n", "7"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("feasibility cap"), std::string::npos);
  const auto raised = run({"oracle", "-k", "1", "-s", "2", "-n", "8", "--cap", "30"});
  EXPECT_EQ(raised.code, 0);
  EXPECT_NE(raised.err.find("warning"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"construct", "full", "-n", "3"}).code, 2);  // missing -s
  EXPECT_EQ(run({"construct", "full", "-n", "3", "-s", "4"}).code, 2);
  EXPECT_EQ(run({"vcdim", "--family", path("missing.vcfam")}).code, 2);
  EXPECT_EQ(run({"oracle", "-k", "1", "-s", "2", "-n", "4", "--workers", "0"}).code, 2);
  EXPECT_EQ(run({"explore", "-k", "1", "-s", "2", "-n", "3..x"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliTest, ConstructEveryKindRoundTrips) {
  const auto base = write("base.vcfam", build_Fk(4, 1));
  const std::vector<std::vector<std::string>> cmds = {
      {"construct", "full", "-n", "5", "-s", "2"},
      {"construct", "segments", "-n", "4"},
      {"construct", "hypercube", "-k", "2", "-m", "2"},
      {"construct", "fk", "-m", "4", "-k", "2"},
      {"construct", "witness", "-k", "2", "-s", "4", "-n", "7"},
      {"construct", "cone", "--family", base},
      {"construct", "product", "--family", base, "-l", "3"},
  };
  for (const auto& cmd : cmds) {
    const auto r = run(cmd);
    ASSERT_EQ(r.code, 0) << cmd[1] << ": " << r.err;
    EXPECT_EQ(write_family(read_family(r.out)), r.out) << cmd[1];
  }
  EXPECT_EQ(read_family(run({"construct", "fk", "-m", "4", "-k", "2"}).out), build_Fk(4, 2));
  const auto j = run({"construct", "cone", "--family", base, "--format", "json"});
  EXPECT_EQ(family_from_json(nlohmann::json::parse(j.out)), cone(build_Fk(4, 1)));
}

TEST_F(CliTest, OutFlagWritesFile) {
  const auto r = run({"construct", "full", "-n", "4", "-s", "2", "--out", path("o.vcfam")});
  EXPECT_EQ(r.out, "");
  EXPECT_EQ(load_family(path("o.vcfam")), full_family(4, 2));
}

TEST_F(CliTest, CheckCommands) {
  const auto pairs = write("p.vcfam", make_family(4, {{1, 2}, {3, 4}}));
  auto r = run({"check", "covering", "--family", pairs, "-k", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "PASS\n");
  r = run({"check", "covering", "--family", pairs, "-k", "2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "FAIL\nuncovered 1 3\n");
  r = run({"check", "ufp", "--family", pairs});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "PASS\nface 1 2 : 1\nface 3 4 : 3\n");
  r = run({"check", "ufp", "--family", write("f.vcfam", full_family(4, 2))});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "FAIL\nviolator 1 2\n");
}

TEST_F(CliTest, VerifyCommands) {
  auto r = run({"verify", "main", "-k", "2", "-s", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("D(2,3,14) = 2\nPASS\n"), std::string::npos) << r.out;
  r = run({"verify", "prop-const", "-m", "5", "-k", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.ends_with("PASS\n"));
  r = run({"verify", "certificate", "-k", "2", "-s", "3", "-n", "14", "--witness-out", path("w.vcfam")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(load_family(path("w.vcfam")), covering_witness_family(2, 3, 14));
  // Too small for the counting bound: the lower certificate fails.
  r = run({"verify", "certificate", "-k", "2", "-s", "3", "-n", "5"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(r.out.ends_with("FAIL\n"));
  r = run({"verify", "main", "-k", "3", "-s", "5"});
  EXPECT_EQ(r.code, 2);
}

TEST_F(CliTest, ExploreFormats) {
  auto r = run({"explore", "-k", "1", "-s", "2", "-n", "3..5", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "k,s,n,lower,upper,exact,method\n1,2,3,1,1,1,oracle\n1,2,4,1,1,1,oracle\n1,2,5,1,1,1,oracle\n");
  r = run({"explore", "-k", "2", "-s", "3", "-n", "5..14", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["rows"].size(), 10u);
  EXPECT_EQ(j["nondecreasing"], true);
}

TEST_F(CliTest, WorkersGiveByteIdenticalData) {
  for (const auto& base : std::vector<std::vector<std::string>>{
           {"oracle", "-k", "2", "-s", "3", "-n", "6"},
           {"verify", "main", "-k", "2", "-s", "3"},
           {"explore", "-k", "2", "-s", "3", "-n", "5..16"}}) {
    auto one = base, eight = base;
    one.insert(one.end(), {"--workers", "1"});
    eight.insert(eight.end(), {"--workers", "8"});
    const auto a = run(one), b = run(eight), c = run(one);
    EXPECT_EQ(a.out, b.out) << base[0];
    EXPECT_EQ(a.out, c.out) << base[0];
  }
}

}  // namespace
}  // namespace vcfam
