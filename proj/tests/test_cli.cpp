#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "reeskit/cli.hpp"

using namespace reeskit;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "reeskit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string inst(const std::string& name) { return std::string(REESKIT_INSTANCE_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& text) {
  auto path = testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(Cli, ConstructPrintsGoldenMatrix) {
  auto r = cli({"construct", inst("powers_3_12.txt")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("[ T_1_1_1  T_2_1_1  T_2_2_1  T_2_2_2 ]\n[ T_1_1_0  T_2_1_0  T_2_2_0  T_2_2_1 ]\n[ T_1_0_0  T_2_0_0  T_2_1_0  T_2_1_1 ]\n"),
            std::string::npos);
}

TEST(Cli, ConstructTruncation) {
  auto r = cli({"construct", inst("truncation_linear.txt")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("h1 = T_2_1 - T_1_0"), std::string::npos) << r.out;
}

TEST(Cli, OutsideProvenRange) {
  auto path = temp_file("r3.txt", "mode = truncation\nn = 3\nf = x1^2, x2^2, x3^2\nd = 3\n");
  auto r = cli({"construct", path});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
  auto o = cli({"construct", "--oracle", path});
  EXPECT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("elimination oracle"), std::string::npos);
}

TEST(Cli, ParseErrors) {
  auto bad = temp_file("bad.txt", "n = 2\na = 1\nfield = F4\n");
  auto r = cli({"construct", bad});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find(":3:9:"), std::string::npos) << r.err;
  EXPECT_EQ(cli({"construct", "/nonexistent/file"}).code, 1);
  EXPECT_EQ(cli({"frobnicate", inst("powers_2_1.txt")}).code, 1);
  EXPECT_EQ(cli({"verify", "--jobs", "0", inst("powers_2_1.txt")}).code, 1);
  EXPECT_EQ(cli({"construct", "--field", "Fp:4", inst("powers_2_1.txt")}).code, 1);
}

TEST(Cli, VerifyExitCodes) {
  auto ok = cli({"verify", "--checks", "dimension,kernel-equality-M", inst("powers_3_12.txt")});
  EXPECT_EQ(ok.code, 0) << ok.out;
  auto unknown = cli({"verify", "--checks", "nope", inst("powers_3_12.txt")});
  EXPECT_EQ(unknown.code, 1);
  EXPECT_NE(unknown.err.find("Usage"), std::string::npos);
  auto wrong_mode = cli({"verify", "--checks", "height-Q", inst("powers_3_12.txt")});
  EXPECT_EQ(wrong_mode.code, 1);
  EXPECT_EQ(cli({"verify", "--checks", "colon-identity", inst("powers_2_1.txt")}).code, 1);
  EXPECT_EQ(cli({"verify", inst("powers_2_1.txt")}).code, 0);
  auto aborted = cli({"verify", inst("oversized.txt")});
  EXPECT_EQ(aborted.code, 2) << aborted.out;
  EXPECT_NE(aborted.out.find("[aborted]"), std::string::npos);
  auto fail = cli({"verify", "--checks", "symbolic-power", "--seed", "3", inst("veronese_symbolic.txt")});
  EXPECT_EQ(fail.code, 0) << fail.out;
}

// Random column submatrices of B for n=3, a=(1,2) include ones whose minors
// are not a Gröbner basis; the failure is reported with exit code 3.
TEST(Cli, GbMinorsSubmatrixFailureExitCode) {
  auto r = cli({"verify", "--checks", "gb-minors,dimension", inst("powers_3_12.txt")});
  EXPECT_EQ(r.code, 3) << r.out;
  EXPECT_NE(r.out.find("[fail] gb-minors"), std::string::npos);
  EXPECT_NE(r.out.find("[pass] dimension"), std::string::npos);
}

TEST(Cli, FieldOverride) {
  auto r = cli({"verify", "--field", "Fp:7", "--checks", "kernel-equality-M", "--json", inst("powers_2_1.txt")});
  EXPECT_EQ(r.code, 0);
  auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["instance"]["field"], "Fp:7");
}

TEST(Cli, ReportIsDeterministic) {
  auto path = testing::TempDir() + "report.json";
  std::vector<std::string> args{"verify", "--jobs", "3", "--no-timings", "--report", path, inst("powers_3_12.txt")};
  auto a = cli(args);
  std::ifstream fa(path);
  std::string ja((std::istreambuf_iterator<char>(fa)), {});
  auto b = cli(args);
  std::ifstream fb(path);
  std::string jb((std::istreambuf_iterator<char>(fb)), {});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(ja, jb);
  auto doc = Json::parse(ja);
  EXPECT_EQ(doc["exitCode"], a.code);
  for (const char* key : {"basisSize", "maxDegree", "pairsGenerated", "pairsSkipped", "pairsReduced", "elapsedMs", "status"}) {
    bool found = false;
    for (const auto& rep : doc["reports"]) {
      for (const auto& gb : rep["gb"]) found = found || gb.contains(key);
    }
    EXPECT_TRUE(found) << key;
  }
  auto c = cli({"construct", inst("truncation_small_d.txt")});
  EXPECT_EQ(c.out, cli({"construct", inst("truncation_small_d.txt")}).out);
}

TEST(Cli, Export) {
  auto m2 = cli({"export", "--dialect", "m2", inst("powers_2_1.txt")});
  EXPECT_EQ(m2.code, 0);
  EXPECT_NE(m2.out.find("assert(ker map1 == I1);"), std::string::npos);
  EXPECT_EQ(cli({"export", "--dialect", "maple", inst("powers_2_1.txt")}).code, 1);
  auto plain = cli({"export", inst("truncation_small_d.txt")});
  auto path = temp_file("plain.txt", plain.out);
  auto again = cli({"construct", path});
  EXPECT_EQ(again.code, 0);
  EXPECT_EQ(again.out, cli({"construct", inst("truncation_small_d.txt")}).out);
}
