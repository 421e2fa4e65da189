#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include "support/process.h"
#include "udc/instance.h"

namespace udc {
namespace {

using testing::ReadFileOrEmpty;
using testing::RunProcess;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("udc_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string Path(const std::string& name) const { return (dir_ / name).string(); }
  testing::ProcessResult Udc(const std::vector<std::string>& args,
                             const std::vector<std::string>& env = {}) {
    return RunProcess(UDC_TOOL_PATH, args, env);
  }
  std::filesystem::path dir_;
};

TEST_F(CliTest, GenSolveVerify) {
  std::string inst = Path("a.json"), sol = Path("a.sol.json");
  ASSERT_EQ(Udc({"gen", "--n", "12", "--m", "15", "--side", "2", "--seed", "3", "-o", inst})
                .exit_code, 0);
  for (const char* algo : {"exact", "greedy", "ptas"}) {
    testing::ProcessResult r = Udc({"solve", inst, "--algo", algo, "-o", sol});
    EXPECT_EQ(r.exit_code, 0) << algo;
    EXPECT_NE(r.out.find("\"instance_digest\""), std::string::npos);
    EXPECT_EQ(Udc({"verify", inst, sol}).exit_code, 0) << algo;
  }
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Udc({}).exit_code, 2);
  EXPECT_EQ(Udc({"gen", "--n", "3"}).exit_code, 2);  // missing -o
  EXPECT_EQ(Udc({"solve", Path("missing.json")}).exit_code, 2);
  EXPECT_EQ(Udc({"solve", "x", "--algo", "magic"}).exit_code, 2);
  EXPECT_EQ(Udc({"--help"}).exit_code, 0);
}

TEST_F(CliTest, InfeasibleIsThree) {
  Instance inst;
  inst.disks = {{0, {0, 0}, 1}};
  inst.points = {{5, 5}};
  Save(inst, Path("bad.json"));
  EXPECT_EQ(Udc({"solve", Path("bad.json")}).exit_code, 3);
}

TEST_F(CliTest, VerifyFailureIsFour) {
  Instance inst;
  inst.disks = {{0, {0, 0}, 1}, {1, {3, 0}, 1}};
  inst.points = {{0, 0}, {3, 0}};
  Save(inst, Path("i.json"));
  std::ofstream(Path("s.json")) << SolutionToJson(MakeSolution(inst, {0}, StageTag::kDp));
  EXPECT_EQ(Udc({"verify", Path("i.json"), Path("s.json")}).exit_code, 4);
}

TEST_F(CliTest, SeedEnvironmentOverridesFlag) {
  std::vector<std::string> base = {"gen", "--n", "5", "--m", "5", "--seed", "1", "-o"};
  auto with = [&](std::vector<std::string> v, const std::string& out) {
    v.push_back(out);
    return v;
  };
  ASSERT_EQ(Udc(with(base, Path("a.json")), {"UDC_SEED=9"}).exit_code, 0);
  ASSERT_EQ(Udc({"gen", "--n", "5", "--m", "5", "--seed", "9", "-o", Path("b.json")}).exit_code, 0);
  ASSERT_EQ(Udc(with(base, Path("c.json"))).exit_code, 0);
  EXPECT_EQ(ReadFileOrEmpty(Path("a.json")), ReadFileOrEmpty(Path("b.json")));
  EXPECT_NE(ReadFileOrEmpty(Path("a.json")), ReadFileOrEmpty(Path("c.json")));
}

TEST_F(CliTest, RenderWritesSvg) {
  std::string inst = Path("r.json");
  ASSERT_EQ(Udc({"gen", "--n", "10", "--m", "10", "--side", "2", "-o", inst}).exit_code, 0);
  ASSERT_EQ(Udc({"render", inst, "--stage", "-o", Path("r.svg")}).exit_code, 0);
  EXPECT_EQ(ReadFileOrEmpty(Path("r.svg")).rfind("<svg", 0), 0u);
}

}  // namespace
}  // namespace udc
