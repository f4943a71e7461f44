#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

fs::path cache_dir() { return fs::temp_directory_path() / ("superlie-cli-test-" + std::to_string(::getpid())); }

Result run(const std::string& args) {
  std::string cmd = "SUPERLIE_CACHE_DIR='" + cache_dir().string() + "' '" SUPERLIE_CLI_PATH "' " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json run_json(const std::string& args, int expected_code = 0) {
  Result r = run("--no-timing " + args);
  EXPECT_EQ(r.code, expected_code) << args << "\n" << r.out;
  return nlohmann::json::parse(r.out);
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override { fs::remove_all(cache_dir()); }
  void TearDown() override { fs::remove_all(cache_dir()); }
};

}  // namespace

TEST_F(Cli, CharExamples) {
  auto lie = run_json("char lie 1 1");
  EXPECT_EQ(lie["status"], "pass");
  EXPECT_EQ(lie["payload"]["p"], "p_{11}");
  EXPECT_EQ(lie["payload"]["s"], "s_2 + s_{11}");
  EXPECT_EQ(run_json("char lie 2 0")["payload"]["s"], "s_{11}");
  auto higher = run_json("char higher --matrix '[ [1,1,2] ]'");
  EXPECT_EQ(higher["payload"]["s"], "2*s_{31} + 2*s_{211}");
  EXPECT_EQ(run_json("char bilie 1 1")["status"], "pass");
}

TEST_F(Cli, DimExamples) {
  EXPECT_EQ(run_json("dim 1 1 3")["payload"]["dim"], "9");
  EXPECT_EQ(run_json("dim 2 0 2")["payload"]["dim"], "1");
  auto oracle = run_json("dim 1 1 2 --oracle");
  EXPECT_EQ(oracle["payload"]["dim"], "4");
  EXPECT_EQ(oracle["payload"]["oracle"], "4");
  EXPECT_EQ(oracle["payload"]["match"], true);
}

TEST_F(Cli, CountExamples) {
  EXPECT_EQ(run_json("count '(2,1)' --mod 3 --res 1 --neg 0")["payload"]["count"], "1");
  EXPECT_EQ(run_json("count '(1)' --gf")["payload"]["generating_function"], "1 + t");
  EXPECT_EQ(run_json("count '(2)' --gf")["payload"]["generating_function"], "1 + t + q*t + q*t^2");
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("char lie x 1").code, 2);
  EXPECT_EQ(run("char higher --matrix '[[1,1]]'").code, 2);
  EXPECT_EQ(run("count '(2,1' --gf").code, 2);
  EXPECT_EQ(run("char lie 0 0").code, 3);
  EXPECT_EQ(run("count '(2,1)' --mod 0").code, 3);
  EXPECT_EQ(run("verify hook --max-n 99").code, 3);
  auto budget = run_json("count '(4,4)' --gf --budget 10", 4);
  EXPECT_EQ(budget["status"], "error");
  EXPECT_EQ(budget["payload"]["error"], "resource");
}

TEST_F(Cli, TextFormat) {
  Result r = run("--no-timing --format text dim 1 1 2 --oracle");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("dim         4"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("match       true"), std::string::npos) << r.out;
}

TEST_F(Cli, VerifySuites) {
  auto hook = run_json("verify hook --max-n 8");
  EXPECT_EQ(hook["status"], "pass");
  EXPECT_EQ(hook["payload"]["failed"], 0);
  EXPECT_GT(hook["payload"]["total"].get<int>(), 0);
  for (const auto& c : hook["payload"]["checks"]) EXPECT_EQ(c["status"], "pass");
  EXPECT_EQ(run_json("verify kw --max-total 8")["status"], "pass");
  EXPECT_EQ(run_json("verify all --profile quick")["status"], "pass");
}

TEST_F(Cli, CacheTransparency) {
  const std::string cmd = "--no-timing verify all --profile quick";
  Result cold = run(cmd);
  EXPECT_EQ(run("cache warm --n 8").code, 0);
  fs::path file = cache_dir() / "character_table.v1.jsonl";
  ASSERT_TRUE(fs::exists(file));
  Result warm = run(cmd);
  EXPECT_EQ(cold.code, 0);
  EXPECT_EQ(warm.out, cold.out);
  {
    std::ofstream out(file, std::ios::app);
    out << "[\"(1)\",\"(1)\",3]\n";
  }
  Result corrupt = run(cmd);
  EXPECT_EQ(corrupt.out, cold.out);
  EXPECT_EQ(run("cache clear").code, 0);
  EXPECT_FALSE(fs::exists(file));
  EXPECT_EQ(run(cmd).out, cold.out);
}
