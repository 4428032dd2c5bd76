#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <unistd.h>

#include "tvc/cli.hpp"
#include "tvc/text_io.hpp"

namespace tvc {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t file_count(const fs::path& dir) {
  return static_cast<std::size_t>(std::distance(fs::directory_iterator(dir), fs::directory_iterator{}));
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("tvc_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    ASSERT_EQ(run_cli({"synth", "--out", (dir_ / "s").string(), "--noise", "0.5"}).code, cli::kExitOk);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::vector<std::string> common(const std::string& cmd, const std::string& out) const {
    return {cmd, "--manifest", (dir_ / "s" / "manifest.txt").string(), "--input", (dir_ / "s" / "data.csv").string(),
            "--out", (dir_ / out).string()};
  }

  fs::path dir_;
};

TEST_F(Cli, SynthWritesThreeFiles) {
  EXPECT_EQ(file_count(dir_ / "s"), 3u);
  const std::string path = read_file(dir_ / "s" / "true_path.csv");
  EXPECT_EQ(path.substr(0, path.find('\n')), "interval_start,interval_end,alpha,beta_X1,beta_X2,beta_X3,beta_X4,beta_X5,beta_X6,beta_X7");
}

TEST_F(Cli, EachSubcommandWritesItsFiles) {
  const std::vector<std::pair<std::string, std::size_t>> expected{
      {"ingest", 1}, {"fit", 3}, {"decompose", 3}, {"reconstruct", 1}, {"report", 13}};
  for (const auto& [cmd, files] : expected) {
    const auto r = run_cli(common(cmd, cmd));
    EXPECT_EQ(r.code, cli::kExitOk) << cmd << ": " << r.err;
    EXPECT_EQ(file_count(dir_ / cmd), files) << cmd;
  }
  const std::string table = read_file(dir_ / "report" / "table.csv");
  EXPECT_NE(table.find("Total"), std::string::npos);
  EXPECT_EQ(std::count(table.begin(), table.end(), '\n'), 12);
}

TEST_F(Cli, ReportIsByteDeterministic) {
  auto a = common("report", "a");
  auto b = common("report", "b");
  b.insert(b.end(), {"--threads", "3"});
  ASSERT_EQ(run_cli(a).code, 0);
  ASSERT_EQ(run_cli(b).code, 0);
  for (const auto& entry : fs::directory_iterator(dir_ / "a")) {
    EXPECT_EQ(read_file(entry.path()), read_file(dir_ / "b" / entry.path().filename())) << entry.path();
  }
}

TEST_F(Cli, GammaComponentByCodeOrIndex) {
  auto by_code = common("decompose", "code");
  by_code.insert(by_code.end(), {"--gamma-component", "X3"});
  auto by_index = common("decompose", "index");
  by_index.insert(by_index.end(), {"--gamma-component", "3"});
  ASSERT_EQ(run_cli(by_code).code, 0);
  ASSERT_EQ(run_cli(by_index).code, 0);
  EXPECT_EQ(read_file(dir_ / "code" / "gamma.csv"), read_file(dir_ / "index" / "gamma.csv"));
  auto bad = common("decompose", "bad");
  bad.insert(bad.end(), {"--gamma-component", "X99"});
  EXPECT_EQ(run_cli(bad).code, cli::kExitData);
}

TEST_F(Cli, ReportYearOutsidePanel) {
  auto args = common("report", "r");
  args.insert(args.end(), {"--report-year", "1980"});
  const auto r = run_cli(args);
  EXPECT_EQ(r.code, cli::kExitData);
  EXPECT_NE(r.err.find("1980"), std::string::npos);
}

TEST_F(Cli, MissingCellIsADataErrorNamingTheCell) {
  std::string data = read_file(dir_ / "s" / "data.csv");
  const std::string victim = "C03,2001,X4,";
  const auto pos = data.find(victim);
  ASSERT_NE(pos, std::string::npos);
  data.erase(pos, data.find('\n', pos) - pos + 1);
  write_file(dir_ / "s" / "data.csv", data);
  const auto r = run_cli(common("fit", "f"));
  EXPECT_EQ(r.code, cli::kExitData);
  EXPECT_NE(r.err.find("C03"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("2001"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("X4"), std::string::npos) << r.err;
  EXPECT_EQ(r.err.rfind("error[data]", 0), 0u);
}

TEST_F(Cli, RankDeficientIsANumericalError) {
  // make X5 identical across countries in 2010
  std::string data = read_file(dir_ / "s" / "data.csv");
  std::istringstream in(data);
  std::string line, rewritten;
  while (std::getline(in, line)) {
    if (line.find(",2010,X5,") != std::string::npos) line = line.substr(0, line.rfind(',') + 1) + "42";
    rewritten += line + "\n";
  }
  write_file(dir_ / "s" / "data.csv", rewritten);
  const auto r = run_cli(common("fit", "f"));
  EXPECT_EQ(r.code, cli::kExitNumerical);
  EXPECT_NE(r.err.find("2010->2011"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("X5"), std::string::npos) << r.err;
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"bogus"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"fit", "--manifest", (dir_ / "s" / "manifest.txt").string()}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"fit", "--manifest", (dir_ / "nope.txt").string(), "--input", "x"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"synth", "--noise", "-1"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"--help"}).code, cli::kExitOk);
}

TEST_F(Cli, InvalidSynthSpecIsADataError) {
  EXPECT_EQ(run_cli({"synth", "--out", (dir_ / "x").string(), "--countries", "5", "--vars", "7"}).code, cli::kExitData);
}

TEST_F(Cli, BinaryExitCodes) {
  const std::string bin = TVC_CLI_BINARY;
  const auto status = [](const std::string& cmd) {
    const int s = std::system((cmd + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(s);
  };
  EXPECT_EQ(status(bin + " --help"), 0);
  EXPECT_EQ(status(bin + " report --bogus"), 1);
  EXPECT_EQ(status(bin + " synth --out " + (dir_ / "bin").string() + " --countries 3 --vars 3"), 2);
  std::string cmd = bin;
  for (const auto& a : common("report", "binout")) cmd += " '" + a + "'";
  EXPECT_EQ(status(cmd), 0);
  EXPECT_EQ(file_count(dir_ / "binout"), 13u);
}

}  // namespace
}  // namespace tvc
