// Runs the command-line tool as a subprocess and checks exit codes and
// output files.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string(MOMENTLAB_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("momentlab_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, EsdWritesCsvAndSidecar) {
  const fs::path out = dir_ / "esd.csv";
  EXPECT_EQ(run("esd --n 5,20 --reps 4 --seed 9 --out " + out.string()), 0);
  const std::string csv = slurp(out);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,replicate,ks,levy,levy_chebyshev,levy_bound,seed");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 9);
  const auto sidecar = nlohmann::json::parse(slurp(fs::path(out.string() + ".json")));
  EXPECT_EQ(sidecar.at("config").at("seed").get<int>(), 9);
  EXPECT_FALSE(sidecar.at("config").at("version").get<std::string>().empty());
  EXPECT_TRUE(sidecar.contains("summary"));
}

TEST_F(CliTest, JsonFormatWritesSingleDocument) {
  const fs::path out = dir_ / "moments.json";
  EXPECT_EQ(run("clt-moments --n 30 --k 2 --reps 50 --format json --out " + out.string()), 0);
  const auto doc = nlohmann::json::parse(slurp(out));
  EXPECT_EQ(doc.at("config").at("m").get<int>(), 2);
  EXPECT_FALSE(fs::exists(out.string() + ".json"));
}

TEST_F(CliTest, DeterministicAcrossThreadCounts) {
  const fs::path a = dir_ / "a.csv", b = dir_ / "b.csv";
  ASSERT_EQ(run("clt-roots --n 40 --m 3 --reps 200 --threads 1 --out " + a.string()), 0);
  ASSERT_EQ(run("clt-roots --n 40 --m 3 --reps 200 --threads 4 --out " + b.string()), 0);
  EXPECT_EQ(slurp(a), slurp(b));
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(run(""), 2);
  EXPECT_EQ(run("frobnicate"), 2);
  EXPECT_EQ(run("esd --reps 3"), 2);
  EXPECT_EQ(run("esd --n 5 --reps 0"), 2);
  EXPECT_EQ(run("esd --n x --reps 2"), 2);
  EXPECT_EQ(run("clt-roots --n 3 --m 4 --reps 10"), 2);
  EXPECT_EQ(run("esd --n 5 --reps 2 --format xml"), 2);
}

TEST_F(CliTest, UnwritableOutputExitsThree) {
  EXPECT_EQ(run("esd --n 5 --reps 2 --out " + (dir_ / "missing" / "x.csv").string()), 3);
}

// At m = n the deviation 4 sqrt(n)(X - x_m) is not centered, so the
// centering check fails with enough replicates.
TEST_F(CliTest, FailedCheckExitsOne) {
  EXPECT_EQ(run("clt-roots --n 3 --m 3 --reps 20000"), 1);
}
