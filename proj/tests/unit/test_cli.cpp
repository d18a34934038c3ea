#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

#include "preorder/instance_io.hpp"
#include "preorder/partial.hpp"
#include "preorder_cli/cli.hpp"
#include "support.hpp"

namespace preorder {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "preorder-cli");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  return lines;
}

std::vector<std::string> fields_of(const std::string& line) {
  std::vector<std::string> f;
  std::istringstream in(line);
  for (std::string s; std::getline(in, s, ',');) f.push_back(s);
  if (!line.empty() && line.back() == ',') f.emplace_back();
  return f;
}

/// Row with the timing columns blanked.
std::string without_timings(const std::string& line) {
  const auto cols = cli::stats_columns();
  auto f = fields_of(line);
  std::string s;
  for (std::size_t k = 0; k < f.size(); ++k) {
    const bool timing = k < cols.size() && cols[k].size() >= 2 && cols[k].substr(cols[k].size() - 2) == "ns";
    s += (timing ? std::string("-") : f[k]) + ",";
  }
  return s;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("preorder_cli_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write_fig1() {
    const fs::path p = dir_ / "fig1.csv";
    save_instance(testing::worked_instance(), p);
    return p;
  }

  fs::path dir_;
};

TEST_F(CliTest, StatsColumnsAreStable) {
  const std::string golden =
      "instance,n,pairs,alpha,edge_density,truth_seed,value_seed,rounds,zeros,ones,percent_fixed,total_ns,"
      "directed-cut_zeros,directed-cut_ones,directed-cut_ns,edge-cut_zeros,edge-cut_ones,edge-cut_ns,"
      "boecker-strong_zeros,boecker-strong_ones,boecker-strong_ns,edge-join_zeros,edge-join_ones,edge-join_ns,"
      "subset_zeros,subset_ones,subset_ns,boecker-weak_zeros,boecker-weak_ones,boecker-weak_ns";
  std::string joined;
  for (const auto& c : cli::stats_columns()) joined += (joined.empty() ? "" : ",") + c;
  EXPECT_EQ(joined, golden);
}

TEST_F(CliTest, GenerateDefaultEnsembleShape) {
  const CliRun r = run({"generate", "--n", "20", "--alpha", "0.25", "--pe", "0.5", "--out", dir_.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(dir_)) files += e.path().filename() != "manifest.csv" ? 1 : 0;
  EXPECT_EQ(files, 100u);
  EXPECT_EQ(lines_of(slurp(dir_ / "manifest.csv")).size(), 101u);
}

TEST_F(CliTest, GenerateOverrideAndDeterminism) {
  const fs::path a = dir_ / "a";
  const fs::path b = dir_ / "b";
  for (const fs::path& d : {a, b}) {
    const CliRun r = run({"generate", "--n", "6", "--alpha", "0.3", "--pe", "0.4", "--count", "4", "--truths", "2",
                       "--seed", "9", "--out", d.string()});
    ASSERT_EQ(r.code, 0) << r.err;
  }
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(a)) {
    ++files;
    EXPECT_EQ(slurp(e.path()), slurp(b / e.path().filename()));
  }
  EXPECT_EQ(files, 5u);
  const auto manifest = lines_of(slurp(a / "manifest.csv"));
  ASSERT_EQ(manifest.size(), 5u);
  EXPECT_EQ(fields_of(manifest[1])[4], fields_of(manifest[2])[4]);
  EXPECT_NE(fields_of(manifest[1])[4], fields_of(manifest[3])[4]);
}

TEST_F(CliTest, GenerateUsageErrors) {
  EXPECT_EQ(run({"generate", "--n", "6", "--alpha", "0.3", "--pe", "0.4", "--count", "5", "--truths", "2", "--out",
                 dir_.string()})
                .code,
            cli::kUsage);
  EXPECT_EQ(run({"generate", "--n", "6", "--alpha", "2", "--pe", "0.4", "--out", dir_.string()}).code, cli::kUsage);
  EXPECT_EQ(run({"generate", "--n", "6"}).code, cli::kUsage);
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

TEST_F(CliTest, FixWorkedExampleRow) {
  const CliRun r = run({"fix", write_fig1().string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 2u);
  const auto f = fields_of(lines[1]);
  ASSERT_EQ(f.size(), cli::stats_columns().size());
  EXPECT_EQ(f[0], "fig1");
  EXPECT_EQ(f[1], "5");
  EXPECT_EQ(f[2], "20");
  // Regression pin for the default pipeline.
  EXPECT_EQ(f[10], "60");
  EXPECT_NE(r.err.find("median=60"), std::string::npos);
}

TEST_F(CliTest, DirectedCutOnPositiveInstanceFixesNothing) {
  Instance inst(4);
  for (Element p = 0; p < 4; ++p) {
    for (Element q = 0; q < 4; ++q) {
      if (p != q) inst.set_value(p, q, 1.0 + p);
    }
  }
  save_instance(inst, dir_ / "pos.csv");
  const CliRun r = run({"fix", (dir_ / "pos.csv").string(), "--conditions", "directed-cut"});
  ASSERT_EQ(r.code, 0);
  const auto f = fields_of(lines_of(r.out)[1]);
  EXPECT_EQ(f[8], "0");
  EXPECT_EQ(f[9], "0");
}

TEST_F(CliTest, BatchAppendAndQuantiles) {
  ASSERT_EQ(run({"generate", "--n", "8", "--alpha", "0.5", "--pe", "0.5", "--out", dir_.string()}).code, 0);
  std::vector<std::string> args{"fix"};
  for (const auto& e : fs::directory_iterator(dir_)) args.push_back(e.path().string());
  const fs::path stats = dir_ / "stats" / "out.csv";
  fs::create_directories(stats.parent_path());
  args.push_back("--out");
  args.push_back(stats.string());
  const CliRun first = run(args);
  ASSERT_EQ(first.code, 0) << first.err;
  EXPECT_NE(first.out.find("median="), std::string::npos);
  EXPECT_NE(first.out.find("instances=100"), std::string::npos);
  EXPECT_EQ(lines_of(slurp(stats)).size(), 101u);
  const auto row = fields_of(lines_of(slurp(stats))[1]);
  EXPECT_EQ(row[3], "0.5");
  EXPECT_FALSE(row[5].empty());
  ASSERT_EQ(run({"fix", args[1], "--out", stats.string()}).code, 0);
  const auto lines = lines_of(slurp(stats));
  EXPECT_EQ(lines.size(), 102u);
  EXPECT_EQ(std::count(lines.begin(), lines.end(), lines[0]), 1);
}

TEST_F(CliTest, RejectsForeignStatsFile) {
  const fs::path stats = dir_ / "stats.csv";
  std::ofstream(stats) << "something,else\n";
  EXPECT_EQ(run({"fix", write_fig1().string(), "--out", stats.string()}).code, cli::kDataError);
}

TEST_F(CliTest, DeterministicAcrossRunsAndThreads) {
  ASSERT_EQ(run({"generate", "--n", "9", "--alpha", "0.6", "--pe", "0.5", "--count", "10", "--truths", "2", "--out",
                 dir_.string()})
                .code,
            0);
  std::vector<std::string> args{"fix"};
  for (const auto& e : fs::directory_iterator(dir_)) args.push_back(e.path().string());
  std::sort(args.begin() + 1, args.end());
  auto one = args;
  one.insert(one.end(), {"--threads", "1"});
  auto four = args;
  four.insert(four.end(), {"--threads", "4"});
  const auto a = lines_of(run(one).out);
  const auto b = lines_of(run(one).out);
  const auto c = lines_of(run(four).out);
  ASSERT_EQ(a.size(), 11u);
  ASSERT_EQ(a.size(), b.size());
  ASSERT_EQ(a.size(), c.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(without_timings(a[k]), without_timings(b[k]));
    EXPECT_EQ(without_timings(a[k]), without_timings(c[k]));
  }
}

TEST_F(CliTest, EmitPartial) {
  const fs::path out = dir_ / "partials";
  ASSERT_EQ(run({"fix", write_fig1().string(), "--emit-partial", out.string()}).code, 0);
  const PartialAssignment x = load_partial(out / "fig1.partial.csv");
  EXPECT_EQ(x.size(), 5u);
  EXPECT_EQ(x.decided_count(), 12u);
  EXPECT_TRUE(is_consistent(x));
}

TEST_F(CliTest, DataErrors) {
  std::ofstream(dir_ / "bad.csv") << "n=2\np,q,c\n0,0,1\n";
  EXPECT_EQ(run({"fix", (dir_ / "bad.csv").string()}).code, cli::kDataError);
  EXPECT_EQ(run({"fix", (dir_ / "missing.csv").string()}).code, cli::kDataError);
  EXPECT_EQ(run({"fix", write_fig1().string(), "--conditions", "bogus"}).code, cli::kUsage);
  EXPECT_EQ(run({"fix", write_fig1().string(), "--rounds", "0"}).code, cli::kUsage);
}

TEST_F(CliTest, FixEgoNetwork) {
  std::ofstream(dir_ / "ego.txt") << "# follows\na b\nb c\nc a\nd a\n";
  const CliRun r = run({"fix", "--ego", (dir_ / "ego.txt").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(fields_of(lines_of(r.out)[1])[1], "4");
}

TEST_F(CliTest, OracleCheck) {
  const fs::path fig1 = write_fig1();
  const CliRun pass = run({"oracle-check", fig1.string()});
  EXPECT_EQ(pass.code, 0) << pass.err;
  EXPECT_NE(pass.out.find("pass value=10"), std::string::npos);
  EXPECT_NE(pass.out.find("witness:"), std::string::npos);

  // i -> j is in every optimum.
  std::ofstream(dir_ / "bad.partial.csv") << "n=5\np,q,x\n0,1,0\n";
  const CliRun fail = run({"oracle-check", fig1.string(), "--partial", (dir_ / "bad.partial.csv").string()});
  EXPECT_EQ(fail.code, cli::kInconsistency);
  EXPECT_NE(fail.err.find("x(0,1)=0"), std::string::npos);

  save_instance(Instance(7), dir_ / "seven.csv");
  EXPECT_EQ(run({"oracle-check", (dir_ / "seven.csv").string()}).code, cli::kUsage);
}

TEST(Quantile, LinearInterpolation) {
  EXPECT_EQ(cli::quantile({3, 1, 2}, 0.5), 2.0);
  EXPECT_EQ(cli::quantile({1, 2, 3, 4}, 0.5), 2.5);
  EXPECT_EQ(cli::quantile({1, 2, 3, 4, 5}, 0.25), 2.0);
  EXPECT_EQ(cli::quantile({7}, 0.75), 7.0);
  EXPECT_THROW(cli::quantile({}, 0.5), std::invalid_argument);
}

}  // namespace
}  // namespace preorder
