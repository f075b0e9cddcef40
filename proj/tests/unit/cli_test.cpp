#include "crashlab_cli/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "crashlab/experiment.hpp"
#include "gtest/gtest.h"
#include "nlohmann/json.hpp"

namespace crashlab::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("crashlab_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
    fig2_ = path("fig2.json");
    write(fig2_, run({"gen", "fig2"}).out);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  static void write(const std::string& p, const std::string& text) { std::ofstream(p) << text; }
  static std::string read(const std::string& p) {
    std::ifstream f(p);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
  }

  fs::path dir_;
  std::string fig2_;
};

TEST_F(CliTest, CrashGreedy) {
  auto r = run({"crash", "-k", "2", "--input", fig2_});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto doc = json::parse(r.out);
  EXPECT_EQ(doc["total_cost"], "28");
  EXPECT_EQ(doc["steps"][0]["cut"], json::parse(R"(["j3"])"));
}

TEST_F(CliTest, CrashExact) {
  auto r = run({"crash", "-k", "2", "--exact", "--input", fig2_});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto doc = json::parse(r.out);
  EXPECT_EQ(doc["cost"], "20");
  EXPECT_EQ(doc["plan"]["amounts"], json::parse(R"({"j1": 1, "j5": 1})"));
}

TEST_F(CliTest, CrashTrace) {
  auto r = run({"crash", "-k", "2", "--exact", "--trace", "--input", fig2_});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto doc = json::parse(r.out);
  EXPECT_TRUE(doc["verification"]["all_passed"].get<bool>());
  EXPECT_EQ(doc["trace"]["levels"].size(), 2u);

  write(path("plan.json"), R"({"amounts": {"j3": 1}})");
  auto bad = run({"crash", "-k", "2", "--trace", "--plan", path("plan.json"), "--input", fig2_});
  EXPECT_EQ(bad.code, kExitInfeasible);
}

TEST_F(CliTest, CrashErrors) {
  auto r = run({"crash", "-k", "99", "--input", fig2_});
  EXPECT_EQ(r.code, kExitInfeasible);
  EXPECT_NE(r.err.find("NotCrashable"), std::string::npos);
  EXPECT_EQ(run({"crash", "-k", "99", "--exact", "--input", fig2_}).code, kExitInfeasible);
  EXPECT_EQ(run({"crash", "-k", "2", "--input", path("missing.json")}).code, kExitInput);
  write(path("bad.json"), "{not json");
  EXPECT_EQ(run({"crash", "-k", "2", "--input", path("bad.json")}).code, kExitInput);
  write(path("cyc.json"), R"({"nodes": ["s","t"], "source": "s", "sink": "t", "edges": [
      {"id": "e", "from": "s", "to": "t", "a": 1, "b": 2, "c": 1},
      {"id": "f", "from": "t", "to": "s", "a": 1, "b": 2, "c": 1}]})");
  EXPECT_EQ(run({"crash", "-k", "1", "--input", path("cyc.json")}).code, kExitInput);
  EXPECT_EQ(run({"crash", "-k", "2", "--exact", "--budget", "5", "--input", fig2_}).code,
            kExitInput);
  EXPECT_EQ(run({"crash", "--input", fig2_}).code, kExitInput);
  EXPECT_EQ(run({"bogus"}).code, kExitInput);
}

TEST_F(CliTest, Klis) {
  auto greedy = run({"klis", "-k", "2"}, "3,4,5,8,9,1,6,7,8,9\n");
  ASSERT_EQ(greedy.code, kExitOk) << greedy.err;
  EXPECT_EQ(json::parse(greedy.out)["total"], 9);

  write(path("seq.txt"), "3 4 5 8 9 1 6 7 8 9\n");
  auto exact = run({"klis", "-k", "2", "--exact", "--input", path("seq.txt")});
  ASSERT_EQ(exact.code, kExitOk);
  EXPECT_EQ(json::parse(exact.out)["total"], 10);

  auto one = run({"klis", "-k", "1"}, "3,4,5,8,9,1,6,7,8,9");
  EXPECT_EQ(json::parse(one.out)["total"], 7);

  EXPECT_EQ(run({"klis", "-k", "2"}, "1 x 3").code, kExitInput);
  EXPECT_EQ(run({"klis", "-k", "2", "--policy", "odd"}, "1 2").code, kExitInput);
}

TEST_F(CliTest, KlisScript) {
  auto gen = run({"gen", "matrix", "-k", "4", "--script-out", path("script.json")});
  ASSERT_EQ(gen.code, kExitOk);
  write(path("m4.txt"), gen.out);
  auto r = run({"klis", "-k", "4", "--input", path("m4.txt"), "--script", path("script.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(json::parse(r.out)["total"], 12);

  write(path("short.json"), R"({"rounds": [[0]]})");
  auto not_max = run({"klis", "-k", "1", "--script", path("short.json")}, "1 2 3");
  EXPECT_EQ(not_max.code, kExitScript);
  write(path("dec.json"), R"({"rounds": [[1, 0]]})");
  EXPECT_EQ(run({"klis", "-k", "1", "--script", path("dec.json")}, "1 2").code, kExitScript);
  EXPECT_EQ(run({"klis", "-k", "2", "--script", path("dec.json")}, "1 2").code, kExitScript);
}

TEST_F(CliTest, LisAndGenerators) {
  auto r = run({"lis"}, "3,4,5,8,9,1,6,7,8,9");
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(json::parse(r.out)["values"], json::parse("[3,4,5,6,7,8,9]"));

  EXPECT_EQ(run({"gen", "matrix", "-k", "3"}).out, "1,2,1,3,2,1,3,2,3\n");
  auto dag = run({"gen", "random-dag", "--nodes", "5", "--edges", "8", "--seed", "7"});
  ASSERT_EQ(dag.code, kExitOk);
  EXPECT_EQ(json::parse(dag.out)["edges"].size(), 8u);
  auto seq = run({"gen", "random-seq", "-n", "12", "--range", "9", "--seed", "3"});
  EXPECT_EQ(seq.code, kExitOk);
  EXPECT_EQ(std::count(seq.out.begin(), seq.out.end(), ','), 11);
  EXPECT_EQ(run({"gen", "random-dag", "--nodes", "1"}).code, kExitInput);
  EXPECT_EQ(run({"gen"}).code, kExitInput);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST_F(CliTest, ExperimentCsv) {
  auto r = run({"experiment", "--problem", "crashing", "--trials", "200", "-k", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line.rfind("# problem=crashing", 0), 0u);
  std::getline(lines, line);
  std::getline(lines, line);
  EXPECT_EQ(line, "instance,seed,k,greedy,opt,ratio,bound,ok");
  int rows = 0;
  while (std::getline(lines, line)) {
    if (line.rfind("summary", 0) == 0) break;
    EXPECT_EQ(line.find(",false"), std::string::npos) << line;
    ++rows;
  }
  EXPECT_EQ(rows, 200);

  EXPECT_EQ(run({"experiment", "--problem", "crashing", "--trials", "200", "-k", "2"}).out, r.out);

  auto out = path("klis.csv");
  auto k = run({"experiment", "--problem", "klis", "--trials", "200", "-k", "2", "--output", out});
  ASSERT_EQ(k.code, kExitOk);
  EXPECT_NE(read(out).find("summary,"), std::string::npos);

  EXPECT_EQ(run({"experiment", "--problem", "nope"}).code, kExitInput);
  EXPECT_EQ(run({"experiment", "--trials", "0"}).code, kExitInput);
}

TEST(Experiment, RecordsAndBounds) {
  experiment::ExperimentConfig cfg;
  cfg.problem = experiment::Problem::kKlis;
  cfg.trials = 200;
  cfg.k = 2;
  auto res = experiment::run_experiment(cfg);
  ASSERT_EQ(res.records.size(), 200u);
  EXPECT_TRUE(res.all_satisfied);
  for (const auto& rec : res.records) {
    ASSERT_TRUE(rec.ratio.has_value());
    EXPECT_GE(*rec.ratio, Rational(3, 4));
  }

  cfg.problem = experiment::Problem::kCrashing;
  res = experiment::run_experiment(cfg);
  EXPECT_TRUE(res.all_satisfied);
  for (const auto& rec : res.records) {
    if (rec.ratio) EXPECT_LE(*rec.ratio, Rational(3, 2));
  }

  cfg.problem = experiment::Problem::kKlisMatrix;
  cfg.k = 6;
  res = experiment::run_experiment(cfg);
  ASSERT_EQ(res.records.size(), 5u);
  for (const auto& rec : res.records) {
    const int k = rec.k;
    EXPECT_EQ(*rec.ratio, Rational((3 * k * k + 3) / 4, k * k)) << "k " << k;
  }
}

TEST(Experiment, SkipsOverBudget) {
  experiment::ExperimentConfig cfg;
  cfg.problem = experiment::Problem::kKlis;
  cfg.trials = 3;
  cfg.budget.max_states = 10;
  auto res = experiment::run_experiment(cfg);
  for (const auto& rec : res.records) {
    EXPECT_EQ(rec.status, experiment::RecordStatus::kSkippedBudget);
  }
  EXPECT_TRUE(res.all_satisfied);
}

}  // namespace
}  // namespace crashlab::cli
