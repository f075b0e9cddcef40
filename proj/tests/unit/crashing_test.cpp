#include "crashlab/crashing.hpp"

#include "brute.hpp"
#include "crashlab/errors.hpp"
#include "crashlab/generators.hpp"
#include "crashlab/oracle.hpp"
#include "gtest/gtest.h"

namespace crashlab {
namespace {

using Ids = std::set<std::string>;

gen::RandomNetSpec suite_spec(std::uint64_t seed, bool convex = false) {
  gen::RandomNetSpec spec;
  spec.node_count = 2 + static_cast<int>(seed % 4);
  spec.edge_count = std::min(8, spec.node_count - 1 + static_cast<int>(seed % 6));
  spec.max_normal_len = 4;
  spec.max_crashable = 2;
  spec.convex = convex;
  spec.seed = seed * 7919 + 3;
  return spec;
}

TEST(OneCrash, Fig2Steps) {
  auto fig2 = gen::fig2_network();
  auto first = optimal_one_crash(fig2);
  EXPECT_EQ(first.plan, (Plan{{{"j3", 1}}}));
  EXPECT_EQ(first.cost, Rational(9));

  auto second = optimal_one_crash(apply_plan(fig2, first.plan));
  EXPECT_EQ(second.plan, (Plan{{{"j1", 1}, {"j2", 1}}}));
  EXPECT_EQ(second.cost, Rational(19));
}

TEST(OneCrash, SingleEdge) {
  auto net = NetworkBuilder().linear_edge("e", "s", "t", 1, 3, 5).build("s", "t");
  auto r = optimal_one_crash(net);
  EXPECT_EQ(r.plan, (Plan{{{"e", 1}}}));
  EXPECT_EQ(r.cost, Rational(5));
}

TEST(OneCrash, NotCrashable) {
  auto net = NetworkBuilder().linear_edge("e", "s", "t", 3, 3, 5).build("s", "t");
  EXPECT_THROW(optimal_one_crash(net), NotCrashableError);
}

TEST(GreedyCrash, Fig2) {
  auto r = greedy_crash(gen::fig2_network(), 2);
  EXPECT_EQ(r.total_cost, Rational(28));
  ASSERT_EQ(r.steps.size(), 2u);
  EXPECT_EQ(r.steps[0].cut, (Ids{"j3"}));
  EXPECT_EQ(r.steps[1].cut, (Ids{"j1", "j2"}));
  EXPECT_EQ(r.initial_duration, 9);
  EXPECT_EQ(r.durations, (std::vector<int>{8, 7}));
}

TEST(GreedyCrash, ReportsFailingIteration) {
  auto fig2 = gen::fig2_network();
  try {
    greedy_crash(fig2, k_max(fig2) + 1);
    FAIL() << "expected NotCrashableError";
  } catch (const NotCrashableError& e) {
    EXPECT_EQ(e.iteration(), k_max(fig2) + 1);
  }
}

TEST(GreedyCrash, RandomProperties) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    auto net = gen::random_network(suite_spec(seed, seed % 3 == 0));
    const int kmax = k_max(net);
    if (kmax == 0) {
      EXPECT_THROW(greedy_crash(net, 1), NotCrashableError);
      continue;
    }
    auto one = greedy_crash(net, 1);
    auto single = optimal_one_crash(net);
    EXPECT_EQ(one.plan, single.plan);
    EXPECT_EQ(one.total_cost, single.cost);

    auto r = greedy_crash(net, kmax);
    Plan acc;
    for (int i = 0; i < kmax; ++i) {
      acc = acc.merged(Plan::from_edges(r.steps[static_cast<std::size_t>(i)].cut));
      ASSERT_EQ(duration(apply_plan(net, acc)), r.initial_duration - (i + 1)) << "seed " << seed;
    }
    EXPECT_EQ(acc, r.plan);
    EXPECT_EQ(plan_cost(net, r.plan), r.total_cost);
  }
}

// Greedy against an enumeration of every plan, independent of the oracle
// module.
TEST(GreedyCrash, HarmonicBoundAgainstEnumeration) {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    auto net = gen::random_network(suite_spec(seed, seed % 2 == 1));
    for (int k = 1; k <= std::min(3, k_max(net)); ++k) {
      auto opt = brute::crash_cost(net, k);
      ASSERT_TRUE(opt.has_value());
      auto greedy = greedy_crash(net, k).total_cost;
      ASSERT_LE(greedy, harmonic(k) * *opt) << "seed " << seed << " k " << k;
      ASSERT_GE(greedy, *opt);
      // Any k-crashing plan costs at least k cheapest 1-crashes.
      ASSERT_GE(*opt, k * optimal_one_crash(net).cost);
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(Decompose, Fig2OptimalPlan) {
  auto fig2 = gen::fig2_network();
  auto trace = decompose(fig2, Plan{{{"j1", 1}, {"j5", 1}}}, 2);
  ASSERT_EQ(trace.levels.size(), 2u);
  EXPECT_EQ(trace.levels[0].cut_cost, Rational(10));
  EXPECT_EQ(trace.levels[1].cut_cost, Rational(10));
  Ids both;
  both.insert(trace.levels[0].cut.begin(), trace.levels[0].cut.end());
  both.insert(trace.levels[1].cut.begin(), trace.levels[1].cut.end());
  EXPECT_EQ(both, (Ids{"j1", "j5"}));
  EXPECT_EQ(trace.levels[0].cut.size(), 1u);

  auto report = verify_trace(trace);
  EXPECT_TRUE(report.all_passed());
  for (const auto& f : report.failures()) ADD_FAILURE() << f.name << " " << f.detail;
}

TEST(Decompose, SingleLevel) {
  auto fig2 = gen::fig2_network();
  auto trace = decompose(fig2, Plan{{{"j1", 1}, {"j3", 1}}}, 1);
  ASSERT_EQ(trace.levels.size(), 1u);
  EXPECT_EQ(trace.levels[0].cut, (Ids{"j3"}));
  EXPECT_EQ(trace.levels[0].cut_cost, Rational(9));
  EXPECT_TRUE(verify_trace(trace).all_passed());
}

TEST(Decompose, Errors) {
  auto fig2 = gen::fig2_network();
  try {
    decompose(fig2, Plan{{{"j3", 1}}}, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotKCrashing);
  }
  try {
    decompose(fig2, Plan{{{"j3", 5}}}, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPlanOutOfBounds);
  }
  auto convex = NetworkBuilder().edge("e", "s", "t", 1, 3, CostSchedule({1, 2})).build("s", "t");
  try {
    decompose(convex, Plan{{{"e", 1}}}, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConvexNotSupported);
  }
}

TEST(Decompose, RandomOptimalPlans) {
  int traced = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto net = gen::random_network(suite_spec(seed));
    for (int k = 1; k <= std::min(3, k_max(net)); ++k) {
      auto opt = oracle::exact_crash_cost(net, k);
      auto report = verify_trace(decompose(net, opt.plan, k));
      for (const auto& f : report.failures()) {
        ADD_FAILURE() << "seed " << seed << " k " << k << ": " << f.name << " at level " << f.level
                      << " " << f.detail;
      }
      ++traced;
    }
  }
  EXPECT_GT(traced, 150);
}

}  // namespace
}  // namespace crashlab
