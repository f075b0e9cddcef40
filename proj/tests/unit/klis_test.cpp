#include "crashlab/klis.hpp"

#include "brute.hpp"
#include "crashlab/errors.hpp"
#include "crashlab/generators.hpp"
#include "crashlab/oracle.hpp"
#include "gtest/gtest.h"

namespace crashlab {
namespace {

const Sequence kExample{3, 4, 5, 8, 9, 1, 6, 7, 8, 9};

std::vector<Value> values_at(const Sequence& seq, const IndexList& idx) {
  std::vector<Value> out;
  for (auto i : idx) out.push_back(seq[i]);
  return out;
}

TEST(Lis, Example) {
  auto idx = lis(kExample);
  EXPECT_EQ(values_at(kExample, idx), (std::vector<Value>{3, 4, 5, 6, 7, 8, 9}));
  EXPECT_TRUE(lis(Sequence{}).empty());
  EXPECT_EQ(lis(Sequence{1, 2, 3}).size(), 3u);
  EXPECT_EQ(lis(Sequence{3, 2, 1}).size(), 1u);
}

TEST(Lis, CanonicalIsLexicographicallySmallest) {
  EXPECT_EQ(lis(Sequence{2, 1, 3}), (IndexList{0, 2}));
  EXPECT_EQ(lis(Sequence{2, 1, 3}, TieBreak::kLatest), (IndexList{1, 2}));
  EXPECT_EQ(lis(Sequence{1, 1, 1}), (IndexList{0}));
  EXPECT_EQ(lis(Sequence{1, 1, 1}, TieBreak::kLatest), (IndexList{2}));
}

TEST(Lis, RandomAgainstReferences) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    auto seq = gen::random_sequence(static_cast<int>(seed % 13), 1 + static_cast<int>(seed % 9), seed);
    const int want = oracle::exact_lis_length(seq);
    ASSERT_EQ(want, brute::lis_length(seq));
    for (auto policy : {TieBreak::kCanonical, TieBreak::kLatest}) {
      auto idx = lis(seq, policy);
      ASSERT_EQ(static_cast<int>(idx.size()), want) << "seed " << seed;
      ASSERT_TRUE(is_increasing_subsequence(seq, idx));
    }
  }
}

TEST(GreedyKlis, Example) {
  auto sel = greedy_klis(kExample, 2);
  EXPECT_EQ(sel.total_length, 9u);
  EXPECT_EQ(selection_values(kExample, sel),
            (std::vector<std::vector<Value>>{{3, 4, 5, 6, 7, 8, 9}, {8, 9}}));
  EXPECT_TRUE(is_valid_selection(kExample, sel));

  auto one = greedy_klis(kExample, 1);
  ASSERT_EQ(one.rounds.size(), 1u);
  EXPECT_EQ(one.rounds[0], lis(kExample));
}

TEST(GreedyKlis, RandomProperties) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto seq = gen::random_sequence(12, 9, seed);
    for (int k = 1; k <= 4; ++k) {
      for (auto policy : {TieBreak::kCanonical, TieBreak::kLatest}) {
        auto sel = greedy_klis(seq, k, policy);
        ASSERT_TRUE(is_valid_selection(seq, sel));
        ASSERT_EQ(sel.rounds.size(), static_cast<std::size_t>(k));
        for (std::size_t r = 1; r < sel.rounds.size(); ++r) {
          ASSERT_GE(sel.rounds[r - 1].size(), sel.rounds[r].size()) << "seed " << seed;
        }
      }
    }
  }
}

// |A_x| >= |r_{x-1}(L_i)|: each greedy round is at least as long as what is
// left of any optimal part.
TEST(GreedyKlis, PerRoundBound) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto seq = gen::random_sequence(11, 8, seed + 1000);
    for (int k = 2; k <= 3; ++k) {
      auto opt = oracle::exact_klis(seq, k);
      auto sel = greedy_klis(seq, k, seed % 2 ? TieBreak::kLatest : TieBreak::kCanonical);
      std::vector<bool> removed(seq.size(), false);
      for (const auto& round : sel.rounds) {
        for (const auto& part : opt.rounds) {
          std::size_t left = 0;
          for (auto i : part) left += removed[i] ? 0 : 1;
          ASSERT_GE(round.size(), left) << "seed " << seed << " k " << k;
        }
        for (auto i : round) removed[i] = true;
      }
    }
  }
}

TEST(GreedyKlis, RatioBound) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto seq = gen::random_sequence(1 + static_cast<int>(seed % 12), 9, seed + 77);
    for (int k = 1; k <= 3; ++k) {
      const auto opt = oracle::exact_klis(seq, k).total_length;
      for (auto policy : {TieBreak::kCanonical, TieBreak::kLatest}) {
        const auto greedy = greedy_klis(seq, k, policy).total_length;
        ASSERT_GE(Rational(greedy), klis_ratio_bound(k) * opt) << "seed " << seed;
      }
    }
  }
}

TEST(Scripted, SmallMatrix) {
  Sequence seq{1, 2, 1, 2};
  auto sel = greedy_klis_scripted(seq, 2, {{0, 3}, {2}});
  EXPECT_EQ(sel.total_length, 3u);
  EXPECT_EQ(brute::klis_total(seq, 2), 4);
}

TEST(Scripted, MatrixK3) {
  auto inst = gen::matrix_sequence({3});
  EXPECT_EQ(greedy_klis_scripted(inst.sequence, 3, inst.script).total_length, 7u);
}

TEST(Scripted, Errors) {
  try {
    greedy_klis_scripted(kExample, 1, {{5}});
    FAIL();
  } catch (const ScriptNotMaximalError& e) {
    EXPECT_EQ(e.round(), 1);
    EXPECT_EQ(e.lis_length(), 7u);
  }
  try {
    greedy_klis_scripted(kExample, 1, {{4, 3}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kScriptNotIncreasing);
  }
  // Reusing a removed position.
  try {
    greedy_klis_scripted(Sequence{1, 2}, 2, {{0, 1}, {1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kScriptNotIncreasing);
  }
  EXPECT_THROW(greedy_klis_scripted(kExample, 2, {{0}}), std::invalid_argument);
}

}  // namespace
}  // namespace crashlab
