#pragma once

// Ratio experiments: greedy value against the exact oracle on seeded random
// instances, one CSV row per trial.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "crashlab/generators.hpp"
#include "crashlab/klis.hpp"
#include "crashlab/oracle.hpp"
#include "crashlab/rational.hpp"

namespace crashlab::experiment {

enum class Problem {
  kCrashing,        // linear costs, bound H_k
  kCrashingConvex,  // non-decreasing schedules, bound H_k
  kKlis,            // random sequences, bound 1 - ((k-1)/k)^k
  kKlisMatrix,      // matrix family for k' = 2..k, scripted greedy
};

const char* problem_name(Problem problem);
std::optional<Problem> parse_problem(std::string_view name);

struct ExperimentConfig {
  Problem problem = Problem::kCrashing;
  int trials = 100;
  int k = 2;
  std::uint64_t seed = 1;

  // crashing instances
  int min_nodes = 2;
  int max_nodes = 5;
  int max_edges = 8;
  int max_normal_len = 5;
  int max_crashable = 2;
  int cost_min = 1;
  int cost_max = 9;

  // k-LIS instances
  int seq_len = 12;
  int value_range = 9;
  TieBreak policy = TieBreak::kCanonical;

  oracle::OracleBudget budget;
};

// Throws std::invalid_argument when the config is unusable.
void check_config(const ExperimentConfig& cfg);

// Instance shape for one crashing trial, drawn from the config ranges.
gen::RandomNetSpec sample_net_spec(const ExperimentConfig& cfg, std::uint64_t seed);

enum class RecordStatus { kOk, kViolated, kSkippedBudget, kSkippedInfeasible };

struct RatioRecord {
  std::string instance;
  std::uint64_t seed = 0;
  int k = 0;
  std::optional<Rational> greedy;
  std::optional<Rational> opt;
  std::optional<Rational> ratio;  // greedy / opt
  Rational bound;
  RecordStatus status = RecordStatus::kOk;

  bool bound_satisfied() const { return status != RecordStatus::kViolated; }
};

struct ExperimentResult {
  std::vector<RatioRecord> records;
  // Largest ratio for crashing (upper bound), smallest for k-LIS (lower bound).
  std::optional<Rational> worst_ratio;
  bool all_satisfied = true;
};

ExperimentResult run_experiment(const ExperimentConfig& cfg);

// Header comment lines with the full config, then
// `instance,seed,k,greedy,opt,ratio,bound,ok`, rows, and a summary row.
void write_csv(std::ostream& out, const ExperimentConfig& cfg, const ExperimentResult& result);

}  // namespace crashlab::experiment
