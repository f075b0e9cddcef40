#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "crashlab/network.hpp"
#include "crashlab/rational.hpp"

namespace crashlab {

struct OneCrash {
  Plan plan;  // one day on each cut edge
  Rational cost;
};

// Cheapest way to shorten the project by exactly one day: a minimum cut of
// the critical graph where crashable edges cost their next marginal day and
// exhausted edges cannot be cut. Throws NotCrashableError when k_max is 0.
OneCrash optimal_one_crash(const ProjectNetwork& net);

struct CrashStep {
  std::set<std::string> cut;
  Rational cost;
  int duration_after = 0;
};

struct GreedyCrashResult {
  int initial_duration = 0;
  std::vector<CrashStep> steps;
  Plan plan;
  Rational total_cost;
  std::vector<int> durations;  // duration after each step
};

// Repeats optimal_one_crash k times on the progressively crashed network.
// Throws NotCrashableError carrying the failing iteration when k > k_max.
GreedyCrashResult greedy_crash(const ProjectNetwork& net, int k);

// One level of the cut decomposition of a k-crashing plan X:
//   N_1 = N, X_1 = X, C_i = mincut(N_i*, X_i),
//   N_{i+1} = N_i*(C_i), X_{i+1} = X_i \ C_i.
struct TraceLevel {
  ProjectNetwork network;   // N_i
  ProjectNetwork critical;  // N_i*
  Plan residual;            // X_i
  std::set<std::string> cut;  // C_i
  Rational cut_cost;
  std::set<std::string> source_side;  // U_i (node names)
  std::set<std::string> sink_side;    // W_i
  std::set<std::string> inner_source;  // S_i: edges within U_i
  std::set<std::string> inner_sink;    // T_i: edges within W_i
  std::set<std::string> reverse_cut;   // RC_i: edges from W_i to U_i
};

// Classification of C_{i+1} against level i and of C_i against level i+1.
// Edges that fit none of the classes go to the `stray` sets, which
// verify_trace expects to be empty.
struct LevelPair {
  int level = 0;  // i (1-based)
  std::set<std::string> next_plus;   // C_{i+1} within T_i
  std::set<std::string> next_zero;   // C_{i+1} within C_i
  std::set<std::string> next_minus;  // C_{i+1} within S_i
  std::set<std::string> next_stray;  // C_{i+1} within RC_i
  std::set<std::string> cur_plus;     // C_i within T_{i+1}
  std::set<std::string> cur_zero;     // C_i within C_{i+1}
  std::set<std::string> cur_minus;    // C_i within S_{i+1}
  std::set<std::string> cur_reverse;  // C_i within RC_{i+1}
  std::set<std::string> cur_stray;    // C_i not in N*_{i+1}
};

struct DecompositionTrace {
  int k = 0;
  int base_duration = 0;
  std::map<std::string, Rational> unit_cost;  // c_i per edge id
  std::vector<TraceLevel> levels;
  std::vector<LevelPair> pairs;  // k - 1 entries
};

// Builds the decomposition of `plan`, which must be k-crashing for `net`.
// Linear cost schedules only. Throws NotKCrashing, ConvexNotSupported or
// PlanOutOfBounds.
DecompositionTrace decompose(const ProjectNetwork& net, const Plan& plan, int k);

struct TraceCheck {
  std::string name;
  int level = 0;
  bool passed = false;
  std::string detail;
};

struct TraceReport {
  std::vector<TraceCheck> checks;
  bool all_passed() const;
  std::vector<TraceCheck> failures() const;
};

// Runs every structural check on the trace: duration decrements, cut
// containment, the pair classification and cut cost monotonicity.
// Failures are reported, never thrown.
TraceReport verify_trace(const DecompositionTrace& trace);

}  // namespace crashlab
