#pragma once

#include <cstdint>
#include <vector>

#include "crashlab/klis.hpp"
#include "crashlab/network.hpp"

namespace crashlab::gen {

// Five-job network on nodes 1..4 (source 1, sink 4) whose greedy 2-crash
// costs 28 while the optimum costs 20.
ProjectNetwork fig2_network();

struct MatrixSpec {
  int k = 1;
};

struct MatrixInstance {
  Sequence sequence;
  // D_0, D_1, D_-1, D_2, D_-2, ... : k diagonals, as positions in `sequence`.
  std::vector<IndexList> script;
};

// Anti-diagonal reading of the k x k matrix whose row i (counted from the
// bottom) holds the value i. Its optimum is k^2 while a greedy run that picks
// the longest diagonals collects ceil(3k^2/4).
MatrixInstance matrix_sequence(MatrixSpec spec);

// The k copies of (1..k), one per matrix column, as positions in
// matrix_sequence(spec).sequence. Together they cover all k^2 elements.
std::vector<IndexList> matrix_columns(MatrixSpec spec);

struct RandomNetSpec {
  int node_count = 4;
  int edge_count = 6;
  int max_normal_len = 5;
  int max_crashable = 2;
  int cost_min = 1;
  int cost_max = 9;
  bool convex = false;  // random non-decreasing schedules instead of one rate
  std::uint64_t seed = 0;
};

// Throws std::invalid_argument when the spec is inconsistent.
void check_spec(const RandomNetSpec& spec);

// Seeded DAG on nodes n0..n{count-1} with source n0 and sink n{count-1};
// every node lies on a source-to-sink path and edge ids are e1, e2, ...
ProjectNetwork random_network(const RandomNetSpec& spec);

// Uniform values in 1..value_range.
Sequence random_sequence(int n, int value_range, std::uint64_t seed);

}  // namespace crashlab::gen
