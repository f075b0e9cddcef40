#include "crashlab/generators.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace crashlab::gen {

ProjectNetwork fig2_network() {
  return NetworkBuilder()
      .linear_edge("j1", "1", "2", 1, 3, 10)
      .linear_edge("j2", "1", "3", 1, 5, 9)
      .linear_edge("j3", "2", "3", 1, 3, 9)
      .linear_edge("j4", "2", "4", 1, 5, 10)
      .linear_edge("j5", "3", "4", 1, 3, 10)
      .build("1", "4");
}

namespace {

// position[i][j] of matrix cell (row i, column j), 1-based, rows counted
// from the bottom.
std::vector<std::vector<std::size_t>> matrix_positions(int k, Sequence* values) {
  std::vector<std::vector<std::size_t>> pos(static_cast<std::size_t>(k) + 1,
                                            std::vector<std::size_t>(static_cast<std::size_t>(k) + 1));
  std::size_t next = 0;
  for (int s = 2; s <= 2 * k; ++s) {
    // Anti-diagonal i + j = s, from top left to bottom right.
    for (int i = std::min(k, s - 1); i >= std::max(1, s - k); --i) {
      pos[static_cast<std::size_t>(i)][static_cast<std::size_t>(s - i)] = next++;
      if (values) values->push_back(i);
    }
  }
  return pos;
}

}  // namespace

MatrixInstance matrix_sequence(MatrixSpec spec) {
  if (spec.k < 1) throw std::invalid_argument("matrix_sequence needs k >= 1");
  const int k = spec.k;
  MatrixInstance out;
  auto pos = matrix_positions(k, &out.sequence);

  // D_x holds cells with j = i + x, listed from bottom left to top right.
  auto diagonal = [&](int x) {
    IndexList d;
    for (int i = std::max(1, 1 - x); i <= std::min(k, k - x); ++i) {
      d.push_back(pos[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + x)]);
    }
    return d;
  };
  out.script.push_back(diagonal(0));
  for (int x = 1; static_cast<int>(out.script.size()) < k; ++x) {
    out.script.push_back(diagonal(x));
    if (static_cast<int>(out.script.size()) < k) out.script.push_back(diagonal(-x));
  }
  return out;
}

std::vector<IndexList> matrix_columns(MatrixSpec spec) {
  if (spec.k < 1) throw std::invalid_argument("matrix_columns needs k >= 1");
  const int k = spec.k;
  auto pos = matrix_positions(k, nullptr);
  std::vector<IndexList> columns;
  for (int j = 1; j <= k; ++j) {
    IndexList col;
    for (int i = 1; i <= k; ++i) {
      col.push_back(pos[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    columns.push_back(std::move(col));
  }
  return columns;
}

void check_spec(const RandomNetSpec& spec) {
  if (spec.node_count < 2) throw std::invalid_argument("random network needs >= 2 nodes");
  if (spec.edge_count < spec.node_count - 1) {
    throw std::invalid_argument("random network needs edge_count >= node_count - 1");
  }
  if (spec.max_normal_len < 1) throw std::invalid_argument("max_normal_len must be positive");
  if (spec.max_crashable < 0) throw std::invalid_argument("max_crashable must be non-negative");
  if (spec.cost_min < 0 || spec.cost_max < spec.cost_min) {
    throw std::invalid_argument("cost range must satisfy 0 <= cost_min <= cost_max");
  }
}

ProjectNetwork random_network(const RandomNetSpec& spec) {
  check_spec(spec);
  std::mt19937_64 rng(spec.seed);
  auto uniform = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int n = spec.node_count;

  // Skeleton: every node gets an in-edge from an earlier node and an
  // out-edge to a later one, so each lies on a source-to-sink path. When the
  // random skeleton needs more edges than allowed, retry; a plain chain
  // always fits.
  std::vector<std::pair<int, int>> arcs;
  for (int attempt = 0; attempt < 64; ++attempt) {
    arcs.clear();
    std::vector<bool> has_out(static_cast<std::size_t>(n), false);
    for (int v = 1; v < n; ++v) {
      int u = uniform(0, v - 1);
      arcs.emplace_back(u, v);
      has_out[static_cast<std::size_t>(u)] = true;
    }
    for (int u = n - 2; u >= 0; --u) {
      if (has_out[static_cast<std::size_t>(u)]) continue;
      arcs.emplace_back(u, uniform(u + 1, n - 1));
      has_out[static_cast<std::size_t>(u)] = true;
    }
    if (static_cast<int>(arcs.size()) <= spec.edge_count) break;
  }
  if (static_cast<int>(arcs.size()) > spec.edge_count) {
    arcs.clear();
    for (int v = 1; v < n; ++v) arcs.emplace_back(v - 1, v);
  }
  while (static_cast<int>(arcs.size()) < spec.edge_count) {
    int u = uniform(0, n - 2);
    arcs.emplace_back(u, uniform(u + 1, n - 1));
  }
  std::sort(arcs.begin(), arcs.end());

  NetworkBuilder builder;
  for (int v = 0; v < n; ++v) builder.node("n" + std::to_string(v));
  int next_id = 1;
  for (auto [u, v] : arcs) {
    int b = uniform(1, spec.max_normal_len);
    int d = uniform(0, std::min(spec.max_crashable, b));
    std::vector<Rational> per_day;
    for (int i = 0; i < d; ++i) per_day.emplace_back(uniform(spec.cost_min, spec.cost_max));
    CostSchedule cost;
    if (spec.convex) {
      std::sort(per_day.begin(), per_day.end());
      cost = CostSchedule(std::move(per_day));
    } else {
      cost = CostSchedule::linear(Rational(uniform(spec.cost_min, spec.cost_max)), d);
    }
    builder.edge("e" + std::to_string(next_id++), "n" + std::to_string(u), "n" + std::to_string(v),
                 b - d, b, std::move(cost));
  }
  return builder.build("n0", "n" + std::to_string(n - 1));
}

Sequence random_sequence(int n, int value_range, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("random_sequence needs n >= 0");
  if (value_range < 1) throw std::invalid_argument("random_sequence needs value_range >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Value> dist(1, value_range);
  Sequence out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(dist(rng));
  return out;
}

}  // namespace crashlab::gen
