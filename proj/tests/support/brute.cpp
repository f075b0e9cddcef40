#include "brute.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace crashlab::brute {

std::vector<std::vector<std::size_t>> all_paths(const ProjectNetwork& net) {
  std::vector<std::vector<std::size_t>> paths;
  std::vector<std::size_t> stack;
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    if (v == net.sink) {
      paths.push_back(stack);
      return;
    }
    for (std::size_t i = 0; i < net.edges.size(); ++i) {
      if (net.edges[i].from != v) continue;
      stack.push_back(i);
      walk(net.edges[i].to);
      stack.pop_back();
    }
  };
  walk(net.source);
  return paths;
}

namespace {

int path_length(const ProjectNetwork& net, const std::vector<std::size_t>& path,
                const std::vector<int>& crash) {
  int len = 0;
  for (auto i : path) len += net.edges[i].normal_len - crash[i];
  return len;
}

}  // namespace

int duration(const ProjectNetwork& net) {
  std::vector<int> none(net.edges.size(), 0);
  int best = 0;
  for (const auto& p : all_paths(net)) best = std::max(best, path_length(net, p, none));
  return best;
}

std::vector<std::size_t> critical_edges(const ProjectNetwork& net) {
  std::vector<int> none(net.edges.size(), 0);
  const int d = brute::duration(net);
  std::vector<bool> on(net.edges.size(), false);
  for (const auto& p : all_paths(net)) {
    if (path_length(net, p, none) != d) continue;
    for (auto i : p) on[i] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < on.size(); ++i) {
    if (on[i]) out.push_back(i);
  }
  return out;
}

std::optional<Rational> crash_cost(const ProjectNetwork& net, int k) {
  const auto paths = all_paths(net);
  std::vector<int> none(net.edges.size(), 0);
  int base = 0;
  for (const auto& p : paths) base = std::max(base, path_length(net, p, none));

  std::optional<Rational> best;
  std::vector<int> crash(net.edges.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == net.edges.size()) {
      int d = 0;
      for (const auto& p : paths) d = std::max(d, path_length(net, p, crash));
      if (base - d < k) return;
      Rational cost = 0;
      for (std::size_t e = 0; e < crash.size(); ++e) {
        for (int day = 0; day < crash[e]; ++day) cost += net.edges[e].cost.per_day()[day];
      }
      if (!best || cost < *best) best = cost;
      return;
    }
    for (int x = 0; x <= net.edges[i].normal_len - net.edges[i].min_len; ++x) {
      crash[i] = x;
      rec(i + 1);
    }
    crash[i] = 0;
  };
  rec(0);
  return best;
}

std::optional<Rational> partition_min_cut(const flow::FlowGraph& g) {
  std::vector<std::size_t> free_nodes;
  for (std::size_t v = 0; v < g.node_count; ++v) {
    if (v != g.source && v != g.sink) free_nodes.push_back(v);
  }
  std::optional<Rational> best;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << free_nodes.size()); ++mask) {
    std::vector<bool> in_s(g.node_count, false);
    in_s[g.source] = true;
    for (std::size_t i = 0; i < free_nodes.size(); ++i) {
      if (mask >> i & 1u) in_s[free_nodes[i]] = true;
    }
    Rational total = 0;
    bool finite = true;
    for (const auto& a : g.arcs) {
      if (!in_s[a.from] || in_s[a.to]) continue;
      if (a.capacity.is_unbounded()) {
        finite = false;
        break;
      }
      total += a.capacity.value();
    }
    if (finite && (!best || total < *best)) best = total;
  }
  return best;
}

int lis_length(const std::vector<Value>& seq) {
  std::vector<int> best(seq.size(), 1);
  int out = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (seq[j] < seq[i]) best[i] = std::max(best[i], best[j] + 1);
    }
    out = std::max(out, best[i]);
  }
  return out;
}

int klis_total(const std::vector<Value>& seq, int k) {
  const std::size_t n = seq.size();
  std::vector<int> label(n, 0);
  int best = 0;
  for (;;) {
    std::vector<std::optional<Value>> last(static_cast<std::size_t>(k) + 1);
    bool ok = true;
    int used = 0;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (label[i] == 0) continue;
      auto& l = last[static_cast<std::size_t>(label[i])];
      if (l && *l >= seq[i]) ok = false;
      l = seq[i];
      ++used;
    }
    if (ok) best = std::max(best, used);
    std::size_t i = 0;
    while (i < n && label[i] == k) label[i++] = 0;
    if (i == n) break;
    ++label[i];
  }
  return best;
}

flow::FlowGraph random_flow_graph(std::uint64_t seed, int nodes, int arcs, bool unbounded) {
  std::mt19937_64 rng(seed);
  auto pick = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  flow::FlowGraph g;
  g.node_count = static_cast<std::size_t>(nodes);
  g.source = 0;
  g.sink = static_cast<std::size_t>(nodes - 1);
  for (int i = 0; i < arcs; ++i) {
    int u = pick(0, nodes - 1);
    int v = pick(0, nodes - 2);
    if (v >= u) ++v;
    flow::Arc a;
    a.id = "a" + std::to_string(i);
    a.from = static_cast<std::size_t>(u);
    a.to = static_cast<std::size_t>(v);
    if (unbounded && pick(0, 5) == 0) {
      a.capacity = flow::Capacity::unbounded();
    } else {
      a.capacity = flow::Capacity::finite(Rational(pick(0, 9), pick(1, 3)));
    }
    g.arcs.push_back(std::move(a));
  }
  return g;
}

}  // namespace crashlab::brute
