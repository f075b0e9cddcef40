#include "crashlab/flow.hpp"

#include <deque>
#include <optional>
#include <stdexcept>

namespace crashlab::flow {
namespace {

// Residual view of one arc traversal: forward uses leftover capacity,
// backward cancels flow already sent.
struct Step {
  std::size_t arc;
  bool forward;
};

class Network {
 public:
  explicit Network(const FlowGraph& g) : g_(g), flow_(g.arcs.size(), Rational(0)), adj_(g.node_count) {
    if (g.source >= g.node_count || g.sink >= g.node_count) {
      throw std::invalid_argument("flow graph source or sink out of range");
    }
    if (g.source == g.sink) throw std::invalid_argument("flow graph source equals sink");
    for (std::size_t i = 0; i < g.arcs.size(); ++i) {
      const Arc& a = g.arcs[i];
      if (a.from >= g.node_count || a.to >= g.node_count) {
        throw std::invalid_argument("arc '" + a.id + "' has an endpoint out of range");
      }
      if (!a.capacity.is_unbounded() && a.capacity.value() < 0) {
        throw std::invalid_argument("arc '" + a.id + "' has a negative capacity");
      }
      adj_[a.from].push_back({i, true});
      adj_[a.to].push_back({i, false});
    }
  }

  // True when some source-to-sink path uses unbounded arcs only.
  bool unbounded_path() const {
    std::vector<bool> seen(g_.node_count, false);
    std::deque<std::size_t> queue{g_.source};
    seen[g_.source] = true;
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      for (const Step& s : adj_[u]) {
        const Arc& a = g_.arcs[s.arc];
        if (!s.forward || !a.capacity.is_unbounded() || seen[a.to]) continue;
        seen[a.to] = true;
        queue.push_back(a.to);
      }
    }
    return seen[g_.sink];
  }

  // Edmonds-Karp. Only called when every augmenting path has a finite
  // bottleneck, which holds once no all-unbounded path exists.
  Rational run() {
    Rational value = 0;
    while (auto path = shortest_augmenting_path()) {
      std::optional<Rational> bottleneck;
      for (const Step& s : *path) {
        auto r = residual(s);
        if (!r) continue;
        if (!bottleneck || *r < *bottleneck) bottleneck = *r;
      }
      // A path of unbounded forward steps only cannot appear here.
      const Rational& delta = bottleneck.value();
      for (const Step& s : *path) {
        if (s.forward) {
          flow_[s.arc] += delta;
        } else {
          flow_[s.arc] -= delta;
        }
      }
      value += delta;
    }
    return value;
  }

  std::vector<bool> residual_reachable() const {
    std::vector<bool> seen(g_.node_count, false);
    std::deque<std::size_t> queue{g_.source};
    seen[g_.source] = true;
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      for (const Step& s : adj_[u]) {
        auto v = head(s);
        if (seen[v] || !has_residual(s)) continue;
        seen[v] = true;
        queue.push_back(v);
      }
    }
    return seen;
  }

 private:
  std::size_t head(const Step& s) const {
    const Arc& a = g_.arcs[s.arc];
    return s.forward ? a.to : a.from;
  }

  // nullopt means unbounded.
  std::optional<Rational> residual(const Step& s) const {
    const Arc& a = g_.arcs[s.arc];
    if (!s.forward) return flow_[s.arc];
    if (a.capacity.is_unbounded()) return std::nullopt;
    return a.capacity.value() - flow_[s.arc];
  }

  bool has_residual(const Step& s) const {
    auto r = residual(s);
    return !r || *r > 0;
  }

  std::optional<std::vector<Step>> shortest_augmenting_path() const {
    std::vector<std::optional<Step>> parent(g_.node_count);
    std::vector<bool> seen(g_.node_count, false);
    std::deque<std::size_t> queue{g_.source};
    seen[g_.source] = true;
    while (!queue.empty() && !seen[g_.sink]) {
      auto u = queue.front();
      queue.pop_front();
      for (const Step& s : adj_[u]) {
        auto v = head(s);
        if (seen[v] || !has_residual(s)) continue;
        seen[v] = true;
        parent[v] = s;
        queue.push_back(v);
      }
    }
    if (!seen[g_.sink]) return std::nullopt;
    std::vector<Step> path;
    for (auto v = g_.sink; v != g_.source;) {
      const Step& s = *parent[v];
      path.push_back(s);
      const Arc& a = g_.arcs[s.arc];
      v = s.forward ? a.from : a.to;
    }
    return std::vector<Step>(path.rbegin(), path.rend());
  }

  const FlowGraph& g_;
  std::vector<Rational> flow_;
  std::vector<std::vector<Step>> adj_;
};

CutResult cut_from_side(const FlowGraph& g, std::vector<bool> side, Capacity cost) {
  CutResult result;
  result.source_side = std::move(side);
  for (std::size_t i = 0; i < g.arcs.size(); ++i) {
    const Arc& a = g.arcs[i];
    if (result.source_side[a.from] && !result.source_side[a.to]) result.cut_arcs.push_back(i);
  }
  result.cost = std::move(cost);
  return result;
}

}  // namespace

std::string to_string(const Capacity& capacity) {
  return capacity.is_unbounded() ? "unbounded" : format_rational(capacity.value());
}

CutResult min_cut(const FlowGraph& g) {
  Network net(g);
  if (net.unbounded_path()) {
    std::vector<bool> side(g.node_count, false);
    side[g.source] = true;
    return cut_from_side(g, std::move(side), Capacity::unbounded());
  }
  net.run();
  CutResult result = cut_from_side(g, net.residual_reachable(), Capacity::finite(0));
  Rational cost = 0;
  for (auto i : result.cut_arcs) cost += g.arcs[i].capacity.value();
  result.cost = Capacity::finite(std::move(cost));
  return result;
}

Capacity max_flow_value(const FlowGraph& g) {
  Network net(g);
  if (net.unbounded_path()) return Capacity::unbounded();
  return Capacity::finite(net.run());
}

}  // namespace crashlab::flow
