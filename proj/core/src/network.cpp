#include "crashlab/network.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

#include "crashlab/errors.hpp"

namespace crashlab {

// ---------------------------------------------------------------------------
// CostSchedule

CostSchedule CostSchedule::linear(const Rational& rate, int days) {
  CostSchedule schedule(std::vector<Rational>(static_cast<std::size_t>(std::max(days, 0)), rate));
  schedule.rate_ = rate;
  return schedule;
}

bool CostSchedule::is_linear() const {
  if (rate_) return true;
  return std::adjacent_find(per_day_.begin(), per_day_.end(), std::not_equal_to<>()) ==
         per_day_.end();
}

bool CostSchedule::is_non_decreasing() const {
  return std::is_sorted(per_day_.begin(), per_day_.end());
}

Rational CostSchedule::prefix_cost(int days) const {
  Rational sum = 0;
  for (int d = 0; d < days && d < this->days(); ++d) sum += per_day_[static_cast<std::size_t>(d)];
  return sum;
}

CostSchedule CostSchedule::drop_front(int days) const {
  CostSchedule rest = *this;
  auto n = static_cast<std::size_t>(std::clamp(days, 0, this->days()));
  rest.per_day_.erase(rest.per_day_.begin(), rest.per_day_.begin() + static_cast<std::ptrdiff_t>(n));
  return rest;
}

// ---------------------------------------------------------------------------
// ProjectNetwork / Plan

std::optional<std::size_t> ProjectNetwork::find_node(std::string_view name) const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i] == name) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> ProjectNetwork::find_edge(std::string_view id) const {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].id == id) return i;
  }
  return std::nullopt;
}

const Edge& ProjectNetwork::edge(std::string_view id) const {
  auto idx = find_edge(id);
  if (!idx) throw Error(ErrorCode::kMalformedNetwork, "no edge '" + std::string(id) + "'");
  return edges[*idx];
}

int Plan::at(const std::string& id) const {
  auto it = amounts.find(id);
  return it == amounts.end() ? 0 : it->second;
}

bool Plan::empty() const {
  return std::all_of(amounts.begin(), amounts.end(), [](const auto& kv) { return kv.second == 0; });
}

int Plan::total_days() const {
  int total = 0;
  for (const auto& [id, x] : amounts) total += x;
  return total;
}

Plan Plan::merged(const Plan& other) const {
  Plan out = *this;
  for (const auto& [id, x] : other.amounts) out.amounts[id] += x;
  return out;
}

Plan Plan::minus(const Plan& other) const {
  Plan out;
  for (const auto& [id, x] : amounts) {
    int left = x - other.at(id);
    if (left > 0) out.amounts[id] = left;
  }
  return out;
}

std::set<std::string> Plan::support() const {
  std::set<std::string> ids;
  for (const auto& [id, x] : amounts) {
    if (x > 0) ids.insert(id);
  }
  return ids;
}

Plan Plan::from_edges(const std::set<std::string>& ids) {
  Plan plan;
  for (const auto& id : ids) plan.amounts[id] = 1;
  return plan;
}

bool operator==(const Plan& lhs, const Plan& rhs) {
  auto nonzero = [](const Plan& p) {
    std::map<std::string, int> m;
    for (const auto& [id, x] : p.amounts) {
      if (x != 0) m[id] = x;
    }
    return m;
  };
  return nonzero(lhs) == nonzero(rhs);
}

// ---------------------------------------------------------------------------
// NetworkBuilder

std::size_t NetworkBuilder::intern(const std::string& name) {
  if (auto idx = net_.find_node(name)) return *idx;
  net_.nodes.push_back(name);
  return net_.nodes.size() - 1;
}

NetworkBuilder& NetworkBuilder::node(const std::string& name) {
  intern(name);
  return *this;
}

NetworkBuilder& NetworkBuilder::edge(const std::string& id, const std::string& from,
                                     const std::string& to, int min_len, int normal_len,
                                     CostSchedule cost) {
  Edge e;
  e.id = id;
  e.from = intern(from);
  e.to = intern(to);
  e.min_len = min_len;
  e.normal_len = normal_len;
  e.cost = std::move(cost);
  net_.edges.push_back(std::move(e));
  return *this;
}

NetworkBuilder& NetworkBuilder::linear_edge(const std::string& id, const std::string& from,
                                            const std::string& to, int min_len, int normal_len,
                                            const Rational& rate) {
  return edge(id, from, to, min_len, normal_len,
              CostSchedule::linear(rate, normal_len - min_len));
}

ProjectNetwork NetworkBuilder::build_unchecked(const std::string& source,
                                               const std::string& sink) const {
  ProjectNetwork net = net_;
  auto s = net.find_node(source);
  auto t = net.find_node(sink);
  if (!s || !t) {
    throw Error(ErrorCode::kMalformedNetwork, "source or sink is not a known node");
  }
  net.source = *s;
  net.sink = *t;
  return net;
}

ProjectNetwork NetworkBuilder::build(const std::string& source, const std::string& sink) const {
  ProjectNetwork net = build_unchecked(source, sink);
  validate(net);
  return net;
}

// ---------------------------------------------------------------------------
// Validation and longest paths

namespace {

std::vector<bool> reach(const ProjectNetwork& net, std::size_t start, bool forward,
                        const std::set<std::string>* removed = nullptr) {
  std::vector<std::vector<std::size_t>> adj(net.nodes.size());
  for (const auto& e : net.edges) {
    if (removed && removed->count(e.id)) continue;
    if (forward) {
      adj[e.from].push_back(e.to);
    } else {
      adj[e.to].push_back(e.from);
    }
  }
  std::vector<bool> seen(net.nodes.size(), false);
  std::vector<std::size_t> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    auto u = stack.back();
    stack.pop_back();
    for (auto v : adj[u]) {
      if (!seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  return seen;
}

}  // namespace

void validate(const ProjectNetwork& net) {
  const auto n = net.nodes.size();
  if (n < 2) throw Error(ErrorCode::kMalformedNetwork, "a project needs at least two nodes");
  if (net.source >= n || net.sink >= n) {
    throw Error(ErrorCode::kMalformedNetwork, "source or sink index out of range");
  }
  if (net.source == net.sink) {
    throw Error(ErrorCode::kMalformedNetwork, "source and sink must differ");
  }
  {
    std::unordered_set<std::string> names(net.nodes.begin(), net.nodes.end());
    if (names.size() != n) throw Error(ErrorCode::kMalformedNetwork, "duplicate node name");
    std::unordered_set<std::string> ids;
    for (const auto& e : net.edges) {
      if (!ids.insert(e.id).second) {
        throw Error(ErrorCode::kMalformedNetwork, "duplicate edge id '" + e.id + "'");
      }
      if (e.from >= n || e.to >= n) {
        throw Error(ErrorCode::kMalformedNetwork, "edge '" + e.id + "' has an unknown endpoint");
      }
    }
  }

  for (const auto& e : net.edges) {
    if (e.min_len < 0 || e.min_len > e.normal_len) {
      throw Error(ErrorCode::kBadEdgeBounds,
                  "edge '" + e.id + "' needs 0 <= a <= b, got a=" + std::to_string(e.min_len) +
                      " b=" + std::to_string(e.normal_len));
    }
    if (e.cost.days() != e.crashable_days()) {
      throw Error(ErrorCode::kBadCostSchedule,
                  "edge '" + e.id + "' has " + std::to_string(e.cost.days()) +
                      " schedule entries for " + std::to_string(e.crashable_days()) +
                      " crashable days");
    }
    for (const auto& c : e.cost.per_day()) {
      if (c < 0) throw Error(ErrorCode::kBadCostSchedule, "edge '" + e.id + "' has a negative cost");
    }
    if (!e.cost.is_non_decreasing()) {
      throw Error(ErrorCode::kBadCostSchedule,
                  "edge '" + e.id + "' has a decreasing (non-convex) schedule");
    }
  }

  if (!topological_order(net)) throw Error(ErrorCode::kCyclicGraph, "the network has a cycle");

  std::vector<int> in_deg(n, 0), out_deg(n, 0);
  for (const auto& e : net.edges) {
    ++out_deg[e.from];
    ++in_deg[e.to];
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (in_deg[v] == 0 && out_deg[v] == 0) {
      throw Error(ErrorCode::kUnreachableNode, "node '" + net.nodes[v] + "' has no edges");
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (in_deg[v] == 0 && v != net.source) {
      throw Error(ErrorCode::kMultipleSources,
                  "node '" + net.nodes[v] + "' has no incoming edge but is not the source");
    }
    if (out_deg[v] == 0 && v != net.sink) {
      throw Error(ErrorCode::kMultipleSinks,
                  "node '" + net.nodes[v] + "' has no outgoing edge but is not the sink");
    }
  }
  if (in_deg[net.source] != 0) {
    throw Error(ErrorCode::kMultipleSources, "the source has incoming edges");
  }
  if (out_deg[net.sink] != 0) {
    throw Error(ErrorCode::kMultipleSinks, "the sink has outgoing edges");
  }

  auto fwd = reach(net, net.source, true);
  auto bwd = reach(net, net.sink, false);
  for (std::size_t v = 0; v < n; ++v) {
    if (!fwd[v] || !bwd[v]) {
      throw Error(ErrorCode::kUnreachableNode,
                  "node '" + net.nodes[v] + "' is not on any source-to-sink path");
    }
  }
}

std::optional<std::vector<std::size_t>> topological_order(const ProjectNetwork& net) {
  const auto n = net.nodes.size();
  std::vector<int> in_deg(n, 0);
  std::vector<std::vector<std::size_t>> out(n);
  for (const auto& e : net.edges) {
    ++in_deg[e.to];
    out[e.from].push_back(e.to);
  }
  std::queue<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v) {
    if (in_deg[v] == 0) ready.push(v);
  }
  std::vector<std::size_t> order;
  order.reserve(n);
  while (!ready.empty()) {
    auto u = ready.front();
    ready.pop();
    order.push_back(u);
    for (auto v : out[u]) {
      if (--in_deg[v] == 0) ready.push(v);
    }
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

PathBounds path_bounds(const ProjectNetwork& net) {
  auto order = topological_order(net);
  if (!order) throw Error(ErrorCode::kCyclicGraph, "the network has a cycle");
  const auto n = net.nodes.size();

  std::vector<std::vector<const Edge*>> out(n), in(n);
  for (const auto& e : net.edges) {
    out[e.from].push_back(&e);
    in[e.to].push_back(&e);
  }

  PathBounds bounds;
  bounds.from_source.assign(n, std::nullopt);
  bounds.to_sink.assign(n, std::nullopt);
  bounds.from_source[net.source] = 0;
  for (auto u : *order) {
    if (!bounds.from_source[u]) continue;
    for (const Edge* e : out[u]) {
      int cand = *bounds.from_source[u] + e->normal_len;
      auto& slot = bounds.from_source[e->to];
      if (!slot || cand > *slot) slot = cand;
    }
  }
  bounds.to_sink[net.sink] = 0;
  for (auto it = order->rbegin(); it != order->rend(); ++it) {
    auto v = *it;
    if (!bounds.to_sink[v]) continue;
    for (const Edge* e : in[v]) {
      int cand = *bounds.to_sink[v] + e->normal_len;
      auto& slot = bounds.to_sink[e->from];
      if (!slot || cand > *slot) slot = cand;
    }
  }
  return bounds;
}

int duration(const ProjectNetwork& net) {
  auto bounds = path_bounds(net);
  return bounds.from_source[net.sink].value_or(0);
}

ProjectNetwork critical_graph(const ProjectNetwork& net) {
  auto bounds = path_bounds(net);
  const int total = bounds.from_source[net.sink].value_or(0);

  std::vector<const Edge*> kept;
  std::vector<bool> used(net.nodes.size(), false);
  used[net.source] = true;
  used[net.sink] = true;
  for (const auto& e : net.edges) {
    const auto& head = bounds.from_source[e.from];
    const auto& tail = bounds.to_sink[e.to];
    if (head && tail && *head + e.normal_len + *tail == total) {
      kept.push_back(&e);
      used[e.from] = true;
      used[e.to] = true;
    }
  }

  ProjectNetwork out;
  std::vector<std::size_t> remap(net.nodes.size(), 0);
  for (std::size_t v = 0; v < net.nodes.size(); ++v) {
    if (!used[v]) continue;
    remap[v] = out.nodes.size();
    out.nodes.push_back(net.nodes[v]);
  }
  out.source = remap[net.source];
  out.sink = remap[net.sink];
  for (const Edge* e : kept) {
    Edge copy = *e;
    copy.from = remap[e->from];
    copy.to = remap[e->to];
    out.edges.push_back(std::move(copy));
  }
  return out;
}

void check_plan(const ProjectNetwork& net, const Plan& plan) {
  for (const auto& [id, x] : plan.amounts) {
    auto idx = net.find_edge(id);
    if (!idx) {
      if (x == 0) continue;
      throw Error(ErrorCode::kPlanOutOfBounds, "plan names unknown edge '" + id + "'");
    }
    const Edge& e = net.edges[*idx];
    if (x < 0 || x > e.crashable_days()) {
      throw Error(ErrorCode::kPlanOutOfBounds,
                  "edge '" + id + "' can be crashed by at most " +
                      std::to_string(e.crashable_days()) + " days, plan asks " +
                      std::to_string(x));
    }
  }
}

ProjectNetwork apply_plan(const ProjectNetwork& net, const Plan& plan) {
  check_plan(net, plan);
  ProjectNetwork out = net;
  for (auto& e : out.edges) {
    int x = plan.at(e.id);
    if (x == 0) continue;
    e.normal_len -= x;
    e.cost = e.cost.drop_front(x);
  }
  return out;
}

Rational plan_cost(const ProjectNetwork& net, const Plan& plan) {
  check_plan(net, plan);
  Rational total = 0;
  for (const auto& e : net.edges) total += e.cost.prefix_cost(plan.at(e.id));
  return total;
}

Plan full_plan(const ProjectNetwork& net) {
  Plan plan;
  for (const auto& e : net.edges) {
    if (e.crashable_days() > 0) plan.amounts[e.id] = e.crashable_days();
  }
  return plan;
}

int k_max(const ProjectNetwork& net) {
  return duration(net) - duration(apply_plan(net, full_plan(net)));
}

bool is_k_crashing(const ProjectNetwork& net, const Plan& plan, int k) {
  return duration(apply_plan(net, plan)) <= duration(net) - k;
}

std::vector<bool> reachable_from_source(const ProjectNetwork& net,
                                        const std::set<std::string>& removed) {
  return reach(net, net.source, true, &removed);
}

bool separates(const ProjectNetwork& net, const std::set<std::string>& removed) {
  return !reach(net, net.source, true, &removed)[net.sink];
}

}  // namespace crashlab
