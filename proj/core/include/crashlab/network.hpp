#pragma once

// Activity-on-edge project networks: each job is an edge of a DAG with a
// single source and a single sink. Lengths are integer days.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "crashlab/rational.hpp"

namespace crashlab {

// Marginal cost of each crashable day of one job: entry d is the price of
// the (d+1)-th day of shortening. Linear jobs repeat one rate.
class CostSchedule {
 public:
  CostSchedule() = default;
  explicit CostSchedule(std::vector<Rational> per_day) : per_day_(std::move(per_day)) {}

  static CostSchedule linear(const Rational& rate, int days);

  const std::vector<Rational>& per_day() const { return per_day_; }
  int days() const { return static_cast<int>(per_day_.size()); }

  // Declared with a single rate, or every entry equal.
  bool is_linear() const;
  bool is_non_decreasing() const;
  const std::optional<Rational>& declared_rate() const { return rate_; }

  // Cost of the first `days` entries.
  Rational prefix_cost(int days) const;

  // The schedule left after `days` have been consumed.
  CostSchedule drop_front(int days) const;

  friend bool operator==(const CostSchedule&, const CostSchedule&) = default;

 private:
  std::vector<Rational> per_day_;
  std::optional<Rational> rate_;
};

struct Edge {
  std::string id;
  std::size_t from = 0;
  std::size_t to = 0;
  int min_len = 0;     // technological lower bound
  int normal_len = 0;  // length at normal speed
  CostSchedule cost;

  int crashable_days() const { return normal_len - min_len; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Parallel edges are allowed; edges are always addressed by id.
struct ProjectNetwork {
  std::vector<std::string> nodes;
  std::size_t source = 0;
  std::size_t sink = 0;
  std::vector<Edge> edges;

  std::optional<std::size_t> find_node(std::string_view name) const;
  std::optional<std::size_t> find_edge(std::string_view id) const;
  const Edge& edge(std::string_view id) const;

  friend bool operator==(const ProjectNetwork&, const ProjectNetwork&) = default;
};

// Crash amounts keyed by edge id. Absent edges are not crashed.
struct Plan {
  std::map<std::string, int> amounts;

  int at(const std::string& id) const;
  bool empty() const;
  // Number of crashed days summed over edges.
  int total_days() const;

  // Multiset union and difference (difference clamps at zero).
  Plan merged(const Plan& other) const;
  Plan minus(const Plan& other) const;
  // Edge ids with a positive amount, sorted.
  std::set<std::string> support() const;

  static Plan from_edges(const std::set<std::string>& ids);

  // Zero entries are ignored when comparing.
  friend bool operator==(const Plan& lhs, const Plan& rhs);
};

// Builds networks by node name and validates on `build`.
class NetworkBuilder {
 public:
  NetworkBuilder& node(const std::string& name);
  NetworkBuilder& edge(const std::string& id, const std::string& from, const std::string& to,
                       int min_len, int normal_len, CostSchedule cost);
  NetworkBuilder& linear_edge(const std::string& id, const std::string& from,
                              const std::string& to, int min_len, int normal_len,
                              const Rational& rate);
  // Throws the validation error if the result is not a valid project.
  ProjectNetwork build(const std::string& source, const std::string& sink) const;
  // Same, without validation.
  ProjectNetwork build_unchecked(const std::string& source, const std::string& sink) const;

 private:
  std::size_t intern(const std::string& name);

  ProjectNetwork net_;
};

// Throws crashlab::Error describing the first violated invariant.
void validate(const ProjectNetwork& net);

// Kahn order over nodes; nullopt when the graph has a cycle.
std::optional<std::vector<std::size_t>> topological_order(const ProjectNetwork& net);

// Length of the longest source-to-sink path.
int duration(const ProjectNetwork& net);

// Longest distance from the source to each node and from each node to the
// sink. Unreachable entries hold std::nullopt.
struct PathBounds {
  std::vector<std::optional<int>> from_source;
  std::vector<std::optional<int>> to_sink;
};
PathBounds path_bounds(const ProjectNetwork& net);

// The subgraph of critical edges (edges on some longest path), restricted
// to the nodes those edges touch. Ids and node names are preserved.
ProjectNetwork critical_graph(const ProjectNetwork& net);

// Shortens each edge by its plan amount and consumes the matching prefix of
// its cost schedule.
ProjectNetwork apply_plan(const ProjectNetwork& net, const Plan& plan);

Rational plan_cost(const ProjectNetwork& net, const Plan& plan);

// Every edge crashed to its lower bound.
Plan full_plan(const ProjectNetwork& net);

int k_max(const ProjectNetwork& net);

bool is_k_crashing(const ProjectNetwork& net, const Plan& plan, int k);

// Nodes reachable from the source once the edges in `removed` are deleted.
std::vector<bool> reachable_from_source(const ProjectNetwork& net,
                                        const std::set<std::string>& removed = {});

// True when removing the edges in `removed` leaves the sink unreachable.
bool separates(const ProjectNetwork& net, const std::set<std::string>& removed);

// Throws PlanOutOfBounds unless every amount is within its edge's bounds.
void check_plan(const ProjectNetwork& net, const Plan& plan);

}  // namespace crashlab
