#include "crashlab/crashing.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <optional>
#include <stdexcept>

#include "crashlab/errors.hpp"
#include "crashlab/flow.hpp"

namespace crashlab {
namespace {

using flow::Capacity;

struct EdgeCut {
  std::set<std::string> edges;
  Rational cost;
  std::set<std::string> source_side;
  std::set<std::string> sink_side;
};

// Minimum cut of `star` under the given per-edge capacities, reduced to an
// inclusion-minimal edge set. Zero-capacity arcs can make a minimum-cost cut
// non-minimal; a cut with a redundant edge would shorten some critical path
// twice. nullopt when every cut contains an unbounded edge.
std::optional<EdgeCut> minimal_cut(const ProjectNetwork& star,
                                   const std::function<Capacity(const Edge&)>& capacity) {
  flow::FlowGraph g;
  g.node_count = star.nodes.size();
  g.source = star.source;
  g.sink = star.sink;
  std::vector<Rational> finite_cost(star.edges.size(), Rational(0));
  for (std::size_t i = 0; i < star.edges.size(); ++i) {
    const Edge& e = star.edges[i];
    Capacity cap = capacity(e);
    if (!cap.is_unbounded()) finite_cost[i] = cap.value();
    g.arcs.push_back({e.id, e.from, e.to, std::move(cap)});
  }

  flow::CutResult cut = flow::min_cut(g);
  if (cut.cost.is_unbounded()) return std::nullopt;

  std::set<std::string> kept;
  for (auto i : cut.cut_arcs) kept.insert(g.arcs[i].id);
  for (auto i : cut.cut_arcs) {
    const std::string& id = g.arcs[i].id;
    kept.erase(id);
    if (!separates(star, kept)) kept.insert(id);
  }

  EdgeCut out;
  out.edges = kept;
  out.cost = 0;
  for (std::size_t i = 0; i < star.edges.size(); ++i) {
    if (kept.count(star.edges[i].id)) out.cost += finite_cost[i];
  }
  auto side = reachable_from_source(star, kept);
  for (std::size_t v = 0; v < star.nodes.size(); ++v) {
    (side[v] ? out.source_side : out.sink_side).insert(star.nodes[v]);
  }
  return out;
}

std::set<std::string> set_union(const std::set<std::string>& a, const std::set<std::string>& b) {
  std::set<std::string> out = a;
  out.insert(b.begin(), b.end());
  return out;
}

std::set<std::string> set_intersection(const std::set<std::string>& a,
                                       const std::set<std::string>& b) {
  std::set<std::string> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

std::set<std::string> edge_ids(const ProjectNetwork& net) {
  std::set<std::string> ids;
  for (const auto& e : net.edges) ids.insert(e.id);
  return ids;
}

std::string join(const std::set<std::string>& ids) {
  std::string out = "{";
  for (const auto& id : ids) {
    if (out.size() > 1) out += ",";
    out += id;
  }
  return out + "}";
}

LevelPair classify_pair(int level, const TraceLevel& cur, const TraceLevel& next) {
  LevelPair pair;
  pair.level = level;
  for (const auto& id : next.cut) {
    if (cur.inner_sink.count(id)) {
      pair.next_plus.insert(id);
    } else if (cur.cut.count(id)) {
      pair.next_zero.insert(id);
    } else if (cur.inner_source.count(id)) {
      pair.next_minus.insert(id);
    } else {
      pair.next_stray.insert(id);
    }
  }
  for (const auto& id : cur.cut) {
    if (next.inner_sink.count(id)) {
      pair.cur_plus.insert(id);
    } else if (next.cut.count(id)) {
      pair.cur_zero.insert(id);
    } else if (next.inner_source.count(id)) {
      pair.cur_minus.insert(id);
    } else if (next.reverse_cut.count(id)) {
      pair.cur_reverse.insert(id);
    } else {
      pair.cur_stray.insert(id);
    }
  }
  return pair;
}

}  // namespace

// ---------------------------------------------------------------------------
// Greedy

OneCrash optimal_one_crash(const ProjectNetwork& net) {
  ProjectNetwork star = critical_graph(net);
  auto cut = minimal_cut(star, [](const Edge& e) {
    if (e.crashable_days() > 0) return Capacity::finite(e.cost.per_day().front());
    return Capacity::unbounded();
  });
  if (!cut) {
    throw NotCrashableError(0, "every cut of the critical graph contains an exhausted edge");
  }
  return {Plan::from_edges(cut->edges), cut->cost};
}

GreedyCrashResult greedy_crash(const ProjectNetwork& net, int k) {
  if (k < 1) throw std::invalid_argument("greedy_crash needs k >= 1");
  GreedyCrashResult result;
  result.initial_duration = duration(net);
  result.total_cost = 0;

  ProjectNetwork current = net;
  for (int i = 1; i <= k; ++i) {
    OneCrash step;
    try {
      step = optimal_one_crash(current);
    } catch (const NotCrashableError&) {
      throw NotCrashableError(i, "no 1-crashing plan exists in iteration " + std::to_string(i) +
                                     "; k=" + std::to_string(k) + " exceeds k_max=" +
                                     std::to_string(i - 1));
    }
    current = apply_plan(current, step.plan);
    int d = duration(current);
    result.steps.push_back({step.plan.support(), step.cost, d});
    result.durations.push_back(d);
    result.plan = result.plan.merged(step.plan);
    result.total_cost += step.cost;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Decomposition

DecompositionTrace decompose(const ProjectNetwork& net, const Plan& plan, int k) {
  if (k < 1) throw std::invalid_argument("decompose needs k >= 1");
  check_plan(net, plan);

  DecompositionTrace trace;
  trace.k = k;
  trace.base_duration = duration(net);
  for (const auto& e : net.edges) {
    if (!e.cost.is_linear()) {
      throw Error(ErrorCode::kConvexNotSupported,
                  "edge '" + e.id + "' has a non-linear cost schedule");
    }
    if (!e.cost.per_day().empty()) {
      trace.unit_cost[e.id] = e.cost.per_day().front();
    } else {
      trace.unit_cost[e.id] = e.cost.declared_rate().value_or(Rational(0));
    }
  }
  if (!is_k_crashing(net, plan, k)) {
    throw Error(ErrorCode::kNotKCrashing,
                "the plan does not shorten the project by " + std::to_string(k) + " days");
  }

  ProjectNetwork level_net = net;
  Plan residual = plan;
  for (int i = 1; i <= k; ++i) {
    TraceLevel level;
    level.network = level_net;
    level.critical = critical_graph(level_net);
    level.residual = residual;

    auto cut = minimal_cut(level.critical, [&](const Edge& e) {
      if (residual.at(e.id) >= 1) return Capacity::finite(trace.unit_cost.at(e.id));
      return Capacity::unbounded();
    });
    if (!cut) {
      throw Error(ErrorCode::kNotKCrashing,
                  "level " + std::to_string(i) + ": the residual plan contains no cut");
    }
    level.cut = cut->edges;
    level.cut_cost = cut->cost;
    level.source_side = cut->source_side;
    level.sink_side = cut->sink_side;
    for (const auto& e : level.critical.edges) {
      bool from_u = level.source_side.count(level.critical.nodes[e.from]) > 0;
      bool to_u = level.source_side.count(level.critical.nodes[e.to]) > 0;
      if (from_u && to_u) {
        level.inner_source.insert(e.id);
      } else if (!from_u && !to_u) {
        level.inner_sink.insert(e.id);
      } else if (!from_u && to_u) {
        level.reverse_cut.insert(e.id);
      }
    }

    Plan cut_plan = Plan::from_edges(level.cut);
    level_net = apply_plan(level.critical, cut_plan);
    residual = residual.minus(cut_plan);
    trace.levels.push_back(std::move(level));
  }

  for (int i = 0; i + 1 < k; ++i) {
    trace.pairs.push_back(classify_pair(i + 1, trace.levels[static_cast<std::size_t>(i)],
                                        trace.levels[static_cast<std::size_t>(i) + 1]));
  }
  return trace;
}

// ---------------------------------------------------------------------------
// Verification

bool TraceReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const TraceCheck& c) { return c.passed; });
}

std::vector<TraceCheck> TraceReport::failures() const {
  std::vector<TraceCheck> out;
  std::copy_if(checks.begin(), checks.end(), std::back_inserter(out),
               [](const TraceCheck& c) { return !c.passed; });
  return out;
}

TraceReport verify_trace(const DecompositionTrace& trace) {
  TraceReport report;
  auto check = [&](std::string name, int level, bool passed, std::string detail = {}) {
    report.checks.push_back({std::move(name), level, passed, std::move(detail)});
  };
  auto cost_of = [&](const std::set<std::string>& ids) {
    Rational sum = 0;
    for (const auto& id : ids) {
      auto it = trace.unit_cost.find(id);
      if (it != trace.unit_cost.end()) sum += it->second;
    }
    return sum;
  };

  check("level_count", 0, static_cast<int>(trace.levels.size()) == trace.k,
        std::to_string(trace.levels.size()) + " levels for k=" + std::to_string(trace.k));

  for (std::size_t idx = 0; idx < trace.levels.size(); ++idx) {
    const TraceLevel& lv = trace.levels[idx];
    const int i = static_cast<int>(idx) + 1;

    int d = duration(lv.network);
    int expected = trace.base_duration - i + 1;
    check("duration_decrement", i, d == expected,
          "d(N_i)=" + std::to_string(d) + ", expected " + std::to_string(expected));

    check("residual_contains_cut", i, separates(lv.critical, lv.residual.support()),
          "X_i=" + join(lv.residual.support()));

    auto support = lv.residual.support();
    bool inside = std::includes(support.begin(), support.end(), lv.cut.begin(), lv.cut.end());
    bool crossing = true;
    for (const auto& e : lv.critical.edges) {
      bool from_u = lv.source_side.count(lv.critical.nodes[e.from]) > 0;
      bool to_u = lv.source_side.count(lv.critical.nodes[e.to]) > 0;
      if ((from_u && !to_u) != (lv.cut.count(e.id) > 0)) crossing = false;
    }
    check("cut_is_partition_cut", i,
          inside && crossing && separates(lv.critical, lv.cut) &&
              lv.source_side.count(lv.critical.nodes[lv.critical.source]) &&
              lv.sink_side.count(lv.critical.nodes[lv.critical.sink]),
          "C_i=" + join(lv.cut));
    check("cut_cost", i, cost_of(lv.cut) == lv.cut_cost,
          "stored " + format_rational(lv.cut_cost) + ", recomputed " +
              format_rational(cost_of(lv.cut)));
  }

  for (std::size_t idx = 0; idx + 1 < trace.levels.size(); ++idx) {
    const TraceLevel& cur = trace.levels[idx];
    const TraceLevel& next = trace.levels[idx + 1];
    const int i = static_cast<int>(idx) + 1;
    LevelPair p = classify_pair(i, cur, next);

    bool stored_matches = idx < trace.pairs.size() && trace.pairs[idx].next_plus == p.next_plus &&
                          trace.pairs[idx].next_zero == p.next_zero &&
                          trace.pairs[idx].next_minus == p.next_minus &&
                          trace.pairs[idx].cur_plus == p.cur_plus &&
                          trace.pairs[idx].cur_zero == p.cur_zero &&
                          trace.pairs[idx].cur_minus == p.cur_minus &&
                          trace.pairs[idx].cur_reverse == p.cur_reverse;
    check("partition_consistent", i, stored_matches);

    auto stray_next = set_intersection(next.cut, cur.reverse_cut);
    check("next_cut_avoids_reverse", i, stray_next.empty() && p.next_stray.empty(),
          "C_{i+1} & RC_i=" + join(stray_next));

    auto next_edges = edge_ids(next.critical);
    bool survives = std::includes(next_edges.begin(), next_edges.end(), cur.cut.begin(),
                                  cur.cut.end());
    check("cut_survives", i, survives && p.cur_stray.empty(),
          "C_i not in N*_{i+1}: " + join(p.cur_stray));

    check("zero_parts_agree", i, p.cur_zero == p.next_zero, "C_i^0=" + join(p.cur_zero));

    Rational c_i = cost_of(cur.cut);
    Rational c_next = cost_of(next.cut);
    check("cost_monotone", i, c_i <= c_next,
          "cost(C_i)=" + format_rational(c_i) + ", cost(C_{i+1})=" + format_rational(c_next));
    Rational with_reverse = c_i + cost_of(p.cur_reverse);
    check("cost_with_reverse", i, with_reverse <= c_next,
          "cost(C_i)+cost(C_i^R)=" + format_rational(with_reverse));

    auto plus = set_union(set_union(p.next_plus, p.cur_zero), p.cur_plus);
    check("plus_contains_cut", i, separates(cur.critical, plus), join(plus));
    auto minus = set_union(set_union(p.next_minus, p.cur_zero), p.cur_minus);
    check("minus_contains_cut", i, separates(cur.critical, minus), join(minus));
  }
  return report;
}

}  // namespace crashlab
