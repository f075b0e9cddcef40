#include "crashlab/io.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "crashlab/errors.hpp"

namespace crashlab::io {
namespace {

[[noreturn]] void parse_error(const std::string& message) {
  throw Error(ErrorCode::kParseError, message);
}

const json& field(const json& obj, const char* name, const std::string& where) {
  if (!obj.is_object() || !obj.contains(name)) parse_error(where + ": missing \"" + name + "\"");
  return obj.at(name);
}

std::string string_field(const json& obj, const char* name, const std::string& where) {
  const json& v = field(obj, name, where);
  if (!v.is_string()) parse_error(where + ": \"" + name + "\" must be a string");
  return v.get<std::string>();
}

int int_field(const json& obj, const char* name, const std::string& where) {
  const json& v = field(obj, name, where);
  if (!v.is_number_integer()) parse_error(where + ": \"" + name + "\" must be an integer");
  return v.get<int>();
}

json string_set(const std::set<std::string>& ids) { return json(std::vector<std::string>(ids.begin(), ids.end())); }

}  // namespace

json rational_to_json(const Rational& value) { return format_rational(value); }

Rational rational_from_json(const json& value) {
  if (value.is_number_integer()) return Rational(value.get<long long>());
  // JSON floats go through their shortest textual form, so 0.1 stays 1/10.
  if (value.is_number_float()) return parse_rational(value.dump());
  if (value.is_string()) return parse_rational(value.get<std::string>());
  parse_error("expected a number or a numeric string, got " + value.dump());
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Networks and plans

ProjectNetwork network_from_json(const json& doc) {
  if (!doc.is_object()) parse_error("project: expected a JSON object");
  const json& nodes = field(doc, "nodes", "project");
  if (!nodes.is_array()) parse_error("project: \"nodes\" must be an array");
  NetworkBuilder builder;
  for (const auto& n : nodes) {
    if (!n.is_string()) parse_error("project: node names must be strings");
    builder.node(n.get<std::string>());
  }
  const json& edges = field(doc, "edges", "project");
  if (!edges.is_array()) parse_error("project: \"edges\" must be an array");
  std::set<std::string> known;
  for (const auto& n : nodes) known.insert(n.get<std::string>());
  if (known.size() != nodes.size()) parse_error("project: duplicate node name");

  for (const auto& e : edges) {
    std::string id = string_field(e, "id", "edge");
    std::string where = "edge '" + id + "'";
    std::string from = string_field(e, "from", where);
    std::string to = string_field(e, "to", where);
    if (!known.count(from) || !known.count(to)) parse_error(where + ": unknown endpoint");
    int a = int_field(e, "a", where);
    int b = int_field(e, "b", where);
    const json& c = field(e, "c", where);
    CostSchedule cost;
    if (c.is_array()) {
      std::vector<Rational> per_day;
      for (const auto& entry : c) per_day.push_back(rational_from_json(entry));
      cost = CostSchedule(std::move(per_day));
    } else {
      cost = CostSchedule::linear(rational_from_json(c), std::max(b - a, 0));
    }
    builder.edge(id, from, to, a, b, std::move(cost));
  }
  std::string source = string_field(doc, "source", "project");
  std::string sink = string_field(doc, "sink", "project");
  if (!known.count(source) || !known.count(sink)) parse_error("project: unknown source or sink");
  return builder.build(source, sink);
}

json network_to_json(const ProjectNetwork& net) {
  json edges = json::array();
  for (const auto& e : net.edges) {
    json c;
    if (e.cost.declared_rate()) {
      c = rational_to_json(*e.cost.declared_rate());
    } else {
      c = json::array();
      for (const auto& v : e.cost.per_day()) c.push_back(rational_to_json(v));
    }
    edges.push_back({{"id", e.id},
                     {"from", net.nodes[e.from]},
                     {"to", net.nodes[e.to]},
                     {"a", e.min_len},
                     {"b", e.normal_len},
                     {"c", c}});
  }
  return {{"nodes", net.nodes},
          {"source", net.nodes[net.source]},
          {"sink", net.nodes[net.sink]},
          {"edges", edges}};
}

Plan plan_from_json(const json& doc) {
  const json& amounts = field(doc, "amounts", "plan");
  if (!amounts.is_object()) parse_error("plan: \"amounts\" must be an object");
  Plan plan;
  for (const auto& [id, x] : amounts.items()) {
    if (!x.is_number_integer()) parse_error("plan: amount for '" + id + "' must be an integer");
    plan.amounts[id] = x.get<int>();
  }
  return plan;
}

json plan_to_json(const Plan& plan) {
  json amounts = json::object();
  for (const auto& [id, x] : plan.amounts) {
    if (x != 0) amounts[id] = x;
  }
  return {{"amounts", amounts}};
}

// ---------------------------------------------------------------------------
// Sequences

Sequence parse_sequence(std::string_view text) {
  Sequence out;
  std::size_t i = 0;
  auto is_sep = [](char ch) { return ch == ',' || std::isspace(static_cast<unsigned char>(ch)); };
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j])) ++j;
    std::string_view token = text.substr(i, j - i);
    Value v = 0;
    const char* begin = token.data();
    if (!token.empty() && token.front() == '+') ++begin;
    auto [end, ec] = std::from_chars(begin, token.data() + token.size(), v);
    if (ec != std::errc() || end != token.data() + token.size()) {
      parse_error("sequence: '" + std::string(token) + "' is not an integer");
    }
    out.push_back(v);
    i = j;
  }
  return out;
}

std::string format_sequence(std::span<const Value> seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(seq[i]);
  }
  return out;
}

std::vector<IndexList> script_from_json(const json& doc) {
  const json& rounds = doc.is_object() ? field(doc, "rounds", "script") : doc;
  if (!rounds.is_array()) parse_error("script: expected an array of index lists");
  std::vector<IndexList> script;
  for (const auto& round : rounds) {
    if (!round.is_array()) parse_error("script: every round must be an array");
    IndexList list;
    for (const auto& i : round) {
      if (!i.is_number_integer() || i.get<long long>() < 0) {
        parse_error("script: indices must be non-negative integers");
      }
      list.push_back(i.get<std::size_t>());
    }
    script.push_back(std::move(list));
  }
  return script;
}

json script_to_json(const std::vector<IndexList>& script) { return {{"rounds", script}}; }

json selection_to_json(std::span<const Value> seq, const SubseqSelection& selection) {
  return {{"rounds", selection.rounds},
          {"values", selection_values(seq, selection)},
          {"total", selection.total_length}};
}

json lis_to_json(std::span<const Value> seq, const IndexList& indices) {
  std::vector<Value> values;
  for (auto i : indices) values.push_back(seq[i]);
  return {{"indices", indices}, {"values", values}, {"length", indices.size()}};
}

// ---------------------------------------------------------------------------
// Crash results

json greedy_result_to_json(const GreedyCrashResult& result, int k) {
  json steps = json::array();
  for (std::size_t i = 0; i < result.steps.size(); ++i) {
    const CrashStep& s = result.steps[i];
    steps.push_back({{"iteration", i + 1},
                     {"cut", string_set(s.cut)},
                     {"cost", rational_to_json(s.cost)},
                     {"duration", s.duration_after}});
  }
  return {{"mode", "greedy"},
          {"k", k},
          {"initial_duration", result.initial_duration},
          {"steps", steps},
          {"durations", result.durations},
          {"plan", plan_to_json(result.plan)},
          {"total_cost", rational_to_json(result.total_cost)}};
}

json exact_crash_to_json(const oracle::ExactCrash& result, int k) {
  return {{"mode", "exact"},
          {"k", k},
          {"plan", plan_to_json(result.plan)},
          {"cost", rational_to_json(result.cost)},
          {"states", result.states}};
}

json trace_to_json(const DecompositionTrace& trace) {
  json levels = json::array();
  for (std::size_t i = 0; i < trace.levels.size(); ++i) {
    const TraceLevel& lv = trace.levels[i];
    std::set<std::string> critical;
    for (const auto& e : lv.critical.edges) critical.insert(e.id);
    levels.push_back({{"level", i + 1},
                      {"duration", duration(lv.network)},
                      {"critical_edges", string_set(critical)},
                      {"residual", plan_to_json(lv.residual)},
                      {"cut", string_set(lv.cut)},
                      {"cut_cost", rational_to_json(lv.cut_cost)},
                      {"source_side", string_set(lv.source_side)},
                      {"sink_side", string_set(lv.sink_side)},
                      {"inner_source", string_set(lv.inner_source)},
                      {"inner_sink", string_set(lv.inner_sink)},
                      {"reverse_cut", string_set(lv.reverse_cut)}});
  }
  json pairs = json::array();
  for (const auto& p : trace.pairs) {
    pairs.push_back({{"level", p.level},
                     {"next_plus", string_set(p.next_plus)},
                     {"next_zero", string_set(p.next_zero)},
                     {"next_minus", string_set(p.next_minus)},
                     {"cur_plus", string_set(p.cur_plus)},
                     {"cur_zero", string_set(p.cur_zero)},
                     {"cur_minus", string_set(p.cur_minus)},
                     {"cur_reverse", string_set(p.cur_reverse)}});
  }
  return {{"k", trace.k}, {"base_duration", trace.base_duration}, {"levels", levels},
          {"pairs", pairs}};
}

json report_to_json(const TraceReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back(
        {{"name", c.name}, {"level", c.level}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return {{"all_passed", report.all_passed()}, {"checks", checks}};
}

}  // namespace crashlab::io
