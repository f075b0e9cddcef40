#pragma once

// JSON and text formats shared by the CLI and the test suites.
//
// Project:   {"nodes": [..], "source": s, "sink": t,
//             "edges": [{"id", "from", "to", "a", "b", "c"}]}
//            "c" is a scalar (linear rate) or a list of b - a marginal costs;
//            costs may be JSON numbers or decimal / fraction strings.
// Plan:      {"amounts": {"edge-id": days}}
// Sequence:  one line of comma- or whitespace-separated integers.
// Selection: {"rounds": [[indices]], "values": [[values]], "total": n}

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "crashlab/crashing.hpp"
#include "crashlab/klis.hpp"
#include "crashlab/network.hpp"
#include "crashlab/oracle.hpp"

namespace crashlab::io {

using nlohmann::json;

// Parses and validates. Structural problems throw ParseError; invariant
// violations throw the matching validation error.
ProjectNetwork network_from_json(const json& doc);
json network_to_json(const ProjectNetwork& net);

Plan plan_from_json(const json& doc);
json plan_to_json(const Plan& plan);

Sequence parse_sequence(std::string_view text);
std::string format_sequence(std::span<const Value> seq);

// Accepts {"rounds": [[..]]} or a bare [[..]].
std::vector<IndexList> script_from_json(const json& doc);
json script_to_json(const std::vector<IndexList>& script);

json selection_to_json(std::span<const Value> seq, const SubseqSelection& selection);
json lis_to_json(std::span<const Value> seq, const IndexList& indices);

json greedy_result_to_json(const GreedyCrashResult& result, int k);
json exact_crash_to_json(const oracle::ExactCrash& result, int k);
json trace_to_json(const DecompositionTrace& trace);
json report_to_json(const TraceReport& report);

// Rational as JSON: exact string form (see format_rational).
json rational_to_json(const Rational& value);
Rational rational_from_json(const json& value);

// Dumps with two-space indentation and a trailing newline.
std::string dump(const json& doc);

}  // namespace crashlab::io
