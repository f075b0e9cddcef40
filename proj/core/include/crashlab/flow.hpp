#pragma once

// Maximum flow and minimum s-t cut over exact rational capacities. An arc
// may be unbounded; that is a sentinel, never a large finite number.

#include <cstddef>
#include <string>
#include <vector>

#include "crashlab/rational.hpp"

namespace crashlab::flow {

class Capacity {
 public:
  Capacity() = default;
  static Capacity finite(Rational value) { return Capacity(false, std::move(value)); }
  static Capacity unbounded() { return Capacity(true, Rational(0)); }

  bool is_unbounded() const { return unbounded_; }
  // Only meaningful for finite capacities.
  const Rational& value() const { return value_; }

  friend bool operator==(const Capacity&, const Capacity&) = default;

 private:
  Capacity(bool unbounded, Rational value) : unbounded_(unbounded), value_(std::move(value)) {}

  bool unbounded_ = false;
  Rational value_{0};
};

std::string to_string(const Capacity& capacity);

struct Arc {
  std::string id;
  std::size_t from = 0;
  std::size_t to = 0;
  Capacity capacity;
};

struct FlowGraph {
  std::size_t node_count = 0;
  std::size_t source = 0;
  std::size_t sink = 1;
  std::vector<Arc> arcs;
};

struct CutResult {
  // Indices into FlowGraph::arcs of every arc from the source side to the
  // sink side, ascending.
  std::vector<std::size_t> cut_arcs;
  // source_side[v] is true for v in S.
  std::vector<bool> source_side;
  Capacity cost;

  friend bool operator==(const CutResult&, const CutResult&) = default;
};

// Minimum s-t cut. Among minimum cuts the one whose source side is the set
// reachable from the source in the final residual graph is returned. When
// every cut contains an unbounded arc the cost is unbounded and the witness
// partition is S = {source}. Throws std::invalid_argument on a malformed
// graph (source == sink, endpoint out of range, negative capacity).
CutResult min_cut(const FlowGraph& g);

Capacity max_flow_value(const FlowGraph& g);

}  // namespace crashlab::flow
