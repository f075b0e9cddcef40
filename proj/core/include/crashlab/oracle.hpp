#pragma once

// Exhaustive exact solvers. They share no code with the fast paths so that
// they can falsify them: crash feasibility is decided by recomputing the
// project duration only, and LIS lengths come from subset scans.

#include <cstdint>
#include <span>

#include "crashlab/klis.hpp"
#include "crashlab/network.hpp"
#include "crashlab/rational.hpp"

namespace crashlab::oracle {

struct OracleBudget {
  std::uint64_t max_states = std::uint64_t{1} << 26;
};

struct ExactCrash {
  Plan plan;
  Rational cost;
  std::uint64_t states = 0;
};

// Minimum-cost plan shortening the project by at least k days, over all
// integer plans. Requires prod(b_i - a_i + 1) <= budget (BudgetExceeded);
// throws NoPlan when k > k_max. Convex schedules are priced by prefix sums.
ExactCrash exact_crash_cost(const ProjectNetwork& net, int k, OracleBudget budget = {});

// Maximum total length of k disjoint increasing subsequences. Requires
// (min(k, n) + 1)^n <= budget. Parts are ordered by non-increasing length.
SubseqSelection exact_klis(std::span<const Value> seq, int k, OracleBudget budget = {});

// Subset scan; n <= 20.
int exact_lis_length(std::span<const Value> seq);

}  // namespace crashlab::oracle
