#pragma once

// Longest strictly increasing subsequences and the greedy k-LIS heuristic
// that repeatedly extracts one.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace crashlab {

using Value = std::int64_t;
using Sequence = std::vector<Value>;
using IndexList = std::vector<std::size_t>;

enum class TieBreak {
  kCanonical,  // lexicographically smallest index list
  kLatest,     // lexicographically largest index list
};

struct SubseqSelection {
  std::vector<IndexList> rounds;  // indices into the original sequence
  std::size_t total_length = 0;

  friend bool operator==(const SubseqSelection&, const SubseqSelection&) = default;
};

IndexList lis(std::span<const Value> seq, TieBreak policy = TieBreak::kCanonical);

// k rounds of "take an LIS of what is left, remove it". Rounds after the
// residue runs dry are empty.
SubseqSelection greedy_klis(std::span<const Value> seq, int k,
                            TieBreak policy = TieBreak::kCanonical);

// Greedy run whose choices are dictated by `script`. Each scripted list must
// be an increasing subsequence of the current residue (ScriptNotIncreasing)
// and as long as the residue's LIS (ScriptNotMaximalError).
SubseqSelection greedy_klis_scripted(std::span<const Value> seq, int k,
                                     const std::vector<IndexList>& script);

// True when `indices` are strictly increasing positions with strictly
// increasing values.
bool is_increasing_subsequence(std::span<const Value> seq, const IndexList& indices);

// True when the lists are pairwise disjoint increasing subsequences.
bool is_valid_selection(std::span<const Value> seq, const SubseqSelection& selection);

std::vector<std::vector<Value>> selection_values(std::span<const Value> seq,
                                                 const SubseqSelection& selection);

}  // namespace crashlab
