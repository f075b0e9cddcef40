#include "crashlab/klis.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "crashlab/errors.hpp"

namespace crashlab {
namespace {

// Patience sorting: length of the longest strictly increasing subsequence
// ending at each position.
std::vector<std::size_t> lengths_ending_at(std::span<const Value> seq) {
  std::vector<Value> tails;
  std::vector<std::size_t> out(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    auto it = std::lower_bound(tails.begin(), tails.end(), seq[i]);
    out[i] = static_cast<std::size_t>(it - tails.begin()) + 1;
    if (it == tails.end()) {
      tails.push_back(seq[i]);
    } else {
      *it = seq[i];
    }
  }
  return out;
}

// Same, for subsequences starting at each position (scan from the right on
// negated values).
std::vector<std::size_t> lengths_starting_at(std::span<const Value> seq) {
  std::vector<Value> tails;
  std::vector<std::size_t> out(seq.size());
  for (std::size_t r = seq.size(); r-- > 0;) {
    Value x = -seq[r];
    auto it = std::lower_bound(tails.begin(), tails.end(), x);
    out[r] = static_cast<std::size_t>(it - tails.begin()) + 1;
    if (it == tails.end()) {
      tails.push_back(x);
    } else {
      *it = x;
    }
  }
  return out;
}

IndexList lis_canonical(std::span<const Value> seq) {
  auto from = lengths_starting_at(seq);
  std::size_t need = from.empty() ? 0 : *std::max_element(from.begin(), from.end());
  IndexList out;
  std::size_t j = 0;
  while (need > 0) {
    while (from[j] != need || (!out.empty() && seq[j] <= seq[out.back()])) ++j;
    out.push_back(j++);
    --need;
  }
  return out;
}

IndexList lis_latest(std::span<const Value> seq) {
  auto to = lengths_ending_at(seq);
  std::size_t need = to.empty() ? 0 : *std::max_element(to.begin(), to.end());
  IndexList out;
  std::size_t j = seq.size();
  while (need > 0) {
    --j;
    while (to[j] != need || (!out.empty() && seq[j] >= seq[out.back()])) --j;
    out.push_back(j);
    --need;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

struct Residue {
  std::vector<Value> values;
  IndexList original;  // position in the input sequence
};

Residue residue_of(std::span<const Value> seq, const std::vector<bool>& alive) {
  Residue r;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (alive[i]) {
      r.values.push_back(seq[i]);
      r.original.push_back(i);
    }
  }
  return r;
}

}  // namespace

IndexList lis(std::span<const Value> seq, TieBreak policy) {
  return policy == TieBreak::kCanonical ? lis_canonical(seq) : lis_latest(seq);
}

bool is_increasing_subsequence(std::span<const Value> seq, const IndexList& indices) {
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= seq.size()) return false;
    if (i > 0 && (indices[i] <= indices[i - 1] || seq[indices[i]] <= seq[indices[i - 1]])) {
      return false;
    }
  }
  return true;
}

bool is_valid_selection(std::span<const Value> seq, const SubseqSelection& selection) {
  std::vector<bool> used(seq.size(), false);
  std::size_t total = 0;
  for (const auto& round : selection.rounds) {
    if (!is_increasing_subsequence(seq, round)) return false;
    for (auto i : round) {
      if (used[i]) return false;
      used[i] = true;
    }
    total += round.size();
  }
  return total == selection.total_length;
}

std::vector<std::vector<Value>> selection_values(std::span<const Value> seq,
                                                 const SubseqSelection& selection) {
  std::vector<std::vector<Value>> out;
  for (const auto& round : selection.rounds) {
    std::vector<Value> vals;
    for (auto i : round) vals.push_back(seq[i]);
    out.push_back(std::move(vals));
  }
  return out;
}

SubseqSelection greedy_klis(std::span<const Value> seq, int k, TieBreak policy) {
  if (k < 1) throw std::invalid_argument("greedy_klis needs k >= 1");
  std::vector<bool> alive(seq.size(), true);
  SubseqSelection out;
  for (int round = 0; round < k; ++round) {
    Residue r = residue_of(seq, alive);
    IndexList picked;
    for (auto local : lis(r.values, policy)) {
      picked.push_back(r.original[local]);
      alive[r.original[local]] = false;
    }
    out.total_length += picked.size();
    out.rounds.push_back(std::move(picked));
  }
  return out;
}

SubseqSelection greedy_klis_scripted(std::span<const Value> seq, int k,
                                     const std::vector<IndexList>& script) {
  if (k < 1) throw std::invalid_argument("greedy_klis_scripted needs k >= 1");
  if (script.size() != static_cast<std::size_t>(k)) {
    throw std::invalid_argument("script has " + std::to_string(script.size()) +
                                " entries, expected " + std::to_string(k));
  }
  std::vector<bool> alive(seq.size(), true);
  SubseqSelection out;
  for (int round = 1; round <= k; ++round) {
    const IndexList& entry = script[static_cast<std::size_t>(round) - 1];
    for (auto i : entry) {
      if (i >= seq.size() || !alive[i]) {
        throw Error(ErrorCode::kScriptNotIncreasing,
                    "round " + std::to_string(round) + " uses position " + std::to_string(i) +
                        " which is not in the current residue");
      }
    }
    if (!is_increasing_subsequence(seq, entry)) {
      throw Error(ErrorCode::kScriptNotIncreasing,
                  "round " + std::to_string(round) + " is not an increasing subsequence");
    }
    Residue r = residue_of(seq, alive);
    std::size_t best = lis(r.values).size();
    if (entry.size() != best) throw ScriptNotMaximalError(round, entry.size(), best);

    for (auto i : entry) alive[i] = false;
    out.total_length += entry.size();
    out.rounds.push_back(entry);
  }
  return out;
}

}  // namespace crashlab
