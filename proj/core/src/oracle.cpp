#include "crashlab/oracle.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include "crashlab/errors.hpp"

namespace crashlab::oracle {
namespace {

// Longest source-to-sink length by memoized search over out-edges. This is
// deliberately a different route than the topological DP in network.cpp.
class LongestPath {
 public:
  explicit LongestPath(const ProjectNetwork& net) : net_(net), out_(net.nodes.size()) {
    for (std::size_t i = 0; i < net.edges.size(); ++i) out_[net.edges[i].from].push_back(i);
  }

  int operator()(const std::vector<int>& lengths) {
    lengths_ = &lengths;
    memo_.assign(net_.nodes.size(), std::nullopt);
    return from(net_.source).value_or(0);
  }

 private:
  // Longest distance from v to the sink, nullopt if the sink is unreachable.
  std::optional<int> from(std::size_t v) {
    if (v == net_.sink) return 0;
    if (memo_[v]) return *memo_[v];
    std::optional<int> best;
    for (auto ei : out_[v]) {
      auto rest = from(net_.edges[ei].to);
      if (!rest) continue;
      int cand = (*lengths_)[ei] + *rest;
      if (!best || cand > *best) best = cand;
    }
    memo_[v] = best;
    return best;
  }

  const ProjectNetwork& net_;
  std::vector<std::vector<std::size_t>> out_;
  const std::vector<int>* lengths_ = nullptr;
  std::vector<std::optional<std::optional<int>>> memo_;
};

[[noreturn]] void over_budget(const std::string& what, std::uint64_t budget) {
  throw Error(ErrorCode::kBudgetExceeded,
              what + " exceeds the oracle budget of " + std::to_string(budget) + " states");
}

// base^exp, or nullopt once it passes `cap`.
std::optional<std::uint64_t> bounded_power(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t value = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && value > cap / base) return std::nullopt;
    value *= base;
  }
  return value > cap ? std::nullopt : std::optional<std::uint64_t>(value);
}

class KlisSearch {
 public:
  KlisSearch(std::span<const Value> seq, std::size_t classes, std::uint64_t budget)
      : seq_(seq), classes_(classes), budget_(budget), assign_(seq.size(), kUnused) {}

  void run() {
    last_.clear();
    dfs(0, 0);
  }

  const std::vector<std::size_t>& best_assignment() const { return best_assign_; }
  std::size_t best_total() const { return best_total_; }
  std::uint64_t states() const { return states_; }

  static constexpr std::size_t kUnused = std::numeric_limits<std::size_t>::max();

 private:
  void dfs(std::size_t pos, std::size_t total) {
    if (++states_ > budget_) over_budget("k-LIS enumeration", budget_);
    if (have_best_ && total + (seq_.size() - pos) <= best_total_) return;
    if (pos == seq_.size()) {
      best_total_ = total;
      best_assign_ = assign_;
      have_best_ = true;
      return;
    }
    const Value v = seq_[pos];
    for (std::size_t c = 0; c < last_.size(); ++c) {
      if (last_[c] >= v) continue;
      Value saved = last_[c];
      last_[c] = v;
      assign_[pos] = c;
      dfs(pos + 1, total + 1);
      last_[c] = saved;
    }
    // Classes are interchangeable: only ever open the next unused one.
    if (last_.size() < classes_) {
      last_.push_back(v);
      assign_[pos] = last_.size() - 1;
      dfs(pos + 1, total + 1);
      last_.pop_back();
    }
    assign_[pos] = kUnused;
    dfs(pos + 1, total);
  }

  std::span<const Value> seq_;
  std::size_t classes_;
  std::uint64_t budget_;
  std::vector<std::size_t> assign_;
  std::vector<Value> last_;
  std::vector<std::size_t> best_assign_;
  std::size_t best_total_ = 0;
  bool have_best_ = false;
  std::uint64_t states_ = 0;
};

}  // namespace

ExactCrash exact_crash_cost(const ProjectNetwork& net, int k, OracleBudget budget) {
  if (budget.max_states == 0) throw std::invalid_argument("oracle budget must be positive");
  std::uint64_t plans = 1;
  for (const auto& e : net.edges) {
    auto radix = static_cast<std::uint64_t>(e.crashable_days() + 1);
    if (plans > budget.max_states / radix) over_budget("crash plan enumeration", budget.max_states);
    plans *= radix;
  }

  const std::size_t m = net.edges.size();
  std::vector<std::vector<Rational>> prefix(m);
  std::vector<int> base_len(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Edge& e = net.edges[i];
    base_len[i] = e.normal_len;
    prefix[i].push_back(0);
    for (const auto& c : e.cost.per_day()) prefix[i].push_back(prefix[i].back() + c);
  }

  LongestPath longest(net);
  const int base = longest(base_len);

  std::vector<int> x(m, 0);
  std::vector<int> lengths = base_len;
  std::optional<Rational> best_cost;
  std::vector<int> best_x;
  ExactCrash result;
  for (;;) {
    ++result.states;
    Rational cost = 0;
    for (std::size_t i = 0; i < m; ++i) cost += prefix[i][static_cast<std::size_t>(x[i])];
    if (!best_cost || cost < *best_cost) {
      for (std::size_t i = 0; i < m; ++i) lengths[i] = base_len[i] - x[i];
      if (base - longest(lengths) >= k) {
        best_cost = cost;
        best_x = x;
      }
    }
    // Mixed-radix increment.
    std::size_t i = 0;
    while (i < m && x[i] == net.edges[i].crashable_days()) x[i++] = 0;
    if (i == m) break;
    ++x[i];
  }

  if (!best_cost) {
    throw Error(ErrorCode::kNoPlan, "no plan shortens the project by " + std::to_string(k) +
                                        " days");
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (best_x[i] > 0) result.plan.amounts[net.edges[i].id] = best_x[i];
  }
  result.cost = *best_cost;
  return result;
}

SubseqSelection exact_klis(std::span<const Value> seq, int k, OracleBudget budget) {
  if (k < 1) throw std::invalid_argument("exact_klis needs k >= 1");
  if (budget.max_states == 0) throw std::invalid_argument("oracle budget must be positive");
  const std::size_t classes = std::min(static_cast<std::size_t>(k), seq.size());
  if (!bounded_power(classes + 1, seq.size(), budget.max_states)) {
    over_budget("k-LIS enumeration", budget.max_states);
  }

  // The search tree has at most 2 (c+1)^n nodes, so this cap is never the
  // binding one once the precheck passed.
  const std::uint64_t node_cap = budget.max_states > std::numeric_limits<std::uint64_t>::max() / 2
                                     ? std::numeric_limits<std::uint64_t>::max()
                                     : budget.max_states * 2;
  KlisSearch search(seq, classes, node_cap);
  search.run();

  std::vector<IndexList> parts(classes);
  const auto& assign = search.best_assignment();
  for (std::size_t i = 0; i < assign.size(); ++i) {
    if (assign[i] != KlisSearch::kUnused) parts[assign[i]].push_back(i);
  }
  std::stable_sort(parts.begin(), parts.end(), [](const IndexList& a, const IndexList& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    if (a.empty()) return false;
    return a.front() < b.front();
  });
  parts.resize(static_cast<std::size_t>(k));

  SubseqSelection out;
  out.rounds = std::move(parts);
  out.total_length = search.best_total();
  return out;
}

int exact_lis_length(std::span<const Value> seq) {
  constexpr std::size_t kMaxLength = 20;
  if (seq.size() > kMaxLength) {
    throw Error(ErrorCode::kBudgetExceeded,
                "subset scan is limited to sequences of length " + std::to_string(kMaxLength));
  }
  const std::size_t n = seq.size();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    int count = 0;
    bool ok = true;
    std::optional<Value> prev;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1u)) continue;
      if (prev && seq[i] <= *prev) ok = false;
      prev = seq[i];
      ++count;
    }
    if (ok) best = std::max(best, count);
  }
  return best;
}

}  // namespace crashlab::oracle
