#include "crashlab/experiment.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "crashlab/crashing.hpp"
#include "crashlab/errors.hpp"

namespace crashlab::experiment {
namespace {

bool is_crashing(Problem p) { return p == Problem::kCrashing || p == Problem::kCrashingConvex; }

std::string ratio_text(const Rational& r) {
  return format_fraction(r) + " (" + format_decimal(r) + ")";
}

const char* status_text(RecordStatus s) {
  switch (s) {
    case RecordStatus::kOk: return "true";
    case RecordStatus::kViolated: return "false";
    case RecordStatus::kSkippedBudget: return "skipped:budget";
    case RecordStatus::kSkippedInfeasible: return "skipped:infeasible";
  }
  return "false";
}

// Fills ratio and status from greedy/opt. Crashing is a minimisation, so the
// bound caps the ratio from above; k-LIS is a maximisation.
void judge(RatioRecord& rec, bool minimise) {
  const Rational& g = *rec.greedy;
  const Rational& o = *rec.opt;
  if (o == 0) {
    rec.ratio = Rational(1);
    rec.status = g == 0 ? RecordStatus::kOk : RecordStatus::kViolated;
    return;
  }
  rec.ratio = g / o;
  bool ok = minimise ? g <= rec.bound * o : g >= rec.bound * o;
  rec.status = ok ? RecordStatus::kOk : RecordStatus::kViolated;
}

RatioRecord crashing_trial(const ExperimentConfig& cfg, int trial) {
  RatioRecord rec;
  rec.seed = cfg.seed + static_cast<std::uint64_t>(trial);
  rec.instance = "net-" + std::to_string(trial);
  gen::RandomNetSpec spec = sample_net_spec(cfg, rec.seed);
  ProjectNetwork net = gen::random_network(spec);
  rec.k = std::min(cfg.k, k_max(net));
  rec.bound = harmonic(std::max(rec.k, 1));
  if (rec.k < 1) {
    rec.status = RecordStatus::kSkippedInfeasible;
    return rec;
  }
  try {
    rec.opt = oracle::exact_crash_cost(net, rec.k, cfg.budget).cost;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kBudgetExceeded) throw;
    rec.status = RecordStatus::kSkippedBudget;
    return rec;
  }
  rec.greedy = greedy_crash(net, rec.k).total_cost;
  judge(rec, true);
  return rec;
}

RatioRecord klis_trial(const ExperimentConfig& cfg, int trial) {
  RatioRecord rec;
  rec.seed = cfg.seed + static_cast<std::uint64_t>(trial);
  rec.instance = "seq-" + std::to_string(trial);
  rec.k = cfg.k;
  rec.bound = klis_ratio_bound(cfg.k);
  Sequence seq = gen::random_sequence(cfg.seq_len, cfg.value_range, rec.seed);
  try {
    rec.opt = Rational(oracle::exact_klis(seq, cfg.k, cfg.budget).total_length);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kBudgetExceeded) throw;
    rec.status = RecordStatus::kSkippedBudget;
    return rec;
  }
  rec.greedy = Rational(greedy_klis(seq, cfg.k, cfg.policy).total_length);
  judge(rec, false);
  return rec;
}

RatioRecord matrix_trial(const ExperimentConfig& cfg, int k) {
  RatioRecord rec;
  rec.seed = cfg.seed;
  rec.instance = "matrix-" + std::to_string(k);
  rec.k = k;
  rec.bound = klis_ratio_bound(k);
  gen::MatrixSpec spec{k};
  gen::MatrixInstance inst = gen::matrix_sequence(spec);
  try {
    rec.opt = Rational(oracle::exact_klis(inst.sequence, k, cfg.budget).total_length);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kBudgetExceeded) throw;
    // Too large to enumerate: the columns cover every element, so they are
    // an optimal selection as long as they are valid.
    SubseqSelection columns{gen::matrix_columns(spec), inst.sequence.size()};
    if (!is_valid_selection(inst.sequence, columns)) {
      throw std::logic_error("matrix columns are not a valid selection");
    }
    rec.opt = Rational(columns.total_length);
  }
  rec.greedy = Rational(greedy_klis_scripted(inst.sequence, k, inst.script).total_length);
  judge(rec, false);
  return rec;
}

}  // namespace

const char* problem_name(Problem problem) {
  switch (problem) {
    case Problem::kCrashing: return "crashing";
    case Problem::kCrashingConvex: return "crashing-convex";
    case Problem::kKlis: return "klis";
    case Problem::kKlisMatrix: return "klis-matrix";
  }
  return "unknown";
}

std::optional<Problem> parse_problem(std::string_view name) {
  for (Problem p : {Problem::kCrashing, Problem::kCrashingConvex, Problem::kKlis,
                    Problem::kKlisMatrix}) {
    if (name == problem_name(p)) return p;
  }
  return std::nullopt;
}

void check_config(const ExperimentConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (cfg.k < 1) throw std::invalid_argument("k must be at least 1");
  if (cfg.budget.max_states == 0) throw std::invalid_argument("budget must be positive");
  if (is_crashing(cfg.problem)) {
    if (cfg.min_nodes < 2 || cfg.max_nodes < cfg.min_nodes) {
      throw std::invalid_argument("node range must satisfy 2 <= min_nodes <= max_nodes");
    }
    if (cfg.max_edges < cfg.max_nodes - 1) {
      throw std::invalid_argument("max_edges must be at least max_nodes - 1");
    }
    gen::RandomNetSpec probe;
    probe.node_count = cfg.min_nodes;
    probe.edge_count = cfg.max_edges;
    probe.max_normal_len = cfg.max_normal_len;
    probe.max_crashable = cfg.max_crashable;
    probe.cost_min = cfg.cost_min;
    probe.cost_max = cfg.cost_max;
    gen::check_spec(probe);
  } else if (cfg.problem == Problem::kKlis) {
    if (cfg.seq_len < 0) throw std::invalid_argument("seq_len must be non-negative");
    if (cfg.value_range < 1) throw std::invalid_argument("value_range must be positive");
  }
}

gen::RandomNetSpec sample_net_spec(const ExperimentConfig& cfg, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  gen::RandomNetSpec spec;
  spec.node_count = uniform(cfg.min_nodes, cfg.max_nodes);
  spec.edge_count = uniform(spec.node_count - 1, cfg.max_edges);
  spec.max_normal_len = cfg.max_normal_len;
  spec.max_crashable = cfg.max_crashable;
  spec.cost_min = cfg.cost_min;
  spec.cost_max = cfg.cost_max;
  spec.convex = cfg.problem == Problem::kCrashingConvex;
  spec.seed = rng();
  return spec;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  check_config(cfg);
  ExperimentResult result;
  if (cfg.problem == Problem::kKlisMatrix) {
    for (int k = 2; k <= cfg.k; ++k) result.records.push_back(matrix_trial(cfg, k));
  } else {
    for (int t = 0; t < cfg.trials; ++t) {
      result.records.push_back(is_crashing(cfg.problem) ? crashing_trial(cfg, t)
                                                        : klis_trial(cfg, t));
    }
  }
  const bool minimise = is_crashing(cfg.problem);
  for (const auto& rec : result.records) {
    if (!rec.bound_satisfied()) result.all_satisfied = false;
    if (!rec.ratio) continue;
    if (!result.worst_ratio || (minimise ? *rec.ratio > *result.worst_ratio
                                         : *rec.ratio < *result.worst_ratio)) {
      result.worst_ratio = rec.ratio;
    }
  }
  return result;
}

void write_csv(std::ostream& out, const ExperimentConfig& cfg, const ExperimentResult& result) {
  out << "# problem=" << problem_name(cfg.problem) << " trials=" << cfg.trials << " k=" << cfg.k
      << " seed=" << cfg.seed << " budget=" << cfg.budget.max_states << "\n";
  if (is_crashing(cfg.problem)) {
    out << "# nodes=" << cfg.min_nodes << ".." << cfg.max_nodes << " max_edges=" << cfg.max_edges
        << " max_normal_len=" << cfg.max_normal_len << " max_crashable=" << cfg.max_crashable
        << " costs=" << cfg.cost_min << ".." << cfg.cost_max << "\n";
  } else if (cfg.problem == Problem::kKlis) {
    out << "# seq_len=" << cfg.seq_len << " values=1.." << cfg.value_range << " policy="
        << (cfg.policy == TieBreak::kCanonical ? "canonical" : "latest") << "\n";
  } else {
    out << "# matrix k=2.." << cfg.k << " scripted diagonals\n";
  }
  out << "instance,seed,k,greedy,opt,ratio,bound,ok\n";
  for (const auto& rec : result.records) {
    out << rec.instance << ',' << rec.seed << ',' << rec.k << ','
        << (rec.greedy ? format_rational(*rec.greedy) : "") << ','
        << (rec.opt ? format_rational(*rec.opt) : "") << ','
        << (rec.ratio ? ratio_text(*rec.ratio) : "") << ',' << ratio_text(rec.bound) << ','
        << status_text(rec.status) << "\n";
  }
  out << "summary,,,,," << (result.worst_ratio ? ratio_text(*result.worst_ratio) : "") << ",,"
      << (result.all_satisfied ? "true" : "false") << "\n";
}

}  // namespace crashlab::experiment
