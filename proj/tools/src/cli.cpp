#include "crashlab_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "crashlab/crashing.hpp"
#include "crashlab/errors.hpp"
#include "crashlab/experiment.hpp"
#include "crashlab/generators.hpp"
#include "crashlab/io.hpp"
#include "crashlab/klis.hpp"
#include "crashlab/oracle.hpp"

namespace crashlab::cli {
namespace {

using io::json;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << text;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotCrashable:
    case ErrorCode::kNoPlan:
    case ErrorCode::kNotKCrashing:
      return kExitInfeasible;
    case ErrorCode::kScriptNotIncreasing:
    case ErrorCode::kScriptNotMaximal:
      return kExitScript;
    default:
      return kExitInput;
  }
}

TieBreak parse_policy(const std::string& name) {
  if (name == "canonical") return TieBreak::kCanonical;
  if (name == "latest") return TieBreak::kLatest;
  throw InputError("unknown policy '" + name + "'");
}

struct CrashArgs {
  int k = 1;
  std::string input;
  bool exact = false;
  bool trace = false;
  std::string plan;
  std::uint64_t budget = oracle::OracleBudget{}.max_states;
};

int cmd_crash(const CrashArgs& a, std::ostream& out) {
  if (a.k < 1) throw InputError("-k must be at least 1");
  ProjectNetwork net = io::network_from_json(read_json(a.input));
  json doc;
  Plan plan;
  if (a.exact) {
    oracle::ExactCrash r = oracle::exact_crash_cost(net, a.k, {a.budget});
    doc = io::exact_crash_to_json(r, a.k);
    plan = r.plan;
  } else {
    GreedyCrashResult r = greedy_crash(net, a.k);
    doc = io::greedy_result_to_json(r, a.k);
    plan = r.plan;
  }
  int code = kExitOk;
  if (a.trace) {
    if (!a.plan.empty()) plan = io::plan_from_json(read_json(a.plan));
    DecompositionTrace trace = decompose(net, plan, a.k);
    TraceReport report = verify_trace(trace);
    doc["trace"] = io::trace_to_json(trace);
    doc["verification"] = io::report_to_json(report);
    if (!report.all_passed()) code = kExitFailure;
  }
  out << io::dump(doc);
  return code;
}

Sequence read_sequence(const std::string& path, std::istream& in) {
  std::string line;
  if (path.empty() || path == "-") {
    std::getline(in, line);
  } else {
    std::istringstream f(read_file(path));
    std::getline(f, line);
  }
  return io::parse_sequence(line);
}

struct KlisArgs {
  int k = 1;
  std::string input;
  bool exact = false;
  std::string script;
  std::string policy = "canonical";
  std::uint64_t budget = oracle::OracleBudget{}.max_states;
};

int cmd_klis(const KlisArgs& a, std::istream& in, std::ostream& out) {
  if (a.k < 1) throw InputError("-k must be at least 1");
  TieBreak policy = parse_policy(a.policy);
  Sequence seq = read_sequence(a.input, in);
  SubseqSelection sel;
  if (a.exact) {
    sel = oracle::exact_klis(seq, a.k, {a.budget});
  } else if (!a.script.empty()) {
    auto script = io::script_from_json(read_json(a.script));
    if (script.size() != static_cast<std::size_t>(a.k)) {
      throw Error(ErrorCode::kScriptNotIncreasing,
                  "script has " + std::to_string(script.size()) + " rounds, expected " +
                      std::to_string(a.k));
    }
    sel = greedy_klis_scripted(seq, a.k, script);
  } else {
    sel = greedy_klis(seq, a.k, policy);
  }
  out << io::dump(io::selection_to_json(seq, sel));
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Greedy k-crashing and k-LIS toolkit"};
  app.name("crashlab");
  app.require_subcommand(1);

  CrashArgs crash;
  auto* crash_cmd = app.add_subcommand("crash", "Shorten a project by k days");
  crash_cmd->add_option("-k", crash.k, "Days to shorten")->required();
  crash_cmd->add_option("--input", crash.input, "Project JSON file")->required();
  crash_cmd->add_flag("--exact", crash.exact, "Use the exhaustive oracle");
  crash_cmd->add_flag("--trace", crash.trace, "Decompose and verify the plan");
  crash_cmd->add_option("--plan", crash.plan, "Plan JSON to trace instead of the computed one");
  crash_cmd->add_option("--budget", crash.budget, "Oracle state budget");

  KlisArgs klis;
  auto* klis_cmd = app.add_subcommand("klis", "k disjoint increasing subsequences");
  klis_cmd->add_option("-k", klis.k, "Number of subsequences")->required();
  klis_cmd->add_option("--input", klis.input, "Sequence file (default stdin)");
  auto* exact_opt = klis_cmd->add_flag("--exact", klis.exact, "Use the exhaustive oracle");
  klis_cmd->add_option("--script", klis.script, "Script JSON fixing each greedy round")
      ->excludes(exact_opt);
  klis_cmd->add_option("--policy", klis.policy, "LIS tie-break: canonical or latest");
  klis_cmd->add_option("--budget", klis.budget, "Oracle state budget");

  std::string lis_input;
  std::string lis_policy = "canonical";
  auto* lis_cmd = app.add_subcommand("lis", "Longest increasing subsequence");
  lis_cmd->add_option("--input", lis_input, "Sequence file (default stdin)");
  lis_cmd->add_option("--policy", lis_policy, "Tie-break: canonical or latest");

  auto* gen_cmd = app.add_subcommand("gen", "Generate instances");
  gen_cmd->require_subcommand(1);
  auto* fig2_cmd = gen_cmd->add_subcommand("fig2", "Five-job network where greedy is not optimal");

  int matrix_k = 2;
  std::string script_out;
  auto* matrix_cmd = gen_cmd->add_subcommand("matrix", "Anti-diagonal matrix sequence");
  matrix_cmd->add_option("-k", matrix_k, "Matrix size")->required();
  matrix_cmd->add_option("--script-out", script_out, "Write the diagonal script here");

  gen::RandomNetSpec net_spec;
  auto* dag_cmd = gen_cmd->add_subcommand("random-dag", "Seeded random project network");
  dag_cmd->add_option("--nodes", net_spec.node_count, "Node count");
  dag_cmd->add_option("--edges", net_spec.edge_count, "Edge count");
  dag_cmd->add_option("--max-len", net_spec.max_normal_len, "Largest normal duration");
  dag_cmd->add_option("--max-crash", net_spec.max_crashable, "Largest crashable amount");
  dag_cmd->add_option("--cost-min", net_spec.cost_min, "Smallest unit cost");
  dag_cmd->add_option("--cost-max", net_spec.cost_max, "Largest unit cost");
  dag_cmd->add_flag("--convex", net_spec.convex, "Non-decreasing per-day schedules");
  dag_cmd->add_option("--seed", net_spec.seed, "RNG seed");

  int seq_n = 12;
  int seq_range = 9;
  std::uint64_t seq_seed = 0;
  auto* seq_cmd = gen_cmd->add_subcommand("random-seq", "Seeded random sequence");
  seq_cmd->add_option("-n", seq_n, "Length");
  seq_cmd->add_option("--range", seq_range, "Values are drawn from 1..range");
  seq_cmd->add_option("--seed", seq_seed, "RNG seed");

  experiment::ExperimentConfig cfg;
  std::string problem = "crashing";
  std::string exp_policy = "canonical";
  std::string output;
  auto* exp_cmd = app.add_subcommand("experiment", "Greedy against oracle ratio experiment");
  exp_cmd->add_option("--problem", problem, "crashing, crashing-convex, klis or klis-matrix");
  exp_cmd->add_option("--trials", cfg.trials, "Number of trials");
  exp_cmd->add_option("-k", cfg.k, "k (largest k for klis-matrix)");
  exp_cmd->add_option("--seed", cfg.seed, "Base seed; trial t uses seed + t");
  exp_cmd->add_option("--min-nodes", cfg.min_nodes, "Smallest network");
  exp_cmd->add_option("--max-nodes", cfg.max_nodes, "Largest network");
  exp_cmd->add_option("--max-edges", cfg.max_edges, "Most edges");
  exp_cmd->add_option("--max-len", cfg.max_normal_len, "Largest normal duration");
  exp_cmd->add_option("--max-crash", cfg.max_crashable, "Largest crashable amount");
  exp_cmd->add_option("--cost-min", cfg.cost_min, "Smallest unit cost");
  exp_cmd->add_option("--cost-max", cfg.cost_max, "Largest unit cost");
  exp_cmd->add_option("--seq-len", cfg.seq_len, "Sequence length");
  exp_cmd->add_option("--range", cfg.value_range, "Sequence values are 1..range");
  exp_cmd->add_option("--policy", exp_policy, "LIS tie-break: canonical or latest");
  exp_cmd->add_option("--budget", cfg.budget.max_states, "Oracle state budget");
  exp_cmd->add_option("--output", output, "CSV path (default stdout)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (*crash_cmd) return cmd_crash(crash, out);
    if (*klis_cmd) return cmd_klis(klis, in, out);
    if (*lis_cmd) {
      Sequence seq = read_sequence(lis_input, in);
      out << io::dump(io::lis_to_json(seq, lis(seq, parse_policy(lis_policy))));
      return kExitOk;
    }
    if (*fig2_cmd) {
      out << io::dump(io::network_to_json(gen::fig2_network()));
      return kExitOk;
    }
    if (*matrix_cmd) {
      gen::MatrixInstance inst = gen::matrix_sequence({matrix_k});
      out << io::format_sequence(inst.sequence) << "\n";
      if (!script_out.empty()) write_file(script_out, io::dump(io::script_to_json(inst.script)));
      return kExitOk;
    }
    if (*dag_cmd) {
      out << io::dump(io::network_to_json(gen::random_network(net_spec)));
      return kExitOk;
    }
    if (*seq_cmd) {
      out << io::format_sequence(gen::random_sequence(seq_n, seq_range, seq_seed)) << "\n";
      return kExitOk;
    }
    if (*exp_cmd) {
      auto p = experiment::parse_problem(problem);
      if (!p) throw InputError("unknown problem '" + problem + "'");
      cfg.problem = *p;
      cfg.policy = parse_policy(exp_policy);
      experiment::ExperimentResult result = experiment::run_experiment(cfg);
      std::ostringstream csv;
      experiment::write_csv(csv, cfg, result);
      if (output.empty()) {
        out << csv.str();
      } else {
        write_file(output, csv.str());
      }
      if (!result.all_satisfied) {
        err << "error: at least one trial violated its bound\n";
        return kExitFailure;
      }
      return kExitOk;
    }
  } catch (const NotCrashableError& e) {
    err << "error: " << e.what() << " (iteration " << e.iteration() << ")\n";
    return kExitInfeasible;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  err << "error: no command\n";
  return kExitInput;
}

}  // namespace crashlab::cli
