#include <ostream>

#include "dikin/cli.hpp"
#include "dikin/mps.hpp"

namespace dikin::cli {

namespace {

struct LoadedInstance {
  std::string name;
  LinearProgram lp;
  std::optional<Vector> x0;
  double objective_offset = 0.0;
};

LoadedInstance load(const SolveArgs& args) {
  LoadedInstance inst;
  if (args.mps_path) {
    MpsOptions opts;
    opts.clamp_inf = args.clamp_inf;
    const ParsedMps parsed = parse_mps_file(*args.mps_path, opts);
    StandardForm sf = standardize(parsed.lp);
    inst.name = parsed.document.name.substr(0, parsed.document.name.find_first_of(" \t"));
    if (inst.name.empty()) inst.name = *args.mps_path;
    inst.lp = std::move(sf.lp);
    inst.objective_offset = sf.map.objective_offset;
  } else {
    const auto& r = *args.random;
    RandomLpSpec spec;
    spec.m = static_cast<Eigen::Index>(r[0]);
    spec.n = static_cast<Eigen::Index>(r[1]);
    spec.seed = r[2];
    RandomInstance ri = random_dense_lp(spec);
    inst.name = "rand_" + std::to_string(r[0]) + "_" + std::to_string(r[1]) + "_" + std::to_string(r[2]);
    inst.lp = std::move(ri.lp);
    inst.x0 = std::move(ri.x0);
  }
  return inst;
}

}  // namespace

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  if (args.mps_path.has_value() == args.random.has_value()) {
    err << "error: give exactly one of --mps PATH or --random M N SEED\n";
    return kExitUsage;
  }

  SolverConfig config;
  const auto algorithm = parse_algorithm(args.algorithm);
  if (!algorithm) {
    err << "error: unknown algorithm '" << args.algorithm << "' (expected afs, gafs or aafs)\n";
    return kExitUsage;
  }
  config.algorithm = *algorithm;
  if (args.norm == "gamma") {
    config.norm_rule = NormRule::Gamma;
  } else if (args.norm == "l2") {
    config.norm_rule = NormRule::L2;
  } else {
    err << "error: unknown norm rule '" << args.norm << "' (expected gamma or l2)\n";
    return kExitUsage;
  }
  config.alpha = args.alpha;
  config.beta = args.beta.value_or(config.algorithm == Algorithm::AFS ? 0.0 : 0.1);
  config.epsilon = args.eps;
  config.max_iter = args.max_iter;
  config.enforce_Q = !args.no_enforce_q;
  try {
    config.validate();
  } catch (const SolverError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  LoadedInstance inst;
  try {
    inst = load(args);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  SolveOutcome outcome;
  try {
    outcome = solve(inst.lp, inst.x0, config);
  } catch (const SolverError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ModelError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  for (const auto& w : outcome.warnings) err << "warning: " << w << '\n';

  out << "instance: " << inst.name << " (m=" << inst.lp.num_rows() << ", n=" << inst.lp.num_cols() << ")\n";
  out << "algorithm: " << to_string(config.algorithm) << " alpha=" << format_number(config.alpha)
      << " beta=" << format_number(config.beta) << " norm=" << to_string(config.norm_rule)
      << " eps=" << format_number(config.epsilon) << '\n';
  out << "status: " << to_string(outcome.status) << '\n';
  out << "objective: " << format_number(outcome.objective + inst.objective_offset) << '\n';
  out << "iterations: " << outcome.iterations << '\n';
  out << "final_gap: " << format_number(outcome.final_gap) << '\n';
  if (outcome.used_phase1) out << "artificial: " << format_number(outcome.artificial_value) << '\n';
  if (!outcome.message.empty()) out << "message: " << outcome.message << '\n';

  if (args.trace_path && !write_trace_file(*args.trace_path, outcome.trace)) {
    err << "error: cannot write trace to " << *args.trace_path << '\n';
    return kExitUsage;
  }
  return exit_code(outcome.status);
}

}  // namespace dikin::cli
