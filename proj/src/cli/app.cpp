#include <iostream>

#include "CLI11.hpp"
#include "dikin/cli.hpp"

namespace dikin::cli {

namespace {

constexpr double kDefaultClamp = 1e9;

void add_clamp_option(CLI::App& cmd, std::string& raw) {
  cmd.add_option("--clamp-inf", raw, "Replace infinite b and c entries by +/- VALUE (default 1e9)")
      ->expected(0, 1)
      ->type_name("[VALUE]");
}

bool resolve_clamp(const CLI::App& cmd, const std::string& raw, std::optional<double>& target, std::ostream& err) {
  if (cmd.count("--clamp-inf") == 0) return true;
  if (raw.empty()) {
    target = kDefaultClamp;
    return true;
  }
  try {
    std::size_t used = 0;
    target = std::stod(raw, &used);
    if (used != raw.size() || !(*target > 0.0)) throw std::invalid_argument(raw);
  } catch (const std::exception&) {
    err << "error: --clamp-inf expects a positive number, got '" << raw << "'\n";
    return false;
  }
  return true;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Affine scaling LP solver (AFS, GAFS, AAFS)"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  std::vector<std::uint64_t> random_triple;
  std::string solve_clamp;
  std::string solve_mps;
  std::string solve_trace;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve one instance");
  solve_cmd->add_option("--mps", solve_mps, "MPS file")->type_name("PATH");
  solve_cmd->add_option("--random", random_triple, "Seeded random instance")->expected(3)->type_name("M N SEED");
  solve_cmd->add_option("--algorithm", solve_args.algorithm, "afs | gafs | aafs")->capture_default_str();
  solve_cmd->add_option("--alpha", solve_args.alpha, "Step length")->capture_default_str();
  solve_cmd->add_option("--beta", solve_args.beta, "Momentum weight (default 0.1, 0 for afs)");
  solve_cmd->add_option("--eps", solve_args.eps, "Duality gap tolerance")->capture_default_str();
  solve_cmd->add_option("--max-iter", solve_args.max_iter, "Iteration limit")->capture_default_str();
  solve_cmd->add_option("--norm", solve_args.norm, "gamma | l2")->capture_default_str();
  solve_cmd->add_option("--trace", solve_trace, "Write the per-iteration trace CSV")->type_name("PATH");
  add_clamp_option(*solve_cmd, solve_clamp);
  solve_cmd->add_flag("--no-enforce-q", solve_args.no_enforce_q, "Allow (alpha, beta) outside the admissible region");

  BenchmarkPlan plan;
  std::vector<std::string> bench_random;
  std::vector<std::string> bench_algorithms{"afs", "gafs", "aafs"};
  std::vector<std::string> bench_pairs;
  std::string bench_norm = "gamma";
  std::string bench_clamp;
  bool no_traces = false;
  plan.epsilons = {1e-4};
  CLI::App* bench_cmd = app.add_subcommand("bench", "Run a benchmark sweep and write CSV summaries");
  bench_cmd->add_option("--random", bench_random, "Random instances M,N,SEED or M,N,FIRST:LAST")
      ->type_name("SPEC")
      ->take_all();
  bench_cmd->add_option("--mps", plan.mps_paths, "MPS files")->type_name("PATH")->take_all();
  bench_cmd->add_option("--algorithms", bench_algorithms, "Algorithms to run")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--pairs", bench_pairs, "alpha:beta pairs (default 0.4:0.2,0.5:0.1,0.55:0.1)")
      ->delimiter(',');
  bench_cmd->add_option("--eps", plan.epsilons, "Gap tolerances")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--reps", plan.repetitions, "Repetitions per configuration")->capture_default_str();
  bench_cmd->add_option("--out", plan.output_dir, "Output directory")->type_name("DIR");
  bench_cmd->add_option("--norm", bench_norm, "gamma | l2")->capture_default_str();
  bench_cmd->add_option("--max-iter", plan.max_iter, "Iteration limit")->capture_default_str();
  bench_cmd->add_option("--threads", plan.threads, "Worker cap (default DIKIN_ACCEL_THREADS or all cores)");
  add_clamp_option(*bench_cmd, bench_clamp);
  bench_cmd->add_flag("--no-traces", no_traces, "Skip per-run trace files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (solve_cmd->parsed()) {
    if (!solve_mps.empty()) solve_args.mps_path = solve_mps;
    if (!random_triple.empty()) solve_args.random = std::array{random_triple[0], random_triple[1], random_triple[2]};
    if (!solve_trace.empty()) solve_args.trace_path = solve_trace;
    if (!resolve_clamp(*solve_cmd, solve_clamp, solve_args.clamp_inf, std::cerr)) return kExitUsage;
    if (solve_args.mps_path.has_value() == solve_args.random.has_value()) {
      std::cerr << "error: give exactly one of --mps PATH or --random M N SEED\n\n" << solve_cmd->help();
      return kExitUsage;
    }
    return cmd_solve(solve_args, std::cout, std::cerr);
  }

  for (const auto& spec : bench_random) {
    const auto sources = parse_random_sources(spec);
    if (!sources) {
      std::cerr << "error: bad --random spec '" << spec << "' (expected M,N,SEED or M,N,FIRST:LAST)\n";
      return kExitUsage;
    }
    plan.random.insert(plan.random.end(), sources->begin(), sources->end());
  }
  for (const auto& name : bench_algorithms) {
    const auto a = parse_algorithm(name);
    if (!a) {
      std::cerr << "error: unknown algorithm '" << name << "'\n";
      return kExitUsage;
    }
    plan.algorithms.push_back(*a);
  }
  if (bench_pairs.empty()) {
    plan.pairs = default_pairs();
  } else {
    for (const auto& p : bench_pairs) {
      const auto colon = p.find(':');
      try {
        if (colon == std::string::npos) throw std::invalid_argument(p);
        plan.pairs.emplace_back(std::stod(p.substr(0, colon)), std::stod(p.substr(colon + 1)));
      } catch (const std::exception&) {
        std::cerr << "error: bad pair '" << p << "' (expected alpha:beta)\n";
        return kExitUsage;
      }
    }
  }
  if (bench_norm == "gamma") {
    plan.norm_rule = NormRule::Gamma;
  } else if (bench_norm == "l2") {
    plan.norm_rule = NormRule::L2;
  } else {
    std::cerr << "error: unknown norm rule '" << bench_norm << "'\n";
    return kExitUsage;
  }
  if (!resolve_clamp(*bench_cmd, bench_clamp, plan.clamp_inf, std::cerr)) return kExitUsage;
  plan.write_traces = !no_traces;
  for (const auto& [alpha, beta] : plan.pairs) {
    SolverConfig probe;
    probe.alpha = alpha;
    probe.beta = beta;
    try {
      probe.validate();
    } catch (const SolverError& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitUsage;
    }
  }
  return cmd_bench(plan, std::cout, std::cerr);
}

}  // namespace dikin::cli
