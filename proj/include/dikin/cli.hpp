#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dikin/solver.hpp"
#include "dikin/trace.hpp"

namespace dikin::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitUnbounded = 2;
inline constexpr int kExitInfeasible = 3;
inline constexpr int kExitIterationLimit = 4;
inline constexpr int kExitNumericalFailure = 5;

int exit_code(SolveStatus status);

/// Fixed trace column order; the header is always written.
inline constexpr const char* kTraceHeader =
    "k,obj,gap,shanks_gap,primal_residual,min_x,min_s,lemma2_residual,step_alpha_eff,step_beta_eff,ratio,"
    "infnorm_relative_step";

void write_trace_csv(std::ostream& out, const std::vector<TraceRecord>& trace);

/// Writes the trace to path; returns false if the file cannot be opened.
bool write_trace_file(const std::string& path, const std::vector<TraceRecord>& trace);

/// Shortest round-trip decimal form of v, used in CSV fields and file names.
std::string format_number(double v);

struct SolveArgs {
  std::optional<std::string> mps_path;
  std::optional<std::array<std::uint64_t, 3>> random;  // m, n, seed
  std::string algorithm = "gafs";
  double alpha = 0.55;
  std::optional<double> beta;  // 0.1 for gafs/aafs, 0 for afs when absent
  double eps = 1e-7;
  int max_iter = 10000;
  std::string norm = "gamma";
  std::optional<std::string> trace_path;
  std::optional<double> clamp_inf;
  bool no_enforce_q = false;
};

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err);

struct RandomSource {
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
};

struct BenchmarkPlan {
  std::vector<RandomSource> random;
  std::vector<std::string> mps_paths;
  std::vector<Algorithm> algorithms;
  std::vector<std::pair<double, double>> pairs;  // (alpha, beta); AFS runs use beta = 0
  std::vector<double> epsilons;
  int repetitions = 15;
  std::string output_dir;
  NormRule norm_rule = NormRule::Gamma;
  int max_iter = 10000;
  std::optional<double> clamp_inf;
  bool write_traces = true;
  /// Worker cap; 0 means DIKIN_ACCEL_THREADS or the hardware concurrency.
  unsigned threads = 0;

  /// Empty string when the plan can run, else the reason it cannot.
  std::string problem() const;
};

/// The three (alpha, beta) pairs of the reference experiments.
std::vector<std::pair<double, double>> default_pairs();

/// Parses "M,N,SEED" or "M,N,FIRST:LAST" into one source per seed.
std::optional<std::vector<RandomSource>> parse_random_sources(const std::string& text);

/// Worker count from DIKIN_ACCEL_THREADS, else std::thread::hardware_concurrency (at least 1).
unsigned default_thread_count();

int cmd_bench(const BenchmarkPlan& plan, std::ostream& out, std::ostream& err);

/// Full command line entry point.
int run(int argc, char** argv);

}  // namespace dikin::cli
