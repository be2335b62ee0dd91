#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "dikin/cli.hpp"
#include "dikin/mps.hpp"

namespace dikin::cli {

namespace {

namespace fs = std::filesystem;

struct Instance {
  std::string name;
  LinearProgram lp;
  std::optional<Vector> x0;
  std::string load_error;
};

struct Cell {
  std::size_t instance = 0;
  Algorithm algorithm = Algorithm::AFS;
  double alpha = 0.0;
  double beta = 0.0;
  double eps = 0.0;
};

struct RunResult {
  SolveStatus status = SolveStatus::NumericalFailure;
  int iterations = 0;
  double seconds = 0.0;
  double final_gap = 0.0;
  std::string error;
  std::string detail;
};

std::optional<std::uint64_t> parse_u64(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::uint64_t v = 0;
  std::istringstream is(s);
  is >> v;
  if (!is || !is.eof()) return std::nullopt;
  return v;
}

Instance load_mps(const std::string& path, const std::optional<double>& clamp) {
  Instance inst;
  inst.name = fs::path(path).stem().string();
  try {
    MpsOptions opts;
    opts.clamp_inf = clamp;
    inst.lp = standardize(parse_mps_file(path, opts).lp).lp;
  } catch (const std::exception& e) {
    inst.load_error = e.what();
  }
  return inst;
}

Instance load_random(const RandomSource& src) {
  Instance inst;
  inst.name = "rand_" + std::to_string(src.m) + "_" + std::to_string(src.n) + "_" + std::to_string(src.seed);
  try {
    RandomLpSpec spec;
    spec.m = static_cast<Eigen::Index>(src.m);
    spec.n = static_cast<Eigen::Index>(src.n);
    spec.seed = src.seed;
    RandomInstance ri = random_dense_lp(spec);
    inst.lp = std::move(ri.lp);
    inst.x0 = std::move(ri.x0);
  } catch (const std::exception& e) {
    inst.load_error = e.what();
  }
  return inst;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

std::vector<std::pair<double, double>> default_pairs() { return {{0.4, 0.2}, {0.5, 0.1}, {0.55, 0.1}}; }

std::optional<std::vector<RandomSource>> parse_random_sources(const std::string& text) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream is(text);
  while (std::getline(is, part, ',')) parts.push_back(part);
  if (parts.size() != 3) return std::nullopt;
  const auto m = parse_u64(parts[0]);
  const auto n = parse_u64(parts[1]);
  if (!m || !n) return std::nullopt;
  std::uint64_t first = 0;
  std::uint64_t last = 0;
  const auto colon = parts[2].find(':');
  if (colon == std::string::npos) {
    const auto s = parse_u64(parts[2]);
    if (!s) return std::nullopt;
    first = last = *s;
  } else {
    const auto a = parse_u64(parts[2].substr(0, colon));
    const auto b = parse_u64(parts[2].substr(colon + 1));
    if (!a || !b || *b < *a) return std::nullopt;
    first = *a;
    last = *b;
  }
  std::vector<RandomSource> out;
  for (std::uint64_t s = first;; ++s) {
    out.push_back({*m, *n, s});
    if (s == last) break;
  }
  return out;
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("DIKIN_ACCEL_THREADS")) {
    const auto v = parse_u64(env);
    if (v && *v > 0) return static_cast<unsigned>(*v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string BenchmarkPlan::problem() const {
  if (random.empty() && mps_paths.empty()) return "no instances";
  if (algorithms.empty()) return "no algorithms";
  if (pairs.empty()) return "no (alpha, beta) pairs";
  if (epsilons.empty()) return "no epsilon values";
  if (repetitions <= 0) return "repetitions must be positive";
  if (output_dir.empty()) return "no output directory";
  return {};
}

int cmd_bench(const BenchmarkPlan& plan, std::ostream& out, std::ostream& err) {
  if (const std::string why = plan.problem(); !why.empty()) {
    err << "error: invalid benchmark plan: " << why << '\n';
    return kExitUsage;
  }

  std::error_code ec;
  fs::create_directories(plan.output_dir, ec);
  if (ec) {
    err << "error: cannot create " << plan.output_dir << ": " << ec.message() << '\n';
    return kExitUsage;
  }
  // Trace names carry no epsilon, so a multi-epsilon plan writes one subdirectory per value.
  const bool eps_dirs = plan.epsilons.size() > 1;
  if (plan.write_traces && eps_dirs) {
    for (double eps : plan.epsilons) {
      fs::create_directories(fs::path(plan.output_dir) / ("eps_" + format_number(eps)), ec);
      if (ec) {
        err << "error: cannot create trace directory: " << ec.message() << '\n';
        return kExitUsage;
      }
    }
  }

  std::vector<Instance> instances;
  for (const auto& src : plan.random) instances.push_back(load_random(src));
  for (const auto& path : plan.mps_paths) instances.push_back(load_mps(path, plan.clamp_inf));
  for (const auto& inst : instances)
    if (!inst.load_error.empty()) err << "warning: " << inst.name << ": " << inst.load_error << '\n';

  std::vector<Cell> cells;
  for (std::size_t i = 0; i < instances.size(); ++i)
    for (double eps : plan.epsilons)
      for (const auto& [alpha, beta] : plan.pairs)
        for (Algorithm a : plan.algorithms) cells.push_back({i, a, alpha, a == Algorithm::AFS ? 0.0 : beta, eps});

  const std::size_t reps = static_cast<std::size_t>(plan.repetitions);
  std::vector<RunResult> results(cells.size() * reps);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t t = next++; t < results.size(); t = next++) {
      const Cell& cell = cells[t / reps];
      const std::size_t rep = t % reps;
      const Instance& inst = instances[cell.instance];
      RunResult& res = results[t];
      if (!inst.load_error.empty()) {
        res.error = "LoadError";
        continue;
      }
      SolverConfig config;
      config.algorithm = cell.algorithm;
      config.alpha = cell.alpha;
      config.beta = cell.beta;
      config.epsilon = cell.eps;
      config.norm_rule = plan.norm_rule;
      config.max_iter = plan.max_iter;
      try {
        const auto start = std::chrono::steady_clock::now();
        const SolveOutcome o = solve(inst.lp, inst.x0, config);
        res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        res.status = o.status;
        res.iterations = o.iterations;
        res.final_gap = o.final_gap;
        if (plan.write_traces) {
          fs::path dir(plan.output_dir);
          if (eps_dirs) dir /= "eps_" + format_number(cell.eps);
          const std::string file = inst.name + "_" + to_string(cell.algorithm) + "_" + format_number(cell.alpha) +
                                   "_" + format_number(cell.beta) + "_run" + std::to_string(rep + 1) + ".csv";
          if (!write_trace_file((dir / file).string(), o.trace)) res.error = "TraceWriteError";
        }
      } catch (const std::exception& e) {
        res.error = "Error";
        res.detail = e.what();
      }
    }
  };

  const unsigned cap = plan.threads > 0 ? plan.threads : default_thread_count();
  const std::size_t nthreads = std::min<std::size_t>(cap, results.size());
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < nthreads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (const auto& res : results)
    if (!res.detail.empty()) err << "warning: run failed: " << res.detail << '\n';

  const fs::path summary_path = fs::path(plan.output_dir) / "summary.csv";
  std::ofstream summary(summary_path);
  if (!summary) {
    err << "error: cannot write " << summary_path.string() << '\n';
    return kExitUsage;
  }
  const char* header = "instance,m,n,algorithm,alpha,beta,eps,reps,median_iters,mean_time_s,final_gap,status";
  summary << header << '\n';
  out << header << '\n';
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const Cell& cell = cells[c];
    const Instance& inst = instances[cell.instance];
    std::vector<double> iters;
    double time_sum = 0.0;
    std::string status;
    for (std::size_t r = 0; r < reps; ++r) {
      const RunResult& res = results[c * reps + r];
      iters.push_back(res.iterations);
      time_sum += res.seconds;
      const std::string s = res.error.empty() ? to_string(res.status) : res.error;
      if (status.empty()) {
        status = s;
      } else if (status != s) {
        status = "Mixed";
      }
    }
    std::ostringstream row;
    row << inst.name << ',' << inst.lp.num_rows() << ',' << inst.lp.num_cols() << ',' << to_string(cell.algorithm)
        << ',' << format_number(cell.alpha) << ',' << format_number(cell.beta) << ',' << format_number(cell.eps)
        << ',' << reps << ',' << format_number(median(iters)) << ','
        << format_number(time_sum / static_cast<double>(reps)) << ','
        << format_number(results[c * reps].final_gap) << ',' << status << '\n';
    summary << row.str();
    out << row.str();
  }
  return kExitOk;
}

}  // namespace dikin::cli
