// Acceptance harness: one PASS/FAIL line per criterion, details indented below it.
// Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "dikin/diagnostics.hpp"
#include "dikin/mps.hpp"
#include "fixtures.hpp"
#include "vertex_oracle.hpp"

using namespace dikin;

namespace {

// Pinned tolerances.
constexpr double kMicroObjTol = 1e-6;
constexpr double kMicroPointTol = 1e-5;
constexpr double kOracleRelTol = 1e-5;
constexpr double kRatioSlack = 0.05;
constexpr std::size_t kRatioTail = 20;
constexpr double kShanksExactTol = 1e-12;
constexpr std::size_t kShanksTail = 10;
constexpr double kShanksFraction = 0.8;
constexpr double kOrderedFraction = 0.6;
constexpr double kBeatsAfsFraction = 0.8;
constexpr double kNetlibEps = 1e-3;

struct Result {
  bool pass = true;
  double seconds = 0.0;
  double budget = 0.0;  // 0 means no runtime limit
  std::vector<std::string> details;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    details.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
  void note(const std::string& what) { details.push_back("     " + what); }
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// Every admissible-region solve made by the harness is audited for criterion 3.
struct AuditEntry {
  std::string label;
  NormRule rule = NormRule::Gamma;
  InvariantReport report;
};
std::vector<AuditEntry> g_audit;

SolveOutcome audited_solve(const std::string& label, const LinearProgram& lp, const std::optional<Vector>& x0,
                           const SolverConfig& cfg) {
  SolveOutcome out = solve(lp, x0, cfg);
  if (cfg.enforce_Q) {
    InvariantLimits lim;
    lim.alpha = cfg.alpha;
    lim.beta = cfg.beta;
    lim.rhs_norm = lp.b.norm();
    g_audit.push_back({label, cfg.norm_rule, check_invariants(out.trace, lim)});
  }
  return out;
}

SolverConfig make_config(Algorithm a, double alpha, double beta, double eps) {
  SolverConfig cfg;
  cfg.algorithm = a;
  cfg.alpha = alpha;
  cfg.beta = a == Algorithm::AFS ? 0.0 : beta;
  cfg.epsilon = eps;
  return cfg;
}

constexpr Algorithm kAlgorithms[] = {Algorithm::AFS, Algorithm::GAFS, Algorithm::AAFS};

RandomInstance sweep_instance(std::uint64_t seed) {
  RandomLpSpec spec;
  // m in 3..6, n in 6..12 with n > m.
  spec.m = 3 + static_cast<Eigen::Index>(seed % 4);
  spec.n = std::max<Eigen::Index>(spec.m + 1, 6 + static_cast<Eigen::Index>((seed / 4) % 7));
  spec.seed = seed;
  return random_dense_lp(spec);
}

constexpr std::uint64_t kSweepSeeds = 50;

Result micro_exactness() {
  Result r;
  r.budget = 1.0;
  const auto lp = fixtures::micro_lp();
  const auto truth = oracle::enumerate(lp.A, lp.b, lp.c);
  r.require(truth.verdict == oracle::Verdict::Optimal && std::abs(truth.value - 2.0) < 1e-12,
            fmt("oracle: optimal value %.12g", truth.value));
  for (Algorithm a : kAlgorithms) {
    const auto out = audited_solve(std::string("micro/") + to_string(a), lp, fixtures::ones(2),
                                   make_config(a, 0.55, 0.1, 1e-7));
    const double dx = (out.x_star - truth.x).cwiseAbs().maxCoeff();
    const double dy = std::abs(out.y_star[0] - truth.y[0]);
    r.require(out.status == SolveStatus::Optimal && std::abs(out.objective - 2.0) < kMicroObjTol &&
                  dx < kMicroPointTol && dy < kMicroPointTol,
              fmt("%-4s %s obj=%.10g |x-x*|=%.2e |y-y*|=%.2e iters=%d", to_string(a), to_string(out.status),
                  out.objective, dx, dy, out.iterations));
  }
  return r;
}

Result oracle_sweep() {
  Result r;
  r.budget = 30.0;
  int compared = 0;
  int oracle_optimal = 0;
  int status_mismatch = 0;
  double worst = 0.0;
  for (std::uint64_t seed = 1; seed <= kSweepSeeds; ++seed) {
    const auto inst = sweep_instance(seed);
    const auto truth = oracle::enumerate(inst.lp.A, inst.lp.b, inst.lp.c);
    if (truth.verdict == oracle::Verdict::Optimal) ++oracle_optimal;
    for (Algorithm a : kAlgorithms) {
      const auto out = audited_solve(fmt("sweep/%llu/%s", static_cast<unsigned long long>(seed), to_string(a)),
                                     inst.lp, inst.x0, make_config(a, 0.55, 0.1, 1e-7));
      const bool solver_opt = out.status == SolveStatus::Optimal;
      const bool oracle_opt = truth.verdict == oracle::Verdict::Optimal;
      const bool solver_unb = out.status == SolveStatus::Unbounded;
      const bool oracle_unb = truth.verdict == oracle::Verdict::Unbounded;
      if (solver_opt != oracle_opt || solver_unb != oracle_unb) {
        ++status_mismatch;
        r.note(fmt("seed %llu %s: solver %s, oracle %s", static_cast<unsigned long long>(seed), to_string(a),
                   to_string(out.status), oracle_opt ? "Optimal" : (oracle_unb ? "Unbounded" : "Infeasible")));
      }
      if (!(solver_opt && oracle_opt)) continue;
      ++compared;
      const double rel = std::abs(out.objective - truth.value) / std::max(1.0, std::abs(truth.value));
      worst = std::max(worst, rel);
      if (!(rel < kOracleRelTol))
        r.require(false, fmt("seed %llu %s: obj %.12g vs oracle %.12g", static_cast<unsigned long long>(seed),
                             to_string(a), out.objective, truth.value));
    }
  }
  r.require(compared > 0, fmt("%d solver/oracle Optimal pairs compared (%d of %llu instances optimal per oracle)",
                              compared, oracle_optimal, static_cast<unsigned long long>(kSweepSeeds)));
  r.require(worst < kOracleRelTol, fmt("worst relative objective error %.2e (limit %.0e)", worst, kOracleRelTol));
  r.note(fmt("classification disagreements: %d", status_mismatch));
  return r;
}

Result ratio_bound() {
  Result r;
  r.budget = 5.0;
  RandomLpSpec spec;
  spec.m = 10;
  spec.n = 20;
  spec.seed = 7;
  const auto inst = random_dense_lp(spec);
  const auto truth = oracle::enumerate(inst.lp.A, inst.lp.b, inst.lp.c);
  if (truth.verdict != oracle::Verdict::Optimal) {
    r.require(false, "oracle did not find an optimum for the (10, 20) instance");
    return r;
  }
  auto cfg = make_config(Algorithm::GAFS, 0.55, 0.1, 1e-7);
  cfg.norm_rule = NormRule::Gamma;
  auto out = audited_solve("ratio/gafs", inst.lp, inst.x0, cfg);
  r.require(out.status == SolveStatus::Optimal, fmt("GAFS status %s after %d iterations", to_string(out.status),
                                                    out.iterations));
  attach_ratios(out.trace, truth.value);
  // Below this the objective error is at rounding level and the ratio is noise.
  const double floor = 1e-9 * (1.0 + std::abs(truth.value));
  const auto tail = tail_ratios(out.trace, truth.value, kRatioTail, floor);
  const double bound = 1.0 - cfg.alpha / std::sqrt(static_cast<double>(spec.n)) + kRatioSlack;
  const double worst = tail.empty() ? INFINITY : *std::max_element(tail.begin(), tail.end());
  r.require(tail.size() == kRatioTail, fmt("%zu tail ratios available (v* = %.12g from oracle)", tail.size(),
                                           truth.value));
  r.require(worst <= bound, fmt("max tail ratio %.4f <= 1 - alpha/sqrt(n) + %.2f = %.4f", worst, kRatioSlack, bound));
  return r;
}

Result shanks_properties() {
  Result r;
  // Per-entry geometric sequences x_k = L + C q^k with distinct limits and rates.
  const Vector L = (Vector(4) << 2.0, 0.5, 7.0, 1e-3).finished();
  const Vector C = (Vector(4) << 1.0, -0.25, 3.0, 5e-4).finished();
  const Vector q = (Vector(4) << 0.5, 0.9, -0.3, 0.75).finished();
  double worst = 0.0;
  for (int k = 0; k < 5; ++k) {
    auto term = [&](int j) { return (L.array() + C.array() * q.array().pow(k + j)).matrix().eval(); };
    const auto res = shanks_apply(term(0), term(1), term(2), 1e-12);
    worst = std::max(worst, ((res.B - L).array().abs() / L.array().abs()).maxCoeff());
  }
  r.require(worst < kShanksExactTol, fmt("geometric limit recovery: worst relative error %.2e", worst));

  const Vector constant = (Vector(3) << 1.0, 4.0, 0.25).finished();
  const auto flat = shanks_apply(constant, constant, constant, 1e-12);
  const bool all_fallback = std::all_of(flat.fallback_mask.begin(), flat.fallback_mask.end(), [](bool b) { return b; });
  r.require(all_fallback && flat.B == constant, "constant sequence: every entry falls back to the iterate");

  // e'B_k s_k against e'X_k s_k along GAFS iterate streams of the sweep instances.
  std::size_t better = 0;
  std::size_t seen = 0;
  int streams = 0;
  for (std::uint64_t seed = 1; seed <= kSweepSeeds; ++seed) {
    const auto inst = sweep_instance(seed);
    auto cfg = make_config(Algorithm::GAFS, 0.55, 0.1, 1e-7);
    cfg.keep_iterates = true;
    const auto out = audited_solve(fmt("shanks/%llu", static_cast<unsigned long long>(seed)), inst.lp, inst.x0, cfg);
    if (out.status != SolveStatus::Optimal || out.iterates.size() < 3) continue;
    ++streams;
    const auto& xs = out.iterates;
    const std::size_t first = std::max<std::size_t>(2, xs.size() > kShanksTail ? xs.size() - kShanksTail : 0);
    for (std::size_t k = first; k < xs.size(); ++k) {
      const auto est = dual_estimates(inst.lp.A, xs[k], inst.lp.c);
      const auto B = shanks_apply(xs[k - 2], xs[k - 1], xs[k], cfg.shanks_guard_tau, cfg.shanks_fallback).B;
      ++seen;
      if (B.dot(est.s) < xs[k].dot(est.s)) ++better;
    }
  }
  const double fraction = seen == 0 ? 0.0 : static_cast<double>(better) / static_cast<double>(seen);
  r.require(fraction >= kShanksFraction,
            fmt("e'Bs < e'Xs on %zu of %zu tail iterations (%.1f%%) over %d GAFS streams, need >= %.0f%%", better,
                seen, 100.0 * fraction, streams, 100.0 * kShanksFraction));
  return r;
}

Result acceleration() {
  Result r;
  r.budget = 120.0;
  const std::pair<double, double> pairs[] = {{0.4, 0.2}, {0.5, 0.1}, {0.55, 0.1}};
  constexpr int kInstances = 15;
  int ordered = 0;
  int beats_afs = 0;
  for (int seed = 1; seed <= kInstances; ++seed) {
    RandomLpSpec spec;
    spec.m = 50;
    spec.n = 100;
    spec.seed = static_cast<std::uint64_t>(seed);
    const auto inst = random_dense_lp(spec);
    double med[3];
    bool all_optimal = true;
    for (int a = 0; a < 3; ++a) {
      std::vector<double> iters;
      for (const auto& [alpha, beta] : pairs) {
        const auto out = audited_solve(fmt("accel/%d/%s", seed, to_string(kAlgorithms[a])), inst.lp, inst.x0,
                                       make_config(kAlgorithms[a], alpha, beta, 1e-4));
        all_optimal = all_optimal && out.status == SolveStatus::Optimal;
        iters.push_back(out.iterations);
      }
      std::sort(iters.begin(), iters.end());
      med[a] = iters[1];
    }
    const bool is_ordered = med[2] <= med[1] && med[1] <= med[0];
    const bool beats = med[2] < med[0];
    ordered += is_ordered;
    beats_afs += beats;
    r.note(fmt("seed %2d median iters afs=%g gafs=%g aafs=%g%s", seed, med[0], med[1], med[2],
               all_optimal ? "" : " (non-optimal run)"));
  }
  r.require(ordered >= kOrderedFraction * kInstances,
            fmt("AAFS <= GAFS <= AFS on %d of %d instances (need >= %.0f%%)", ordered, kInstances,
                100.0 * kOrderedFraction));
  r.require(beats_afs >= kBeatsAfsFraction * kInstances,
            fmt("AAFS < AFS on %d of %d instances (need >= %.0f%%)", beats_afs, kInstances, 100.0 * kBeatsAfsFraction));
  return r;
}

Result classification() {
  Result r;
  const auto cfg = make_config(Algorithm::GAFS, 0.55, 0.1, 1e-7);
  {
    const auto lp = LinearProgram::from_dense((Matrix(1, 2) << 1, -1).finished(), Vector::Zero(1),
                                              (Vector(2) << -1, -1).finished());
    const auto out = audited_solve("class/unbounded", lp, fixtures::ones(2), cfg);
    r.require(out.status == SolveStatus::Unbounded,
              fmt("A=[1 -1], b=0, c=(-1,-1): %s after %d iterations", to_string(out.status), out.iterations));
  }
  {
    const auto lp = LinearProgram::from_dense((Matrix(2, 2) << 1, 1, 1, 1).finished(),
                                              (Vector(2) << 1, 2).finished(), (Vector(2) << 1, 1).finished());
    const auto out = audited_solve("class/infeasible", lp, std::nullopt, cfg);
    r.require(out.status == SolveStatus::Infeasible && out.used_phase1,
              fmt("x1+x2=1, x1+x2=2 via Phase-I: %s, artificial %.3g", to_string(out.status), out.artificial_value));
  }
  {
    const auto lp = LinearProgram::from_dense((Matrix(1, 2) << 1, 1).finished(), Vector::Constant(1, 2.0),
                                              (Vector(2) << 1, 1).finished());
    const auto out = audited_solve("class/zero-slack", lp, fixtures::ones(2), cfg);
    r.require(out.status == SolveStatus::Optimal && out.iterations == 0,
              fmt("c=(1,1) in the row space of [1 1]: %s at iteration %d, obj %.12g", to_string(out.status),
                  out.iterations, out.objective));
  }
  return r;
}

struct NetlibCase {
  const char* file;
  std::size_t rows, cols, nonzeros;  // published Netlib counts, objective row included
  double optimum;                    // published optimal value
};

Result mps_round_trip() {
  Result r;
  r.budget = 60.0;
  {
    const auto parsed = parse_mps(fixtures::kMicroMps);
    const auto sf = standardize(parsed.lp);
    const auto micro = fixtures::micro_lp();
    r.require(sf.lp.A == micro.A && sf.lp.b == micro.b && sf.lp.c == micro.c,
              "micro fixture parses to A=[1 1], b=2, c=(1,2) exactly");
  }
  const NetlibCase cases[] = {{"afiro.mps", 28, 32, 88, -464.7531428571},
                              {"adlittle.mps", 57, 97, 465, 225494.96316}};
  for (const auto& nc : cases) {
    const auto parsed = parse_mps_file(fixtures::kDataDir + "/netlib/" + nc.file);
    const std::size_t rows = parsed.document.rows.size();
    const std::size_t cols = static_cast<std::size_t>(parsed.lp.num_cols());
    const std::size_t nnz = parsed.document.columns.size();
    r.require(rows == nc.rows && cols == nc.cols && nnz == nc.nonzeros,
              fmt("%s: rows=%zu cols=%zu nonzeros=%zu (published %zu/%zu/%zu)", nc.file, rows, cols, nnz, nc.rows,
                  nc.cols, nc.nonzeros));
    const auto sf = standardize(parsed.lp);
    const auto cfg = make_config(Algorithm::AAFS, 0.55, 0.1, kNetlibEps);
    const auto out = audited_solve(std::string("netlib/") + nc.file, sf.lp, std::nullopt, cfg);
    const double obj = out.objective + sf.map.objective_offset;
    const double rel = std::abs(obj - nc.optimum) / std::max(1.0, std::abs(nc.optimum));
    r.require(out.status == SolveStatus::Optimal,
              fmt("%s standard form m=%lld n=%lld: %s in %d iterations, obj %.10g (rel. diff to published optimum "
                  "%.1e)",
                  nc.file, static_cast<long long>(sf.lp.num_rows()), static_cast<long long>(sf.lp.num_cols()),
                  to_string(out.status), out.iterations, obj, rel));
    const auto& audit = g_audit.back().report;
    r.require(audit.ok(), fmt("%s invariants: %zu violations (worst relative step %.3f vs alpha+beta %.2f)", nc.file,
                              audit.violations.size(), audit.worst_relative_step, cfg.alpha + cfg.beta));
    if (std::string(nc.file) == "adlittle.mps") {
      r.require(sf.lp.num_cols() == 138, fmt("adlittle standard-form n=%lld matches the reported 138",
                                             static_cast<long long>(sf.lp.num_cols())));
      r.note("reported m=389 and nnz=1206 for lp_adlittle are not reproduced by any form of the Netlib file");
    }
  }
  return r;
}

// Aggregates the audit log. Also replays the sweep under the l2 rule so both normalizations are covered.
Result invariant_suite() {
  Result r;
  for (std::uint64_t seed = 1; seed <= kSweepSeeds; ++seed) {
    const auto inst = sweep_instance(seed);
    auto cfg = make_config(Algorithm::GAFS, 0.55, 0.1, 1e-7);
    cfg.norm_rule = NormRule::L2;
    audited_solve(fmt("l2/%llu", static_cast<unsigned long long>(seed)), inst.lp, inst.x0, cfg);
  }

  struct Tally {
    std::size_t runs = 0;
    std::size_t records = 0;
    std::map<std::string, std::size_t> violations;  // by kind
    std::map<std::string, std::size_t> runs_hit;
    double worst_residual = 0.0, worst_lemma2 = 0.0, worst_step = 0.0, min_x = INFINITY;
  };
  std::map<std::string, Tally> by_rule;
  for (const auto& e : g_audit) {
    Tally& t = by_rule[to_string(e.rule)];
    ++t.runs;
    t.records += e.report.records;
    t.worst_residual = std::max(t.worst_residual, e.report.worst_residual);
    t.worst_lemma2 = std::max(t.worst_lemma2, e.report.worst_lemma2);
    t.worst_step = std::max(t.worst_step, e.report.worst_relative_step);
    t.min_x = std::min(t.min_x, e.report.min_x);
    std::map<std::string, bool> hit;
    for (const auto& v : e.report.violations) {
      const std::string kind = v.substr(v.find(": ") + 2);
      ++t.violations[kind];
      hit[kind] = true;
    }
    for (const auto& [kind, _] : hit) ++t.runs_hit[kind];
  }
  const char* kinds[] = {"primal residual too large", "iterate not strictly positive", "objective did not decrease",
                         "projection identity residual too large", "relative step exceeds alpha + beta"};
  for (const auto& [rule, t] : by_rule) {
    r.note(fmt("%s rule: %zu runs, %zu iterates; worst residual/(1+|b|) %.1e, worst projection residual %.1e, "
               "min x %.1e, worst relative step %.3f",
               rule.c_str(), t.runs, t.records, t.worst_residual, t.worst_lemma2, t.min_x, t.worst_step));
    for (const char* kind : kinds) {
      const auto it = t.violations.find(kind);
      const std::size_t n = it == t.violations.end() ? 0 : it->second;
      const std::size_t runs = n == 0 ? 0 : t.runs_hit.at(kind);
      r.require(n == 0, fmt("%s rule, %s: %zu iterates in %zu runs", rule.c_str(), kind, n, runs));
    }
  }
  // The step is beta*delta/|X^-1 delta|_inf - alpha*X^2 s/theta, so the bound needs |Xs|_inf <= theta.
  // That holds for theta = |Xs|_2 but not for theta = gamma(Xs) once a negative entry of Xs
  // outweighs the largest positive one.
  r.note("the alpha + beta step bound requires |Xs|_inf <= theta; gamma(Xs) only bounds the positive entries");
  return r;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Result()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "micro LP exactness", micro_exactness},
      {2, "oracle equivalence sweep", oracle_sweep},
      {4, "linear-rate ratio bound", ratio_bound},
      {5, "Shanks transform properties", shanks_properties},
      {6, "acceleration at fixed eps", acceleration},
      {7, "classification", classification},
      {8, "MPS round trip", mps_round_trip},
      // Last, so it sees every audited run.
      {3, "invariant suite", invariant_suite},
  };

  std::map<int, std::pair<const char*, Result>> results;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Result res;
    try {
      res = c.run();
    } catch (const std::exception& e) {
      res.require(false, std::string("exception: ") + e.what());
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (res.budget > 0.0)
      res.require(res.seconds < res.budget, fmt("runtime %.2f s (limit %.0f s)", res.seconds, res.budget));
    results.emplace(c.id, std::make_pair(c.title, std::move(res)));
  }

  int failed = 0;
  for (const auto& [id, entry] : results) {
    const auto& [title, res] = entry;
    std::printf("%s criterion %d: %s (%.2f s)\n", res.pass ? "PASS" : "FAIL", id, title, res.seconds);
    for (const auto& d : res.details) std::printf("    %s\n", d.c_str());
    failed += !res.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(results.size()) - failed, results.size());
  return failed == 0 ? 0 : 1;
}
