#pragma once

#include <array>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dikin/linalg.hpp"
#include "dikin/model.hpp"
#include "dikin/trace.hpp"

namespace dikin {

enum class Algorithm { AFS, GAFS, AAFS };

const char* to_string(Algorithm algorithm);
std::optional<Algorithm> parse_algorithm(const std::string& name);

class SolverError : public std::runtime_error {
 public:
  enum class Kind { InvalidConfig, InvalidStart, NumericalFailure };

  SolverError(Kind kind, const std::string& what, int iteration = -1)
      : std::runtime_error(what), kind_(kind), iteration_(iteration) {}
  Kind kind() const noexcept { return kind_; }
  int iteration() const noexcept { return iteration_; }

 private:
  Kind kind_;
  int iteration_;
};

/// Value a Shanks entry takes when its guard fires: the newest iterate of the window or the
/// oldest one.
enum class ShanksFallback { Newest, Oldest };

const char* to_string(ShanksFallback fallback);

struct SolverConfig {
  Algorithm algorithm = Algorithm::GAFS;
  double alpha = 0.55;
  double beta = 0.1;
  double epsilon = 1e-7;
  NormRule norm_rule = NormRule::Gamma;
  int max_iter = 10000;
  double shanks_guard_tau = 1e-12;
  ShanksFallback shanks_fallback = ShanksFallback::Newest;
  bool enforce_Q = true;
  /// Entries of s at or above -dual_tolerance count as nonnegative in the optimality test.
  double dual_tolerance = 1e-8;
  /// Unbounded when every positive entry of Xs is at most this fraction of the largest negative one.
  double unbounded_tolerance = 1e-12;
  /// Keep every iterate x_k in SolveOutcome::iterates.
  bool keep_iterates = false;

  /// Throws SolverError::InvalidConfig.
  void validate() const;
  /// Non-fatal remarks, e.g. running outside the admissible (alpha, beta) region.
  std::vector<std::string> warnings() const;
};

/// True when 0 < alpha < 1, 0 <= beta < 1/phi and alpha + beta <= 2/3.
bool in_admissible_region(double alpha, double beta);

struct IterateState {
  int k = 0;
  Vector x;
  Vector z;
  Vector delta_x;  // x_k - x_{k-1}; zero at k = 0
  DualEstimate est;
  double gap = 0.0;  // x's
  double obj = 0.0;  // c'x
};

/// Initial state at a strictly positive, feasible x0.
IterateState initial_state(const LinearProgram& lp, const Vector& x0);

/// z_k = x_k for k = 0 or delta = 0, else x_k + beta * delta / ||X_k^{-1} delta||_inf.
Vector update_z(const IterateState& state, double beta);

struct StepResult {
  IterateState next;
  double alpha_eff = 0.0;  // alpha / theta_k
  double beta_eff = 0.0;   // beta / ||X_k^{-1} delta(x_k)||_inf, 0 when unused
  double relative_step = 0.0;  // ||X_k^{-1}(x_{k+1} - x_k)||_inf
};

/// x_{k+1} = z_k - alpha X_k^2 s_k / theta_k, then fresh dual estimates.
/// Throws SolverError::NumericalFailure if x_{k+1} leaves the positive orthant or the
/// objective rises by more than 1e-10 (1 + |c'x_k|).
StepResult step(const LinearProgram& lp, const IterateState& state, const SolverConfig& config);

struct ShanksResult {
  Vector B;
  std::vector<bool> fallback_mask;
};

/// Entrywise Aitken transform of three consecutive iterates x0, x1, x2 (oldest first). An
/// entry falls back to x2 (Newest) or x0 (Oldest) when the second difference is negligible or
/// the result is not positive.
ShanksResult shanks_apply(const Vector& x0, const Vector& x1, const Vector& x2, double tau,
                          ShanksFallback fallback = ShanksFallback::Newest);

/// Rolling buffer of the last three iterates.
class ShanksWindow {
 public:
  void push(const Vector& x);
  bool complete() const { return buffer_.size() == 3; }
  std::size_t size() const { return buffer_.size(); }
  const Vector& newest() const { return buffer_.back(); }

  /// B for the most recent complete window, or the newest iterate when fewer than three.
  ShanksResult transform(double tau, ShanksFallback fallback = ShanksFallback::Newest) const;

 private:
  std::deque<Vector> buffer_;
};

enum class StopDecision { Continue, Optimal, Unbounded };

struct StopCheck {
  StopDecision decision = StopDecision::Continue;
  double gap = 0.0;  // e'X s, or e'B s for AAFS
};

/// Optimality (s >= 0 and gap < epsilon) is tested before unboundedness (X^2 s <= 0, up to
/// unbounded_tolerance).
StopCheck check_stop(const IterateState& state, const SolverConfig& config, const ShanksWindow& window);

enum class SolveStatus { Optimal, Unbounded, Infeasible, IterationLimit, NumericalFailure };

const char* to_string(SolveStatus status);

struct SolveOutcome {
  SolveStatus status = SolveStatus::NumericalFailure;
  Vector x_star;
  Vector y_star;
  Vector s_star;
  double objective = 0.0;
  double final_gap = 0.0;
  int iterations = 0;
  std::vector<TraceRecord> trace;
  std::vector<Vector> iterates;  // filled when keep_iterates is set
  bool used_phase1 = false;
  double artificial_value = 0.0;
  std::string message;
  std::vector<std::string> warnings;
};

/// Runs AFS / GAFS / AAFS. Without x0 a big-M artificial column supplies the start and
/// is stripped from the reported solution.
SolveOutcome solve(const LinearProgram& lp, const std::optional<Vector>& x0, const SolverConfig& config);

}  // namespace dikin
