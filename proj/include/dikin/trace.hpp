#pragma once

#include <optional>

namespace dikin {

/// One row of per-iteration diagnostics. Step fields describe the step that leaves
/// iterate k and are absent on the terminal iterate.
struct TraceRecord {
  int k = 0;
  double obj = 0.0;
  double gap = 0.0;                      // e'X_k s_k
  std::optional<double> shanks_gap;      // e'B_k s_k (AAFS only)
  double primal_residual = 0.0;          // ||A x_k - b||
  double min_x = 0.0;
  double min_s = 0.0;
  double lemma2_residual = 0.0;
  std::optional<double> step_alpha_eff;  // alpha / theta_k
  std::optional<double> step_beta_eff;   // beta / ||X_k^{-1} delta(x_k)||_inf
  std::optional<double> ratio;           // (c'x_{k+1} - v*) / (c'x_k - v*)
  std::optional<double> infnorm_relative_step;  // ||X_k^{-1}(x_{k+1} - x_k)||_inf
};

}  // namespace dikin
