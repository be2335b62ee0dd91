#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dikin/linalg.hpp"
#include "dikin/model.hpp"
#include "dikin/solver.hpp"
#include "dikin/trace.hpp"

namespace dikin {

class DiagnosticsError : public std::runtime_error {
 public:
  enum class Kind { EmptyN, NonpositiveGap, DimensionMismatch };

  DiagnosticsError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// |c'X^2 s - ||Xs||^2| / (1 + ||Xs||^2). Zero up to rounding for a true projection.
double lemma2_residual(const DualEstimate& est, const Vector& c);

/// Threshold below which an entry of x* is treated as zero when forming N.
inline constexpr double kZeroSetThreshold = 1e-8;

/// Indices j with x_star_j <= kZeroSetThreshold.
std::vector<Eigen::Index> zero_set(const Vector& x_star);

/// F_N(x) = p log(c'x - c'x*) - sum_{j in N} log x_j with N the zero set of x*.
/// Throws EmptyN or NonpositiveGap.
double potential_fn(const Vector& x, const Vector& x_star, const Vector& c);

struct PotentialReport {
  std::vector<Eigen::Index> zero_indices;  // N
  std::size_t p = 0;
  std::vector<double> values;              // F_N(x_k) per iterate
};

/// Evaluates F_N along an iterate history. Iterates whose objective is not above c'x*
/// end the series.
PotentialReport potential_report(const std::vector<Vector>& iterates, const Vector& x_star, const Vector& c);

struct KktReport {
  double primal_infeas = 0.0;  // ||A x - b||
  double dual_infeas = 0.0;    // ||A'y + s - c||
  double min_s = 0.0;
  double comp_slack = 0.0;     // |x's|
};

/// Residuals of the reported (x*, y*, s*) against lp. Meaningful when the outcome is Optimal.
KktReport kkt_report(const SolveOutcome& outcome, const LinearProgram& lp);

/// Fills TraceRecord::ratio = (obj_{k+1} - v*) / (obj_k - v*) where the denominator is positive.
void attach_ratios(std::vector<TraceRecord>& trace, double v_star);

/// Ratios of the last `count` steps that start with c'x_k - v* above `floor`, oldest first.
/// Requires attach_ratios first.
std::vector<double> tail_ratios(const std::vector<TraceRecord>& trace, double v_star, std::size_t count,
                                double floor = 0.0);

struct InvariantLimits {
  double alpha = 0.0;
  double beta = 0.0;
  double rhs_norm = 0.0;
  double residual_rel = 1e-7;
  double lemma2 = 1e-8;
  double step_slack = 1e-12;
  double descent_rel = 1e-10;
};

struct InvariantReport {
  std::size_t records = 0;
  std::vector<std::string> violations;
  double worst_residual = 0.0;     // max ||Ax - b|| / (1 + ||b||)
  double worst_lemma2 = 0.0;
  double worst_relative_step = 0.0;
  double min_x = 0.0;

  bool ok() const { return violations.empty(); }
};

/// Checks primal feasibility, positivity, strict descent, the projection identity and the
/// per-entry relative step bound on every trace row.
InvariantReport check_invariants(const std::vector<TraceRecord>& trace, const InvariantLimits& limits);

/// Fraction of the last `count` rows carrying a Shanks gap where shanks_gap <= gap
/// (shanks_gap < gap when strict is set).
std::optional<double> shanks_tail_fraction(const std::vector<TraceRecord>& trace, std::size_t count,
                                           bool strict = false);

}  // namespace dikin
