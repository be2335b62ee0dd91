#include "dikin/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dikin {

double lemma2_residual(const DualEstimate& est, const Vector& c) {
  const double lhs = c.dot(est.direction_numerator);
  const double rhs = est.scaled_slack.squaredNorm();
  return std::abs(lhs - rhs) / (1.0 + rhs);
}

std::vector<Eigen::Index> zero_set(const Vector& x_star) {
  std::vector<Eigen::Index> out;
  for (Eigen::Index j = 0; j < x_star.size(); ++j)
    if (x_star[j] <= kZeroSetThreshold) out.push_back(j);
  return out;
}

double potential_fn(const Vector& x, const Vector& x_star, const Vector& c) {
  if (x.size() != x_star.size() || x.size() != c.size())
    throw DiagnosticsError(DiagnosticsError::Kind::DimensionMismatch, "potential_fn: length mismatch");
  const auto zeros = zero_set(x_star);
  if (zeros.empty()) throw DiagnosticsError(DiagnosticsError::Kind::EmptyN, "potential_fn: x* has no zero entries");
  const double gap = c.dot(x) - c.dot(x_star);
  if (!(gap > 0.0))
    throw DiagnosticsError(DiagnosticsError::Kind::NonpositiveGap, "potential_fn: c'x must exceed c'x*");
  double value = static_cast<double>(zeros.size()) * std::log(gap);
  for (const auto j : zeros) value -= std::log(x[j]);
  return value;
}

PotentialReport potential_report(const std::vector<Vector>& iterates, const Vector& x_star, const Vector& c) {
  PotentialReport report;
  report.zero_indices = zero_set(x_star);
  report.p = report.zero_indices.size();
  if (report.p == 0) throw DiagnosticsError(DiagnosticsError::Kind::EmptyN, "potential_report: x* has no zero entries");
  const double target = c.dot(x_star);
  for (const auto& x : iterates) {
    if (!(c.dot(x) > target)) break;
    report.values.push_back(potential_fn(x, x_star, c));
  }
  return report;
}

KktReport kkt_report(const SolveOutcome& outcome, const LinearProgram& lp) {
  const Vector& x = outcome.x_star;
  const Vector& y = outcome.y_star;
  const Vector& s = outcome.s_star;
  if (x.size() != lp.num_cols() || s.size() != lp.num_cols() || y.size() != lp.num_rows())
    throw DiagnosticsError(DiagnosticsError::Kind::DimensionMismatch, "kkt_report: outcome does not match lp");
  KktReport r;
  r.primal_infeas = (lp.A * x - lp.b).norm();
  r.dual_infeas = (lp.A.transpose() * y + s - lp.c).norm();
  r.min_s = s.minCoeff();
  r.comp_slack = std::abs(x.dot(s));
  return r;
}

void attach_ratios(std::vector<TraceRecord>& trace, double v_star) {
  for (std::size_t i = 0; i + 1 < trace.size(); ++i) {
    const double denom = trace[i].obj - v_star;
    if (denom > 0.0) trace[i].ratio = (trace[i + 1].obj - v_star) / denom;
  }
}

std::vector<double> tail_ratios(const std::vector<TraceRecord>& trace, double v_star, std::size_t count,
                                double floor) {
  std::vector<double> out;
  for (auto it = trace.rbegin(); it != trace.rend() && out.size() < count; ++it) {
    if (!it->ratio || !(it->obj - v_star > floor)) continue;
    out.push_back(*it->ratio);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

InvariantReport check_invariants(const std::vector<TraceRecord>& trace, const InvariantLimits& limits) {
  InvariantReport report;
  report.records = trace.size();
  report.min_x = trace.empty() ? 0.0 : trace.front().min_x;
  auto flag = [&](const TraceRecord& r, const std::string& what) {
    std::ostringstream os;
    os << "k=" << r.k << ": " << what;
    report.violations.push_back(os.str());
  };
  const double step_bound = limits.alpha + limits.beta + limits.step_slack;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const auto& r = trace[i];
    const double rel_residual = r.primal_residual / (1.0 + limits.rhs_norm);
    report.worst_residual = std::max(report.worst_residual, rel_residual);
    report.worst_lemma2 = std::max(report.worst_lemma2, r.lemma2_residual);
    report.min_x = std::min(report.min_x, r.min_x);
    if (r.primal_residual > limits.residual_rel * (1.0 + limits.rhs_norm)) flag(r, "primal residual too large");
    if (!(r.min_x > 0.0)) flag(r, "iterate not strictly positive");
    if (!(r.lemma2_residual < limits.lemma2)) flag(r, "projection identity residual too large");
    if (r.infnorm_relative_step) {
      report.worst_relative_step = std::max(report.worst_relative_step, *r.infnorm_relative_step);
      if (*r.infnorm_relative_step > step_bound) flag(r, "relative step exceeds alpha + beta");
    }
    if (i + 1 < trace.size()) {
      const double next = trace[i + 1].obj;
      if (!(next < r.obj + limits.descent_rel * (1.0 + std::abs(r.obj)))) flag(r, "objective did not decrease");
    }
  }
  return report;
}

std::optional<double> shanks_tail_fraction(const std::vector<TraceRecord>& trace, std::size_t count,
                                           bool strict) {
  std::size_t seen = 0;
  std::size_t better = 0;
  for (auto it = trace.rbegin(); it != trace.rend() && seen < count; ++it) {
    if (!it->shanks_gap) continue;
    ++seen;
    if (strict ? *it->shanks_gap < it->gap : *it->shanks_gap <= it->gap) ++better;
  }
  if (seen == 0) return std::nullopt;
  return static_cast<double>(better) / static_cast<double>(seen);
}

}  // namespace dikin
