#include <cmath>
#include <sstream>

#include "dikin/diagnostics.hpp"
#include "dikin/solver.hpp"

namespace dikin {

namespace {

TraceRecord record_for(const LinearProgram& lp, const IterateState& state) {
  TraceRecord rec;
  rec.k = state.k;
  rec.obj = state.obj;
  rec.gap = state.gap;
  rec.primal_residual = (lp.A * state.x - lp.b).norm();
  rec.min_x = state.x.minCoeff();
  rec.min_s = state.est.s.minCoeff();
  rec.lemma2_residual = lemma2_residual(state.est, lp.c);
  return rec;
}

Vector drop_entry(const Vector& v, Eigen::Index index) {
  Vector out(v.size() - 1);
  out.head(index) = v.head(index);
  out.tail(v.size() - 1 - index) = v.tail(v.size() - 1 - index);
  return out;
}

}  // namespace

SolveOutcome solve(const LinearProgram& lp, const std::optional<Vector>& x0, const SolverConfig& config) {
  config.validate();
  lp.validate();

  SolveOutcome outcome;
  outcome.warnings = config.warnings();

  std::optional<Phase1Problem> p1;
  if (!x0) {
    p1 = phase1(lp);
    outcome.used_phase1 = p1->artificial_index.has_value();
  } else {
    if (x0->size() != lp.num_cols())
      throw SolverError(SolverError::Kind::InvalidStart, "starting point length differs from column count");
    const double residual = (lp.A * *x0 - lp.b).norm();
    if (residual > 1e-8 * (1.0 + lp.b.norm())) {
      std::ostringstream os;
      os << "starting point violates Ax = b (residual " << residual << ")";
      throw SolverError(SolverError::Kind::InvalidStart, os.str());
    }
  }
  const LinearProgram& work = p1 ? p1->augmented_lp : lp;
  const Vector& start = p1 ? p1->x0 : *x0;

  IterateState state;
  try {
    state = initial_state(work, start);
  } catch (const LinalgError& e) {
    outcome.status = SolveStatus::NumericalFailure;
    outcome.message = std::string("iteration 0: ") + e.what();
    return outcome;
  }

  ShanksWindow window;
  window.push(state.x);
  StopCheck check;
  bool finished = false;

  while (!finished) {
    check = check_stop(state, config, window);
    TraceRecord rec = record_for(work, state);
    if (config.algorithm == Algorithm::AAFS) rec.shanks_gap = check.gap;
    if (config.keep_iterates) outcome.iterates.push_back(state.x);

    if (check.decision == StopDecision::Optimal) {
      outcome.status = SolveStatus::Optimal;
      finished = true;
    } else if (check.decision == StopDecision::Unbounded) {
      outcome.status = SolveStatus::Unbounded;
      finished = true;
    } else if (state.k >= config.max_iter) {
      outcome.status = SolveStatus::IterationLimit;
      finished = true;
    } else {
      try {
        StepResult next = step(work, state, config);
        rec.step_alpha_eff = next.alpha_eff;
        rec.step_beta_eff = next.beta_eff;
        rec.infnorm_relative_step = next.relative_step;
        state = std::move(next.next);
        window.push(state.x);
      } catch (const SolverError& e) {
        outcome.status = SolveStatus::NumericalFailure;
        outcome.message = e.what();
        finished = true;
      } catch (const LinalgError& e) {
        outcome.status = SolveStatus::NumericalFailure;
        std::ostringstream os;
        os << "iteration " << state.k + 1 << ": " << e.what();
        outcome.message = os.str();
        finished = true;
      }
    }
    outcome.trace.push_back(rec);
  }

  outcome.iterations = state.k;
  outcome.final_gap = check.gap;

  Vector x_report = state.x;
  if (config.algorithm == Algorithm::AAFS && window.complete()) {
    x_report = window.transform(config.shanks_guard_tau, config.shanks_fallback).B;
  }
  Vector s_report = state.est.s;

  if (p1 && p1->artificial_index) {
    const Eigen::Index art = *p1->artificial_index;
    outcome.artificial_value = state.x[art];
    const double limit = 1e-6 * (1.0 + state.x.cwiseAbs().maxCoeff());
    if (outcome.status == SolveStatus::Optimal && outcome.artificial_value > limit) {
      outcome.status = SolveStatus::Infeasible;
      std::ostringstream os;
      os << "artificial variable " << outcome.artificial_value << " exceeds " << limit << " at termination";
      outcome.message = os.str();
    }
    x_report = drop_entry(x_report, art);
    s_report = drop_entry(s_report, art);
  }

  outcome.x_star = std::move(x_report);
  outcome.y_star = state.est.y;
  outcome.s_star = std::move(s_report);
  outcome.objective = lp.c.dot(outcome.x_star);
  return outcome;
}

}  // namespace dikin
