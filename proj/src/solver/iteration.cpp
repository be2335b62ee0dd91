#include "dikin/solver.hpp"

#include <cmath>
#include <sstream>

namespace dikin {

IterateState initial_state(const LinearProgram& lp, const Vector& x0) {
  if (x0.size() != lp.num_cols())
    throw SolverError(SolverError::Kind::InvalidStart, "starting point length differs from column count");
  if (!(x0.array() > 0.0).all() || !x0.allFinite())
    throw SolverError(SolverError::Kind::InvalidStart, "starting point must be strictly positive");
  IterateState state;
  state.k = 0;
  state.x = x0;
  state.z = x0;
  state.delta_x = Vector::Zero(x0.size());
  state.est = dual_estimates(lp.A, x0, lp.c);
  state.gap = x0.dot(state.est.s);
  state.obj = lp.c.dot(x0);
  return state;
}

Vector update_z(const IterateState& state, double beta) {
  if (state.k == 0 || beta == 0.0) return state.x;
  const double scale = state.delta_x.cwiseQuotient(state.x).cwiseAbs().maxCoeff();
  if (!(scale > 0.0)) return state.x;
  return state.x + (beta / scale) * state.delta_x;
}

StepResult step(const LinearProgram& lp, const IterateState& state, const SolverConfig& config) {
  const double beta = config.algorithm == Algorithm::AFS ? 0.0 : config.beta;
  const double theta = step_normalizer(state.est, config.norm_rule);

  StepResult out;
  out.alpha_eff = config.alpha / theta;
  if (state.k > 0 && beta != 0.0) {
    const double scale = state.delta_x.cwiseQuotient(state.x).cwiseAbs().maxCoeff();
    if (scale > 0.0) out.beta_eff = beta / scale;
  }

  Vector x_next = state.z - out.alpha_eff * state.est.direction_numerator;
  if (!x_next.allFinite() || !(x_next.array() > 0.0).all()) {
    std::ostringstream os;
    os << "iterate " << state.k + 1 << " left the positive orthant (min entry " << x_next.minCoeff() << ")";
    throw SolverError(SolverError::Kind::NumericalFailure, os.str(), state.k + 1);
  }
  const double obj_next = lp.c.dot(x_next);
  if (obj_next > state.obj + 1e-10 * (1.0 + std::abs(state.obj))) {
    std::ostringstream os;
    os << "objective increased at iterate " << state.k + 1 << " (" << state.obj << " -> " << obj_next << ")";
    throw SolverError(SolverError::Kind::NumericalFailure, os.str(), state.k + 1);
  }

  out.relative_step = (x_next - state.x).cwiseQuotient(state.x).cwiseAbs().maxCoeff();

  IterateState& next = out.next;
  next.k = state.k + 1;
  next.delta_x = x_next - state.x;
  next.est = dual_estimates(lp.A, x_next, lp.c);
  next.gap = x_next.dot(next.est.s);
  next.obj = obj_next;
  next.x = std::move(x_next);
  next.z = update_z(next, beta);
  return out;
}

StopCheck check_stop(const IterateState& state, const SolverConfig& config, const ShanksWindow& window) {
  const Vector& s = state.est.s;
  StopCheck out;
  if (config.algorithm == Algorithm::AAFS && window.size() > 0) {
    out.gap = window.transform(config.shanks_guard_tau, config.shanks_fallback).B.dot(s);
  } else {
    out.gap = state.gap;
  }
  const bool dual_feasible = s.minCoeff() >= -config.dual_tolerance;
  if (dual_feasible && out.gap < config.epsilon) {
    out.decision = StopDecision::Optimal;
  } else {
    // X^2 s <= 0, relaxed so that a positive entry negligible against the largest decrease
    // (x_j far out on a ray, or an artificial column near zero) does not hide the ray.
    const Vector& xs = state.est.scaled_slack;
    const double rise = xs.maxCoeff();
    const double fall = -xs.minCoeff();
    if (rise <= 0.0 || rise <= config.unbounded_tolerance * fall) out.decision = StopDecision::Unbounded;
  }
  return out;
}

}  // namespace dikin
