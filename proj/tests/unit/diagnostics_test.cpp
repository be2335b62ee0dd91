#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dikin/diagnostics.hpp"
#include "fixtures.hpp"

namespace dikin {
namespace {

Vector vec2(double a, double b) { return (Vector(2) << a, b).finished(); }

TEST(ProjectionIdentity, ExactEstimateHasZeroResidual) {
  const Matrix A = (Matrix(1, 2) << 1, 1).finished();
  const auto est = dual_estimates(A, vec2(2, 1), vec2(1, 2));
  EXPECT_NEAR(lemma2_residual(est, vec2(1, 2)), 0.0, 1e-15);
  const auto zero = dual_estimates(A, vec2(2, 1), vec2(1, 1));
  EXPECT_NEAR(lemma2_residual(zero, vec2(1, 1)), 0.0, 1e-15);
}

TEST(ProjectionIdentity, PerturbedSlackIsFlagged) {
  const Matrix A = (Matrix(1, 2) << 1, 1).finished();
  auto est = dual_estimates(A, vec2(2, 1), vec2(1, 2));
  est.s += vec2(0.3, -0.1);
  est.scaled_slack = est.x.cwiseProduct(est.s);
  est.direction_numerator = est.x.cwiseProduct(est.scaled_slack);
  EXPECT_GT(lemma2_residual(est, vec2(1, 2)), 1e-3);
}

TEST(Potential, HandValue) {
  EXPECT_NEAR(potential_fn(vec2(0.5, 1.5), vec2(2, 0), vec2(1, 2)), 0.0, 1e-15);
}

TEST(Potential, SymmetricCancellation) {
  // Two zero entries, gap 4 and x_1 x_2 = 16 = gap^2.
  const Vector c = (Vector(3) << 1, 1, 1).finished();
  const Vector x_star = (Vector(3) << 1, 0, 0).finished();
  const Vector x = (Vector(3) << -5, 2, 8).finished();
  EXPECT_NEAR(potential_fn(x, x_star, c), 0.0, 1e-15);
}

TEST(Potential, ShrinkingZeroEntryAtFixedGapIncreasesValue) {
  const Vector c = (Vector(3) << 1, 0, 0).finished();
  const Vector x_star = (Vector(3) << 0, 0, 1).finished();
  const double wide = potential_fn((Vector(3) << 0.5, 0.4, 1).finished(), x_star, c);
  const double narrow = potential_fn((Vector(3) << 0.5, 0.2, 1).finished(), x_star, c);
  EXPECT_NEAR(narrow - wide, std::log(2.0), 1e-14);
}

TEST(Potential, Errors) {
  try {
    potential_fn(vec2(1, 1), vec2(1, 1), vec2(1, 1));
    FAIL();
  } catch (const DiagnosticsError& e) {
    EXPECT_EQ(e.kind(), DiagnosticsError::Kind::EmptyN);
  }
  try {
    potential_fn(vec2(2, 0.1), vec2(2, 0), vec2(1, -5));
    FAIL();
  } catch (const DiagnosticsError& e) {
    EXPECT_EQ(e.kind(), DiagnosticsError::Kind::NonpositiveGap);
  }
}

TEST(Potential, ZeroSetThreshold) {
  const Vector x_star = (Vector(3) << 1e-9, 1e-7, 0).finished();
  EXPECT_EQ(zero_set(x_star), (std::vector<Eigen::Index>{0, 2}));
}

TEST(Potential, ReportAlongRun) {
  const auto lp = fixtures::micro_lp();
  SolverConfig cfg;
  cfg.keep_iterates = true;
  const auto out = solve(lp, Vector::Ones(2), cfg);
  const auto rep = potential_report(out.iterates, vec2(2, 0), lp.c);
  EXPECT_EQ(rep.p, 1u);
  EXPECT_EQ(rep.zero_indices, std::vector<Eigen::Index>{1});
  EXPECT_FALSE(rep.values.empty());
  for (double v : rep.values) EXPECT_TRUE(std::isfinite(v));
}

TEST(Kkt, ExactMicroOptimum) {
  SolveOutcome o;
  o.status = SolveStatus::Optimal;
  o.x_star = vec2(2, 0);
  o.y_star = Vector::Constant(1, 1.0);
  o.s_star = vec2(0, 1);
  const auto r = kkt_report(o, fixtures::micro_lp());
  EXPECT_EQ(r.primal_infeas, 0.0);
  EXPECT_EQ(r.dual_infeas, 0.0);
  EXPECT_EQ(r.min_s, 0.0);
  EXPECT_EQ(r.comp_slack, 0.0);
  o.y_star[0] = 1.2;
  EXPECT_GT(kkt_report(o, fixtures::micro_lp()).dual_infeas, 0.0);
}

TEST(Kkt, SolvedOutcomeHasSmallComplementarity) {
  const auto inst = random_dense_lp({6, 12, 3});
  SolverConfig cfg;
  cfg.epsilon = 1e-7;
  const auto out = solve(inst.lp, inst.x0, cfg);
  ASSERT_EQ(out.status, SolveStatus::Optimal);
  const auto r = kkt_report(out, inst.lp);
  EXPECT_LT(r.comp_slack, 1e-7);
  EXPECT_LT(r.dual_infeas, 1e-10 * (1.0 + inst.lp.c.norm()));
  EXPECT_LT(r.primal_infeas, 1e-7 * (1.0 + inst.lp.b.norm()));
}

TEST(Kkt, DimensionMismatch) {
  SolveOutcome o;
  o.x_star = Vector::Ones(3);
  EXPECT_THROW(kkt_report(o, fixtures::micro_lp()), DiagnosticsError);
}

TEST(Ratios, AttachAndTail) {
  std::vector<TraceRecord> trace(5);
  for (int k = 0; k < 5; ++k) trace[static_cast<std::size_t>(k)].obj = 1.0 + std::pow(0.5, k);
  attach_ratios(trace, 1.0);
  for (int k = 0; k < 4; ++k) EXPECT_DOUBLE_EQ(*trace[static_cast<std::size_t>(k)].ratio, 0.5);
  EXPECT_FALSE(trace[4].ratio.has_value());
  EXPECT_EQ(tail_ratios(trace, 1.0, 2).size(), 2u);
  EXPECT_EQ(tail_ratios(trace, 1.0, 10, 0.2).size(), 3u);  // starts at 1, 0.5 and 0.25
}

TEST(Invariants, CleanRunPasses) {
  const auto inst = random_dense_lp({5, 10, 8});
  SolverConfig cfg;
  cfg.norm_rule = NormRule::L2;
  const auto out = solve(inst.lp, inst.x0, cfg);
  InvariantLimits lim;
  lim.alpha = cfg.alpha;
  lim.beta = cfg.beta;
  lim.rhs_norm = inst.lp.b.norm();
  const auto rep = check_invariants(out.trace, lim);
  EXPECT_TRUE(rep.ok()) << rep.violations.front();
  EXPECT_GT(rep.min_x, 0.0);
}

TEST(Invariants, FlagsEachViolation) {
  std::vector<TraceRecord> trace(2);
  trace[0].obj = 1.0;
  trace[0].min_x = 1.0;
  trace[0].infnorm_relative_step = 0.9;
  trace[0].lemma2_residual = 1e-3;
  trace[0].primal_residual = 1.0;
  trace[1].obj = 2.0;
  trace[1].min_x = -1.0;
  InvariantLimits lim;
  lim.alpha = 0.5;
  lim.beta = 0.1;
  const auto rep = check_invariants(trace, lim);
  EXPECT_EQ(rep.violations.size(), 5u);
  EXPECT_DOUBLE_EQ(rep.worst_relative_step, 0.9);
}

TEST(ShanksTail, Fraction) {
  std::vector<TraceRecord> trace(4);
  for (auto& r : trace) r.gap = 1.0;
  trace[1].shanks_gap = 0.5;
  trace[2].shanks_gap = 2.0;
  trace[3].shanks_gap = 1.0;
  EXPECT_DOUBLE_EQ(*shanks_tail_fraction(trace, 10), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(*shanks_tail_fraction(trace, 10, true), 1.0 / 3.0);
  EXPECT_FALSE(shanks_tail_fraction(std::vector<TraceRecord>(2), 10).has_value());
}

}  // namespace
}  // namespace dikin
