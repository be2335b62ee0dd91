#include "dikin/linalg.hpp"

#include <cmath>

namespace dikin {

DualEstimate dual_estimates(const Matrix& A, const Vector& x, const Vector& c) {
  if (x.size() != A.cols() || c.size() != A.cols())
    throw LinalgError(LinalgError::Kind::DimensionMismatch, "dual_estimates: x or c length differs from A");

  const Vector x2 = x.cwiseProduct(x);
  const Matrix scaled = A * x2.asDiagonal();
  Matrix normal = scaled * A.transpose();
  // Symmetrize against rounding in the product.
  normal = 0.5 * (normal + normal.transpose()).eval();
  const SpdFactor factor = cholesky_spd(normal);

  Vector y = factor.solve(scaled * c);
  Vector s = c - A.transpose() * y;

  // Near an optimal face s_B is tiny and c - A'y loses it to cancellation. Refining with
  // s -= A' dy instead drives A X^2 s (the EAP feasibility residual) to rounding level of
  // X^2 s itself. Only improving corrections are kept.
  Vector r = scaled * s;
  double r_norm = r.norm();
  for (int pass = 0; pass < 3 && r_norm > 0.0; ++pass) {
    const Vector dy = factor.solve(r);
    Vector s_next = s - A.transpose() * dy;
    Vector r_next = scaled * s_next;
    const double next_norm = r_next.norm();
    if (!(next_norm < r_norm)) break;
    y += dy;
    s = std::move(s_next);
    r = std::move(r_next);
    r_norm = next_norm;
  }

  DualEstimate est;
  est.x = x;
  est.y = std::move(y);
  est.s = std::move(s);
  est.scaled_slack = x.cwiseProduct(est.s);
  est.direction_numerator = x.cwiseProduct(est.scaled_slack);
  est.ridge_used = factor.ridge_used();
  return est;
}

double gamma_max_positive(const Vector& u) {
  double best = 0.0;
  bool found = false;
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    if (u[i] > 0.0 && (!found || u[i] > best)) {
      best = u[i];
      found = true;
    }
  }
  if (!found) throw LinalgError(LinalgError::Kind::GammaUndefined, "gamma(u) undefined: no positive entry");
  return best;
}

double step_normalizer(const DualEstimate& est, NormRule rule) {
  if (rule == NormRule::Gamma) return gamma_max_positive(est.scaled_slack);
  const double norm = est.scaled_slack.norm();
  if (!(norm > 0.0)) throw LinalgError(LinalgError::Kind::ZeroDenominator, "||Xs|| is zero");
  return norm;
}

Vector eap_direction(const DualEstimate& est, double alpha, NormRule rule) {
  const double theta = step_normalizer(est, rule);
  return (-alpha / theta) * est.direction_numerator;
}

const char* to_string(NormRule rule) { return rule == NormRule::Gamma ? "gamma" : "l2"; }

}  // namespace dikin
