#pragma once

#include <stdexcept>
#include <string>

#include "dikin/model.hpp"

namespace dikin {

class LinalgError : public std::runtime_error {
 public:
  enum class Kind { NotPositiveDefinite, GammaUndefined, ZeroDenominator, DimensionMismatch };

  LinalgError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Lower-triangular factor of M + ridge_used * I.
class SpdFactor {
 public:
  SpdFactor(Matrix lower, double ridge_used) : lower_(std::move(lower)), ridge_used_(ridge_used) {}

  Eigen::Index dimension() const { return lower_.rows(); }
  const Matrix& lower() const { return lower_; }
  double ridge_used() const { return ridge_used_; }

  /// Solves (L L') v = rhs.
  Vector solve(const Vector& rhs) const;

 private:
  Matrix lower_;
  double ridge_used_;
};

/// Cholesky of a symmetric matrix. On a nonpositive or collapsed pivot, retries once with
/// ridge 1e-10 * trace(M) / m; throws LinalgError::NotPositiveDefinite if that fails too.
SpdFactor cholesky_spd(const Matrix& M);

/// Dual estimates at a strictly positive x:
///   y = (A X^2 A')^{-1} A X^2 c,  s = c - A'y,  Xs,  X^2 s.
struct DualEstimate {
  Vector x;
  Vector y;
  Vector s;
  Vector scaled_slack;           // Xs
  Vector direction_numerator;    // X^2 s
  double ridge_used = 0.0;
};

DualEstimate dual_estimates(const Matrix& A, const Vector& x, const Vector& c);

enum class NormRule { Gamma, L2 };

/// gamma(u) = max{u_i : u_i > 0}; throws GammaUndefined when u <= 0 entrywise.
double gamma_max_positive(const Vector& u);

/// Step normalization theta for the chosen rule: gamma(Xs) or ||Xs||_2.
double step_normalizer(const DualEstimate& est, NormRule rule);

/// d = -alpha * X^2 s / theta.
Vector eap_direction(const DualEstimate& est, double alpha, NormRule rule);

const char* to_string(NormRule rule);

}  // namespace dikin
