#include "dikin/model.hpp"

#include <cmath>
#include <random>

namespace dikin {

void RandomLpSpec::validate() const {
  if (m <= 0 || n <= 0) throw ModelError(ModelError::Kind::InvalidSpec, "random LP: m and n must be positive");
  if (n <= m) throw ModelError(ModelError::Kind::InvalidSpec, "random LP: need n > m");
  if (!(variance > 0.0) || !std::isfinite(variance))
    throw ModelError(ModelError::Kind::InvalidSpec, "random LP: variance must be positive");
  if (!std::isfinite(mean)) throw ModelError(ModelError::Kind::InvalidSpec, "random LP: mean must be finite");
  if (!(convex_lambda >= 0.0 && convex_lambda <= 1.0))
    throw ModelError(ModelError::Kind::InvalidSpec, "random LP: convex_lambda must lie in [0, 1]");
}

RandomInstance random_dense_lp(const RandomLpSpec& spec) {
  spec.validate();
  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> entry(spec.mean, std::sqrt(spec.variance));
  std::normal_distribution<double> standard(0.0, 1.0);

  // Fixed draw order: A row-major, then c, then x1, then x2.
  Matrix A(spec.m, spec.n);
  for (Eigen::Index i = 0; i < spec.m; ++i)
    for (Eigen::Index j = 0; j < spec.n; ++j) A(i, j) = entry(rng);
  Vector c(spec.n);
  for (Eigen::Index j = 0; j < spec.n; ++j) c[j] = entry(rng);

  auto positive = [&] {
    Vector v(spec.n);
    for (Eigen::Index j = 0; j < spec.n; ++j) v[j] = std::abs(standard(rng)) + 0.1;
    return v;
  };
  const Vector x1 = positive();
  const Vector x2 = positive();

  const double lambda = spec.convex_lambda;
  Vector b = lambda * (A * x1) + (1.0 - lambda) * (A * x2);
  Vector x0 = lambda * x1 + (1.0 - lambda) * x2;

  RandomInstance out{LinearProgram::from_dense(std::move(A), std::move(b), std::move(c)), std::move(x0)};
  return out;
}

}  // namespace dikin
