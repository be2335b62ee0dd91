#include "dikin/linalg.hpp"

#include <cmath>
#include <limits>
#include <optional>

namespace dikin {

namespace {

// A pivot below this fraction of its diagonal entry has lost all significant digits.
constexpr double kPivotFloor = 64.0 * std::numeric_limits<double>::epsilon();

std::optional<Matrix> try_factor(const Matrix& M, double ridge) {
  const Eigen::Index m = M.rows();
  Matrix L = Matrix::Zero(m, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    const double diag = M(j, j) + ridge;
    double d = diag - L.row(j).head(j).squaredNorm();
    if (!(d > kPivotFloor * std::abs(diag)) || !std::isfinite(d)) return std::nullopt;
    const double ljj = std::sqrt(d);
    L(j, j) = ljj;
    for (Eigen::Index i = j + 1; i < m; ++i) {
      L(i, j) = (M(i, j) - L.row(i).head(j).dot(L.row(j).head(j))) / ljj;
    }
  }
  return L;
}

}  // namespace

Vector SpdFactor::solve(const Vector& rhs) const {
  if (rhs.size() != lower_.rows())
    throw LinalgError(LinalgError::Kind::DimensionMismatch, "SpdFactor::solve: rhs size mismatch");
  const auto L = lower_.triangularView<Eigen::Lower>();
  Vector v = L.solve(rhs);
  return L.transpose().solve(v);
}

SpdFactor cholesky_spd(const Matrix& M) {
  if (M.rows() != M.cols() || M.rows() == 0)
    throw LinalgError(LinalgError::Kind::DimensionMismatch, "cholesky_spd: matrix must be square and nonempty");
  if (auto L = try_factor(M, 0.0)) return SpdFactor(std::move(*L), 0.0);

  const double ridge = 1e-10 * M.trace() / static_cast<double>(M.rows());
  if (ridge > 0.0) {
    if (auto L = try_factor(M, ridge)) return SpdFactor(std::move(*L), ridge);
  }
  throw LinalgError(LinalgError::Kind::NotPositiveDefinite,
                    "normal matrix is not positive definite (rank-deficient A or iterate on the boundary)");
}

}  // namespace dikin
