#include "dikin/model.hpp"

#include <algorithm>

namespace dikin {

Phase1Problem phase1(const LinearProgram& lp) {
  lp.validate();
  const Eigen::Index n = lp.num_cols();
  const Vector ones = Vector::Ones(n);
  const Vector artificial = lp.b - lp.A * ones;

  Phase1Problem out;
  out.big_m = 1e6 * std::max(1.0, lp.c.cwiseAbs().maxCoeff());

  if (artificial.isZero(0.0)) {
    out.augmented_lp = lp;
    out.x0 = ones;
    return out;
  }

  LinearProgram aug;
  aug.A.resize(lp.num_rows(), n + 1);
  aug.A.leftCols(n) = lp.A;
  aug.A.col(n) = artificial;
  aug.b = lp.b;
  aug.c.resize(n + 1);
  aug.c.head(n) = lp.c;
  aug.c[n] = out.big_m;
  aug.row_names = lp.row_names;
  aug.col_names = lp.col_names;
  if (!aug.col_names.empty()) aug.col_names.emplace_back("artificial");

  out.augmented_lp = std::move(aug);
  out.artificial_index = n;
  out.x0 = Vector::Ones(n + 1);
  return out;
}

}  // namespace dikin
