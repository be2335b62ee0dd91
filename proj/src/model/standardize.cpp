#include "dikin/model.hpp"

#include <cmath>
#include <sstream>

namespace dikin {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ModelError(ModelError::Kind::DimensionMismatch, what);
}

bool names_ok(const std::vector<std::string>& names, Eigen::Index n) {
  return names.empty() || static_cast<Eigen::Index>(names.size()) == n;
}

std::vector<std::string> numbered(const char* prefix, Eigen::Index n) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i + 1));
  return out;
}

std::string name_or(const std::vector<std::string>& names, Eigen::Index i, const char* prefix) {
  if (names.empty()) return prefix + std::to_string(i + 1);
  return names[static_cast<std::size_t>(i)];
}

}  // namespace

void LinearProgram::validate() const {
  require(A.rows() > 0 && A.cols() > 0, "LinearProgram: empty constraint matrix");
  require(b.size() == A.rows(), "LinearProgram: rhs length differs from row count");
  require(c.size() == A.cols(), "LinearProgram: cost length differs from column count");
  require(names_ok(col_names, A.cols()), "LinearProgram: column name count mismatch");
  require(names_ok(row_names, A.rows()), "LinearProgram: row name count mismatch");
}

LinearProgram LinearProgram::from_dense(Matrix A, Vector b, Vector c) {
  LinearProgram lp;
  lp.col_names = numbered("x", A.cols());
  lp.row_names = numbered("r", A.rows());
  lp.A = std::move(A);
  lp.b = std::move(b);
  lp.c = std::move(c);
  lp.validate();
  return lp;
}

void GeneralLP::validate() const {
  require(A.rows() > 0 && A.cols() > 0, "GeneralLP: empty constraint matrix");
  require(b.size() == A.rows(), "GeneralLP: rhs length differs from row count");
  require(c.size() == A.cols(), "GeneralLP: cost length differs from column count");
  require(static_cast<Eigen::Index>(senses.size()) == A.rows(), "GeneralLP: sense count mismatch");
  require(lower.size() == A.cols() && upper.size() == A.cols(), "GeneralLP: bound length mismatch");
  require(names_ok(col_names, A.cols()), "GeneralLP: column name count mismatch");
  require(names_ok(row_names, A.rows()), "GeneralLP: row name count mismatch");
}

Vector ColumnMap::recover(const Vector& x_std) const {
  Vector x(static_cast<Eigen::Index>(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    const auto& cm = columns[j];
    const auto jj = static_cast<Eigen::Index>(j);
    switch (cm.kind) {
      case ColumnMapping::Kind::Shifted: x[jj] = cm.offset + cm.sign * x_std[cm.col]; break;
      case ColumnMapping::Kind::Split: x[jj] = x_std[cm.col] - x_std[cm.neg_col]; break;
      case ColumnMapping::Kind::Fixed: x[jj] = cm.offset; break;
    }
  }
  return x;
}

Vector ColumnMap::to_standard(const Vector& x_orig, const GeneralLP& glp,
                              const LinearProgram& std_lp) const {
  Vector x = Vector::Zero(std_lp.num_cols());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    const auto& cm = columns[j];
    const double v = x_orig[static_cast<Eigen::Index>(j)];
    switch (cm.kind) {
      case ColumnMapping::Kind::Shifted:
        x[cm.col] = cm.sign * (v - cm.offset);
        if (cm.bound_slack_col >= 0) x[cm.bound_slack_col] = glp.upper[static_cast<Eigen::Index>(j)] - v;
        break;
      case ColumnMapping::Kind::Split:
        x[cm.col] = std::max(v, 0.0);
        x[cm.neg_col] = std::max(-v, 0.0);
        break;
      case ColumnMapping::Kind::Fixed: break;
    }
  }
  const Vector activity = glp.A * x_orig;
  for (std::size_t i = 0; i < row_slack_cols.size(); ++i) {
    const auto col = row_slack_cols[i];
    if (col < 0) continue;
    const auto ii = static_cast<Eigen::Index>(i);
    x[col] = glp.senses[i] == RowSense::LessEqual ? glp.b[ii] - activity[ii] : activity[ii] - glp.b[ii];
  }
  return x;
}

StandardForm standardize(const GeneralLP& glp) {
  glp.validate();
  const Eigen::Index m = glp.num_rows();
  const Eigen::Index n = glp.num_cols();

  ColumnMap map;
  map.columns.resize(static_cast<std::size_t>(n));

  // Classify variables and assign structural columns.
  Eigen::Index next_col = 0;
  std::vector<Eigen::Index> split_vars;
  std::vector<Eigen::Index> bounded_vars;
  for (Eigen::Index j = 0; j < n; ++j) {
    const double lo = glp.lower[j];
    const double up = glp.upper[j];
    auto& cm = map.columns[static_cast<std::size_t>(j)];
    if (std::isnan(lo) || std::isnan(up) || lo > up || lo == kInf || up == -kInf) {
      std::ostringstream os;
      os << "column " << name_or(glp.col_names, j, "x") << " has contradictory bounds [" << lo << ", "
         << up << "]";
      throw ModelError(ModelError::Kind::InfeasibleBounds, os.str());
    }
    if (lo == up) {
      cm.kind = ColumnMapping::Kind::Fixed;
      cm.offset = lo;
    } else if (std::isfinite(lo)) {
      cm.kind = ColumnMapping::Kind::Shifted;
      cm.offset = lo;
      cm.sign = 1.0;
      cm.col = next_col++;
      if (std::isfinite(up)) bounded_vars.push_back(j);
    } else if (std::isfinite(up)) {
      cm.kind = ColumnMapping::Kind::Shifted;
      cm.offset = up;
      cm.sign = -1.0;
      cm.col = next_col++;
    } else {
      cm.kind = ColumnMapping::Kind::Split;
      cm.col = next_col++;
      split_vars.push_back(j);
    }
  }
  for (const auto j : split_vars) map.columns[static_cast<std::size_t>(j)].neg_col = next_col++;
  map.num_structural = next_col;

  // Shifted right-hand side and emptiness of each row in the structural columns.
  Vector rhs = glp.b;
  for (Eigen::Index j = 0; j < n; ++j) {
    const auto& cm = map.columns[static_cast<std::size_t>(j)];
    if (cm.kind != ColumnMapping::Kind::Split && cm.offset != 0.0) rhs -= glp.A.col(j) * cm.offset;
  }

  map.row_slack_cols.assign(static_cast<std::size_t>(m), -1);
  for (Eigen::Index i = 0; i < m; ++i) {
    bool empty = true;
    for (Eigen::Index j = 0; j < n && empty; ++j) {
      if (map.columns[static_cast<std::size_t>(j)].kind != ColumnMapping::Kind::Fixed && glp.A(i, j) != 0.0)
        empty = false;
    }
    const auto sense = glp.senses[static_cast<std::size_t>(i)];
    if (empty) {
      const double tol = 1e-12 * (1.0 + std::abs(glp.b[i]));
      const bool feasible = (sense == RowSense::Equal && std::abs(rhs[i]) <= tol) ||
                            (sense == RowSense::LessEqual && rhs[i] >= -tol) ||
                            (sense == RowSense::GreaterEqual && rhs[i] <= tol);
      if (!feasible) {
        throw ModelError(ModelError::Kind::InfeasibleBounds,
                         "row " + name_or(glp.row_names, i, "r") + " has no free variables and cannot be satisfied");
      }
      continue;
    }
    map.kept_rows.push_back(i);
  }
  for (const auto i : map.kept_rows) {
    if (glp.senses[static_cast<std::size_t>(i)] != RowSense::Equal) map.row_slack_cols[static_cast<std::size_t>(i)] = next_col++;
  }
  for (const auto j : bounded_vars) map.columns[static_cast<std::size_t>(j)].bound_slack_col = next_col++;

  const Eigen::Index m_kept = static_cast<Eigen::Index>(map.kept_rows.size());
  const Eigen::Index m_std = m_kept + static_cast<Eigen::Index>(bounded_vars.size());
  const Eigen::Index n_std = next_col;

  LinearProgram lp;
  lp.A = Matrix::Zero(m_std, n_std);
  lp.b = Vector::Zero(m_std);
  lp.c = Vector::Zero(n_std);
  lp.col_names.resize(static_cast<std::size_t>(n_std));
  lp.row_names.resize(static_cast<std::size_t>(m_std));

  map.objective_offset = glp.objective_offset;
  for (Eigen::Index j = 0; j < n; ++j) {
    const auto& cm = map.columns[static_cast<std::size_t>(j)];
    const std::string name = name_or(glp.col_names, j, "x");
    if (cm.kind != ColumnMapping::Kind::Split) map.objective_offset += glp.c[j] * cm.offset;
    if (cm.kind == ColumnMapping::Kind::Fixed) continue;
    lp.c[cm.col] = cm.sign * glp.c[j];
    lp.col_names[static_cast<std::size_t>(cm.col)] = name;
    if (cm.kind == ColumnMapping::Kind::Split) {
      lp.c[cm.neg_col] = -glp.c[j];
      lp.col_names[static_cast<std::size_t>(cm.neg_col)] = name + "_neg";
    }
  }

  for (Eigen::Index r = 0; r < m_kept; ++r) {
    const Eigen::Index i = map.kept_rows[static_cast<std::size_t>(r)];
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto& cm = map.columns[static_cast<std::size_t>(j)];
      const double a = glp.A(i, j);
      if (a == 0.0 || cm.kind == ColumnMapping::Kind::Fixed) continue;
      lp.A(r, cm.col) = cm.sign * a;
      if (cm.kind == ColumnMapping::Kind::Split) lp.A(r, cm.neg_col) = -a;
    }
    lp.b[r] = rhs[i];
    const std::string rname = name_or(glp.row_names, i, "r");
    lp.row_names[static_cast<std::size_t>(r)] = rname;
    const auto slack = map.row_slack_cols[static_cast<std::size_t>(i)];
    if (slack >= 0) {
      const bool le = glp.senses[static_cast<std::size_t>(i)] == RowSense::LessEqual;
      lp.A(r, slack) = le ? 1.0 : -1.0;
      lp.col_names[static_cast<std::size_t>(slack)] = (le ? "slack_" : "surplus_") + rname;
    }
  }

  Eigen::Index r = m_kept;
  for (const auto j : bounded_vars) {
    const auto& cm = map.columns[static_cast<std::size_t>(j)];
    const std::string name = name_or(glp.col_names, j, "x");
    lp.A(r, cm.col) = 1.0;
    lp.A(r, cm.bound_slack_col) = 1.0;
    lp.b[r] = glp.upper[j] - glp.lower[j];
    lp.row_names[static_cast<std::size_t>(r)] = "ub_" + name;
    lp.col_names[static_cast<std::size_t>(cm.bound_slack_col)] = "ubslack_" + name;
    ++r;
  }

  lp.validate();
  return {std::move(lp), std::move(map)};
}

}  // namespace dikin
