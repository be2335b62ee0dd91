#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace dikin {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

class ModelError : public std::runtime_error {
 public:
  enum class Kind { DimensionMismatch, InfeasibleBounds, InvalidSpec };

  ModelError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Standard-form LP: min c'x  s.t.  Ax = b, x >= 0.
struct LinearProgram {
  Matrix A;
  Vector b;
  Vector c;
  std::vector<std::string> col_names;
  std::vector<std::string> row_names;

  Eigen::Index num_rows() const { return A.rows(); }
  Eigen::Index num_cols() const { return A.cols(); }

  /// Throws ModelError::DimensionMismatch when A, b, c and the name lists disagree.
  /// Empty name lists are allowed and mean "unnamed".
  void validate() const;

  /// Builds an LP with generated names x1.., r1...
  static LinearProgram from_dense(Matrix A, Vector b, Vector c);
};

enum class RowSense { LessEqual, Equal, GreaterEqual };

/// LP before standardization: row senses and per-column bounds.
struct GeneralLP {
  Matrix A;
  Vector b;
  Vector c;
  std::vector<RowSense> senses;
  Vector lower;  // -inf allowed
  Vector upper;  // +inf allowed
  std::vector<std::string> col_names;
  std::vector<std::string> row_names;
  double objective_offset = 0.0;

  Eigen::Index num_rows() const { return A.rows(); }
  Eigen::Index num_cols() const { return A.cols(); }

  void validate() const;
};

/// How one original variable is represented in the standard-form columns.
struct ColumnMapping {
  enum class Kind {
    Shifted,   // x = offset + sign * x[col]
    Split,     // x = x[col] - x[neg_col]
    Fixed,     // x = offset, no column
  };
  Kind kind = Kind::Shifted;
  Eigen::Index col = -1;
  Eigen::Index neg_col = -1;
  Eigen::Index bound_slack_col = -1;  // slack of the upper-bound row, if any
  double offset = 0.0;
  double sign = 1.0;
};

/// Recovers original-variable values from a standard-form point.
struct ColumnMap {
  std::vector<ColumnMapping> columns;
  /// Original objective = standard objective + objective_offset.
  double objective_offset = 0.0;
  /// Index of the first slack column; columns before it are structural.
  Eigen::Index num_structural = 0;
  /// Original row index of each leading standard-form row (empty rows are dropped).
  std::vector<Eigen::Index> kept_rows;
  /// Slack column per original row, -1 for equality or dropped rows.
  std::vector<Eigen::Index> row_slack_cols;

  Vector recover(const Vector& x_std) const;
  /// Maps an original-space point to standard form, filling slacks from the rows.
  Vector to_standard(const Vector& x_orig, const GeneralLP& glp, const LinearProgram& std_lp) const;
};

struct StandardForm {
  LinearProgram lp;
  ColumnMap map;
};

/// Converts a GeneralLP to equality form with nonnegative variables.
/// Throws ModelError::InfeasibleBounds for lower > upper or an empty equality row with b != 0.
StandardForm standardize(const GeneralLP& glp);

struct RandomLpSpec {
  Eigen::Index m = 0;
  Eigen::Index n = 0;
  std::uint64_t seed = 0;
  double mean = -9.0;
  double variance = 9.0;
  double convex_lambda = 0.5;

  void validate() const;
};

struct RandomInstance {
  LinearProgram lp;
  Vector x0;
};

/// Dense Gaussian instance with b = lambda*A*x1 + (1-lambda)*A*x2 and x0 the matching
/// convex combination, so A*x0 = b with x0 > 0. Deterministic for a fixed seed.
RandomInstance random_dense_lp(const RandomLpSpec& spec);

struct Phase1Problem {
  LinearProgram augmented_lp;
  std::optional<Eigen::Index> artificial_index;
  double big_m = 0.0;
  Vector x0;
};

/// Big-M augmentation [A | b - A e] with cost (c, M) and start (e, 1).
/// When b - A e is exactly zero no column is added and x0 = e.
Phase1Problem phase1(const LinearProgram& lp);

}  // namespace dikin
