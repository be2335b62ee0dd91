#include "dikin/solver.hpp"

#include <cmath>
#include <sstream>

namespace dikin {

namespace {

const double kGoldenRatio = (1.0 + std::sqrt(5.0)) / 2.0;

void invalid(const std::string& what) { throw SolverError(SolverError::Kind::InvalidConfig, what); }

}  // namespace

const char* to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::AFS: return "afs";
    case Algorithm::GAFS: return "gafs";
    case Algorithm::AAFS: return "aafs";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(const std::string& name) {
  if (name == "afs" || name == "AFS") return Algorithm::AFS;
  if (name == "gafs" || name == "GAFS") return Algorithm::GAFS;
  if (name == "aafs" || name == "AAFS") return Algorithm::AAFS;
  return std::nullopt;
}

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Optimal: return "Optimal";
    case SolveStatus::Unbounded: return "Unbounded";
    case SolveStatus::Infeasible: return "Infeasible";
    case SolveStatus::IterationLimit: return "IterationLimit";
    case SolveStatus::NumericalFailure: return "NumericalFailure";
  }
  return "?";
}

bool in_admissible_region(double alpha, double beta) {
  return alpha > 0.0 && alpha < 1.0 && beta >= 0.0 && beta < 1.0 / kGoldenRatio &&
         alpha + beta <= 2.0 / 3.0;
}

void SolverConfig::validate() const {
  if (!std::isfinite(alpha) || !(alpha > 0.0)) invalid("alpha must be positive");
  if (!std::isfinite(beta) || beta < 0.0) invalid("beta must be nonnegative");
  if (algorithm == Algorithm::AFS && beta != 0.0) invalid("AFS requires beta = 0");
  if (enforce_Q && !in_admissible_region(alpha, beta)) {
    std::ostringstream os;
    os << "(alpha, beta) = (" << alpha << ", " << beta
       << ") outside the admissible region 0 < alpha < 1, 0 <= beta < 1/phi, alpha + beta <= 2/3";
    invalid(os.str());
  }
  if (!(epsilon > 0.0)) invalid("epsilon must be positive");
  if (max_iter <= 0) invalid("max_iter must be positive");
  if (!(shanks_guard_tau > 0.0)) invalid("shanks_guard_tau must be positive");
  if (!(dual_tolerance >= 0.0)) invalid("dual_tolerance must be nonnegative");
  if (!(unbounded_tolerance >= 0.0 && unbounded_tolerance < 1.0)) invalid("unbounded_tolerance must lie in [0, 1)");
}

std::vector<std::string> SolverConfig::warnings() const {
  std::vector<std::string> out;
  if (!in_admissible_region(alpha, beta)) {
    std::ostringstream os;
    os << "(alpha, beta) = (" << alpha << ", " << beta
       << ") lies outside the admissible region; descent and positivity are not guaranteed";
    out.push_back(os.str());
  }
  return out;
}

}  // namespace dikin
