#include <charconv>
#include <fstream>
#include <ostream>

#include "dikin/cli.hpp"

namespace dikin::cli {

namespace {

void field(std::ostream& out, const std::optional<double>& v) {
  if (v) out << format_number(*v);
}

}  // namespace

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

int exit_code(SolveStatus status) {
  switch (status) {
    case SolveStatus::Optimal: return kExitOk;
    case SolveStatus::Unbounded: return kExitUnbounded;
    case SolveStatus::Infeasible: return kExitInfeasible;
    case SolveStatus::IterationLimit: return kExitIterationLimit;
    case SolveStatus::NumericalFailure: return kExitNumericalFailure;
  }
  return kExitNumericalFailure;
}

void write_trace_csv(std::ostream& out, const std::vector<TraceRecord>& trace) {
  out << kTraceHeader << '\n';
  for (const auto& r : trace) {
    out << r.k << ',' << format_number(r.obj) << ',' << format_number(r.gap) << ',';
    field(out, r.shanks_gap);
    out << ',' << format_number(r.primal_residual) << ',' << format_number(r.min_x) << ','
        << format_number(r.min_s) << ',' << format_number(r.lemma2_residual) << ',';
    field(out, r.step_alpha_eff);
    out << ',';
    field(out, r.step_beta_eff);
    out << ',';
    field(out, r.ratio);
    out << ',';
    field(out, r.infnorm_relative_step);
    out << '\n';
  }
}

bool write_trace_file(const std::string& path, const std::vector<TraceRecord>& trace) {
  std::ofstream file(path);
  if (!file) return false;
  write_trace_csv(file, trace);
  return static_cast<bool>(file);
}

}  // namespace dikin::cli
