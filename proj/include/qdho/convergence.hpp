#pragma once

#include <optional>
#include <vector>

#include "qdho/propagators.hpp"

namespace qdho {

struct ConvergenceRow {
  double sample = 0.0;  // t for local studies, n_steps for global studies
  double error_frobenius = 0.0;
  double error_trace_distance = 0.0;
};

/// Errors of an approximate propagator against propagate_exact, with the
/// log-log least-squares slope of error versus sample. The slope is fitted on
/// trace distance; points below kFitFloor are left out of the fit. When fewer
/// than two points remain the table is marked exact within noise and carries
/// no slope.
struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;  // ascending in sample
  std::optional<double> slope;
  std::optional<double> slope_frobenius;
  double fit_residual = 0.0;  // RMS of the log-space residuals
  bool exact_within_noise = false;
};

inline constexpr double kFitFloor = 1e-12;

/// Local error: one application of `method` over each t in `times`.
ConvergenceTable convergence_in_time(const ModelParams& p, const ComplexMatrix& rho0,
                                     const std::vector<double>& times, Method method);

/// Global error at fixed t for each step count.
ConvergenceTable convergence_in_steps(const ModelParams& p, const ComplexMatrix& rho0, double t,
                                      const std::vector<int>& n_steps, Method method);

/// Least-squares slope of log(y) on log(x) over the points with y >= floor.
struct LogLogFit {
  std::optional<double> slope;
  double residual = 0.0;
};
LogLogFit fit_log_log(const std::vector<double>& x, const std::vector<double>& y,
                      double floor = kFitFloor);

}  // namespace qdho
