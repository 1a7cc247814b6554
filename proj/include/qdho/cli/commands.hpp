#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qdho/cli/config.hpp"

namespace qdho::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitPositivity = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitAlgebraFail = 4;

inline constexpr double kAlgebraThreshold = 1e-12;

inline constexpr const char* kSimulateHeader =
    "t,method,trace_re,trace_im,herm_residual,min_eig,purity,mean_n,tail_mass,"
    "dist_to_exact_frob,dist_to_exact_tracedist";

/// One row per (t, method), ordered by t and then by the config's method
/// order. `parallel` worker threads; the output does not depend on it.
std::string cmd_simulate(const RunConfig& config, int parallel = 1);

struct AlgebraCheck {
  std::string text;
  bool all_pass = false;
};
AlgebraCheck cmd_verify_algebra(int dim, int margin);

/// Requires config.convergence. The fitted slope goes in a trailing
/// comment row.
std::string cmd_convergence(const RunConfig& config);

/// Requires config.sweep. Each point is evaluated at the last configured
/// time (or at the swept value for parameter t). Points that violate
/// mu*nu >= |kappa|^2 in strict mode become "skipped:positivity" rows.
std::string cmd_sweep(const RunConfig& config, int parallel = 1);

/// Full command-line entry point; returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qdho::cli
