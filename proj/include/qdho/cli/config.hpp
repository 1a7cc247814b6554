#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qdho/liouvillian.hpp"
#include "qdho/propagators.hpp"

namespace qdho::cli {

/// Malformed or inconsistent run configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxDim = 64;

struct InitialState {
  enum class Kind { fock, coherent, thermal };
  Kind kind = Kind::fock;
  int n = 0;
  Complex alpha{0.0, 0.0};
  double nbar = 0.0;

  friend bool operator==(const InitialState&, const InitialState&) = default;
};

/// Evenly spaced 0, t_max/(n-1), ..., t_max.
struct TimeRange {
  double t_max = 0.0;
  int n_points = 1;

  friend bool operator==(const TimeRange&, const TimeRange&) = default;
};

using TimeGrid = std::variant<std::vector<double>, TimeRange>;

struct ConvergenceSpec {
  enum class Mode { time, steps };
  Mode mode = Mode::time;
  std::vector<double> times;  // mode time
  double t = 1.0;             // mode steps
  std::vector<int> n_steps;   // mode steps
  Method method = Method::factorized;

  friend bool operator==(const ConvergenceSpec&, const ConvergenceSpec&) = default;
};

struct SweepSpec {
  std::string parameter;  // kappa_abs, kappa_arg, mu, nu, omega, t
  std::vector<double> values;
  Method method = Method::factorized;

  friend bool operator==(const SweepSpec&, const SweepSpec&) = default;
};

struct RunConfig {
  ModelParams model;
  InitialState initial_state;
  TimeGrid times = std::vector<double>{0.0};
  std::vector<Method> methods{Method::exact};
  int n_steps = 1;
  Method step_method = Method::factorized;
  std::string output;
  PositivityMode positivity = PositivityMode::strict;
  int interior_margin = kDefaultTailMargin;
  std::optional<ConvergenceSpec> convergence;
  std::optional<SweepSpec> sweep;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Parses and validates; unknown keys at any level are errors.
RunConfig config_from_json(const nlohmann::json& j);
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

nlohmann::json to_json(const RunConfig& config);

/// Structural checks that do not depend on positivity mode.
void validate_config(const RunConfig& config);

std::vector<double> expand_times(const TimeGrid& grid);
ComplexMatrix build_initial_state(const InitialState& s, int dim);

}  // namespace qdho::cli
