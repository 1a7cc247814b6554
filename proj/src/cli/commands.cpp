#include "qdho/cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <functional>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "qdho/algebra.hpp"
#include "qdho/convergence.hpp"

namespace qdho::cli {

namespace {

// Shortest round-trip representation, locale independent.
std::string num(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

// Runs task(0..n-1) on up to `threads` workers. The exception of the
// lowest-indexed failing task is rethrown so failures are deterministic.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& task) {
  const auto workers = static_cast<std::size_t>(std::clamp(threads, 1, 64));
  if (workers == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) {
      task(i);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex mutex;
  std::size_t failed_index = n;
  std::exception_ptr failure;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        task(i);
      } catch (...) {
        std::lock_guard lock(mutex);
        if (i < failed_index) {
          failed_index = i;
          failure = std::current_exception();
        }
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < std::min(workers, n); ++w) {
      pool.emplace_back(worker);
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
}

std::string diagnostics_fields(const DiagnosticsRecord& d) {
  return num(d.trace.real()) + "," + num(d.trace.imag()) + "," + num(d.herm_residual) + "," +
         num(d.min_eigenvalue) + "," + num(d.purity) + "," + num(d.mean_n) + "," +
         num(d.tail_mass);
}

std::string distance_fields(const PropagationResult* exact, const PropagationResult& r) {
  if (exact == nullptr) {
    return ",";
  }
  const auto dist = compare_states(r.rho_t, exact->rho_t);
  return num(dist.frobenius) + "," + num(dist.trace_distance);
}

struct Evaluation {
  std::vector<PropagationResult> results;  // config method order
  int exact_index = -1;
};

// Propagates rho0 with every configured method at time t.
Evaluation evaluate_methods(const RunConfig& c, const ModelParams& p, const ComplexMatrix& rho0,
                            double t) {
  Evaluation ev;
  for (std::size_t m = 0; m < c.methods.size(); ++m) {
    auto r = propagate(c.methods[m], p, rho0, t, c.n_steps, c.step_method);
    r.diagnostics = state_diagnostics(r.rho_t, c.interior_margin);
    if (c.methods[m] == Method::exact) {
      ev.exact_index = static_cast<int>(m);
    }
    ev.results.push_back(std::move(r));
  }
  return ev;
}

std::string rows_for(const RunConfig& c, const Evaluation& ev, double t,
                     const std::string& prefix) {
  const PropagationResult* exact = ev.exact_index >= 0 ? &ev.results[ev.exact_index] : nullptr;
  std::string out;
  for (std::size_t m = 0; m < ev.results.size(); ++m) {
    const auto& r = ev.results[m];
    out += prefix + num(t) + "," + std::string(to_string(c.methods[m])) + "," +
           diagnostics_fields(r.diagnostics) + "," + distance_fields(exact, r) + "\n";
  }
  return out;
}

ModelParams swept_model(const ModelParams& base, const std::string& parameter, double value) {
  ModelParams p = base;
  if (parameter == "kappa_abs") {
    p.kappa = std::polar(value, std::arg(base.kappa));
  } else if (parameter == "kappa_arg") {
    p.kappa = std::polar(std::abs(base.kappa), value);
  } else if (parameter == "mu") {
    p.mu = value;
  } else if (parameter == "nu") {
    p.nu = value;
  } else if (parameter == "omega") {
    p.omega = value;
  }
  return p;
}

}  // namespace

std::string cmd_simulate(const RunConfig& config, int parallel) {
  validate_config(config);
  validate(config.model, config.positivity);
  const ComplexMatrix rho0 = build_initial_state(config.initial_state, config.model.dim);
  const auto times = expand_times(config.times);

  std::vector<std::string> blocks(times.size());
  parallel_for(times.size(), parallel, [&](std::size_t i) {
    const auto ev = evaluate_methods(config, config.model, rho0, times[i]);
    blocks[i] = rows_for(config, ev, times[i], "");
  });

  std::string out = std::string(kSimulateHeader) + "\n";
  for (const auto& b : blocks) {
    out += b;
  }
  return out;
}

AlgebraCheck cmd_verify_algebra(int dim, int margin) {
  if (dim < 2 || dim > kMaxDim) {
    throw ConfigError("verify-algebra: dim must be in 2.." + std::to_string(kMaxDim));
  }
  if (margin < 0) {
    throw ConfigError("verify-algebra: margin must be >= 0");
  }
  const auto report = verify_algebra(build_generators(build_fock_ops(dim)), margin);
  std::ostringstream text;
  text << "dim = " << report.dim << "\n"
       << "margin = " << report.margin << "\n"
       << "interior = " << (report.empty_interior ? "empty" : "nonempty") << "\n"
       << "threshold = " << num(kAlgebraThreshold) << "\n";
  bool all_pass = true;
  for (const auto& id : report.identities) {
    const bool pass = id.residual <= kAlgebraThreshold;
    all_pass = all_pass && pass;
    text << id.label << " = " << num(id.residual) << " " << (pass ? "PASS" : "FAIL") << "\n";
  }
  text << "result = " << (all_pass ? "PASS" : "FAIL") << "\n";
  return {text.str(), all_pass};
}

std::string cmd_convergence(const RunConfig& config) {
  validate_config(config);
  if (!config.convergence) {
    throw ConfigError("convergence: config has no convergence section");
  }
  validate(config.model, config.positivity);
  const auto& spec = *config.convergence;
  const ComplexMatrix rho0 = build_initial_state(config.initial_state, config.model.dim);
  const bool by_time = spec.mode == ConvergenceSpec::Mode::time;
  const ConvergenceTable table =
      by_time ? convergence_in_time(config.model, rho0, spec.times, spec.method)
              : convergence_in_steps(config.model, rho0, spec.t, spec.n_steps, spec.method);

  std::string out = std::string(by_time ? "t" : "n_steps") + ",method,error_frob,error_tracedist\n";
  for (const auto& row : table.rows) {
    out += num(row.sample) + "," + std::string(to_string(spec.method)) + "," +
           num(row.error_frobenius) + "," + num(row.error_trace_distance) + "\n";
  }
  if (table.slope) {
    out += "# slope=" + num(*table.slope);
    if (table.slope_frobenius) {
      out += ",slope_frob=" + num(*table.slope_frobenius);
    }
    out += ",fit_residual=" + num(table.fit_residual) + "\n";
  } else {
    out += "# exact within noise\n";
  }
  return out;
}

std::string cmd_sweep(const RunConfig& config, int parallel) {
  validate_config(config);
  if (!config.sweep) {
    throw ConfigError("sweep: config has no sweep section");
  }
  validate(config.model, PositivityMode::permissive);
  const auto& spec = *config.sweep;
  const auto times = expand_times(config.times);
  const ComplexMatrix rho0 = build_initial_state(config.initial_state, config.model.dim);

  // The swept method is compared against exact at the same point.
  RunConfig point = config;
  point.methods = {Method::exact, spec.method};

  std::vector<std::string> rows(spec.values.size());
  parallel_for(spec.values.size(), parallel, [&](std::size_t i) {
    const double value = spec.values[i];
    const std::string prefix = spec.parameter + "," + num(value) + ",";
    const double t = spec.parameter == "t" ? value : times.back();
    const ModelParams p = swept_model(config.model, spec.parameter, value);
    if (spec.parameter == "t" && t < 0.0) {
      throw ConfigError("sweep: t values must be >= 0");
    }
    validate(p, PositivityMode::permissive);
    if (config.positivity == PositivityMode::strict && !satisfies_positivity(p)) {
      rows[i] = prefix + "skipped:positivity," + num(t) + "," +
                std::string(to_string(spec.method)) + ",,,,,,,,,\n";
      return;
    }
    // Only the swept method is emitted; its distance is against exact.
    const auto ev = evaluate_methods(point, p, rho0, t);
    const PropagationResult& r = ev.results[1];
    rows[i] = prefix + "ok," + num(t) + "," + std::string(to_string(spec.method)) + "," +
              diagnostics_fields(r.diagnostics) + "," + distance_fields(&ev.results[0], r) + "\n";
  });

  std::string out = "parameter,value,status," + std::string(kSimulateHeader) + "\n";
  for (const auto& r : rows) {
    out += r;
  }
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Damped harmonic oscillator simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  bool strict = false;
  bool permissive = false;
  int parallel = 1;
  int dim = 8;
  int margin = kDefaultAlgebraMargin;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "Run configuration (JSON)")->required();
    sub->add_option("--out", out_path, "Output CSV path (default: config output or stdout)");
    auto* s = sub->add_flag("--strict", strict, "Reject mu*nu < |kappa|^2");
    auto* p = sub->add_flag("--permissive", permissive, "Allow mu*nu < |kappa|^2");
    s->excludes(p);
    sub->add_option("--parallel", parallel, "Worker threads")->check(CLI::Range(1, 64));
  };

  auto* simulate = app.add_subcommand("simulate", "Time series of diagnostics per method");
  add_common(simulate);
  auto* convergence = app.add_subcommand("convergence", "Splitting error study");
  add_common(convergence);
  auto* sweep = app.add_subcommand("sweep", "Final-time error across one parameter");
  add_common(sweep);
  auto* algebra = app.add_subcommand("verify-algebra", "Check the generator commutators");
  algebra->add_option("--dim", dim, "Truncation dimension");
  algebra->add_option("--margin", margin, "Interior margin");
  algebra->add_option("--out", out_path, "Output path (default: stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  auto emit = [&](const std::string& text, const std::string& path) {
    if (path.empty()) {
      out << text;
      return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
      throw ConfigError("cannot open output file '" + path + "'");
    }
    file << text;
  };

  try {
    if (algebra->parsed()) {
      const auto check = cmd_verify_algebra(dim, margin);
      emit(check.text, out_path);
      return check.all_pass ? kExitOk : kExitAlgebraFail;
    }
    RunConfig config = load_config(config_path);
    if (strict) {
      config.positivity = PositivityMode::strict;
    } else if (permissive) {
      config.positivity = PositivityMode::permissive;
    }
    const std::string path = out_path.empty() ? config.output : out_path;
    if (simulate->parsed()) {
      emit(cmd_simulate(config, parallel), path);
    } else if (convergence->parsed()) {
      emit(cmd_convergence(config), path);
    } else if (sweep->parsed()) {
      emit(cmd_sweep(config, parallel), path);
    }
    return kExitOk;
  } catch (const PositivityError& e) {
    err << "error: " << e.what() << "\n";
    return kExitPositivity;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}

}  // namespace qdho::cli
