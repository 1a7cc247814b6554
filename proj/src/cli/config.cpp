#include "qdho/cli/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include "qdho/fock.hpp"

namespace qdho::cli {

using nlohmann::json;

namespace {

void require_object(const json& j, const std::string& where) {
  if (!j.is_object()) {
    throw ConfigError(where + ": expected an object");
  }
}

void reject_unknown(const json& j, const std::string& where,
                    std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, _] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ConfigError(where + ": unknown key '" + key + "'");
    }
  }
}

const json& required(const json& j, const std::string& where, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw ConfigError(where + ": missing key '" + key + "'");
  }
  return *it;
}

double as_number(const json& j, const std::string& where) {
  if (!j.is_number()) {
    throw ConfigError(where + ": expected a number");
  }
  const double v = j.get<double>();
  if (!std::isfinite(v)) {
    throw ConfigError(where + ": must be finite");
  }
  return v;
}

int as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) {
    throw ConfigError(where + ": expected an integer");
  }
  return j.get<int>();
}

std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) {
    throw ConfigError(where + ": expected a string");
  }
  return j.get<std::string>();
}

Complex as_complex(const json& j, const std::string& where) {
  if (j.is_number()) {
    return {as_number(j, where), 0.0};
  }
  require_object(j, where);
  reject_unknown(j, where, {"re", "im"});
  const double re = j.contains("re") ? as_number(j["re"], where + ".re") : 0.0;
  const double im = j.contains("im") ? as_number(j["im"], where + ".im") : 0.0;
  return {re, im};
}

json complex_to_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

Method as_method(const json& j, const std::string& where) {
  try {
    return method_from_string(as_string(j, where));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(where + ": " + e.what());
  }
}

ModelParams parse_model(const json& j) {
  const std::string w = "model";
  require_object(j, w);
  reject_unknown(j, w, {"omega", "mu", "nu", "kappa", "theta", "dim"});
  ModelParams p;
  p.omega = as_number(required(j, w, "omega"), w + ".omega");
  p.mu = as_number(required(j, w, "mu"), w + ".mu");
  p.nu = as_number(required(j, w, "nu"), w + ".nu");
  p.dim = as_int(required(j, w, "dim"), w + ".dim");
  if (j.contains("kappa")) {
    p.kappa = as_complex(j["kappa"], w + ".kappa");
  }
  if (j.contains("theta")) {
    p.theta = as_number(j["theta"], w + ".theta");
  }
  return p;
}

InitialState parse_initial_state(const json& j) {
  const std::string w = "initial_state";
  require_object(j, w);
  const std::string kind = as_string(required(j, w, "kind"), w + ".kind");
  InitialState s;
  if (kind == "fock") {
    reject_unknown(j, w, {"kind", "n"});
    s.kind = InitialState::Kind::fock;
    s.n = as_int(required(j, w, "n"), w + ".n");
  } else if (kind == "coherent") {
    reject_unknown(j, w, {"kind", "alpha"});
    s.kind = InitialState::Kind::coherent;
    s.alpha = as_complex(required(j, w, "alpha"), w + ".alpha");
  } else if (kind == "thermal") {
    reject_unknown(j, w, {"kind", "nbar"});
    s.kind = InitialState::Kind::thermal;
    s.nbar = as_number(required(j, w, "nbar"), w + ".nbar");
  } else {
    throw ConfigError(w + ".kind: expected fock, coherent or thermal, got '" + kind + "'");
  }
  return s;
}

std::vector<double> parse_number_list(const json& j, const std::string& where) {
  if (!j.is_array()) {
    throw ConfigError(where + ": expected an array");
  }
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(as_number(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<int> parse_int_list(const json& j, const std::string& where) {
  if (!j.is_array()) {
    throw ConfigError(where + ": expected an array");
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(as_int(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

TimeGrid parse_times(const json& j) {
  if (j.is_array()) {
    return parse_number_list(j, "times");
  }
  require_object(j, "times");
  reject_unknown(j, "times", {"t_max", "n_points"});
  TimeRange r;
  r.t_max = as_number(required(j, "times", "t_max"), "times.t_max");
  r.n_points = as_int(required(j, "times", "n_points"), "times.n_points");
  return r;
}

ConvergenceSpec parse_convergence(const json& j) {
  const std::string w = "convergence";
  require_object(j, w);
  ConvergenceSpec c;
  const std::string mode = as_string(required(j, w, "mode"), w + ".mode");
  if (mode == "time") {
    reject_unknown(j, w, {"mode", "times", "method"});
    c.mode = ConvergenceSpec::Mode::time;
    c.times = parse_number_list(required(j, w, "times"), w + ".times");
  } else if (mode == "steps") {
    reject_unknown(j, w, {"mode", "t", "n_steps", "method"});
    c.mode = ConvergenceSpec::Mode::steps;
    c.t = as_number(required(j, w, "t"), w + ".t");
    c.n_steps = parse_int_list(required(j, w, "n_steps"), w + ".n_steps");
  } else {
    throw ConfigError(w + ".mode: expected time or steps, got '" + mode + "'");
  }
  if (j.contains("method")) {
    c.method = as_method(j["method"], w + ".method");
  }
  return c;
}

SweepSpec parse_sweep(const json& j) {
  const std::string w = "sweep";
  require_object(j, w);
  reject_unknown(j, w, {"parameter", "values", "method"});
  SweepSpec s;
  s.parameter = as_string(required(j, w, "parameter"), w + ".parameter");
  s.values = parse_number_list(required(j, w, "values"), w + ".values");
  if (j.contains("method")) {
    s.method = as_method(j["method"], w + ".method");
  }
  return s;
}

const std::set<std::string> kSweepParameters{"kappa_abs", "kappa_arg", "mu", "nu", "omega", "t"};

}  // namespace

RunConfig config_from_json(const json& j) {
  require_object(j, "config");
  reject_unknown(j, "config",
                 {"model", "initial_state", "times", "methods", "n_steps", "step_method", "output",
                  "positivity", "interior_margin", "convergence", "sweep"});
  RunConfig c;
  c.model = parse_model(required(j, "config", "model"));
  c.initial_state = parse_initial_state(required(j, "config", "initial_state"));
  if (j.contains("times")) {
    c.times = parse_times(j["times"]);
  }
  if (j.contains("methods")) {
    const json& m = j["methods"];
    if (!m.is_array()) {
      throw ConfigError("methods: expected an array");
    }
    c.methods.clear();
    for (std::size_t i = 0; i < m.size(); ++i) {
      c.methods.push_back(as_method(m[i], "methods[" + std::to_string(i) + "]"));
    }
  }
  if (j.contains("n_steps")) {
    c.n_steps = as_int(j["n_steps"], "n_steps");
  }
  if (j.contains("step_method")) {
    c.step_method = as_method(j["step_method"], "step_method");
  }
  if (j.contains("output")) {
    c.output = as_string(j["output"], "output");
  }
  if (j.contains("positivity")) {
    const std::string mode = as_string(j["positivity"], "positivity");
    if (mode == "strict") {
      c.positivity = PositivityMode::strict;
    } else if (mode == "permissive") {
      c.positivity = PositivityMode::permissive;
    } else {
      throw ConfigError("positivity: expected strict or permissive, got '" + mode + "'");
    }
  }
  if (j.contains("interior_margin")) {
    c.interior_margin = as_int(j["interior_margin"], "interior_margin");
  }
  if (j.contains("convergence")) {
    c.convergence = parse_convergence(j["convergence"]);
  }
  if (j.contains("sweep")) {
    c.sweep = parse_sweep(j["sweep"]);
  }
  validate_config(c);
  return c;
}

RunConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  return config_from_json(j);
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

json to_json(const RunConfig& c) {
  json j;
  j["model"] = {{"omega", c.model.omega}, {"mu", c.model.mu},
                {"nu", c.model.nu},       {"kappa", complex_to_json(c.model.kappa)},
                {"theta", c.model.theta}, {"dim", c.model.dim}};
  switch (c.initial_state.kind) {
    case InitialState::Kind::fock:
      j["initial_state"] = {{"kind", "fock"}, {"n", c.initial_state.n}};
      break;
    case InitialState::Kind::coherent:
      j["initial_state"] = {{"kind", "coherent"}, {"alpha", complex_to_json(c.initial_state.alpha)}};
      break;
    case InitialState::Kind::thermal:
      j["initial_state"] = {{"kind", "thermal"}, {"nbar", c.initial_state.nbar}};
      break;
  }
  if (const auto* list = std::get_if<std::vector<double>>(&c.times)) {
    j["times"] = *list;
  } else {
    const auto& r = std::get<TimeRange>(c.times);
    j["times"] = {{"t_max", r.t_max}, {"n_points", r.n_points}};
  }
  j["methods"] = json::array();
  for (Method m : c.methods) {
    j["methods"].push_back(std::string(to_string(m)));
  }
  j["n_steps"] = c.n_steps;
  j["step_method"] = std::string(to_string(c.step_method));
  j["output"] = c.output;
  j["positivity"] = c.positivity == PositivityMode::strict ? "strict" : "permissive";
  j["interior_margin"] = c.interior_margin;
  if (c.convergence) {
    const auto& cv = *c.convergence;
    json cj;
    if (cv.mode == ConvergenceSpec::Mode::time) {
      cj = {{"mode", "time"}, {"times", cv.times}};
    } else {
      cj = {{"mode", "steps"}, {"t", cv.t}, {"n_steps", cv.n_steps}};
    }
    cj["method"] = std::string(to_string(cv.method));
    j["convergence"] = cj;
  }
  if (c.sweep) {
    j["sweep"] = {{"parameter", c.sweep->parameter},
                  {"values", c.sweep->values},
                  {"method", std::string(to_string(c.sweep->method))}};
  }
  return j;
}

void validate_config(const RunConfig& c) {
  if (c.model.dim < 2 || c.model.dim > kMaxDim) {
    throw ConfigError("model.dim must be in 2.." + std::to_string(kMaxDim));
  }
  if (c.model.mu < 0.0 || c.model.nu < 0.0) {
    throw ConfigError("model.mu and model.nu must be >= 0");
  }
  const auto& s = c.initial_state;
  if (s.kind == InitialState::Kind::fock && (s.n < 0 || s.n >= c.model.dim)) {
    throw ConfigError("initial_state.n must be in 0.." + std::to_string(c.model.dim - 1));
  }
  if (s.kind == InitialState::Kind::thermal && s.nbar < 0.0) {
    throw ConfigError("initial_state.nbar must be >= 0");
  }
  if (const auto* r = std::get_if<TimeRange>(&c.times)) {
    if (r->n_points < 1 || r->t_max < 0.0 || (r->n_points > 1 && r->t_max <= 0.0)) {
      throw ConfigError("times: need n_points >= 1 and t_max > 0 (or a single point)");
    }
  }
  const auto times = expand_times(c.times);
  if (times.empty()) {
    throw ConfigError("times: at least one time is required");
  }
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] < 0.0 || (i > 0 && times[i] <= times[i - 1])) {
      throw ConfigError("times must be nonnegative and strictly increasing");
    }
  }
  if (c.methods.empty()) {
    throw ConfigError("methods: at least one method is required");
  }
  std::set<Method> seen(c.methods.begin(), c.methods.end());
  if (seen.size() != c.methods.size()) {
    throw ConfigError("methods: duplicate entries");
  }
  if (c.n_steps < 1) {
    throw ConfigError("n_steps must be >= 1");
  }
  if (c.step_method != Method::factorized && c.step_method != Method::alternative) {
    throw ConfigError("step_method must be factorized or alternative");
  }
  if (c.interior_margin < 0 || c.interior_margin >= c.model.dim) {
    throw ConfigError("interior_margin must be in 0.." + std::to_string(c.model.dim - 1));
  }
  if (c.convergence) {
    const auto& cv = *c.convergence;
    const std::size_t count =
        cv.mode == ConvergenceSpec::Mode::time ? cv.times.size() : cv.n_steps.size();
    if (count < 3) {
      throw ConfigError("convergence: at least 3 sample points are required");
    }
    if (std::any_of(cv.times.begin(), cv.times.end(), [](double t) { return !(t > 0.0); }) ||
        std::any_of(cv.n_steps.begin(), cv.n_steps.end(), [](int n) { return n < 1; }) ||
        (cv.mode == ConvergenceSpec::Mode::steps && !(cv.t > 0.0))) {
      throw ConfigError("convergence: sample points must be positive");
    }
    if (cv.method != Method::factorized && cv.method != Method::alternative &&
        !(cv.method == Method::series && cv.mode == ConvergenceSpec::Mode::time)) {
      throw ConfigError("convergence.method must be factorized or alternative");
    }
  }
  if (c.sweep) {
    if (!kSweepParameters.contains(c.sweep->parameter)) {
      throw ConfigError("sweep.parameter '" + c.sweep->parameter +
                        "' is not one of kappa_abs, kappa_arg, mu, nu, omega, t");
    }
    if (c.sweep->values.empty()) {
      throw ConfigError("sweep.values must not be empty");
    }
    if (c.sweep->method == Method::exact) {
      throw ConfigError("sweep.method must be an approximate method");
    }
  }
}

std::vector<double> expand_times(const TimeGrid& grid) {
  if (const auto* list = std::get_if<std::vector<double>>(&grid)) {
    return *list;
  }
  const auto& r = std::get<TimeRange>(grid);
  std::vector<double> out;
  if (r.n_points == 1) {
    out.push_back(r.t_max);
    return out;
  }
  for (int i = 0; i < r.n_points; ++i) {
    out.push_back(r.t_max * static_cast<double>(i) / static_cast<double>(r.n_points - 1));
  }
  return out;
}

ComplexMatrix build_initial_state(const InitialState& s, int dim) {
  switch (s.kind) {
    case InitialState::Kind::fock:
      return fock_state(dim, s.n);
    case InitialState::Kind::coherent:
      return coherent_state(dim, s.alpha);
    case InitialState::Kind::thermal:
      return thermal_state(dim, s.nbar);
  }
  throw ConfigError("initial_state: unknown kind");
}

}  // namespace qdho::cli
