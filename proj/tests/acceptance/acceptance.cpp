// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance                 run all criteria
//   acceptance --criterion N   run criterion N only
//
// Exit status is 0 iff every selected criterion passes.

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oracles.hpp"
#include "qdho/algebra.hpp"
#include "qdho/coefficients.hpp"
#include "qdho/convergence.hpp"
#include "qdho/fock.hpp"
#include "qdho/liouvillian.hpp"
#include "qdho/numerics.hpp"
#include "qdho/propagators.hpp"
#include "qdho/vectorize.hpp"

using namespace qdho;

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok) { pass = pass && ok; }
};

// Every state produced by the propagating criteria, for the invariant sweep.
struct Record {
  std::string source;
  Method method;
  ModelParams params;
  PropagationResult result;
};

struct Recorder {
  std::vector<Record>* sink = nullptr;

  void add(const std::string& source, const ModelParams& p, const PropagationResult& r) const {
    if (sink) {
      sink->push_back({source, r.method, p, r});
    }
  }
};

ModelParams random_admissible(std::mt19937_64& rng, int dim, bool random_theta) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  ModelParams p;
  p.dim = dim;
  p.mu = 0.05 + 0.95 * u(rng);
  p.nu = 0.05 + 0.95 * u(rng);
  p.omega = -2.0 + 4.0 * u(rng);
  p.kappa = std::polar(0.95 * u(rng) * std::sqrt(p.mu * p.nu), 2.0 * std::numbers::pi * u(rng));
  p.theta = random_theta ? 2.0 * std::numbers::pi * u(rng) : 0.0;
  return p;
}

// 1. Commutation relations on the margin-2 interior at d = 8.
Outcome criterion_1(const Recorder&) {
  Outcome o;
  const auto report = verify_algebra(build_generators(build_fock_ops(8)), 2);
  int failing = 0;
  for (const auto& id : report.identities) {
    failing += id.residual > 1e-12;
  }
  o.require(failing == 0);
  o.detail << "identities=" << report.identities.size() << " failing=" << failing
           << " max_residual=" << sci(report.max_residual()) << " (<= 1e-12)";
  return o;
}

// 2. vec(A X B) = (A (x) B^T) vec(X) on 100 random triples at d = 6.
Outcome criterion_2(const Recorder&) {
  Outcome o;
  std::mt19937_64 rng(2002);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const auto a = oracle::random_matrix(6, 6, rng);
    const auto b = oracle::random_matrix(6, 6, rng);
    const auto x = oracle::random_matrix(6, 6, rng);
    const double scale = a.norm() * b.norm() * x.norm();
    const ComplexMatrix direct = a * x * b;
    worst = std::max(worst, frobenius_distance(apply_superop(sandwich_superop(a, b), x), direct) / scale);
  }
  o.require(worst <= 1e-13);
  o.detail << "triples=100 max_residual/scale=" << sci(worst) << " (<= 1e-13)";
  return o;
}

// 3. Forms I/II/III agree and the generator annihilates the trace.
Outcome criterion_3(const Recorder&) {
  Outcome o;
  std::mt19937_64 rng(2003);
  double worst_forms = 0.0;
  double worst_trace = 0.0;
  int trace_failures = 0;
  const ComplexVector one = vec(ComplexMatrix::Identity(6, 6)).data;
  for (int k = 0; k < 20; ++k) {
    const ModelParams p = random_admissible(rng, 6, true);
    const ComplexMatrix h1 = build_liouvillian(p, LiouvillianForm::form_i);
    const ComplexMatrix h2 = build_liouvillian(p, LiouvillianForm::form_ii);
    const ComplexMatrix h3 = build_liouvillian(p, LiouvillianForm::form_iii);
    worst_forms = std::max({worst_forms, frobenius_distance(h1, h2), frobenius_distance(h1, h3),
                            frobenius_distance(h2, h3)});
    const double rel = (one.adjoint() * h3).norm() / h3.norm();
    worst_trace = std::max(worst_trace, rel);
    trace_failures += rel > 1e-13;
  }
  o.require(worst_forms <= 1e-12);
  o.require(trace_failures == 0);
  o.detail << "sets=20 max_form_distance=" << sci(worst_forms) << " (<= 1e-12)"
           << " max_trace_row/||H||=" << sci(worst_trace) << " (<= 1e-13, failing sets "
           << trace_failures << ")";
  return o;
}

// 4. su(1,1) factor against expm on the same truncation, margin 5.
Outcome criterion_4(const Recorder&) {
  Outcome o;
  ModelParams p;
  p.mu = 0.4;
  p.nu = 0.2;
  p.dim = 16;
  const auto g = build_generators(build_fock_ops(16));
  const ComplexMatrix gen = -(p.mu + p.nu) * g.ktilde3 + p.nu * g.ktilde_plus + p.mu * g.ktilde_minus;
  o.detail << "margin=5";
  for (double t : {0.25, 0.5, 1.0}) {
    const double gap = interior_norm((su11_factor(p, t) - expm((t * gen).eval())).eval(), 16, 5);
    o.require(gap <= 1e-8);
    o.detail << " t=" << t << ":" << sci(gap);
  }
  o.detail << " (<= 1e-8)";
  return o;
}

// 5. L factor against expm on the same truncation, margin 4, and the
// three-factor/six-factor agreement.
Outcome criterion_5(const Recorder&) {
  Outcome o;
  ModelParams p;
  p.omega = 1.0;
  p.kappa = {0.1, 0.05};
  p.dim = 16;
  const auto g = build_generators(build_fock_ops(16));
  const ComplexMatrix gen =
      Complex(0.0, -2.0 * p.omega) * g.l3 + std::conj(p.kappa) * g.l_plus + p.kappa * g.l_minus;
  double worst_split = 0.0;
  o.detail << "margin=4";
  for (double t : {0.1, 0.5, 1.0}) {
    const ComplexMatrix l = l_factor(p, t);
    const double gap = interior_norm((l - expm((t * gen).eval())).eval(), 16, 4);
    o.require(gap <= 1e-9);
    o.detail << " t=" << t << ":" << sci(gap);
    worst_split = std::max(worst_split, frobenius_distance(l, l_factor_split(p, t)));
  }
  o.require(worst_split <= 1e-12);
  o.detail << " (<= 1e-9) three_vs_six_factor=" << sci(worst_split) << " (<= 1e-12)";
  return o;
}

// 6. Without kappa both splittings reproduce exact propagation.
Outcome criterion_6(const Recorder& rec) {
  Outcome o;
  ModelParams p;
  p.omega = 1.0;
  p.mu = 0.4;
  p.nu = 0.2;
  p.dim = 20;
  // Occupied levels 0..8.
  const std::vector<std::pair<std::string, ComplexMatrix>> states{
      {"fock8", fock_state(20, 8)},
      {"coherent", embed_state(coherent_state(9, {1.5, 0.5}), 20)},
      {"thermal", embed_state(thermal_state(9, 1.0), 20)}};
  double worst_fact = 0.0, worst_alt = 0.0;
  std::map<double, double> by_time;
  for (const auto& [name, rho0] : states) {
    for (double t : {0.25, 0.5, 0.75, 1.0}) {
      const auto exact = propagate_exact(p, rho0, t);
      const auto fact = propagate_factorized(p, rho0, t);
      const auto alt = propagate_alternative(p, rho0, t);
      rec.add("c06 " + name, p, exact);
      rec.add("c06 " + name, p, fact);
      rec.add("c06 " + name, p, alt);
      const double df = compare_states(fact.rho_t, exact.rho_t).trace_distance;
      const double da = compare_states(alt.rho_t, exact.rho_t).trace_distance;
      worst_fact = std::max(worst_fact, df);
      worst_alt = std::max(worst_alt, da);
      by_time[t] = std::max({by_time[t], df, da});
    }
  }
  o.require(worst_fact <= 1e-8);
  o.require(worst_alt <= 1e-8);
  o.detail << "max_tracedist factorized=" << sci(worst_fact) << " alternative=" << sci(worst_alt)
           << " (<= 1e-8) by_t";
  for (const auto& [t, v] : by_time) {
    o.detail << " " << t << ":" << sci(v);
  }
  return o;
}

// 7. Local order 2 and global order 1 of the factorized splitting.
Outcome criterion_7(const Recorder& rec) {
  Outcome o;
  ModelParams p;
  p.omega = 1.0;
  p.mu = 0.5;
  p.nu = 0.25;
  p.kappa = {0.1, 0.05};
  p.dim = 16;
  const ComplexMatrix rho0 = fock_state(16, 0);
  const std::vector<double> times{0.4, 0.2, 0.1, 0.05};
  const std::vector<int> steps{2, 4, 8, 16};
  const auto local = convergence_in_time(p, rho0, times, Method::factorized);
  const auto global = convergence_in_steps(p, rho0, 1.0, steps, Method::factorized);
  const bool local_ok = local.slope && std::abs(*local.slope - 2.0) <= 0.2;
  const bool global_ok = global.slope && std::abs(*global.slope + 1.0) <= 0.2;
  o.require(local_ok);
  o.require(global_ok);
  o.detail << "local_slope=" << (local.slope ? sci(*local.slope) : "none") << " (2.0 +- 0.2)"
           << " global_slope=" << (global.slope ? sci(*global.slope) : "none") << " (-1.0 +- 0.2)";
  if (rec.sink) {
    for (double t : times) {
      rec.add("c07 local", p, propagate_exact(p, rho0, t));
      rec.add("c07 local", p, propagate_factorized(p, rho0, t));
    }
    rec.add("c07 global", p, propagate_exact(p, rho0, 1.0));
    for (int n : steps) {
      rec.add("c07 global", p, stepped_propagate(p, rho0, 1.0, n, Method::factorized));
    }
  }
  return o;
}

// 8. Operator series against the factorized superoperator at d = 12.
Outcome criterion_8(const Recorder& rec) {
  Outcome o;
  std::mt19937_64 rng(2008);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int k = 0; k < 5; ++k) {
    const ModelParams p = random_admissible(rng, 12, false);
    const ComplexMatrix rho0 = oracle::random_density(12, 4, rng);
    const double t = 0.1 + 0.9 * u(rng);
    const auto series = operator_series_solution(p, rho0, t);
    const auto fact = propagate_factorized(p, rho0, t);
    rec.add("c08", p, series);
    rec.add("c08", p, fact);
    worst = std::max(worst, frobenius_distance(series.rho_t, fact.rho_t));
  }
  o.require(worst <= 1e-10);
  o.detail << "sets=5 max_frobenius=" << sci(worst) << " (<= 1e-10)";
  return o;
}

Outcome criterion_10(const Recorder& rec);

// 9. Trace, Hermiticity and positivity over every state produced above.
Outcome criterion_9(const Recorder&) {
  Outcome o;
  std::vector<Record> records;
  const Recorder collect{&records};
  criterion_6(collect);
  criterion_7(collect);
  criterion_8(collect);
  criterion_10(collect);

  double worst_trace = 0.0, worst_herm = 0.0, worst_min_eig = 0.0;
  std::map<std::string, int> failures;
  int positivity_checked = 0;
  for (const auto& r : records) {
    const auto& d = r.result.diagnostics;
    const double trace_dev = std::abs(d.trace - 1.0);
    worst_trace = std::max(worst_trace, trace_dev);
    worst_herm = std::max(worst_herm, d.herm_residual);
    const std::string tag = r.source + "/" + std::string(to_string(r.method));
    if (trace_dev > 1e-10) {
      ++failures[tag + ":trace"];
    }
    if (d.herm_residual > 1e-10) {
      ++failures[tag + ":herm"];
    }
    if (r.method == Method::exact && satisfies_positivity(r.params) && d.tail_mass <= 1e-10) {
      ++positivity_checked;
      worst_min_eig = std::min(worst_min_eig, d.min_eigenvalue);
      if (d.min_eigenvalue < -1e-8) {
        ++failures[tag + ":min_eig"];
      }
    }
  }
  o.require(failures.empty());
  o.detail << "states=" << records.size() << " max|trace-1|=" << sci(worst_trace)
           << " max_herm=" << sci(worst_herm) << " (<= 1e-10) positivity_checked=" << positivity_checked
           << " min_eig=" << sci(worst_min_eig) << " (>= -1e-8)";
  if (!failures.empty()) {
    o.detail << " failing:";
    for (const auto& [tag, count] : failures) {
      o.detail << " " << tag << "x" << count;
    }
  }
  return o;
}

// 10. Single-excitation decay: <N>(t) = e^{-0.6 t}.
Outcome criterion_10(const Recorder& rec) {
  Outcome o;
  ModelParams p;
  p.mu = 0.6;
  p.dim = 8;
  const ComplexMatrix rho0 = fock_state(8, 1);
  double worst = 0.0;
  for (int k = 1; k <= 20; ++k) {
    const double t = 0.25 * k;
    const auto r = propagate_exact(p, rho0, t);
    rec.add("c10", p, r);
    worst = std::max(worst, std::abs(r.diagnostics.mean_n - std::exp(-0.6 * t)));
  }
  o.require(worst <= 1e-8);
  o.detail << "points=20 t=0.25..5 max|<N>-e^{-0.6t}|=" << sci(worst) << " (<= 1e-8)";
  return o;
}

// 11. Closed form and limit series agree where the automatic branch switches.
Outcome criterion_11(const Recorder&) {
  Outcome o;
  double worst_su11 = 0.0, worst_omega = 0.0;
  auto diff = [](Complex a, Complex b) { return std::abs(a - b); };
  for (double t : {0.5, 1.0, 2.0}) {
    for (double scale : {0.5, 0.999, 1.001, 2.0}) {
      ModelParams p;
      p.omega = 1.0;
      p.kappa = {0.1, 0.05};
      const double dmu = 2.0 * scale * kSu11SeamThreshold / t;
      p.mu = 0.3 + dmu / 2;
      p.nu = 0.3 - dmu / 2;
      auto a = eval_coefficients(p, t, CoefficientBranch::closed_form);
      auto b = eval_coefficients(p, t, CoefficientBranch::limit);
      worst_su11 = std::max({worst_su11, diff(a.su11_norm, b.su11_norm),
                             diff(a.su11_lower, b.su11_lower), diff(a.su11_raise, b.su11_raise)});

      p.mu = 0.4;
      p.nu = 0.2;
      p.omega = scale * kOmegaSeamThreshold / t;
      a = eval_coefficients(p, t, CoefficientBranch::closed_form);
      b = eval_coefficients(p, t, CoefficientBranch::limit);
      worst_omega = std::max({worst_omega, diff(a.l_raise, b.l_raise), diff(a.l_lower, b.l_lower),
                              diff(a.l_diag, b.l_diag)});
    }
  }
  o.require(worst_su11 <= 1e-9);
  o.require(worst_omega <= 1e-9);
  o.detail << "mu-nu_seam=" << sci(worst_su11) << " omega_seam=" << sci(worst_omega) << " (<= 1e-9)";
  return o;
}

struct Criterion {
  const char* title;
  std::function<Outcome(const Recorder&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {"algebra identities", criterion_1},
      {"vectorization identity", criterion_2},
      {"liouvillian forms and trace", criterion_3},
      {"su(1,1) disentangling", criterion_4},
      {"L factorization", criterion_5},
      {"kappa=0 splitting exactness", criterion_6},
      {"splitting order", criterion_7},
      {"series vs superoperator", criterion_8},
      {"physical invariants", criterion_9},
      {"analytic damping", criterion_10},
      {"coefficient seams", criterion_11},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion (1-11)")
      ->check(CLI::Range(1, static_cast<int>(criteria().size())));
  CLI11_PARSE(app, argc, argv);

  bool all_pass = true;
  for (std::size_t i = 0; i < criteria().size(); ++i) {
    if (only != 0 && static_cast<int>(i) + 1 != only) {
      continue;
    }
    const auto& c = criteria()[i];
    Outcome o;
    try {
      o = c.run(Recorder{});
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    all_pass = all_pass && o.pass;
    std::printf("criterion %02zu %s [%s] %s\n", i + 1, o.pass ? "PASS" : "FAIL", c.title,
                o.detail.str().c_str());
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
