#include "qdho/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qdho {

LogLogFit fit_log_log(const std::vector<double>& x, const std::vector<double>& y, double floor) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("fit_log_log: x and y differ in length");
  }
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (y[i] >= floor && x[i] > 0.0) {
      lx.push_back(std::log(x[i]));
      ly.push_back(std::log(y[i]));
    }
  }
  LogLogFit fit;
  if (lx.size() < 2) {
    return fit;
  }
  const auto n = static_cast<double>(lx.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (sxx == 0.0) {
    return fit;
  }
  const double slope = sxy / sxx;
  double ss = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double r = ly[i] - (my + slope * (lx[i] - mx));
    ss += r * r;
  }
  fit.slope = slope;
  fit.residual = std::sqrt(ss / n);
  return fit;
}

namespace {

void require_samples(std::size_t count) {
  if (count < 3) {
    throw std::invalid_argument("convergence study needs at least 3 sample points");
  }
}

ConvergenceTable finish(std::vector<ConvergenceRow> rows) {
  std::sort(rows.begin(), rows.end(),
            [](const ConvergenceRow& a, const ConvergenceRow& b) { return a.sample < b.sample; });
  std::vector<double> x, e_tr, e_fr;
  for (const auto& r : rows) {
    x.push_back(r.sample);
    e_tr.push_back(r.error_trace_distance);
    e_fr.push_back(r.error_frobenius);
  }
  ConvergenceTable table;
  table.rows = std::move(rows);
  const LogLogFit fit = fit_log_log(x, e_tr);
  if (!fit.slope) {
    table.exact_within_noise = true;
    return table;
  }
  table.slope = fit.slope;
  table.fit_residual = fit.residual;
  table.slope_frobenius = fit_log_log(x, e_fr).slope;
  return table;
}

}  // namespace

ConvergenceTable convergence_in_time(const ModelParams& p, const ComplexMatrix& rho0,
                                     const std::vector<double>& times, Method method) {
  require_samples(times.size());
  if (method == Method::exact || method == Method::stepped) {
    throw std::invalid_argument("convergence_in_time: method must be an approximate single-step propagator");
  }
  std::vector<ConvergenceRow> rows;
  for (double t : times) {
    if (!(t > 0.0)) {
      throw std::invalid_argument("convergence_in_time: sample times must be positive");
    }
    const auto exact = propagate_exact(p, rho0, t);
    const auto approx = propagate(method, p, rho0, t);
    const auto dist = compare_states(approx.rho_t, exact.rho_t);
    rows.push_back({t, dist.frobenius, dist.trace_distance});
  }
  return finish(std::move(rows));
}

ConvergenceTable convergence_in_steps(const ModelParams& p, const ComplexMatrix& rho0, double t,
                                      const std::vector<int>& n_steps, Method method) {
  require_samples(n_steps.size());
  const auto exact = propagate_exact(p, rho0, t);
  std::vector<ConvergenceRow> rows;
  for (int n : n_steps) {
    if (n < 1) {
      throw std::invalid_argument("convergence_in_steps: step counts must be positive");
    }
    const auto approx = stepped_propagate(p, rho0, t, n, method);
    const auto dist = compare_states(approx.rho_t, exact.rho_t);
    rows.push_back({static_cast<double>(n), dist.frobenius, dist.trace_distance});
  }
  return finish(std::move(rows));
}

}  // namespace qdho
