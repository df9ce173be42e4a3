#include "varsmooth/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace varsmooth {

void SolverConfig::validate() const {
  if (!(tau > 2.0)) throw std::invalid_argument("solver: tau must be > 2");
  if (!(c > 0.0 && c < 1.0)) throw std::invalid_argument("solver: c must be in (0,1)");
  if (!(kappa > 0.0 && kappa < 1.0)) throw std::invalid_argument("solver: kappa must be in (0,1)");
  if (!(alpha > 1.0)) throw std::invalid_argument("solver: alpha must be > 1");
  if (!(epsilon_step > 0.0)) throw std::invalid_argument("solver: epsilon_step must be > 0");
  if (!(gamma_first > 0.0)) throw std::invalid_argument("solver: gamma_first must be > 0");
  if (!(gamma_max >= epsilon_step)) throw std::invalid_argument("solver: gamma_max must be >= epsilon_step");
  if (max_iters < 1) throw std::invalid_argument("solver: max_iters must be >= 1");
  if (max_shrinks < 1) throw std::invalid_argument("solver: max_shrinks must be >= 1");
  if (grad_tol < 0.0) throw std::invalid_argument("solver: grad_tol must be >= 0");
}

double SolverTrace::min_grad_norm() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& r : records) m = std::min(m, r.grad_norm);
  return m;
}

int SolverTrace::max_shrinks() const {
  int m = 0;
  for (const auto& r : records) m = std::max(m, r.shrinks);
  return m;
}

void SolverTrace::write_csv(std::ostream& out) const {
  out.precision(17);
  out << "n,mu,gamma_bar,gamma,shrinks,grad_norm,smoothed_value,unsmoothed_value\n";
  for (const auto& r : records) {
    out << r.n << ',' << r.mu << ',' << r.gamma_bar << ',' << r.gamma << ','
        << r.shrinks << ',' << r.grad_norm << ',' << r.value << ','
        << r.unsmoothed_value << '\n';
  }
}

double schedule_mu(int n, const SolverConfig& cfg, double rho_eff) {
  if (n < 1) throw std::invalid_argument("schedule_mu: n must be >= 1");
  if (!(rho_eff > 0.0)) throw std::invalid_argument("schedule_mu: rho_eff must be > 0");
  return 1.0 / (cfg.tau * rho_eff * std::pow(static_cast<double>(n), 1.0 / cfg.alpha));
}

BacktrackResult backtrack(const std::function<double(const Eigen::VectorXd&)>& J,
                          const Eigen::VectorXd& grad_at_y, double value_at_y,
                          const Eigen::VectorXd& y, const SolverConfig& cfg,
                          double gamma_init) {
  if (!(gamma_init > 0.0)) throw std::invalid_argument("backtrack: gamma_init must be > 0");
  const double g2 = grad_at_y.squaredNorm();
  double gamma = gamma_init;
  int shrinks = 0;
  while (J(y - gamma * grad_at_y) > value_at_y - cfg.c * gamma * g2) {
    gamma *= cfg.kappa;
    ++shrinks;
    if (shrinks > cfg.max_shrinks) {
      std::ostringstream msg;
      msg << "backtrack: no sufficient decrease after " << cfg.max_shrinks
          << " shrinks (gamma_init = " << gamma_init
          << ", |grad| = " << std::sqrt(g2)
          << "); gradient or objective is inconsistent";
      throw std::runtime_error(msg.str());
    }
  }
  return {gamma, shrinks};
}

double initial_stepsize_guess(const SolverTrace& trace, double value_now,
                              double grad_norm_sq, const SolverConfig& cfg) {
  if (trace.records.empty()) return cfg.gamma_first;
  const IterationRecord& prev = trace.records.back();
  const double decrease = prev.value - value_now;
  double guess;
  if (decrease > 0.0 && grad_norm_sq > 0.0) {
    guess = std::max(2.0 * decrease / grad_norm_sq, cfg.epsilon_step);
  } else {
    guess = std::max(prev.gamma, cfg.epsilon_step);
  }
  return std::min(guess, cfg.gamma_max);
}

SolverTrace run(const SmoothedProblem& problem, const Eigen::VectorXd& y1,
                const SolverConfig& cfg) {
  cfg.validate();
  SolverTrace trace;
  trace.records.reserve(cfg.max_iters);
  trace.iterates.reserve(cfg.max_iters + 1);
  trace.iterates.push_back(y1);
  trace.termination = "max_iters";

  Eigen::VectorXd y = y1;
  for (int n = 1; n <= cfg.max_iters; ++n) {
    const double mu = schedule_mu(n, cfg, problem.rho_eff());
    const double value = problem.value(y, mu);
    const Eigen::VectorXd g = problem.grad(y, mu);
    if (!std::isfinite(value) || !g.allFinite()) {
      std::ostringstream msg;
      msg << "solver: non-finite objective or gradient at iteration " << n;
      throw std::runtime_error(msg.str());
    }
    const double grad_norm = g.norm();

    IterationRecord rec;
    rec.n = n;
    rec.mu = mu;
    rec.grad_norm = grad_norm;
    rec.value = value;
    rec.unsmoothed_value = problem.unsmoothed_value(y);

    if (cfg.grad_tol > 0.0 && grad_norm <= cfg.grad_tol) {
      trace.records.push_back(rec);
      trace.termination = "grad_tol";
      break;
    }

    rec.gamma_bar = initial_stepsize_guess(trace, value, grad_norm * grad_norm, cfg);
    const auto J = [&](const Eigen::VectorXd& yy) { return problem.value(yy, mu); };
    const BacktrackResult bt = backtrack(J, g, value, y, cfg, rec.gamma_bar);
    rec.gamma = bt.gamma;
    rec.shrinks = bt.shrinks;
    trace.records.push_back(rec);

    y -= bt.gamma * g;
    trace.iterates.push_back(y);
  }
  trace.final_y = y;
  return trace;
}

RateEnvelope rate_envelope_check(const SolverTrace& trace, const SolverConfig& cfg,
                                 int n0, int calibration_end) {
  const int len = static_cast<int>(trace.records.size());
  if (n0 < 1 || len <= n0) throw std::invalid_argument("rate_envelope_check: trace too short");
  if (calibration_end == 0) calibration_end = len / 2;
  calibration_end = std::clamp(calibration_end, n0 + 1, len);

  const double e = 1.0 - 1.0 / cfg.alpha;
  const auto window = [&](int n1) {
    return std::pow(static_cast<double>(n1 + 1), e) - std::pow(static_cast<double>(n0), e);
  };

  double running_min = std::numeric_limits<double>::infinity();
  double eta = 0.0;
  for (int n1 = n0; n1 <= calibration_end; ++n1) {
    running_min = std::min(running_min, trace.records[n1 - 1].grad_norm);
    if (n1 > n0) eta = std::max(eta, running_min * running_min * window(n1));
  }
  bool holds = true;
  for (int n1 = calibration_end + 1; n1 <= len; ++n1) {
    running_min = std::min(running_min, trace.records[n1 - 1].grad_norm);
    if (running_min * running_min * window(n1) > eta * (1.0 + 1e-12)) {
      holds = false;
      break;
    }
  }
  return {eta, holds};
}

}  // namespace varsmooth
