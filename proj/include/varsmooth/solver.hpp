#pragma once

#include <Eigen/Core>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace varsmooth {

/**
 * Parameters of the variable-smoothing gradient descent.
 *
 * The smoothing schedule is mu_n = 1 / (tau * rho_eff * n^{1/alpha});
 * tau > 2 keeps every mu_n inside the admissible range of the Moreau
 * envelope. c and kappa drive the Armijo backtracking search.
 */
struct SolverConfig {
  double tau = 3.0;
  double c = 0.0001220703125;  // 2^-13
  double kappa = 0.5;
  double alpha = 1.1;
  double epsilon_step = 1e-5;  // lower floor for the stepsize guess
  double gamma_first = 1.0;    // first-iteration guess
  double gamma_max = 1e3;      // upper clamp for the stepsize guess
  int max_iters = 500;
  int max_shrinks = 60;
  double grad_tol = 0.0;  // 0 disables the early stop

  void validate() const;  // throws std::invalid_argument
};

/// Contract the solver minimizes through: the mu-smoothed objective and
/// its exact gradient, plus the unsmoothed value for reporting.
class SmoothedProblem {
 public:
  virtual ~SmoothedProblem() = default;
  virtual double value(const Eigen::VectorXd& y, double mu) const = 0;
  virtual Eigen::VectorXd grad(const Eigen::VectorXd& y, double mu) const = 0;
  virtual double unsmoothed_value(const Eigen::VectorXd& y) const = 0;
  virtual double rho_eff() const = 0;
};

struct IterationRecord {
  int n = 0;
  double mu = 0.0;
  double gamma_bar = 0.0;  // initial guess handed to backtracking
  double gamma = 0.0;      // accepted stepsize (0 on an early-stop record)
  int shrinks = 0;
  double grad_norm = 0.0;
  double value = 0.0;  // smoothed objective at y_n, mu_n
  double unsmoothed_value = 0.0;
};

struct SolverTrace {
  std::vector<IterationRecord> records;
  std::vector<Eigen::VectorXd> iterates;  // y_1 ... y_final
  Eigen::VectorXd final_y;
  std::string termination;  // "max_iters" or "grad_tol"

  double min_grad_norm() const;
  int max_shrinks() const;
  void write_csv(std::ostream& out) const;
};

/// mu_n = 1 / (tau * rho_eff * n^{1/alpha}).
double schedule_mu(int n, const SolverConfig& cfg, double rho_eff);

struct BacktrackResult {
  double gamma = 0.0;
  int shrinks = 0;
};

/// First gamma in {gamma_init * kappa^j} with
/// J(y - gamma g) <= J(y) - c * gamma * ||g||^2. Throws std::runtime_error
/// once the shrink count exceeds cfg.max_shrinks.
BacktrackResult backtrack(const std::function<double(const Eigen::VectorXd&)>& J,
                          const Eigen::VectorXd& grad_at_y, double value_at_y,
                          const Eigen::VectorXd& y, const SolverConfig& cfg,
                          double gamma_init);

/// Stepsize guess from the previous iteration's objective decrease,
/// floored at epsilon_step and clamped at gamma_max. With no usable
/// decrease, falls back to the previously accepted stepsize.
double initial_stepsize_guess(const SolverTrace& trace, double value_now,
                              double grad_norm_sq, const SolverConfig& cfg);

/// Variable-smoothing gradient descent from y1.
SolverTrace run(const SmoothedProblem& problem, const Eigen::VectorXd& y1,
                const SolverConfig& cfg);

struct RateEnvelope {
  double eta = 0.0;
  bool holds = false;
};

/**
 * Empirical convergence-envelope diagnostic. Fits the smallest eta such
 * that   min_{n0<=n<=n1} ||grad_n|| <= sqrt(eta / ((n1+1)^{1-1/alpha} - n0^{1-1/alpha}))
 * for every n1 in (n0, calibration_end], then reports whether the same
 * eta keeps the bound on the remaining suffix of the trace.
 * calibration_end = 0 selects the midpoint of the trace.
 */
RateEnvelope rate_envelope_check(const SolverTrace& trace, const SolverConfig& cfg,
                                 int n0, int calibration_end = 0);

}  // namespace varsmooth
