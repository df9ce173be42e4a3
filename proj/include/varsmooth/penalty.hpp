#pragma once

#include <Eigen/Core>

namespace varsmooth {

enum class PenaltyKind { L1, Mcp, Scad };

/**
 * A weakly convex sparsity penalty lambda * r with closed-form proximity
 * operator and Moreau envelope, applied entrywise over matrices.
 *
 * r is the unit-scale shape function:
 *   L1    r(t) = |t|
 *   MCP   r(t) = |t| - t^2/(2*beta)  for |t| <= beta,   beta/2 beyond
 *   SCAD  r(t) = |t|                 for |t| <= 1,
 *                (-t^2 + 2a|t| - 1)/(2(a-1))  on (1, a],  (a+1)/2 beyond
 *
 * rho is the weak-convexity modulus of lambda * r (lambda*r + rho/2 |.|^2
 * is convex); rho_eff substitutes a positive floor when rho = 0 so the
 * smoothing schedule 1/(tau * rho_eff * n^{1/alpha}) stays well defined.
 */
struct PenaltySpec {
  PenaltyKind kind = PenaltyKind::L1;
  double lambda = 1.0;
  double beta = 1.0;  // MCP shape, > 0
  double a = 3.7;     // SCAD shape, > 2
  double rho = 0.0;
  double rho_eff = 1.0;

  static PenaltySpec l1(double lambda, double rho_floor = 1.0);
  static PenaltySpec mcp(double lambda, double beta, double rho_floor = 1.0);
  static PenaltySpec scad(double lambda, double a = 3.7, double rho_floor = 1.0);

  const char* name() const;
};

/// lambda * r(z) for a scalar.
double penalty_value_scalar(const PenaltySpec& p, double z);

/// lambda * sum_ij r(Z_ij).
double penalty_value(const PenaltySpec& p, const Eigen::MatrixXd& Z);

/// argmin_t lambda*r(t) + (t - z)^2 / (2 mu). Requires mu * rho < 1.
double prox_scalar(const PenaltySpec& p, double mu, double z);

/// Entrywise prox; preserves symmetry of symmetric inputs.
Eigen::MatrixXd prox_matrix(const PenaltySpec& p, double mu, const Eigen::MatrixXd& Z);

/// Moreau envelope value, evaluated exactly through the prox.
double moreau_value(const PenaltySpec& p, double mu, double z);
double moreau_value(const PenaltySpec& p, double mu, const Eigen::MatrixXd& Z);

/// Envelope gradient (Z - prox(Z)) / mu.
double moreau_grad(const PenaltySpec& p, double mu, double z);
Eigen::MatrixXd moreau_grad(const PenaltySpec& p, double mu, const Eigen::MatrixXd& Z);

}  // namespace varsmooth
