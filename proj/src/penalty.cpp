#include "varsmooth/penalty.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace varsmooth {

namespace {

void require_valid_mu(const PenaltySpec& p, double mu) {
  if (!(mu > 0.0)) {
    throw std::invalid_argument("penalty: mu must be positive");
  }
  if (mu * p.rho >= 1.0) {
    std::ostringstream msg;
    msg << "penalty: mu*rho = " << mu * p.rho
        << " >= 1; the smoothing schedule is misconfigured (tau must exceed 2)";
    throw std::invalid_argument(msg.str());
  }
}

double sign(double z) { return z > 0.0 ? 1.0 : (z < 0.0 ? -1.0 : 0.0); }

}  // namespace

PenaltySpec PenaltySpec::l1(double lambda, double rho_floor) {
  if (lambda < 0.0) throw std::invalid_argument("penalty: lambda must be >= 0");
  if (rho_floor <= 0.0) throw std::invalid_argument("penalty: rho floor must be > 0");
  PenaltySpec p;
  p.kind = PenaltyKind::L1;
  p.lambda = lambda;
  p.rho = 0.0;
  p.rho_eff = rho_floor;
  return p;
}

PenaltySpec PenaltySpec::mcp(double lambda, double beta, double rho_floor) {
  if (lambda < 0.0) throw std::invalid_argument("penalty: lambda must be >= 0");
  if (beta <= 0.0) throw std::invalid_argument("penalty: MCP beta must be > 0");
  if (rho_floor <= 0.0) throw std::invalid_argument("penalty: rho floor must be > 0");
  PenaltySpec p;
  p.kind = PenaltyKind::Mcp;
  p.lambda = lambda;
  p.beta = beta;
  p.rho = lambda / beta;
  p.rho_eff = p.rho > 0.0 ? p.rho : rho_floor;
  return p;
}

PenaltySpec PenaltySpec::scad(double lambda, double a, double rho_floor) {
  if (lambda < 0.0) throw std::invalid_argument("penalty: lambda must be >= 0");
  if (a <= 2.0) throw std::invalid_argument("penalty: SCAD a must be > 2");
  if (rho_floor <= 0.0) throw std::invalid_argument("penalty: rho floor must be > 0");
  PenaltySpec p;
  p.kind = PenaltyKind::Scad;
  p.lambda = lambda;
  p.a = a;
  p.rho = lambda / (a - 1.0);
  p.rho_eff = p.rho > 0.0 ? p.rho : rho_floor;
  return p;
}

const char* PenaltySpec::name() const {
  switch (kind) {
    case PenaltyKind::L1: return "l1";
    case PenaltyKind::Mcp: return "mcp";
    case PenaltyKind::Scad: return "scad";
  }
  return "?";
}

double penalty_value_scalar(const PenaltySpec& p, double z) {
  const double t = std::abs(z);
  switch (p.kind) {
    case PenaltyKind::L1:
      return p.lambda * t;
    case PenaltyKind::Mcp:
      return p.lambda * (t <= p.beta ? t - t * t / (2.0 * p.beta) : p.beta / 2.0);
    case PenaltyKind::Scad: {
      const double a = p.a;
      if (t <= 1.0) return p.lambda * t;
      if (t <= a) return p.lambda * (-t * t + 2.0 * a * t - 1.0) / (2.0 * (a - 1.0));
      return p.lambda * (a + 1.0) / 2.0;
    }
  }
  return 0.0;
}

double penalty_value(const PenaltySpec& p, const Eigen::MatrixXd& Z) {
  double sum = 0.0;
  for (Eigen::Index j = 0; j < Z.cols(); ++j)
    for (Eigen::Index i = 0; i < Z.rows(); ++i)
      sum += penalty_value_scalar(p, Z(i, j));
  return sum;
}

double prox_scalar(const PenaltySpec& p, double mu, double z) {
  require_valid_mu(p, mu);
  const double c = mu * p.lambda;  // effective soft threshold
  const double t = std::abs(z);
  if (c == 0.0) return z;
  switch (p.kind) {
    case PenaltyKind::L1:
      return sign(z) * std::max(t - c, 0.0);
    case PenaltyKind::Mcp: {
      if (t <= c) return 0.0;
      if (t <= p.beta) return sign(z) * (t - c) / (1.0 - c / p.beta);
      return z;
    }
    case PenaltyKind::Scad: {
      const double a = p.a;
      if (t <= c) return 0.0;
      if (t <= 1.0 + c) return sign(z) * (t - c);
      if (t <= a) return sign(z) * ((a - 1.0) * t - a * c) / (a - 1.0 - c);
      return z;
    }
  }
  return z;
}

Eigen::MatrixXd prox_matrix(const PenaltySpec& p, double mu, const Eigen::MatrixXd& Z) {
  require_valid_mu(p, mu);
  Eigen::MatrixXd P(Z.rows(), Z.cols());
  for (Eigen::Index j = 0; j < Z.cols(); ++j)
    for (Eigen::Index i = 0; i < Z.rows(); ++i)
      P(i, j) = prox_scalar(p, mu, Z(i, j));
  return P;
}

double moreau_value(const PenaltySpec& p, double mu, double z) {
  const double t = prox_scalar(p, mu, z);
  const double d = t - z;
  return penalty_value_scalar(p, t) + d * d / (2.0 * mu);
}

double moreau_value(const PenaltySpec& p, double mu, const Eigen::MatrixXd& Z) {
  const Eigen::MatrixXd P = prox_matrix(p, mu, Z);
  return penalty_value(p, P) + (P - Z).squaredNorm() / (2.0 * mu);
}

double moreau_grad(const PenaltySpec& p, double mu, double z) {
  return (z - prox_scalar(p, mu, z)) / mu;
}

Eigen::MatrixXd moreau_grad(const PenaltySpec& p, double mu, const Eigen::MatrixXd& Z) {
  return (Z - prox_matrix(p, mu, Z)) / mu;
}

}  // namespace varsmooth
