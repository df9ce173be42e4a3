#include "varsmooth/cayley.hpp"

#include <Eigen/Dense>
#include <sstream>
#include <stdexcept>

namespace varsmooth {

ParamPoint::ParamPoint(const Eigen::MatrixXd& A, Eigen::MatrixXd B)
    : A_(0.5 * (A - A.transpose())), B_(std::move(B)) {
  if (A.rows() != A.cols()) {
    throw std::invalid_argument("ParamPoint: A must be square");
  }
  if (B_.cols() != A.cols()) {
    throw std::invalid_argument("ParamPoint: B must have k columns");
  }
}

ParamPoint ParamPoint::zero(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("ParamPoint: need 1 <= k <= n");
  return ParamPoint(Eigen::MatrixXd::Zero(k, k), Eigen::MatrixXd::Zero(n - k, k));
}

Eigen::MatrixXd ParamPoint::assemble() const {
  const int N = n();
  const int K = k();
  Eigen::MatrixXd V = Eigen::MatrixXd::Zero(N, N);
  V.topLeftCorner(K, K) = A_;
  V.bottomLeftCorner(N - K, K) = B_;
  V.topRightCorner(K, N - K) = -B_.transpose();
  return V;
}

double ParamPoint::dot(const ParamPoint& other) const {
  // Block form of the assembled Frobenius product: B appears twice.
  return A_.cwiseProduct(other.A_).sum() + 2.0 * B_.cwiseProduct(other.B_).sum();
}

double ParamPoint::norm() const { return std::sqrt(dot(*this)); }

ParamPoint ParamPoint::operator+(const ParamPoint& other) const {
  return ParamPoint(A_ + other.A_, B_ + other.B_);
}

ParamPoint ParamPoint::operator-(const ParamPoint& other) const {
  return ParamPoint(A_ - other.A_, B_ - other.B_);
}

ParamPoint ParamPoint::operator*(double s) const { return ParamPoint(A_ * s, B_ * s); }

BasisMatrix::BasisMatrix(Eigen::MatrixXd S_in) : S(std::move(S_in)) {
  if (S.rows() != S.cols()) {
    throw std::invalid_argument("BasisMatrix: S must be square");
  }
  const double dev =
      (S.transpose() * S - Eigen::MatrixXd::Identity(S.rows(), S.cols())).norm();
  if (dev > 1e-10) {
    std::ostringstream msg;
    msg << "BasisMatrix: S is not orthogonal, ||S^T S - I|| = " << dev;
    throw std::invalid_argument(msg.str());
  }
}

ParamPoint project_q(const Eigen::MatrixXd& M, int k) {
  if (M.rows() != M.cols()) throw std::invalid_argument("project_q: M must be square");
  const int n = static_cast<int>(M.rows());
  if (k < 1 || k > n) throw std::invalid_argument("project_q: need 1 <= k <= n");
  const Eigen::MatrixXd skew = 0.5 * (M - M.transpose());
  return ParamPoint(skew.topLeftCorner(k, k), skew.bottomLeftCorner(n - k, k));
}

BasisMatrix select_s(int n) { return BasisMatrix(Eigen::MatrixXd::Identity(n, n)); }

BasisMatrix select_s(const Eigen::MatrixXd& U0) {
  const int k = static_cast<int>(U0.cols());
  const double dev =
      (U0.transpose() * U0 - Eigen::MatrixXd::Identity(k, k)).norm();
  if (dev > 1e-8) {
    std::ostringstream msg;
    msg << "select_s: U0 columns are not orthonormal, ||U0^T U0 - I|| = " << dev;
    throw std::invalid_argument(msg.str());
  }
  // Householder QR: the first k columns of Q span range(U0).
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(U0);
  Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(U0.rows(), U0.rows());
  return BasisMatrix(std::move(Q));
}

Eigen::MatrixXd cayley_map(const BasisMatrix& S, const ParamPoint& V) {
  const int N = V.n();
  const int K = V.k();
  if (S.S.rows() != N) throw std::invalid_argument("cayley_map: S and V dimensions differ");
  const Eigen::MatrixXd Vm = V.assemble();
  const Eigen::MatrixXd J = Eigen::MatrixXd::Identity(N, N).leftCols(K);
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(Eigen::MatrixXd::Identity(N, N) + Vm);
  const Eigen::MatrixXd Y = lu.solve(J);
  // (I - V) Y = 2Y - (I + V) Y = 2Y - J
  Eigen::MatrixXd U = S.S * (2.0 * Y - J);
  if (!U.allFinite()) throw std::runtime_error("cayley_map: linear solve produced non-finite values");
  return U;
}

Eigen::MatrixXd cayley_dmap(const BasisMatrix& S, const ParamPoint& V, const ParamPoint& H) {
  const int N = V.n();
  const int K = V.k();
  if (S.S.rows() != N || H.n() != N || H.k() != K) {
    throw std::invalid_argument("cayley_dmap: dimension mismatch");
  }
  const Eigen::MatrixXd J = Eigen::MatrixXd::Identity(N, N).leftCols(K);
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(Eigen::MatrixXd::Identity(N, N) + V.assemble());
  const Eigen::MatrixXd Y = lu.solve(J);
  return -2.0 * (S.S * lu.solve(H.assemble() * Y));
}

ParamPoint cayley_adjoint(const BasisMatrix& S, const ParamPoint& V, const Eigen::MatrixXd& Z) {
  const int N = V.n();
  const int K = V.k();
  if (S.S.rows() != N || Z.rows() != N || Z.cols() != K) {
    throw std::invalid_argument("cayley_adjoint: dimension mismatch");
  }
  const Eigen::MatrixXd J = Eigen::MatrixXd::Identity(N, N).leftCols(K);
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(Eigen::MatrixXd::Identity(N, N) + V.assemble());
  const Eigen::MatrixXd Y = lu.solve(J);
  const Eigen::MatrixXd X = lu.transpose().solve(S.S.transpose() * Z);
  return project_q(-2.0 * X * Y.transpose(), K);
}

}  // namespace varsmooth
