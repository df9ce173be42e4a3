#pragma once

#include <Eigen/Core>

namespace varsmooth {

/**
 * Element of the structured skew space Q_{N,k}: the block matrix
 *
 *     V = [ A  -B^T ]      A in R^{k x k}, A^T = -A,
 *         [ B   0   ]      B in R^{(N-k) x k},
 *
 * which parameterizes the Grassmannian through the Cayley map below.
 * A is skew-symmetrized on construction; both blocks are immutable.
 */
class ParamPoint {
 public:
  ParamPoint(const Eigen::MatrixXd& A, Eigen::MatrixXd B);

  static ParamPoint zero(int n, int k);

  const Eigen::MatrixXd& A() const { return A_; }
  const Eigen::MatrixXd& B() const { return B_; }
  int n() const { return static_cast<int>(A_.rows() + B_.rows()); }
  int k() const { return static_cast<int>(A_.cols()); }

  /// Full N x N matrix [[A, -B^T], [B, 0]].
  Eigen::MatrixXd assemble() const;

  /// Frobenius inner product of the assembled matrices.
  double dot(const ParamPoint& other) const;
  double norm() const;

  ParamPoint operator+(const ParamPoint& other) const;
  ParamPoint operator-(const ParamPoint& other) const;
  ParamPoint operator*(double s) const;

 private:
  Eigen::MatrixXd A_;
  Eigen::MatrixXd B_;
};

/// Orthogonal N x N basis for the Cayley parametrization.
struct BasisMatrix {
  explicit BasisMatrix(Eigen::MatrixXd S_in);
  Eigen::MatrixXd S;
};

/// Orthogonal projection of an arbitrary N x N matrix onto Q_{N,k}:
/// skew-symmetrize, zero the lower-right (N-k) x (N-k) block.
ParamPoint project_q(const Eigen::MatrixXd& M, int k);

/// S = I (default parametrization center).
BasisMatrix select_s(int n);

/// Orthogonal completion of an orthonormal U0, so that the Cayley map
/// at V = 0 reproduces the subspace spanned by U0.
BasisMatrix select_s(const Eigen::MatrixXd& U0);

/// U = S (I - V)(I + V)^{-1} I_{N x k}; U^T U = I_k.
Eigen::MatrixXd cayley_map(const BasisMatrix& S, const ParamPoint& V);

/// Differential: DPsi_S(V)[H] = -2 S (I+V)^{-1} H (I+V)^{-1} I_{N x k}.
Eigen::MatrixXd cayley_dmap(const BasisMatrix& S, const ParamPoint& V, const ParamPoint& H);

/// Adjoint of the differential: the unique W in Q_{N,k} with
/// <DPsi_S(V)[H], Z>_F = <H, W>_F for all H in Q_{N,k}.
ParamPoint cayley_adjoint(const BasisMatrix& S, const ParamPoint& V, const Eigen::MatrixXd& Z);

}  // namespace varsmooth
