#pragma once

#include <Eigen/Dense>
#include <cmath>

#include "vind/errors.hpp"

namespace vind {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Symmetric positive semidefinite matrix checks: symmetry to 1e-12
// relative, eigenvalues >= -1e-10 * lambda_max.
inline bool is_symmetric(const Matrix& m, double rtol = 1e-12) {
  if (m.rows() != m.cols()) return false;
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  return (m - m.transpose()).cwiseAbs().maxCoeff() <= rtol * scale;
}

inline bool is_psd(const Matrix& m, double sym_rtol = 1e-12) {
  if (!is_symmetric(m, sym_rtol)) return false;
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  const double largest = std::max(0.0, ev.maxCoeff());
  return ev.minCoeff() >= -1e-10 * std::max(largest, 1.0);
}

// Symmetric square root of a positive definite matrix via eigendecomposition,
// with eigenvalues floored at `floor`.
inline Matrix sym_sqrt(const Matrix& v, double floor = 1e-12) {
  if (!is_symmetric(v, 1e-9)) throw DomainError("sym_sqrt: matrix not symmetric");
  Eigen::SelfAdjointEigenSolver<Matrix> es(v);
  Vector ev = es.eigenvalues();
  for (int i = 0; i < ev.size(); ++i) ev[i] = std::sqrt(std::max(ev[i], floor));
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().transpose();
}

// log|M| for positive definite M; throws if the Cholesky factorization fails.
inline double log_det_pd(const Matrix& m) {
  Eigen::LLT<Matrix> llt(m);
  if (llt.info() != Eigen::Success) throw DomainError("log_det_pd: matrix not positive definite");
  return 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
}

}  // namespace vind
