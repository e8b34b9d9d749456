#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <cstdint>

namespace hodgeheat::detail {

/// e^{-t lambda_k} per eigenvalue, via scalar std::exp. Eigen's vectorized
/// exp clamps its argument near -708 and returns ~3e-308 instead of
/// underflowing to zero, which would leave phantom mass in long-time heat
/// states.
Eigen::VectorXd exp_neg_scaled(const Eigen::VectorXd& eigenvalues, double t);

/// e^{-t S} v for symmetric positive semidefinite sparse S, by Lanczos
/// projection with full reorthogonalization and adaptive time substepping.
Eigen::VectorXd expmv_symmetric(const Eigen::SparseMatrix<double>& S,
                                const Eigen::VectorXd& v, double t,
                                double tol = 1e-11, int max_basis = 40);

struct ExtremeEig {
  double value = 0.0;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Smallest eigenvalue of symmetric S via Lanczos on the shifted operator
/// sigma I - S (sigma an upper bound on the spectrum), full
/// reorthogonalization.
ExtremeEig smallest_eigenvalue_lanczos(const Eigen::SparseMatrix<double>& S,
                                       double sigma, double tol,
                                       std::uint64_t seed = 12345);

}  // namespace hodgeheat::detail
