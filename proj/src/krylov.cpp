#include "krylov.hpp"

#include <algorithm>
#include <cmath>

#include "hodgeheat/rng.hpp"

namespace hodgeheat::detail {

Eigen::VectorXd exp_neg_scaled(const Eigen::VectorXd& eigenvalues, double t) {
  Eigen::VectorXd out(eigenvalues.size());
  for (Eigen::Index k = 0; k < eigenvalues.size(); ++k)
    out(k) = std::exp(-t * eigenvalues(k));
  return out;
}

namespace {

struct LanczosBasis {
  Eigen::MatrixXd V;  // n x m orthonormal
  Eigen::VectorXd alpha, beta;  // T diagonal, off-diagonal (beta has m entries; beta[m-1] = h_{m+1,m})
  int m = 0;
  bool breakdown = false;
};

LanczosBasis lanczos(const Eigen::SparseMatrix<double>& S,
                     const Eigen::VectorXd& v0, int max_m) {
  const int n = static_cast<int>(S.rows());
  const int m_cap = std::min(max_m, n);
  LanczosBasis b;
  b.V.resize(n, m_cap);
  b.alpha.resize(m_cap);
  b.beta.resize(m_cap);

  Eigen::VectorXd w = v0;
  b.V.col(0) = w;
  for (int j = 0; j < m_cap; ++j) {
    w = S * b.V.col(j);
    if (j > 0) w -= b.beta(j - 1) * b.V.col(j - 1);
    b.alpha(j) = b.V.col(j).dot(w);
    w -= b.alpha(j) * b.V.col(j);
    // full reorthogonalization, twice
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k <= j; ++k) w -= b.V.col(k).dot(w) * b.V.col(k);
    }
    b.beta(j) = w.norm();
    b.m = j + 1;
    if (b.beta(j) <= 1e-14 * std::max(1.0, std::abs(b.alpha(j)))) {
      b.breakdown = true;
      break;
    }
    if (j + 1 < m_cap) b.V.col(j + 1) = w / b.beta(j);
  }
  return b;
}

// exp(-tau T) e1 for the m x m tridiagonal T.
Eigen::VectorXd exp_tridiag_e1(const Eigen::VectorXd& alpha,
                               const Eigen::VectorXd& beta, int m,
                               double tau) {
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m, m);
  for (int j = 0; j < m; ++j) {
    T(j, j) = alpha(j);
    if (j + 1 < m) T(j, j + 1) = T(j + 1, j) = beta(j);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(T);
  const Eigen::VectorXd phase = exp_neg_scaled(eig.eigenvalues(), tau);
  return eig.eigenvectors() *
         (phase.array() * eig.eigenvectors().row(0).transpose().array())
             .matrix();
}

}  // namespace

Eigen::VectorXd expmv_symmetric(const Eigen::SparseMatrix<double>& S,
                                const Eigen::VectorXd& v, double t, double tol,
                                int max_basis) {
  Eigen::VectorXd w = v;
  double remaining = t;
  while (remaining > 0.0) {
    const double beta0 = w.norm();
    if (beta0 == 0.0) return w;
    const LanczosBasis b = lanczos(S, w / beta0, max_basis);
    if (b.breakdown) {
      // invariant subspace: the projected exponential is exact
      const Eigen::VectorXd y = exp_tridiag_e1(b.alpha, b.beta, b.m, remaining);
      w = beta0 * (b.V.leftCols(b.m) * y);
      return w;
    }
    double tau = remaining;
    Eigen::VectorXd y;
    for (;;) {
      y = exp_tridiag_e1(b.alpha, b.beta, b.m, tau);
      const double err = beta0 * b.beta(b.m - 1) * std::abs(y(b.m - 1));
      if (err <= tol * std::max(beta0, 1e-300) || tau <= remaining * 1e-6)
        break;
      tau *= 0.5;
    }
    w = beta0 * (b.V.leftCols(b.m) * y);
    remaining -= tau;
  }
  return w;
}

ExtremeEig smallest_eigenvalue_lanczos(const Eigen::SparseMatrix<double>& S,
                                       double sigma, double tol,
                                       std::uint64_t seed) {
  const int n = static_cast<int>(S.rows());
  ExtremeEig out;
  if (n == 0) return out;

  Rng rng(seed);
  Eigen::VectorXd v0(n);
  for (int k = 0; k < n; ++k) v0(k) = rng.gaussian();
  v0.normalize();

  const int m_cap = std::min(n, 500);
  Eigen::MatrixXd V(n, m_cap);
  Eigen::VectorXd alpha(m_cap), beta(m_cap);
  V.col(0) = v0;
  Eigen::VectorXd w;
  int m = 0;
  for (int j = 0; j < m_cap; ++j) {
    // matvec with the shifted operator sigma I - S
    w = sigma * V.col(j) - S * V.col(j);
    if (j > 0) w -= beta(j - 1) * V.col(j - 1);
    alpha(j) = V.col(j).dot(w);
    w -= alpha(j) * V.col(j);
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k <= j; ++k) w -= V.col(k).dot(w) * V.col(k);
    }
    beta(j) = w.norm();
    m = j + 1;

    const bool tiny = beta(j) <= 1e-14 * std::max(1.0, sigma);
    if (tiny || j == m_cap - 1 || (j >= 15 && j % 5 == 0)) {
      Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m, m);
      for (int q = 0; q < m; ++q) {
        T(q, q) = alpha(q);
        if (q + 1 < m) T(q, q + 1) = T(q + 1, q) = beta(q);
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(T);
      const int top = m - 1;  // largest eigenvalue of the shifted operator
      const double theta = eig.eigenvalues()(top);
      const double resid = beta(j) * std::abs(eig.eigenvectors()(m - 1, top));
      out.value = sigma - theta;
      out.residual = resid;
      out.iterations = m;
      if (resid <= tol * std::max(1.0, sigma) || tiny) {
        out.converged = true;
        return out;
      }
    }
    if (j + 1 < m_cap) V.col(j + 1) = w / beta(j);
  }
  return out;
}

}  // namespace hodgeheat::detail
