#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hodgeheat/complex.hpp"

namespace hodgeheat {

/// A cochain on S_i at a point in time.
struct HeatState {
  int dim = 0;
  double time = 0.0;
  Eigen::VectorXd values;
};

enum class SolveMethod { Auto, Dense, Krylov };

struct SpectralData {
  int dim = 0;
  double lambda_min = 0.0;  ///< clamped to 0 within 1e-10 * operator norm
  std::string method;       ///< "dense" or "iterative"
  double residual = 0.0;    ///< eigenresidual of the iterative path, 0 dense
  bool converged = true;
  /// Full decomposition of the W^{1/2}-symmetrized operator (eigenvalues
  /// ascending, matching eigenvector columns), available when every
  /// component is small enough for the dense path.
  std::optional<Eigen::VectorXd> eigenvalues;
  std::optional<Eigen::MatrixXd> eigenvectors;
};

/// The heat semigroup e^{-t L_i} of one (complex, dimension) pair.
///
/// The w-self-adjoint Laplacian is conjugated by W^{1/2} into a symmetric
/// matrix once; applications then run per connected component of the
/// adjacency graph (w_{FF'} != 0), so cross-component kernel entries are
/// exactly zero. Components up to the dense threshold are eigendecomposed
/// eagerly; larger ones use Lanczos-based expmv with adaptive substepping.
/// Immutable after construction; applications may run concurrently.
class HeatPropagator {
public:
  static constexpr int kDenseThreshold = 512;

  HeatPropagator(const WeightedComplex& K, int i);
  ~HeatPropagator();
  HeatPropagator(HeatPropagator&&) noexcept;
  HeatPropagator& operator=(HeatPropagator&&) noexcept;

  int size() const;
  int dim() const;
  double operator_norm() const;  ///< inf-norm of the symmetrized operator

  Eigen::VectorXd apply(double t, const Eigen::VectorXd& f,
                        SolveMethod method = SolveMethod::Auto) const;
  Eigen::VectorXd kernel_column(double t, int face_index,
                                SolveMethod method = SolveMethod::Auto) const;
  /// p_t(F, F') for all pairs, dense; component blocks only.
  Eigen::MatrixXd kernel_matrix(double t) const;

  const SpectralData& spectral_bottom() const;

  int component_of(int face_index) const;
  int component_count() const;

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

SpectralData spectral_bottom(const WeightedComplex& K, int i);

/// u(t) = e^{-t L_i} f for the initial state f (f.time is ignored).
HeatState apply_semigroup(const WeightedComplex& K, int i, double t,
                          const HeatState& f);

/// The heat kernel column F -> p_t(F, F'), i.e. the solution with initial
/// condition delta_{F'} / w(F').
HeatState heat_kernel_column(const WeightedComplex& K, int i, double t,
                             const Face& fp);

/// E(t) = sum_F f^2(t, F) e^{zeta(F)} w(F).
double energy_functional(const WeightedComplex& K, int i,
                         const HeatState& state,
                         const Eigen::VectorXd& zeta_vals);

}  // namespace hodgeheat
