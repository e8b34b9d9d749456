#pragma once

#include <Eigen/Dense>
#include <memory>
#include <string>
#include <vector>

#include "hodgeheat/complex.hpp"
#include "hodgeheat/heat.hpp"
#include "hodgeheat/metrics.hpp"

namespace hodgeheat {

/// zeta_s(t, r) = (1/s^2) (r s asinh(r s / t) - sqrt(t^2 + r^2 s^2) + t),
/// the rate function of the heat-kernel bound. Requires s > 0, t > 0,
/// r >= 0; r = +inf yields +inf. Satisfies the scaling identity
/// zeta_s(t, r) = zeta_1(t / s^2, r / s).
double zeta_closed(double s, double t, double r);

struct ZetaVariational {
  double value = 0.0;
  double kappa_star = 0.0;
};

/// The same rate function as the negated infimum over kappa > 0 of
/// (1/s^2)(cosh(kappa s / 2) - 1) t - (kappa/2) r, minimized numerically by
/// golden section. The minimizer matches kappa_0 = (2/s) asinh(r s / t).
ZetaVariational zeta_variational(double s, double t, double r);

/// C(h) = inf over u in (0, 1/h] of 2 [asinh(u) - (sqrt(1+u^2)-1)/u] / u,
/// the normalized ratio 2 t zeta(t, r) / r^2 on the region t >= h r.
/// Tends to 1 as h grows; used by the Gaussian-form corollary.
double gaussian_constant(double h);

struct DggReport {
  std::string form;  ///< pairing | functional | pointwise
  int dim = 0;
  std::vector<Face> set_a, set_b;
  double t = 0.0;
  MetricKind kind = MetricKind::MuWeight;
  double rho = 0.0;     ///< metric distance between the sets
  double jump = 0.0;    ///< jump size s of the metric
  double lambda = 0.0;  ///< spectral bottom
  double zeta = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  ///< rhs - lhs
  bool hypothesis_ok = true;
  std::string note;

  /// The bound holds up to accumulated eigensolver error.
  bool pass() const { return hypothesis_ok && margin >= -1e-9 * rhs; }
};

struct GaussianReport {
  int dim = 0;
  double t = 0.0, h = 0.0;
  double rho = 0.0, lambda = 0.0;
  double constant = 0.0;  ///< numerically derived C(h)
  double bound = 0.0;
  double lhs = 0.0;
  bool pass() const { return lhs <= bound + 1e-9 * bound; }
};

/// Shared state for a batch of bound checks on one (K, i, metric kind):
/// the heat propagator, the metric table, the spectral bottom and the jump
/// size are computed once. Immutable; checks may run concurrently.
class DggContext {
public:
  DggContext(const WeightedComplex& K, int i, MetricKind kind);
  ~DggContext();
  DggContext(DggContext&&) noexcept;

  const MetricTable& metric() const { return table_; }
  const HeatPropagator& propagator() const { return prop_; }
  double lambda() const { return lambda_; }
  double jump() const { return table_.jump; }

  /// |sum_{F' in B} sum_{F in A} p_t(F,F') w(F) w(F')| against
  /// sqrt(w(A) w(B)) e^{-lambda t - zeta_s(t, rho(A,B))}.
  DggReport pairing(const std::vector<Face>& A, const std::vector<Face>& B,
                    double t) const;

  /// |<e^{-tL} f, g>_w| against e^{-lambda t - zeta} ||f|| ||g|| for
  /// supp f in A, supp g in B.
  DggReport functional(const Eigen::VectorXd& f, const Eigen::VectorXd& g,
                       const std::vector<Face>& A, const std::vector<Face>& B,
                       double t) const;

  /// |p_t(F, F')| against (w(F) w(F'))^{-1/2} e^{-lambda t - zeta}.
  DggReport pointwise(const Face& f, const Face& fp, double t) const;

  /// Pointwise checks for every pair of i-faces, sharing one kernel matrix.
  std::vector<DggReport> pointwise_all(double t) const;

  /// Gaussian form: lhs <= sqrt(w(A)w(B)) e^{-lambda t} e^{-C rho^2/(4t)}
  /// for t >= s h rho, with C = gaussian_constant(h).
  GaussianReport gaussian(const std::vector<Face>& A,
                          const std::vector<Face>& B, double t,
                          double h) const;

private:
  const WeightedComplex& K_;
  int i_;
  MetricKind kind_;
  HeatPropagator prop_;
  MetricTable table_;
  double lambda_ = 0.0;

  std::vector<int> set_indices(const std::vector<Face>& s) const;
  double set_weight(const std::vector<int>& idx) const;
  DggReport shell(const char* form, double t) const;
};

DggReport dgg_pairing_check(const WeightedComplex& K, int i,
                            const std::vector<Face>& A,
                            const std::vector<Face>& B, double t,
                            MetricKind kind);

DggReport dgg_functional_check(const WeightedComplex& K, int i,
                               const Eigen::VectorXd& f,
                               const Eigen::VectorXd& g,
                               const std::vector<Face>& A,
                               const std::vector<Face>& B, double t,
                               MetricKind kind);

DggReport pointwise_kernel_check(const WeightedComplex& K, int i,
                                 const Face& f, const Face& fp, double t,
                                 MetricKind kind);

GaussianReport gaussian_corollary_check(const WeightedComplex& K, int i,
                                        const std::vector<Face>& A,
                                        const std::vector<Face>& B, double t,
                                        double h,
                                        MetricKind kind = MetricKind::MuWeight);

struct SweepConfig {
  int trials = 2000;
  std::uint64_t seed = 42;
  bool mu_kind = true;
  bool canonical_kind = true;
  int min_vertices = 5;
  int max_vertices = 12;
  int trials_per_complex = 20;
  double t_min = 1e-2;
  double t_max = 1e2;
  int threads = 0;  ///< 0: HODGE_DGG_THREADS env var, else hardware
};

struct SweepResult {
  std::vector<DggReport> reports;
  int violations = 0;
  int complexes = 0;
};

/// Randomized Theorem-style bound checks over generated complexes, both
/// report forms, deterministic for a fixed seed regardless of thread count.
SweepResult run_sweep(const SweepConfig& config);

}  // namespace hodgeheat
