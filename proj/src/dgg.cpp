#include "hodgeheat/dgg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hodgeheat/operators.hpp"

namespace hodgeheat {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

void check_zeta_args(double s, double t, double r) {
  if (!(s > 0.0)) throw std::invalid_argument("jump size s must be positive");
  if (!(t > 0.0)) throw std::invalid_argument("time t must be positive");
  if (std::isnan(r) || r < 0.0)
    throw std::invalid_argument("distance r must be nonnegative");
}
}  // namespace

double zeta_closed(double s, double t, double r) {
  check_zeta_args(s, t, r);
  if (r == 0.0) return 0.0;
  if (std::isinf(r)) return kInf;
  const double x = r * s;
  // sqrt(t^2 + x^2) - t written as x^2 / (hypot + t) to avoid cancellation
  return (x * std::asinh(x / t) - x * x / (std::hypot(t, x) + t)) / (s * s);
}

ZetaVariational zeta_variational(double s, double t, double r) {
  check_zeta_args(s, t, r);
  if (r == 0.0) return {0.0, 0.0};  // infimum approached as kappa -> 0+
  if (std::isinf(r)) return {kInf, kInf};

  const auto g = [s, t, r](double kappa) {
    return (std::cosh(kappa * s / 2.0) - 1.0) * t / (s * s) - kappa * r / 2.0;
  };
  const double kappa0 = 2.0 / s * std::asinh(r * s / t);
  const double lo0 = 1e-12, hi0 = 4.0 * kappa0 + 1.0;
  double lo = lo0, hi = hi0;

  // golden section on the convex objective
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - phi * (hi - lo);
  double x2 = lo + phi * (hi - lo);
  double g1 = g(x1), g2 = g(x2);
  for (int iter = 0; iter < 200 && hi - lo > 1e-10; ++iter) {
    if (g1 <= g2) {
      hi = x2;
      x2 = x1;
      g2 = g1;
      x1 = hi - phi * (hi - lo);
      g1 = g(x1);
    } else {
      lo = x1;
      x1 = x2;
      g1 = g2;
      x2 = lo + phi * (hi - lo);
      g2 = g(x2);
    }
  }
  double kappa = (lo + hi) / 2.0;

  // The objective is flat to machine precision near its minimum (two large
  // terms cancel), which leaves golden section a noise floor of order
  // sqrt(eps |g| / g''). Polish the minimizer by bisecting the monotone
  // derivative g'(k) = (t/(2s)) sinh(k s/2) - r/2 instead.
  {
    const auto gp = [s, t, r](double kappa_) {
      return t / (2.0 * s) * std::sinh(kappa_ * s / 2.0) - r / 2.0;
    };
    double a = lo0, b = hi0;
    if (gp(a) < 0.0 && gp(b) > 0.0) {
      for (int iter = 0; iter < 200 && b - a > 1e-15 * b; ++iter) {
        const double mid = 0.5 * (a + b);
        (gp(mid) < 0.0 ? a : b) = mid;
      }
      kappa = 0.5 * (a + b);
    }
  }
  return {-g(kappa), kappa};
}

double gaussian_constant(double h) {
  if (!(h > 0.0)) throw std::invalid_argument("h must be positive");
  const auto ratio = [](double u) {
    // 2 [asinh(u) - (sqrt(1+u^2)-1)/u] / u, with the stable rewrite
    // (sqrt(1+u^2)-1)/u = u / (sqrt(1+u^2)+1)
    return 2.0 * (std::asinh(u) - u / (std::sqrt(1.0 + u * u) + 1.0)) / u;
  };
  const double u_max = 1.0 / h;
  double best = ratio(u_max);
  const int steps = 2000;
  const double decay = std::log(1e6) / steps;
  for (int k = 1; k <= steps; ++k)
    best = std::min(best, ratio(u_max * std::exp(-decay * k)));
  return best;
}

// ---------------------------------------------------------------------------

DggContext::DggContext(const WeightedComplex& K, int i, MetricKind kind)
    : K_(K), i_(i), kind_(kind), prop_(K, i), table_(metric_table(K, i, kind)) {
  lambda_ = prop_.spectral_bottom().lambda_min;
}

DggContext::~DggContext() = default;
DggContext::DggContext(DggContext&&) noexcept = default;

std::vector<int> DggContext::set_indices(const std::vector<Face>& s) const {
  if (s.empty()) throw std::invalid_argument("face set must be nonempty");
  std::vector<int> idx;
  idx.reserve(s.size());
  for (const Face& f : s) {
    auto k = K_.index_of(f);
    if (!k || f.dim() != i_)
      throw std::invalid_argument("face " + f.label() + " not in S_i");
    idx.push_back(*k);
  }
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  return idx;
}

double DggContext::set_weight(const std::vector<int>& idx) const {
  double w = 0.0;
  for (int k : idx) w += K_.weight(i_, k);
  return w;
}

DggReport DggContext::shell(const char* form, double t) const {
  DggReport rep;
  rep.form = form;
  rep.dim = i_;
  rep.t = t;
  rep.kind = kind_;
  rep.jump = table_.jump;
  rep.lambda = lambda_;
  if (!(t > 0.0)) throw std::invalid_argument("time t must be positive");
  if (!(table_.jump > 0.0) || std::isinf(table_.jump)) {
    rep.hypothesis_ok = false;
    rep.note = "jump size s is not positive and finite; theorem hypotheses "
               "violated";
  }
  return rep;
}

DggReport DggContext::pairing(const std::vector<Face>& A,
                              const std::vector<Face>& B, double t) const {
  const auto ia = set_indices(A);
  const auto ib = set_indices(B);
  DggReport rep = shell("pairing", t);
  rep.set_a = A;
  rep.set_b = B;
  if (!rep.hypothesis_ok) return rep;

  rep.rho = set_distance(table_, A, B);
  rep.zeta = zeta_closed(table_.jump, t, rep.rho);
  rep.rhs = std::sqrt(set_weight(ia) * set_weight(ib)) *
            std::exp(-lambda_ * t - rep.zeta);

  Eigen::VectorXd indicator_b = Eigen::VectorXd::Zero(prop_.size());
  for (int k : ib) indicator_b(k) = 1.0;
  const Eigen::VectorXd u = prop_.apply(t, indicator_b);
  double acc = 0.0;
  for (int k : ia) acc += u(k) * K_.weight(i_, k);
  rep.lhs = std::abs(acc);
  rep.margin = rep.rhs - rep.lhs;
  return rep;
}

DggReport DggContext::functional(const Eigen::VectorXd& f,
                                 const Eigen::VectorXd& g,
                                 const std::vector<Face>& A,
                                 const std::vector<Face>& B, double t) const {
  const auto ia = set_indices(A);
  const auto ib = set_indices(B);
  const int n = prop_.size();
  if (f.size() != n || g.size() != n)
    throw std::invalid_argument("chain length does not match S_i");
  auto check_support = [n](const Eigen::VectorXd& v, const std::vector<int>& s,
                           const char* which) {
    std::vector<bool> in(n, false);
    for (int k : s) in[k] = true;
    for (int k = 0; k < n; ++k) {
      if (v(k) != 0.0 && !in[k])
        throw std::invalid_argument(std::string("support of ") + which +
                                    " is not contained in its set");
    }
  };
  check_support(f, ia, "f");
  check_support(g, ib, "g");

  DggReport rep = shell("functional", t);
  rep.set_a = A;
  rep.set_b = B;
  if (!rep.hypothesis_ok) return rep;

  rep.rho = set_distance(table_, A, B);
  rep.zeta = zeta_closed(table_.jump, t, rep.rho);
  const Eigen::VectorXd w = weight_vector(K_, i_);
  rep.rhs = std::exp(-lambda_ * t - rep.zeta) *
            std::sqrt(weighted_inner(f, f, w) * weighted_inner(g, g, w));
  rep.lhs = std::abs(weighted_inner(prop_.apply(t, f), g, w));
  rep.margin = rep.rhs - rep.lhs;
  return rep;
}

DggReport DggContext::pointwise(const Face& f, const Face& fp,
                                double t) const {
  const auto ia = set_indices({f});
  const auto ib = set_indices({fp});
  DggReport rep = shell("pointwise", t);
  rep.set_a = {f};
  rep.set_b = {fp};
  if (!rep.hypothesis_ok) return rep;

  rep.rho = table_.dist(table_.index_of(f), table_.index_of(fp));
  rep.zeta = zeta_closed(table_.jump, t, rep.rho);
  rep.rhs = std::exp(-lambda_ * t - rep.zeta) /
            std::sqrt(K_.weight(i_, ia[0]) * K_.weight(i_, ib[0]));
  rep.lhs = std::abs(prop_.kernel_column(t, ib[0])(ia[0]));
  rep.margin = rep.rhs - rep.lhs;
  return rep;
}

std::vector<DggReport> DggContext::pointwise_all(double t) const {
  std::vector<DggReport> out;
  const int n = prop_.size();
  DggReport base = shell("pointwise", t);
  if (!base.hypothesis_ok) return out;
  const Eigen::MatrixXd P = prop_.kernel_matrix(t);
  out.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      DggReport rep = base;
      rep.set_a = {K_.face(i_, a)};
      rep.set_b = {K_.face(i_, b)};
      rep.rho = table_.dist(a, b);
      rep.zeta = zeta_closed(table_.jump, t, rep.rho);
      rep.rhs = std::exp(-lambda_ * t - rep.zeta) /
                std::sqrt(K_.weight(i_, a) * K_.weight(i_, b));
      rep.lhs = std::abs(P(a, b));
      rep.margin = rep.rhs - rep.lhs;
      out.push_back(std::move(rep));
    }
  }
  return out;
}

GaussianReport DggContext::gaussian(const std::vector<Face>& A,
                                    const std::vector<Face>& B, double t,
                                    double h) const {
  if (!(h > 0.0)) throw std::invalid_argument("h must be positive");
  const auto ia = set_indices(A);
  const auto ib = set_indices(B);
  if (!(t > 0.0)) throw std::invalid_argument("time t must be positive");
  if (!(table_.jump > 0.0) || std::isinf(table_.jump))
    throw std::invalid_argument("jump size s is not positive and finite");

  GaussianReport rep;
  rep.dim = i_;
  rep.t = t;
  rep.h = h;
  rep.lambda = lambda_;
  rep.rho = set_distance(table_, A, B);
  if (!(t >= table_.jump * h * rep.rho))
    throw std::invalid_argument("hypothesis t >= s h rho(A,B) violated");
  rep.constant = gaussian_constant(h);
  rep.bound = std::sqrt(set_weight(ia) * set_weight(ib)) *
              std::exp(-lambda_ * t) *
              std::exp(-rep.constant * rep.rho * rep.rho / (4.0 * t));

  Eigen::VectorXd indicator_b = Eigen::VectorXd::Zero(prop_.size());
  for (int k : ib) indicator_b(k) = 1.0;
  const Eigen::VectorXd u = prop_.apply(t, indicator_b);
  double acc = 0.0;
  for (int k : ia) acc += u(k) * K_.weight(i_, k);
  rep.lhs = std::abs(acc);
  return rep;
}

// ---------------------------------------------------------------------------

DggReport dgg_pairing_check(const WeightedComplex& K, int i,
                            const std::vector<Face>& A,
                            const std::vector<Face>& B, double t,
                            MetricKind kind) {
  return DggContext(K, i, kind).pairing(A, B, t);
}

DggReport dgg_functional_check(const WeightedComplex& K, int i,
                               const Eigen::VectorXd& f,
                               const Eigen::VectorXd& g,
                               const std::vector<Face>& A,
                               const std::vector<Face>& B, double t,
                               MetricKind kind) {
  return DggContext(K, i, kind).functional(f, g, A, B, t);
}

DggReport pointwise_kernel_check(const WeightedComplex& K, int i,
                                 const Face& f, const Face& fp, double t,
                                 MetricKind kind) {
  return DggContext(K, i, kind).pointwise(f, fp, t);
}

GaussianReport gaussian_corollary_check(const WeightedComplex& K, int i,
                                        const std::vector<Face>& A,
                                        const std::vector<Face>& B, double t,
                                        double h, MetricKind kind) {
  return DggContext(K, i, kind).gaussian(A, B, t, h);
}

}  // namespace hodgeheat
