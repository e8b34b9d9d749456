#include "hodgeheat/heat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>

#include "hodgeheat/operators.hpp"
#include "krylov.hpp"

namespace hodgeheat {

namespace {

std::vector<int> connected_components(const PairWeights& pw, int n) {
  std::vector<int> comp(n, -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (const PairEntry& e : pw.rows[u]) {
        if (comp[e.neighbor] < 0) {
          comp[e.neighbor] = next;
          stack.push_back(e.neighbor);
        }
      }
    }
    ++next;
  }
  return comp;
}

}  // namespace

struct HeatPropagator::Impl {
  const WeightedComplex* K = nullptr;
  int i = 0;
  int n = 0;
  Eigen::VectorXd w, sqrt_w, inv_sqrt_w;
  double norm_inf = 0.0;

  std::vector<int> comp_of;
  std::vector<std::vector<int>> comps;  // member indices, ascending
  std::vector<Eigen::SparseMatrix<double>> blocks;  // symmetrized per component

  struct DenseBlock {
    Eigen::VectorXd evals;
    Eigen::MatrixXd evecs;
  };
  std::vector<std::optional<DenseBlock>> dense;

  mutable std::once_flag spectral_once;
  mutable SpectralData spectral;

  Eigen::VectorXd apply_block(int c, double t, const Eigen::VectorXd& vc,
                              SolveMethod method) const {
    const bool use_dense =
        method == SolveMethod::Dense ||
        (method == SolveMethod::Auto && dense[c].has_value());
    if (use_dense) {
      DenseBlock local;
      const DenseBlock* db = dense[c] ? &*dense[c] : nullptr;
      if (!db) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(
            Eigen::MatrixXd(blocks[c]));
        local.evals = eig.eigenvalues();
        local.evecs = eig.eigenvectors();
        db = &local;
      }
      const Eigen::VectorXd phase = detail::exp_neg_scaled(db->evals, t);
      return db->evecs *
             (phase.array() * (db->evecs.transpose() * vc).array()).matrix();
    }
    return detail::expmv_symmetric(blocks[c], vc, t);
  }
};

HeatPropagator::HeatPropagator(const WeightedComplex& K, int i)
    : impl_(std::make_unique<Impl>()) {
  if (i < 0 || i > K.dim())
    throw std::invalid_argument("dimension out of range");
  Impl& im = *impl_;
  im.K = &K;
  im.i = i;
  im.n = K.face_count(i);
  im.w = weight_vector(K, i);
  im.sqrt_w = im.w.array().sqrt();
  im.inv_sqrt_w = im.sqrt_w.array().inverse();

  const Eigen::SparseMatrix<double> L = hodge_full(K, i).matrix;
  // Symmetrize W^{1/2} L W^{-1/2}; averaging with the transpose removes
  // roundoff asymmetry.
  Eigen::SparseMatrix<double> S(im.n, im.n);
  {
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(static_cast<std::size_t>(L.nonZeros()));
    for (int k = 0; k < L.outerSize(); ++k) {
      for (Eigen::SparseMatrix<double>::InnerIterator it(L, k); it; ++it)
        trip.emplace_back(it.row(), it.col(),
                          im.sqrt_w(it.row()) * it.value() *
                              im.inv_sqrt_w(it.col()));
    }
    S.setFromTriplets(trip.begin(), trip.end());
    Eigen::SparseMatrix<double> St = S.transpose();
    S = 0.5 * (S + St);
    S.makeCompressed();
  }

  im.norm_inf = 0.0;
  {
    Eigen::VectorXd rowsum = Eigen::VectorXd::Zero(im.n);
    for (int k = 0; k < S.outerSize(); ++k)
      for (Eigen::SparseMatrix<double>::InnerIterator it(S, k); it; ++it)
        rowsum(it.row()) += std::abs(it.value());
    if (im.n > 0) im.norm_inf = rowsum.maxCoeff();
  }

  const PairWeights pw = pair_weights(K, i);
  im.comp_of = connected_components(pw, im.n);
  const int nc =
      im.n == 0 ? 0 : 1 + *std::max_element(im.comp_of.begin(), im.comp_of.end());
  im.comps.resize(nc);
  for (int f = 0; f < im.n; ++f) im.comps[im.comp_of[f]].push_back(f);

  im.blocks.resize(nc);
  im.dense.resize(nc);
  for (int c = 0; c < nc; ++c) {
    const auto& members = im.comps[c];
    const int m = static_cast<int>(members.size());
    std::vector<int> local(im.n, -1);
    for (int k = 0; k < m; ++k) local[members[k]] = k;
    std::vector<Eigen::Triplet<double>> trip;
    for (int k = 0; k < m; ++k) {
      const int col = members[k];
      for (Eigen::SparseMatrix<double>::InnerIterator it(S, col); it; ++it) {
        // S has no structural entries across components
        trip.emplace_back(local[it.row()], k, it.value());
      }
    }
    im.blocks[c].resize(m, m);
    im.blocks[c].setFromTriplets(trip.begin(), trip.end());
    im.blocks[c].makeCompressed();
    if (m <= kDenseThreshold) {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(
          Eigen::MatrixXd(im.blocks[c]));
      im.dense[c] = Impl::DenseBlock{eig.eigenvalues(), eig.eigenvectors()};
    }
  }
}

HeatPropagator::~HeatPropagator() = default;
HeatPropagator::HeatPropagator(HeatPropagator&&) noexcept = default;
HeatPropagator& HeatPropagator::operator=(HeatPropagator&&) noexcept = default;

int HeatPropagator::size() const { return impl_->n; }
int HeatPropagator::dim() const { return impl_->i; }
double HeatPropagator::operator_norm() const { return impl_->norm_inf; }
int HeatPropagator::component_of(int face_index) const {
  return impl_->comp_of.at(face_index);
}
int HeatPropagator::component_count() const {
  return static_cast<int>(impl_->comps.size());
}

Eigen::VectorXd HeatPropagator::apply(double t, const Eigen::VectorXd& f,
                                      SolveMethod method) const {
  const Impl& im = *impl_;
  if (f.size() != im.n)
    throw std::invalid_argument("state length does not match S_i");
  if (!f.allFinite() || !std::isfinite(t) || t < 0.0)
    throw std::invalid_argument("non-finite input to apply_semigroup");
  if (t == 0.0) return f;  // identity at t = 0, bit-exact
  Eigen::VectorXd out = Eigen::VectorXd::Zero(im.n);
  for (std::size_t c = 0; c < im.comps.size(); ++c) {
    const auto& members = im.comps[c];
    Eigen::VectorXd vc(members.size());
    bool nonzero = false;
    for (std::size_t k = 0; k < members.size(); ++k) {
      vc(static_cast<Eigen::Index>(k)) = im.sqrt_w(members[k]) * f(members[k]);
      nonzero = nonzero || vc(static_cast<Eigen::Index>(k)) != 0.0;
    }
    if (!nonzero) continue;  // exact zero stays exact zero
    const Eigen::VectorXd uc = im.apply_block(static_cast<int>(c), t, vc, method);
    for (std::size_t k = 0; k < members.size(); ++k)
      out(members[k]) =
          im.inv_sqrt_w(members[k]) * uc(static_cast<Eigen::Index>(k));
  }
  return out;
}

Eigen::VectorXd HeatPropagator::kernel_column(double t, int face_index,
                                              SolveMethod method) const {
  const Impl& im = *impl_;
  if (face_index < 0 || face_index >= im.n)
    throw std::invalid_argument("face index out of range");
  Eigen::VectorXd f = Eigen::VectorXd::Zero(im.n);
  f(face_index) = 1.0 / im.w(face_index);
  return apply(t, f, method);
}

Eigen::MatrixXd HeatPropagator::kernel_matrix(double t) const {
  const Impl& im = *impl_;
  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(im.n, im.n);
  for (std::size_t c = 0; c < im.comps.size(); ++c) {
    const auto& members = im.comps[c];
    const int m = static_cast<int>(members.size());
    Impl::DenseBlock local;
    const Impl::DenseBlock* db;
    if (im.dense[c]) {
      db = &*im.dense[c];
    } else {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(
          Eigen::MatrixXd(im.blocks[c]));
      local.evals = eig.eigenvalues();
      local.evecs = eig.eigenvectors();
      db = &local;
    }
    const Eigen::VectorXd phase = detail::exp_neg_scaled(db->evals, t);
    const Eigen::MatrixXd E =
        db->evecs * phase.asDiagonal() * db->evecs.transpose();
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        P(members[a], members[b]) = im.inv_sqrt_w(members[a]) * E(a, b) *
                                    im.inv_sqrt_w(members[b]);
  }
  return P;
}

const SpectralData& HeatPropagator::spectral_bottom() const {
  const Impl& im = *impl_;
  std::call_once(im.spectral_once, [&im]() {
    SpectralData sd;
    sd.dim = im.i;
    sd.method = "dense";
    sd.residual = 0.0;
    sd.converged = true;
    double lambda = std::numeric_limits<double>::infinity();
    bool all_dense = true;
    std::vector<std::pair<double, std::pair<int, int>>> evals;  // (value, (comp, col))
    for (std::size_t c = 0; c < im.comps.size(); ++c) {
      if (im.dense[c]) {
        lambda = std::min(lambda, im.dense[c]->evals.minCoeff());
        for (int k = 0; k < im.dense[c]->evals.size(); ++k)
          evals.push_back({im.dense[c]->evals(k), {static_cast<int>(c), k}});
      } else {
        all_dense = false;
        const auto ext = detail::smallest_eigenvalue_lanczos(
            im.blocks[c], im.norm_inf, 1e-10);
        lambda = std::min(lambda, ext.value);
        sd.residual = std::max(sd.residual, ext.residual);
        sd.converged = sd.converged && ext.converged;
      }
    }
    if (im.n == 0) lambda = 0.0;
    if (!all_dense) sd.method = "iterative";
    if (std::abs(lambda) <= 1e-10 * im.norm_inf) lambda = 0.0;
    sd.lambda_min = lambda;
    if (all_dense) {
      std::sort(evals.begin(), evals.end());
      Eigen::VectorXd values(evals.size());
      Eigen::MatrixXd vectors = Eigen::MatrixXd::Zero(im.n, im.n);
      for (std::size_t k = 0; k < evals.size(); ++k) {
        values(static_cast<Eigen::Index>(k)) = evals[k].first;
        const auto [c, col] = evals[k].second;
        const auto& members = im.comps[static_cast<std::size_t>(c)];
        for (std::size_t q = 0; q < members.size(); ++q)
          vectors(members[q], static_cast<Eigen::Index>(k)) =
              im.dense[static_cast<std::size_t>(c)]->evecs(
                  static_cast<Eigen::Index>(q), col);
      }
      sd.eigenvalues = std::move(values);
      sd.eigenvectors = std::move(vectors);
    }
    im.spectral = std::move(sd);
  });
  return im.spectral;
}

SpectralData spectral_bottom(const WeightedComplex& K, int i) {
  return HeatPropagator(K, i).spectral_bottom();
}

HeatState apply_semigroup(const WeightedComplex& K, int i, double t,
                          const HeatState& f) {
  HeatPropagator prop(K, i);
  HeatState out;
  out.dim = i;
  out.time = t;
  out.values = prop.apply(t, f.values);
  return out;
}

HeatState heat_kernel_column(const WeightedComplex& K, int i, double t,
                             const Face& fp) {
  auto idx = K.index_of(fp);
  if (!idx || fp.dim() != i)
    throw std::invalid_argument("face " + fp.label() + " not in S_i");
  HeatPropagator prop(K, i);
  HeatState out;
  out.dim = i;
  out.time = t;
  out.values = prop.kernel_column(t, *idx);
  return out;
}

double energy_functional(const WeightedComplex& K, int i,
                         const HeatState& state,
                         const Eigen::VectorXd& zeta_vals) {
  const int n = K.face_count(i);
  if (state.values.size() != n || zeta_vals.size() != n)
    throw std::invalid_argument("state/zeta length does not match S_i");
  if (!zeta_vals.allFinite())
    throw std::invalid_argument("zeta must be finite");
  const Eigen::VectorXd w = weight_vector(K, i);
  double acc = 0.0;
  for (int k = 0; k < n; ++k)
    acc += state.values(k) * state.values(k) * std::exp(zeta_vals(k)) * w(k);
  return acc;
}

}  // namespace hodgeheat
