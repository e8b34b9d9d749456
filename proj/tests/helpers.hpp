#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <cstdint>
#include <limits>
#include <queue>
#include <utility>
#include <vector>

#include "hodgeheat/generators.hpp"
#include "hodgeheat/operators.hpp"
#include "hodgeheat/rng.hpp"

namespace hhtest {

inline hodgeheat::WeightedComplex random_complex(std::uint64_t seed,
                                                 int min_n = 5, int max_n = 12,
                                                 bool force_reduced = false) {
  hodgeheat::Rng rng(seed);
  const int n = min_n + rng.below(max_n - min_n + 1);
  const double p = rng.uniform(0.3, 0.6);
  const bool reduced = force_reduced || rng.bernoulli(0.5);
  return hodgeheat::generate_random_flag(n, p, rng.bits(),
                                         hodgeheat::WeightPolicy::Explicit,
                                         reduced);
}

inline Eigen::MatrixXd dense(const hodgeheat::SparseOperator& op) {
  return Eigen::MatrixXd(op.matrix);
}

// Classical RK4 on u' = -L u; an integrator oracle fully independent of the
// exponential paths.
inline Eigen::VectorXd rk4_heat(const Eigen::SparseMatrix<double>& L,
                                Eigen::VectorXd u, double t, int steps) {
  const double h = t / steps;
  for (int s = 0; s < steps; ++s) {
    const Eigen::VectorXd k1 = -(L * u);
    const Eigen::VectorXd k2 = -(L * (u + 0.5 * h * k1).eval());
    const Eigen::VectorXd k3 = -(L * (u + 0.5 * h * k2).eval());
    const Eigen::VectorXd k4 = -(L * (u + h * k3).eval());
    u += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return u;
}

inline double rel_diff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  const double scale = std::max({1.0, a.norm(), b.norm()});
  return (a - b).norm() / scale;
}

// Graph-case intrinsic metric from the vertex-degree formula, implemented
// straight from edge data as an independent oracle for i = 0, non-reduced.
inline Eigen::MatrixXd graph_delta_metric(const hodgeheat::WeightedComplex& K) {
  using hodgeheat::Face;
  const int n = K.face_count(0);
  const double inf = std::numeric_limits<double>::infinity();
  Eigen::MatrixXd dist = Eigen::MatrixXd::Constant(n, n, inf);
  std::vector<double> deg(n, 0.0);
  std::vector<std::vector<int>> nbrs(n);
  for (int e = 0; e < K.face_count(1); ++e) {
    const auto& v = K.face(1, e).vertices();
    const int a = *K.index_of(Face({v[0]}));
    const int b = *K.index_of(Face({v[1]}));
    deg[a] += K.weight(1, e);
    deg[b] += K.weight(1, e);
    nbrs[a].push_back(b);
    nbrs[b].push_back(a);
  }
  auto hop = [&](int a, int b) {
    const double da = deg[a] / K.weight(0, a);
    const double db = deg[b] / K.weight(0, b);
    return 1.0 / std::sqrt(std::max({da, db, 1.0}));
  };
  using Item = std::pair<double, int>;
  for (int s = 0; s < n; ++s) {
    dist(s, s) = 0.0;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    heap.emplace(0.0, s);
    while (!heap.empty()) {
      auto [d, u] = heap.top();
      heap.pop();
      if (d > dist(s, u)) continue;
      for (int v : nbrs[u]) {
        const double nd = d + hop(u, v);
        if (nd < dist(s, v)) {
          dist(s, v) = nd;
          heap.emplace(nd, v);
        }
      }
    }
  }
  return dist;
}

}  // namespace hhtest
