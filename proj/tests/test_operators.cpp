#include <doctest.h>

#include <Eigen/Dense>
#include <sstream>

#include "helpers.hpp"
#include "hodgeheat/generators.hpp"
#include "hodgeheat/operators.hpp"
#include "hodgeheat/rng.hpp"

using namespace hodgeheat;
using hhtest::dense;

namespace {

WeightedComplex unit_triangle(bool reduced = true) {
  return build_complex({{{0, 1, 2}, std::nullopt}}, WeightPolicy::Unit,
                       ClosureMode::AutoClose, reduced);
}

Eigen::MatrixXd weight_diag(const WeightedComplex& K, int i) {
  return weight_vector(K, i).asDiagonal();
}

}  // namespace

TEST_SUITE_BEGIN("hodge_operators");

TEST_CASE("coboundary entries on the full triangle") {
  const auto K = unit_triangle();
  const auto d0 = dense(coboundary(K, 0));  // rows: edges 01,02,12; cols: 0,1,2
  Eigen::MatrixXd want(3, 3);
  want << -1, 1, 0, -1, 0, 1, 0, -1, 1;
  CHECK(d0 == want);
  const auto d1 = dense(coboundary(K, 1));
  Eigen::MatrixXd want1(1, 3);
  want1 << 1, -1, 1;
  CHECK(d1 == want1);
  // reduced tail: one all-ones column over the empty face
  const auto dm1 = dense(coboundary(K, -1));
  CHECK(dm1 == Eigen::MatrixXd::Ones(3, 1));
}

TEST_CASE("coboundary of coboundary vanishes exactly") {
  const auto K = hhtest::random_complex(3, 6, 10, /*force_reduced=*/true);
  for (int i = K.reduced() ? -1 : 0; i + 1 < K.dim(); ++i) {
    const Eigen::SparseMatrix<double> prod =
        coboundary(K, i + 1).matrix * coboundary(K, i).matrix;
    CHECK(Eigen::MatrixXd(prod).isZero(0.0));  // integer arithmetic, exact
  }
}

TEST_CASE("adjoint equals transpose for unit weights") {
  const auto K = unit_triangle();
  CHECK(dense(adjoint_coboundary(K, 0)) == dense(coboundary(K, 0)).transpose());
}

TEST_CASE("adjoint column with a weighted triangle") {
  const auto K = build_complex({{{0}, 1.0},
                                {{1}, 1.0},
                                {{2}, 1.0},
                                {{0, 1}, 1.0},
                                {{0, 2}, 1.0},
                                {{1, 2}, 1.0},
                                {{0, 1, 2}, 2.0}},
                               WeightPolicy::Explicit, ClosureMode::AutoClose,
                               false);
  const auto adj = dense(adjoint_coboundary(K, 1));
  Eigen::MatrixXd want(3, 1);
  want << 2, -2, 2;
  CHECK(adj == want);
}

TEST_CASE("adjointness identity for random chains") {
  Rng rng(99);
  for (std::uint64_t trial = 0; trial < 8; ++trial) {
    const auto K = hhtest::random_complex(200 + trial);
    for (int i = K.reduced() ? -1 : 0; i < K.dim(); ++i) {
      Eigen::VectorXd f(K.face_count(i)), g(K.face_count(i + 1));
      for (int k = 0; k < f.size(); ++k) f(k) = rng.gaussian();
      for (int k = 0; k < g.size(); ++k) g(k) = rng.gaussian();
      const double lhs = weighted_inner(coboundary(K, i).matrix * f, g,
                                        weight_vector(K, i + 1));
      const double rhs = weighted_inner(f, adjoint_coboundary(K, i).matrix * g,
                                        weight_vector(K, i));
      CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
    }
  }
}

TEST_CASE("hodge operators on the unit triangle, dimension one") {
  const auto K = unit_triangle();
  Eigen::MatrixXd up(3, 3), down(3, 3);
  up << 1, -1, 1, -1, 1, -1, 1, -1, 1;
  down << 2, 1, -1, 1, 2, 1, -1, 1, 2;
  CHECK(dense(hodge_up(K, 1)) == up);
  CHECK(dense(hodge_down(K, 1)) == down);
  CHECK(dense(hodge_full(K, 1)) == 3.0 * Eigen::MatrixXd::Identity(3, 3));
}

TEST_CASE("hodge operators on the unit triangle, dimension zero") {
  const auto K = unit_triangle();
  const Eigen::MatrixXd J = Eigen::MatrixXd::Ones(3, 3);
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(3, 3);
  CHECK(dense(hodge_up(K, 0)) == 3.0 * I - J);  // graph Laplacian of K3
  CHECK(dense(hodge_down(K, 0)) == J);          // rank one through {}
  CHECK(dense(hodge_full(K, 0)) == 3.0 * I);
}

TEST_CASE("single edge, non-reduced: the classical graph Laplacian") {
  const auto K = build_complex({{{0, 1}, std::nullopt}}, WeightPolicy::Unit,
                               ClosureMode::AutoClose, false);
  Eigen::MatrixXd want(2, 2);
  want << 1, -1, -1, 1;
  CHECK(dense(hodge_full(K, 0)) == want);
  CHECK(dense(hodge_down(K, 0)).isZero(0.0));  // zero operator, not an error
  CHECK(dense(hodge_up(K, 1)).isZero(0.0));    // top dimension
}

TEST_CASE("entrywise assembly agrees with the product assembly") {
  for (std::uint64_t trial = 0; trial < 10; ++trial) {
    const auto K = hhtest::random_complex(400 + trial);
    for (int i = 0; i <= K.dim(); ++i) {
      CHECK(hhtest::rel_diff(dense(hodge_up(K, i)),
                             dense(hodge_up(K, i, Assembly::Entrywise))) <=
            1e-12);
      CHECK(hhtest::rel_diff(dense(hodge_down(K, i)),
                             dense(hodge_down(K, i, Assembly::Entrywise))) <=
            1e-12);
      CHECK(hhtest::rel_diff(dense(hodge_full(K, i)),
                             dense(hodge_full(K, i, Assembly::Entrywise))) <=
            1e-12);
    }
  }
}

TEST_CASE("self-adjointness, nonnegativity, and up-down orthogonality") {
  for (std::uint64_t trial = 0; trial < 6; ++trial) {
    const auto K = hhtest::random_complex(500 + trial);
    for (int i = 0; i <= K.dim(); ++i) {
      const Eigen::MatrixXd L = dense(hodge_full(K, i));
      const Eigen::MatrixXd W = weight_diag(K, i);
      const Eigen::MatrixXd WL = W * L;
      CHECK(hhtest::rel_diff(WL, WL.transpose()) <= 1e-12);

      const Eigen::VectorXd sqrtw = weight_vector(K, i).array().sqrt();
      const Eigen::MatrixXd S = sqrtw.asDiagonal() * L *
                                sqrtw.cwiseInverse().asDiagonal();
      const Eigen::MatrixXd Ssym = 0.5 * (S + S.transpose());
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(Ssym);
      CHECK(eig.eigenvalues().minCoeff() >= -1e-10 * std::max(1.0, L.norm()));

      const Eigen::MatrixXd up = dense(hodge_up(K, i));
      const Eigen::MatrixXd down = dense(hodge_down(K, i));
      const double scale =
          std::max(1.0, up.norm() * std::max(1.0, down.norm()));
      CHECK((up * down).norm() / scale <= 1e-12);
      CHECK((down * up).norm() / scale <= 1e-12);
    }
  }
}

TEST_CASE("full simplex identity at small sizes") {
  for (int n = 2; n <= 5; ++n) {
    const auto K = generate_full_simplex(n, WeightPolicy::Unit, true);
    for (int i = 0; i < n; ++i) {
      const Eigen::MatrixXd L = dense(hodge_full(K, i));
      CHECK((L - n * Eigen::MatrixXd::Identity(L.rows(), L.cols()))
                .cwiseAbs()
                .maxCoeff() == 0.0);
    }
  }
}

TEST_CASE("orientation covariance: flipping one face conjugates by signs") {
  const auto K = hhtest::random_complex(17, 6, 9, true);
  const int i = std::min(1, K.dim());
  const int n = K.face_count(i);
  REQUIRE(n > 0);
  Rng rng(5);
  const int flip = rng.below(n);
  Eigen::VectorXd d = Eigen::VectorXd::Ones(n);
  d(flip) = -1.0;

  // reassemble with the flipped face: negate its column in delta_i and its
  // row in delta_{i-1}
  Eigen::MatrixXd di = i < K.dim()
                           ? dense(coboundary(K, i))
                           : Eigen::MatrixXd::Zero(0, n);
  Eigen::MatrixXd ai = i < K.dim()
                           ? dense(adjoint_coboundary(K, i))
                           : Eigen::MatrixXd::Zero(n, 0);
  di = di * d.asDiagonal();
  ai = d.asDiagonal() * ai;
  Eigen::MatrixXd flipped = ai * di;
  if (i > 0 || K.reduced()) {
    Eigen::MatrixXd dd = dense(coboundary(K, i - 1));
    Eigen::MatrixXd ad = dense(adjoint_coboundary(K, i - 1));
    dd = d.asDiagonal() * dd;
    ad = ad * d.asDiagonal();
    flipped += dd * ad;
  }
  const Eigen::MatrixXd conj =
      d.asDiagonal() * dense(hodge_full(K, i)) * d.asDiagonal();
  CHECK(hhtest::rel_diff(flipped, conj) <= 1e-14);
}

TEST_CASE("pair weights on the unit triangle") {
  const auto K = unit_triangle();
  const PairWeights pw = pair_weights(K, 1);
  // edges 01, 02 share the triangle (up) and the vertex 0 (down)
  CHECK(pw.up(0, 1) == 1.0);
  CHECK(pw.down(0, 1) == 1.0);
  CHECK(pw.total(0, 1) == 2.0);
  CHECK(pw.total(0, 0) == 0.0);  // diagonal is 0 by convention
  CHECK(pw.row_total[0] == 4.0);
  CHECK(pw.deg_ratio[0] == 1.0);
  CHECK(tau(K, K.face(1, 0), K.face(0, 0), K.face(1, 1)) == 1.0);
  CHECK_THROWS_AS(tau(K, K.face(1, 0), K.face(0, 2), K.face(1, 1)),
                  std::invalid_argument);
}

TEST_CASE("pair weights vanish for non-adjacent faces") {
  // two triangles sharing nothing
  const auto K = build_complex(
      {{{0, 1, 2}, std::nullopt}, {{3, 4, 5}, std::nullopt}},
      WeightPolicy::Unit, ClosureMode::AutoClose, false);
  const PairWeights pw = pair_weights(K, 1);
  const int a = *K.index_of(Face({0, 1}));
  const int b = *K.index_of(Face({3, 4}));
  CHECK(pw.total(a, b) == 0.0);
}

TEST_CASE("degree bound b") {
  const auto K = unit_triangle();
  const DegreeBound bb = bound_b(K, 1);
  CHECK(bb.b == 2.0);
  CHECK(bb.attaining_dim == 0);
  const auto edge = build_complex({{{0, 1}, std::nullopt}}, WeightPolicy::Unit,
                                  ClosureMode::AutoClose, false);
  CHECK(bound_b(edge, 0).b == 1.0);
  CHECK(bound_b(K, 0).b == 3.0);  // Deg of the empty face
}

TEST_CASE("Green's formula") {
  const auto K = unit_triangle();
  Eigen::VectorXd f = Eigen::VectorXd::Zero(3);
  f(0) = 1.0;
  const GreensCheck tight = greens_formula_check(K, 1, f, f);
  CHECK(tight.lhs == doctest::Approx(3.0).epsilon(1e-13));
  CHECK(tight.rhs == doctest::Approx(3.0).epsilon(1e-13));

  const GreensCheck zero =
      greens_formula_check(K, 1, Eigen::VectorXd::Zero(3), f);
  CHECK(zero.lhs == 0.0);
  CHECK(zero.rhs == 0.0);

  const auto tetra = generate_sphere_boundary(4, WeightPolicy::Normalized, true);
  Rng rng(31);
  Eigen::VectorXd a(tetra.face_count(1)), b(tetra.face_count(1));
  for (int k = 0; k < a.size(); ++k) a(k) = rng.gaussian();
  for (int k = 0; k < b.size(); ++k) b(k) = rng.gaussian();
  CHECK(greens_formula_check(tetra, 1, a, b).residual < 1e-12);
}

TEST_CASE("reduced Betti via integer rank") {
  const auto tetra = generate_sphere_boundary(4, WeightPolicy::Unit, true);
  CHECK(reduced_betti(tetra, 0) == 0);
  CHECK(reduced_betti(tetra, 1) == 0);
  CHECK(reduced_betti(tetra, 2) == 1);

  // two disjoint triangles, reduced: one extra component
  const auto two = build_complex(
      {{{0, 1, 2}, std::nullopt}, {{3, 4, 5}, std::nullopt}},
      WeightPolicy::Unit, ClosureMode::AutoClose, true);
  CHECK(reduced_betti(two, 0) == 1);

  // circle (hollow triangle): one loop
  const auto circle = build_complex(
      {{{0, 1}, std::nullopt}, {{0, 2}, std::nullopt}, {{1, 2}, std::nullopt}},
      WeightPolicy::Unit, ClosureMode::AutoClose, true);
  CHECK(reduced_betti(circle, 1) == 1);
}

TEST_CASE("matrix market export") {
  const auto K = unit_triangle();
  std::ostringstream os;
  write_matrix_market(hodge_full(K, 1), os);
  CHECK(os.str() ==
        "%%MatrixMarket matrix coordinate real general\n"
        "3 3 3\n"
        "1 1 3\n"
        "2 2 3\n"
        "3 3 3\n");
}

TEST_CASE("dimension range errors") {
  const auto K = unit_triangle();
  CHECK_THROWS_AS(coboundary(K, 2), std::invalid_argument);
  CHECK_THROWS_AS(hodge_full(K, 3), std::invalid_argument);
  CHECK_THROWS_AS(hodge_full(K, -1), std::invalid_argument);
  const auto plain = unit_triangle(false);
  CHECK_THROWS_AS(coboundary(plain, -1), std::invalid_argument);
}

TEST_SUITE_END();
