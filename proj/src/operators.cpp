#include "hodgeheat/operators.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "hodgeheat/numfmt.hpp"

namespace hodgeheat {

namespace {

using Triplet = Eigen::Triplet<double>;

SparseOperator make_operator(int row_dim, int col_dim, int rows, int cols,
                             const std::vector<Triplet>& triplets) {
  SparseOperator op;
  op.row_simplex_dim = row_dim;
  op.col_simplex_dim = col_dim;
  op.matrix.resize(rows, cols);
  op.matrix.setFromTriplets(triplets.begin(), triplets.end());
  op.matrix.prune(0.0, 0.0);  // drop exact zeros from cancellations
  op.matrix.makeCompressed();
  return op;
}

SparseOperator zero_operator(int dim, int n) {
  SparseOperator op;
  op.row_simplex_dim = dim;
  op.col_simplex_dim = dim;
  op.matrix.resize(n, n);
  op.matrix.makeCompressed();
  return op;
}

void check_cochain_dim(const WeightedComplex& K, int i) {
  if (i < 0 || i > K.dim())
    throw std::invalid_argument("dimension out of range");
}

}  // namespace

SparseOperator coboundary(const WeightedComplex& K, int i) {
  const int lo = K.reduced() ? -1 : 0;
  if (i < lo || i >= K.dim())
    throw std::invalid_argument("dimension out of range for coboundary");
  std::vector<Triplet> trip;
  for (int r = 0; r < K.face_count(i + 1); ++r) {
    for (const FaceRef& b : K.boundary(i + 1, r))
      trip.emplace_back(r, b.index, static_cast<double>(b.sign));
  }
  return make_operator(i + 1, i, K.face_count(i + 1), K.face_count(i), trip);
}

SparseOperator adjoint_coboundary(const WeightedComplex& K, int i) {
  const int lo = K.reduced() ? -1 : 0;
  if (i < lo || i >= K.dim())
    throw std::invalid_argument("dimension out of range for adjoint coboundary");
  std::vector<Triplet> trip;
  for (int r = 0; r < K.face_count(i + 1); ++r) {
    const double wr = K.weight(i + 1, r);
    for (const FaceRef& b : K.boundary(i + 1, r)) {
      const double wc = K.weight(i, b.index);
      trip.emplace_back(b.index, r, b.sign * wr / wc);
    }
  }
  return make_operator(i, i + 1, K.face_count(i), K.face_count(i + 1), trip);
}

SparseOperator hodge_up(const WeightedComplex& K, int i, Assembly assembly) {
  check_cochain_dim(K, i);
  const int n = K.face_count(i);
  if (i == K.dim()) return zero_operator(i, n);
  if (assembly == Assembly::Product) {
    SparseOperator op;
    op.row_simplex_dim = op.col_simplex_dim = i;
    op.matrix = adjoint_coboundary(K, i).matrix * coboundary(K, i).matrix;
    op.matrix.prune(0.0, 0.0);
    op.matrix.makeCompressed();
    return op;
  }
  std::vector<Triplet> trip;
  for (int f = 0; f < n; ++f) {
    double diag = 0.0;
    for (const FaceRef& c : K.cofaces(i, f))
      diag += K.weight(i + 1, c.index) / K.weight(i, f);
    if (diag != 0.0) trip.emplace_back(f, f, diag);
  }
  for (int c = 0; c < K.face_count(i + 1); ++c) {
    const auto& bnd = K.boundary(i + 1, c);
    const double wc = K.weight(i + 1, c);
    for (std::size_t p = 0; p < bnd.size(); ++p) {
      for (std::size_t q = 0; q < bnd.size(); ++q) {
        if (p == q) continue;
        // row F = bnd[p], col F' = bnd[q]; shared coface is unique
        trip.emplace_back(bnd[p].index, bnd[q].index,
                          wc / K.weight(i, bnd[p].index) * bnd[p].sign *
                              bnd[q].sign);
      }
    }
  }
  return make_operator(i, i, n, n, trip);
}

SparseOperator hodge_down(const WeightedComplex& K, int i, Assembly assembly) {
  check_cochain_dim(K, i);
  const int n = K.face_count(i);
  if (i == 0 && !K.reduced()) return zero_operator(i, n);
  if (assembly == Assembly::Product) {
    SparseOperator op;
    op.row_simplex_dim = op.col_simplex_dim = i;
    op.matrix =
        coboundary(K, i - 1).matrix * adjoint_coboundary(K, i - 1).matrix;
    op.matrix.prune(0.0, 0.0);
    op.matrix.makeCompressed();
    return op;
  }
  std::vector<Triplet> trip;
  for (int f = 0; f < n; ++f) {
    double diag = 0.0;
    for (const FaceRef& b : K.boundary(i, f))
      diag += K.weight(i, f) / K.weight(i - 1, b.index);
    if (diag != 0.0) trip.emplace_back(f, f, diag);
  }
  for (int e = 0; e < K.face_count(i - 1); ++e) {
    const auto& cof = K.cofaces(i - 1, e);
    const double we = K.weight(i - 1, e);
    for (std::size_t p = 0; p < cof.size(); ++p) {
      for (std::size_t q = 0; q < cof.size(); ++q) {
        if (p == q) continue;
        // row F = cof[p], col F' = cof[q]; E = F cap F' is unique
        trip.emplace_back(cof[p].index, cof[q].index,
                          K.weight(i, cof[q].index) / we * cof[p].sign *
                              cof[q].sign);
      }
    }
  }
  return make_operator(i, i, n, n, trip);
}

SparseOperator hodge_full(const WeightedComplex& K, int i, Assembly assembly) {
  SparseOperator up = hodge_up(K, i, assembly);
  SparseOperator down = hodge_down(K, i, assembly);
  SparseOperator op;
  op.row_simplex_dim = op.col_simplex_dim = i;
  op.matrix = up.matrix + down.matrix;
  op.matrix.prune(0.0, 0.0);
  op.matrix.makeCompressed();
  return op;
}

double PairWeights::up(int a, int b) const {
  for (const PairEntry& e : rows[a])
    if (e.neighbor == b) return e.up;
  return 0.0;
}

double PairWeights::down(int a, int b) const {
  for (const PairEntry& e : rows[a])
    if (e.neighbor == b) return e.down;
  return 0.0;
}

double PairWeights::total(int a, int b) const {
  for (const PairEntry& e : rows[a])
    if (e.neighbor == b) return e.total();
  return 0.0;
}

PairWeights pair_weights(const WeightedComplex& K, int i) {
  check_cochain_dim(K, i);
  const int n = K.face_count(i);
  PairWeights pw;
  pw.dim = i;
  pw.rows.resize(n);
  pw.row_total.assign(n, 0.0);
  pw.deg_ratio.resize(n);
  for (int f = 0; f < n; ++f)
    pw.deg_ratio[f] = K.face_degree(i, f) / K.weight(i, f);

  auto accumulate = [&](int a, int b, double up, double down) {
    auto& row = pw.rows[a];
    auto it = std::find_if(row.begin(), row.end(),
                           [b](const PairEntry& e) { return e.neighbor == b; });
    if (it == row.end()) {
      row.push_back({b, up, down});
    } else {
      it->up += up;
      it->down += down;
    }
  };

  for (const CofacePair& pr : coface_pairs(K, i)) {
    double up = 0.0, down = 0.0;
    if (pr.up) {
      up = K.weight(i + 1, pr.shared);
    } else {
      down = K.weight(i, pr.a) * K.weight(i, pr.b) / K.weight(i - 1, pr.shared);
    }
    accumulate(pr.a, pr.b, up, down);
    accumulate(pr.b, pr.a, up, down);
  }
  for (int f = 0; f < n; ++f) {
    auto& row = pw.rows[f];
    std::sort(row.begin(), row.end(),
              [](const PairEntry& x, const PairEntry& y) {
                return x.neighbor < y.neighbor;
              });
    for (const PairEntry& e : row) pw.row_total[f] += e.total();
  }
  return pw;
}

double tau(const WeightedComplex& K, const Face& f, const Face& e,
           const Face& fp) {
  if (orientation_sign(e, f) == 0 || orientation_sign(e, fp) == 0)
    throw std::invalid_argument("tau requires E to be a boundary face of both");
  return K.weight_of(f) * K.weight_of(fp) / K.weight_of(e);
}

DegreeBound bound_b(const WeightedComplex& K, int i) {
  check_cochain_dim(K, i);
  DegreeBound best;
  best.b = -1.0;
  for (int j : {i, i - 1}) {
    for (int k = 0; k < K.face_count(j); ++k) {
      const double deg = K.face_degree(j, k) / K.weight(j, k);
      if (deg > best.b) {
        best.b = deg;
        best.attaining = K.face(j, k);
        best.attaining_dim = j;
      }
    }
  }
  if (best.b < 0.0) best.b = 0.0;
  return best;
}

Eigen::VectorXd weight_vector(const WeightedComplex& K, int i) {
  const auto& w = K.weights(i);
  return Eigen::Map<const Eigen::VectorXd>(w.data(),
                                           static_cast<Eigen::Index>(w.size()));
}

double weighted_inner(const Eigen::VectorXd& f, const Eigen::VectorXd& g,
                      const Eigen::VectorXd& w) {
  return (f.array() * g.array() * w.array()).sum();
}

GreensCheck greens_formula_check(const WeightedComplex& K, int i,
                                 const Eigen::VectorXd& f,
                                 const Eigen::VectorXd& g) {
  check_cochain_dim(K, i);
  const int n = K.face_count(i);
  if (f.size() != n || g.size() != n)
    throw std::invalid_argument("chain length does not match S_i");

  const Eigen::VectorXd wi = weight_vector(K, i);
  const Eigen::VectorXd lf = hodge_full(K, i).matrix * f;
  GreensCheck chk;
  chk.lhs = weighted_inner(lf, g, wi);

  double rhs = 0.0;
  if (i < K.dim()) {
    const Eigen::SparseMatrix<double> d = coboundary(K, i).matrix;
    rhs += weighted_inner(d * f, d * g, weight_vector(K, i + 1));
  }
  if (i > 0 || K.reduced()) {
    const Eigen::SparseMatrix<double> a = adjoint_coboundary(K, i - 1).matrix;
    rhs += weighted_inner(a * f, a * g, weight_vector(K, i - 1));
  }
  chk.rhs = rhs;
  chk.residual = std::abs(chk.lhs - chk.rhs) / std::max(1.0, std::abs(chk.lhs));
  return chk;
}

void write_matrix_market(const SparseOperator& op, std::ostream& out) {
  out << "%%MatrixMarket matrix coordinate real general\n";
  out << op.matrix.rows() << ' ' << op.matrix.cols() << ' '
      << op.matrix.nonZeros() << '\n';
  for (int k = 0; k < op.matrix.outerSize(); ++k) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(op.matrix, k); it; ++it)
      out << it.row() + 1 << ' ' << it.col() + 1 << ' ' << fmt17(it.value())
          << '\n';
  }
}

}  // namespace hodgeheat
