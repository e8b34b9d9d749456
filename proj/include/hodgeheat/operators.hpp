#pragma once

#include <Eigen/SparseCore>
#include <iosfwd>
#include <vector>

#include "hodgeheat/complex.hpp"

namespace hodgeheat {

/// Real sparse operator between cochain spaces, with the simplex dimensions
/// of its row and column index sets. Entries are stored compressed with no
/// duplicates and no explicit zeros, in deterministic order.
struct SparseOperator {
  int row_simplex_dim = 0;
  int col_simplex_dim = 0;
  Eigen::SparseMatrix<double> matrix;
  bool symmetric = false;

  int rows() const { return static_cast<int>(matrix.rows()); }
  int cols() const { return static_cast<int>(matrix.cols()); }
};

/// Which assembly route for the Hodge Laplacians. Product is the production
/// default (sparse products of coboundary/adjoint matrices); Entrywise sums
/// the per-face coface/boundary weight ratios directly and serves as an
/// independent oracle.
enum class Assembly { Product, Entrywise };

/// Coboundary delta_i: rows S_{i+1}, cols S_i, entry (Fbar, F) the
/// orientation sign of F in the boundary of Fbar. i = -1 is allowed in
/// reduced mode (single all-ones column over the empty face).
SparseOperator coboundary(const WeightedComplex& K, int i);

/// Adjoint of the coboundary for the weighted inner products:
/// W_i^{-1} delta_i^T W_{i+1}.
SparseOperator adjoint_coboundary(const WeightedComplex& K, int i);

SparseOperator hodge_up(const WeightedComplex& K, int i,
                        Assembly assembly = Assembly::Product);
SparseOperator hodge_down(const WeightedComplex& K, int i,
                          Assembly assembly = Assembly::Product);
SparseOperator hodge_full(const WeightedComplex& K, int i,
                          Assembly assembly = Assembly::Product);

struct PairEntry {
  int neighbor;
  double up = 0.0;    ///< weight of the shared coface, 0 if none
  double down = 0.0;  ///< tau through the shared boundary face, 0 if none
  double total() const { return up + down; }
};

/// The pairwise weights on S_i x S_i: w_up, w_down = tau, their sum, the
/// per-face totals, and Deg(F) = deg F / w(F). Diagonal entries are 0 and
/// never stored; rows list neighbors in ascending index order.
struct PairWeights {
  int dim = 0;
  std::vector<std::vector<PairEntry>> rows;
  std::vector<double> row_total;  ///< sum over F' of w_{FF'}
  std::vector<double> deg_ratio;  ///< Deg(F)

  double up(int a, int b) const;
  double down(int a, int b) const;
  double total(int a, int b) const;
};

PairWeights pair_weights(const WeightedComplex& K, int i);

/// tau_{F E F'} = w(F) w(F') / w(E); E must be a face of both F and F'.
double tau(const WeightedComplex& K, const Face& f, const Face& e,
           const Face& fp);

struct DegreeBound {
  double b = 0.0;
  Face attaining;
  int attaining_dim = 0;
};

/// b = max of Deg(F) over F in S_j, j in {i, i-1} (the j = i-1 stratum
/// includes the empty face in reduced mode). Always finite on finite
/// complexes; the attaining face is reported.
DegreeBound bound_b(const WeightedComplex& K, int i);

struct GreensCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;  ///< |lhs - rhs| / max(1, |lhs|)
};

/// Green's formula: (L_i f, g) against (delta_i f, delta_i g) +
/// (delta_{i-1}* f, delta_{i-1}* g), the two sides computed independently.
GreensCheck greens_formula_check(const WeightedComplex& K, int i,
                                 const Eigen::VectorXd& f,
                                 const Eigen::VectorXd& g);

/// Diagonal of the weighted inner product on S_i as a vector.
Eigen::VectorXd weight_vector(const WeightedComplex& K, int i);

double weighted_inner(const Eigen::VectorXd& f, const Eigen::VectorXd& g,
                      const Eigen::VectorXd& w);

/// Reduced Betti number via exact integer rank of the coboundary matrices
/// (rank over GF(p) for several large primes, independent of any spectral
/// computation).
int reduced_betti(const WeightedComplex& K, int i);

/// Coordinate-triplet text export, MatrixMarket layout, 1-based indices.
void write_matrix_market(const SparseOperator& op, std::ostream& out);

}  // namespace hodgeheat
