#include <array>
#include <cstdint>
#include <vector>

#include "hodgeheat/operators.hpp"

namespace hodgeheat {

namespace {

// Rank of an integer matrix over GF(p) by Gaussian elimination. The rank
// over the rationals is the maximum over primes; three large primes rule
// out the small torsion primes that occur in simplicial boundary matrices.
int rank_mod_p(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  for (auto& row : m)
    for (auto& v : row) v = ((v % p) + p) % p;

  auto inv_mod = [p](std::int64_t a) {
    // Fermat: a^(p-2) mod p
    std::int64_t r = 1, base = a % p, e = p - 2;
    while (e > 0) {
      if (e & 1) r = (__int128)r * base % p;
      base = (__int128)base * base % p;
      e >>= 1;
    }
    return r;
  };

  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    const std::int64_t piv_inv = inv_mod(m[rank][c]);
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      const std::int64_t factor = (__int128)m[r][c] * piv_inv % p;
      for (int cc = c; cc < cols; ++cc) {
        m[r][cc] = (m[r][cc] - (__int128)factor * m[rank][cc]) % p;
        if (m[r][cc] < 0) m[r][cc] += p;
      }
    }
    ++rank;
  }
  return rank;
}

int integer_rank(const Eigen::SparseMatrix<double>& sp) {
  const int rows = static_cast<int>(sp.rows());
  const int cols = static_cast<int>(sp.cols());
  if (rows == 0 || cols == 0) return 0;
  std::vector<std::vector<std::int64_t>> m(
      rows, std::vector<std::int64_t>(cols, 0));
  for (int k = 0; k < sp.outerSize(); ++k) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(sp, k); it; ++it)
      m[it.row()][it.col()] = static_cast<std::int64_t>(it.value());
  }
  constexpr std::array<std::int64_t, 3> primes = {2147483647, 2147483629,
                                                  2147483587};
  int rank = 0;
  for (std::int64_t p : primes) rank = std::max(rank, rank_mod_p(m, p));
  return rank;
}

}  // namespace

int reduced_betti(const WeightedComplex& K, int i) {
  if (i < 0 || i > K.dim())
    throw std::invalid_argument("dimension out of range");
  const int n = K.face_count(i);
  int rank_up = 0;
  if (i < K.dim()) rank_up = integer_rank(coboundary(K, i).matrix);
  int rank_down = 0;
  if (i > 0 || K.reduced())
    rank_down = integer_rank(coboundary(K, i - 1).matrix);
  return n - rank_up - rank_down;
}

}  // namespace hodgeheat
