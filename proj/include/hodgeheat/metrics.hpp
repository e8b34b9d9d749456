#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <vector>

#include "hodgeheat/complex.hpp"

namespace hodgeheat {

enum class MetricKind { MuWeight, Canonical };

const char* metric_kind_name(MetricKind kind);

/// Pairwise intrinsic distances on S_i(K) plus the jump size s (the
/// supremum of dist over adjacent pairs; +inf when no adjacent pair
/// exists). dist is symmetric with zero diagonal; unreachable pairs hold
/// +inf. The reduced flag of the source complex is recorded because it
/// changes i = 0 adjacency.
struct MetricTable {
  int dim = 0;
  MetricKind kind = MetricKind::MuWeight;
  bool reduced = true;
  std::vector<Face> faces;
  Eigen::MatrixXd dist;
  double jump = 0.0;

  int index_of(const Face& f) const;  ///< -1 if absent
};

/// The mu edge weight of Definition-2.3 style metrics:
/// min{ sqrt(w(F)/sum_F'' w_{FF''}), sqrt(w(F')/sum_F'' w_{F'F''}), 1 }.
/// Only defined for adjacent pairs (w_{FF'} != 0).
double mu_weight(const WeightedComplex& K, int i, const Face& f,
                 const Face& fp);

/// Per-hop length of the canonical metric: 1/((i+1) sqrt(b)) wherever that
/// constant is intrinsic (every i >= 1, and i = 0 without the empty face).
/// At i = 0 in reduced mode the down-adjacency through the empty face adds
/// a second neighbor-weight term of size b w(F), so the hop must shrink to
/// 1/sqrt(2 b) to keep sum_F' w_{FF'} rho^2 <= w(F). +inf when b = 0 (no
/// adjacency at all).
double canonical_hop_length(const WeightedComplex& K, int i);

/// All-pairs shortest-path distances over the adjacency graph
/// (F ~ F' iff w_{FF'} != 0). Edge lengths are mu(F, F') for the mu-weight
/// kind and the constant canonical_hop_length per hop for the canonical
/// kind.
MetricTable metric_table(const WeightedComplex& K, int i, MetricKind kind);

struct IntrinsicReport {
  bool pass = false;
  double worst_ratio = 0.0;
  Face worst_face;
};

/// Checks sum_F' w_{FF'} dist^2(F,F') <= w(F) for every F; passes iff the
/// worst ratio is <= 1 + 1e-12.
IntrinsicReport verify_intrinsic(const WeightedComplex& K, int i,
                                 const MetricTable& table);

/// min over (F, F') in A x B of dist(F, F'); +inf across components.
double set_distance(const MetricTable& table, const std::vector<Face>& A,
                    const std::vector<Face>& B);

/// CSV: header row of face labels, then the square matrix; "inf" marks
/// unreachable pairs.
void write_metric_csv(const MetricTable& table, std::ostream& out);

}  // namespace hodgeheat
