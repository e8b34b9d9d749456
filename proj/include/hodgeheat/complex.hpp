#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hodgeheat/face.hpp"

namespace hodgeheat {

enum class WeightPolicy { Unit, Explicit, Normalized };
enum class ClosureMode { Strict, AutoClose };

struct FaceSpec {
  std::vector<VertexId> vertices;
  std::optional<double> weight;
};

/// Incidence entry: index of a face one dimension up or down, with the
/// orientation sign relating the two faces.
struct FaceRef {
  int index;
  int sign;
};

/// A finite weighted simplicial complex, closed under inclusion, with
/// positive weights and deterministic (lexicographic) face indices per
/// dimension. Immutable after construction; safe to share across threads.
///
/// In reduced mode the empty face (dimension -1) is part of the complex and
/// participates in operators and metrics.
class WeightedComplex {
public:
  int dim() const { return dim_; }
  bool reduced() const { return reduced_; }
  const std::string& name() const { return name_; }

  /// Number of i-faces; 0 outside [-1, dim].
  int face_count(int i) const;
  const std::vector<Face>& faces(int i) const;
  const Face& face(int i, int k) const { return strata_[i + 1][k]; }
  double weight(int i, int k) const { return weights_[i + 1][k]; }
  const std::vector<double>& weights(int i) const { return weights_[i + 1]; }

  bool contains(const Face& f) const { return index_of(f).has_value(); }
  std::optional<int> index_of(const Face& f) const;
  double weight_of(const Face& f) const;

  /// Sum of the weights of the (dim F + 1)-cofaces of F; 0 for facets.
  double face_degree(int i, int k) const;
  double face_degree(const Face& f) const;

  /// Boundary faces of face k in S_i, as entries into S_{i-1}.
  const std::vector<FaceRef>& boundary(int i, int k) const {
    return boundary_[i + 1][k];
  }
  /// Cofaces of face k in S_i, as entries into S_{i+1}.
  const std::vector<FaceRef>& cofaces(int i, int k) const {
    return cofaces_[i + 1][k];
  }

  int total_face_count() const;

private:
  friend WeightedComplex build_complex(std::vector<FaceSpec>, WeightPolicy,
                                       ClosureMode, bool, std::string);
  WeightedComplex() = default;

  std::string name_;
  bool reduced_ = true;
  int dim_ = -1;
  // Stratum i lives at slot i+1. strata_[0] holds the empty face iff reduced.
  std::vector<std::vector<Face>> strata_;
  std::vector<std::vector<double>> weights_;
  std::vector<std::vector<std::vector<FaceRef>>> boundary_;
  std::vector<std::vector<std::vector<FaceRef>>> cofaces_;
};

/// Builds a validated weighted complex from (vertex set, optional weight)
/// entries. In AutoClose mode missing sub-faces are added; in Strict mode
/// they raise an error. Weight policies:
///   Unit        w == 1 everywhere (listed weights are ignored),
///   Explicit    every face, including the empty face in reduced mode, must
///               carry a positive listed weight,
///   Normalized  non-facets get w(F) = deg F computed top-down; facets keep
///               their listed weight (default 1).
WeightedComplex build_complex(std::vector<FaceSpec> faces, WeightPolicy policy,
                              ClosureMode mode, bool reduced,
                              std::string name = {});

struct CofacePair {
  int a = 0, b = 0;  ///< indices into S_i, a < b
  int shared = 0;    ///< index of the shared face: S_{i+1} if up, S_{i-1} if down
  bool up = false;
};

/// All unordered pairs of i-faces sharing an (i+1)-coface (up) or an
/// (i-1)-boundary face (down), each pair emitted once per shared face,
/// in deterministic order (up pairs first).
std::vector<CofacePair> coface_pairs(const WeightedComplex& K, int i);

}  // namespace hodgeheat
