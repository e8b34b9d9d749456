#pragma once

#include <compare>
#include <string>
#include <vector>

namespace hodgeheat {

using VertexId = int;

/// A face of a simplicial complex: a strictly ascending list of vertex ids.
/// The ascending order is the canonical orientation. The empty face has
/// dimension -1.
class Face {
public:
  Face() = default;
  explicit Face(std::vector<VertexId> vertices);

  /// Builds a face from vertices in any order; throws on duplicates or
  /// negative ids.
  static Face from_unsorted(std::vector<VertexId> vertices);

  int dim() const { return static_cast<int>(verts_.size()) - 1; }
  bool is_empty_face() const { return verts_.empty(); }
  const std::vector<VertexId>& vertices() const { return verts_; }

  /// Boundary face obtained by omitting the k-th vertex (0-based).
  Face facet_omitting(int k) const;

  /// "{0,1,2}"; the empty face prints as "{}".
  std::string label() const;

  friend bool operator==(const Face&, const Face&) = default;
  friend auto operator<=>(const Face& a, const Face& b) {
    return a.verts_ <=> b.verts_;
  }

private:
  std::vector<VertexId> verts_;
};

/// Sign of F in the boundary of Fbar: (-1)^k when F equals Fbar with its
/// k-th vertex omitted, 0 when F is not a boundary face of Fbar.
int orientation_sign(const Face& f, const Face& fbar);

}  // namespace hodgeheat
