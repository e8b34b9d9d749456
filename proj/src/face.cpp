#include "hodgeheat/face.hpp"

#include <algorithm>
#include <stdexcept>

namespace hodgeheat {

namespace {
void check_vertices(const std::vector<VertexId>& v) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] < 0) throw std::invalid_argument("vertex ids must be nonnegative");
    if (k > 0 && v[k] <= v[k - 1])
      throw std::invalid_argument("face vertices must be strictly ascending");
  }
}
}  // namespace

Face::Face(std::vector<VertexId> vertices) : verts_(std::move(vertices)) {
  check_vertices(verts_);
}

Face Face::from_unsorted(std::vector<VertexId> vertices) {
  std::sort(vertices.begin(), vertices.end());
  for (std::size_t k = 1; k < vertices.size(); ++k) {
    if (vertices[k] == vertices[k - 1])
      throw std::invalid_argument("duplicate vertex in face");
  }
  return Face(std::move(vertices));
}

Face Face::facet_omitting(int k) const {
  if (k < 0 || k > dim()) throw std::out_of_range("vertex position out of range");
  std::vector<VertexId> v;
  v.reserve(verts_.size() - 1);
  for (int j = 0; j < static_cast<int>(verts_.size()); ++j) {
    if (j != k) v.push_back(verts_[j]);
  }
  return Face(std::move(v));
}

std::string Face::label() const {
  std::string s = "{";
  for (std::size_t k = 0; k < verts_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(verts_[k]);
  }
  s += '}';
  return s;
}

int orientation_sign(const Face& f, const Face& fbar) {
  if (f.dim() + 1 != fbar.dim()) return 0;
  const auto& a = f.vertices();
  const auto& b = fbar.vertices();
  int omitted = -1;
  std::size_t ia = 0;
  for (std::size_t ib = 0; ib < b.size(); ++ib) {
    if (ia < a.size() && a[ia] == b[ib]) {
      ++ia;
    } else if (omitted < 0) {
      omitted = static_cast<int>(ib);
    } else {
      return 0;  // two mismatches: not a boundary face
    }
  }
  if (ia != a.size()) return 0;
  return (omitted % 2 == 0) ? 1 : -1;
}

}  // namespace hodgeheat
