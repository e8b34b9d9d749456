#include "hodgeheat/complex.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hodgeheat {

int WeightedComplex::face_count(int i) const {
  if (i < -1 || i > dim_) return 0;
  return static_cast<int>(strata_[i + 1].size());
}

const std::vector<Face>& WeightedComplex::faces(int i) const {
  static const std::vector<Face> kEmpty;
  if (i < -1 || i > dim_) return kEmpty;
  return strata_[i + 1];
}

std::optional<int> WeightedComplex::index_of(const Face& f) const {
  const int i = f.dim();
  if (i < -1 || i > dim_) return std::nullopt;
  const auto& s = strata_[i + 1];
  auto it = std::lower_bound(s.begin(), s.end(), f);
  if (it == s.end() || *it != f) return std::nullopt;
  return static_cast<int>(it - s.begin());
}

double WeightedComplex::weight_of(const Face& f) const {
  auto idx = index_of(f);
  if (!idx) throw std::invalid_argument("face " + f.label() + " not in complex");
  return weights_[f.dim() + 1][*idx];
}

double WeightedComplex::face_degree(int i, int k) const {
  double deg = 0.0;
  if (i + 1 <= dim_) {
    for (const FaceRef& c : cofaces_[i + 1][k]) deg += weights_[i + 2][c.index];
  }
  return deg;
}

double WeightedComplex::face_degree(const Face& f) const {
  auto idx = index_of(f);
  if (!idx) throw std::invalid_argument("face " + f.label() + " not in complex");
  return face_degree(f.dim(), *idx);
}

int WeightedComplex::total_face_count() const {
  int n = 0;
  for (const auto& s : strata_) n += static_cast<int>(s.size());
  return n;
}

WeightedComplex build_complex(std::vector<FaceSpec> faces, WeightPolicy policy,
                              ClosureMode mode, bool reduced, std::string name) {
  // Canonicalize input faces, reject duplicates and bad weights.
  int max_dim = -1;
  std::map<Face, std::optional<double>> listed;
  for (auto& spec : faces) {
    Face f = Face::from_unsorted(std::move(spec.vertices));
    if (spec.weight && !(*spec.weight > 0.0))
      throw std::invalid_argument("nonpositive weight for face " + f.label());
    if (f.is_empty_face() && !reduced)
      throw std::invalid_argument(
          "the empty face cannot be listed in non-reduced mode");
    max_dim = std::max(max_dim, f.dim());
    auto [it, inserted] = listed.emplace(std::move(f), spec.weight);
    if (!inserted)
      throw std::invalid_argument("duplicate face entry " + it->first.label());
  }

  // The empty face is part of reduced mode itself, never a closure violation.
  if (reduced) listed.try_emplace(Face{}, std::nullopt);

  // Closure, top-down. Sub-faces of vertices (the empty face) are handled
  // above; for dim >= 1 every omitted-vertex sub-face must be present.
  std::vector<std::vector<std::pair<Face, std::optional<double>>>> by_dim(
      static_cast<std::size_t>(max_dim + 2));
  for (auto& [f, w] : listed) by_dim[f.dim() + 1].emplace_back(f, w);
  for (int d = max_dim; d >= 1; --d) {
    // Iterate over a stable copy: insertions go to lower dimensions only.
    for (std::size_t k = 0; k < by_dim[d + 1].size(); ++k) {
      const Face f = by_dim[d + 1][k].first;
      for (int pos = 0; pos <= d; ++pos) {
        Face sub = f.facet_omitting(pos);
        if (listed.find(sub) != listed.end()) continue;
        if (mode == ClosureMode::Strict)
          throw std::invalid_argument("closure violation: " + sub.label() +
                                      " (sub-face of " + f.label() +
                                      ") is missing");
        listed.emplace(sub, std::nullopt);
        by_dim[d].emplace_back(std::move(sub), std::nullopt);
      }
    }
  }

  WeightedComplex K;
  K.name_ = std::move(name);
  K.reduced_ = reduced;
  K.dim_ = max_dim;
  K.strata_.resize(static_cast<std::size_t>(max_dim + 2));
  K.weights_.resize(static_cast<std::size_t>(max_dim + 2));
  std::vector<std::vector<std::optional<double>>> given(
      static_cast<std::size_t>(max_dim + 2));
  for (auto& [f, w] : listed) {  // std::map iterates in lexicographic order
    K.strata_[f.dim() + 1].push_back(f);
    given[f.dim() + 1].push_back(w);
  }

  // Incidence lists.
  K.boundary_.resize(K.strata_.size());
  K.cofaces_.resize(K.strata_.size());
  for (int i = -1; i <= max_dim; ++i) {
    K.boundary_[i + 1].resize(K.strata_[i + 1].size());
    K.cofaces_[i + 1].resize(K.strata_[i + 1].size());
  }
  for (int i = 0; i <= max_dim; ++i) {
    if (i == 0 && !reduced) continue;  // no empty face below vertices
    const auto& stratum = K.strata_[i + 1];
    for (int k = 0; k < static_cast<int>(stratum.size()); ++k) {
      const Face& f = stratum[k];
      for (int pos = 0; pos <= i; ++pos) {
        Face sub = f.facet_omitting(pos);
        auto sidx = K.index_of(sub);
        const int sign = (pos % 2 == 0) ? 1 : -1;
        K.boundary_[i + 1][k].push_back({*sidx, sign});
        K.cofaces_[i][*sidx].push_back({k, sign});
      }
    }
  }

  // Weights.
  for (int i = max_dim; i >= -1; --i) {
    auto& w = K.weights_[i + 1];
    w.resize(K.strata_[i + 1].size());
    for (int k = 0; k < static_cast<int>(w.size()); ++k) {
      switch (policy) {
        case WeightPolicy::Unit:
          w[k] = 1.0;
          break;
        case WeightPolicy::Explicit:
          if (!given[i + 1][k])
            throw std::invalid_argument("missing weight for face " +
                                        K.strata_[i + 1][k].label() +
                                        " under explicit policy");
          w[k] = *given[i + 1][k];
          break;
        case WeightPolicy::Normalized: {
          const bool facet = K.cofaces_[i + 1][k].empty();
          w[k] = facet ? given[i + 1][k].value_or(1.0) : K.face_degree(i, k);
          break;
        }
      }
    }
  }
  return K;
}

std::vector<CofacePair> coface_pairs(const WeightedComplex& K, int i) {
  if (i < 0 || i > K.dim())
    throw std::invalid_argument("dimension out of range");
  std::vector<CofacePair> out;
  // Up pairs: two i-faces in the boundary of a shared (i+1)-face. The shared
  // coface is unique (it is the union of the two faces).
  for (int c = 0; c < K.face_count(i + 1); ++c) {
    const auto& bnd = K.boundary(i + 1, c);
    for (std::size_t p = 0; p < bnd.size(); ++p) {
      for (std::size_t q = p + 1; q < bnd.size(); ++q) {
        CofacePair pr;
        pr.a = std::min(bnd[p].index, bnd[q].index);
        pr.b = std::max(bnd[p].index, bnd[q].index);
        pr.shared = c;
        pr.up = true;
        out.push_back(pr);
      }
    }
  }
  // Down pairs: two i-faces sharing an (i-1)-face, which equals their
  // intersection and is unique per pair. At i = 0 this stratum is the empty
  // face, present only in reduced mode.
  for (int e = 0; e < K.face_count(i - 1); ++e) {
    const auto& cof = K.cofaces(i - 1, e);
    for (std::size_t p = 0; p < cof.size(); ++p) {
      for (std::size_t q = p + 1; q < cof.size(); ++q) {
        CofacePair pr;
        pr.a = std::min(cof[p].index, cof[q].index);
        pr.b = std::max(cof[p].index, cof[q].index);
        pr.shared = e;
        pr.up = false;
        out.push_back(pr);
      }
    }
  }
  return out;
}

}  // namespace hodgeheat
