#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hodgeheat/complex.hpp"

namespace hodgeheat {

/// The full simplex on n >= 1 vertices {0, ..., n-1} (one maximal face,
/// auto-closed).
WeightedComplex generate_full_simplex(int n, WeightPolicy policy, bool reduced);

/// The boundary of the full simplex on n >= 2 vertices: all (n-2)-faces and
/// below. sphere_boundary(4) is the tetrahedron boundary.
WeightedComplex generate_sphere_boundary(int n, WeightPolicy policy,
                                         bool reduced);

/// Clique (flag) complex of an Erdos-Renyi style graph on n vertices with
/// edge probability p. Deterministic for a fixed seed. Under the Explicit
/// policy every face weight is sampled log-uniform in [0.1, 10]; under
/// Normalized the facets are sampled and the rest follow by degree.
WeightedComplex generate_random_flag(int n, double p, std::uint64_t seed,
                                     WeightPolicy policy, bool reduced);

/// One-dimensional complex from an edge list. Under the Explicit policy
/// weights are sampled log-uniform in [0.1, 10] from the seed.
WeightedComplex generate_graph(
    const std::vector<std::pair<VertexId, VertexId>>& edges,
    WeightPolicy policy, bool reduced, std::uint64_t seed = 0);

}  // namespace hodgeheat
