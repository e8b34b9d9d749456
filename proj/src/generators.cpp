#include "hodgeheat/generators.hpp"

#include <stdexcept>
#include <string>

#include "hodgeheat/rng.hpp"

namespace hodgeheat {

namespace {

// Lists every face (including the empty one when needed) of the given
// vertex sets and attaches sampled weights where the policy wants them.
std::vector<FaceSpec> with_policy_weights(std::vector<std::vector<VertexId>> sets,
                                          WeightPolicy policy, bool reduced,
                                          Rng& rng) {
  std::vector<FaceSpec> specs;
  specs.reserve(sets.size() + 1);
  const bool sample_all = policy == WeightPolicy::Explicit;
  if (sample_all && reduced)
    specs.push_back({{}, rng.log_uniform(0.1, 10.0)});
  for (auto& s : sets) {
    FaceSpec spec;
    spec.vertices = std::move(s);
    if (sample_all) spec.weight = rng.log_uniform(0.1, 10.0);
    specs.push_back(std::move(spec));
  }
  return specs;
}

void enumerate_cliques(const std::vector<std::vector<bool>>& adj, int n,
                       std::vector<VertexId>& current,
                       std::vector<std::vector<VertexId>>& out) {
  const int start = current.empty() ? 0 : current.back() + 1;
  for (int v = start; v < n; ++v) {
    bool ok = true;
    for (VertexId u : current) {
      if (!adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    current.push_back(v);
    out.push_back(current);
    enumerate_cliques(adj, n, current, out);
    current.pop_back();
  }
}

}  // namespace

WeightedComplex generate_full_simplex(int n, WeightPolicy policy,
                                      bool reduced) {
  if (n < 1) throw std::invalid_argument("full simplex needs n >= 1 vertices");
  std::vector<VertexId> all(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
  if (policy == WeightPolicy::Explicit)
    throw std::invalid_argument(
        "explicit policy needs listed weights; use unit or normalized");
  return build_complex({{all, std::nullopt}}, policy, ClosureMode::AutoClose,
                       reduced, "full-simplex(" + std::to_string(n) + ")");
}

WeightedComplex generate_sphere_boundary(int n, WeightPolicy policy,
                                         bool reduced) {
  if (n < 2)
    throw std::invalid_argument("sphere boundary needs n >= 2 vertices");
  if (policy == WeightPolicy::Explicit)
    throw std::invalid_argument(
        "explicit policy needs listed weights; use unit or normalized");
  std::vector<FaceSpec> specs;
  for (int omit = 0; omit < n; ++omit) {
    std::vector<VertexId> f;
    for (int v = 0; v < n; ++v)
      if (v != omit) f.push_back(v);
    specs.push_back({std::move(f), std::nullopt});
  }
  return build_complex(std::move(specs), policy, ClosureMode::AutoClose,
                       reduced, "sphere-boundary(" + std::to_string(n) + ")");
}

WeightedComplex generate_random_flag(int n, double p, std::uint64_t seed,
                                     WeightPolicy policy, bool reduced) {
  if (n < 1) throw std::invalid_argument("random flag needs n >= 1 vertices");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("edge probability must lie in [0, 1]");
  Rng rng(seed);
  std::vector<std::vector<bool>> adj(
      static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (rng.bernoulli(p))
        adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
            adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = true;
    }
  }
  std::vector<std::vector<VertexId>> cliques;
  std::vector<VertexId> current;
  enumerate_cliques(adj, n, current, cliques);
  auto specs = with_policy_weights(std::move(cliques), policy, reduced, rng);
  return build_complex(std::move(specs), policy, ClosureMode::AutoClose,
                       reduced, "random-flag(" + std::to_string(n) + ")");
}

WeightedComplex generate_graph(
    const std::vector<std::pair<VertexId, VertexId>>& edges,
    WeightPolicy policy, bool reduced, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::vector<VertexId>> sets;
  std::vector<bool> seen;
  for (const auto& [a, b] : edges) {
    if (a == b) throw std::invalid_argument("self-loops are not simplices");
    for (VertexId v : {a, b}) {
      if (v < 0) throw std::invalid_argument("vertex ids must be nonnegative");
      if (static_cast<std::size_t>(v) >= seen.size())
        seen.resize(static_cast<std::size_t>(v) + 1, false);
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = true;
        sets.push_back({v});
      }
    }
    sets.push_back({std::min(a, b), std::max(a, b)});
  }
  auto specs = with_policy_weights(std::move(sets), policy, reduced, rng);
  return build_complex(std::move(specs), policy, ClosureMode::AutoClose,
                       reduced, "graph");
}

}  // namespace hodgeheat
