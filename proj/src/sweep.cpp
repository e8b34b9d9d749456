#include <atomic>
#include <cstdlib>
#include <thread>

#include "hodgeheat/dgg.hpp"
#include "hodgeheat/generators.hpp"
#include "hodgeheat/rng.hpp"

namespace hodgeheat {

namespace {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("HODGE_DGG_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

std::vector<Face> random_subset(Rng& rng, const std::vector<Face>& faces) {
  std::vector<Face> out;
  for (const Face& f : faces) {
    if (rng.bernoulli(0.35)) out.push_back(f);
  }
  if (out.empty()) out.push_back(faces[rng.below(static_cast<int>(faces.size()))]);
  return out;
}

// Trials for one generated complex. Deterministic given the group seed.
std::vector<DggReport> run_group(const SweepConfig& cfg, std::uint64_t group) {
  Rng rng(cfg.seed * 0x9e3779b97f4a7c15ULL + group + 1);
  // every eighth group gets a larger complex (a few hundred faces per dim)
  const int span = cfg.max_vertices - cfg.min_vertices + 1;
  const int n = group % 8 == 0
                    ? cfg.max_vertices + 4 + rng.below(5)
                    : cfg.min_vertices + rng.below(span);
  const double p = rng.uniform(0.3, 0.6);
  const bool reduced = rng.bernoulli(0.5);
  const WeightedComplex K = generate_random_flag(
      n, p, rng.bits(), WeightPolicy::Explicit, reduced);

  std::vector<MetricKind> kinds;
  if (cfg.mu_kind) kinds.push_back(MetricKind::MuWeight);
  if (cfg.canonical_kind) kinds.push_back(MetricKind::Canonical);
  if (kinds.empty()) return {};

  // Contexts per (dim, kind), built only for dims whose jump is usable.
  std::vector<DggReport> reports;
  std::vector<std::vector<std::unique_ptr<DggContext>>> ctx(
      static_cast<std::size_t>(K.dim() + 1));
  for (auto& row : ctx) row.resize(kinds.size());

  int made = 0;
  for (int trial = 0;
       trial < 4 * cfg.trials_per_complex && made < cfg.trials_per_complex;
       ++trial) {
    if (K.dim() < 0) break;
    const int i = rng.below(K.dim() + 1);
    if (K.face_count(i) < 2) continue;
    const std::size_t kidx = static_cast<std::size_t>(rng.below(
        static_cast<int>(kinds.size())));
    auto& slot = ctx[static_cast<std::size_t>(i)][kidx];
    if (!slot) slot = std::make_unique<DggContext>(K, i, kinds[kidx]);
    if (!(slot->jump() > 0.0) || std::isinf(slot->jump())) continue;

    const double t =
        cfg.t_min * std::pow(cfg.t_max / cfg.t_min, rng.uniform01());
    const auto A = random_subset(rng, K.faces(i));
    const auto B = random_subset(rng, K.faces(i));
    if (rng.bernoulli(0.5)) {
      reports.push_back(slot->pairing(A, B, t));
    } else {
      const int nf = K.face_count(i);
      Eigen::VectorXd f = Eigen::VectorXd::Zero(nf);
      Eigen::VectorXd g = Eigen::VectorXd::Zero(nf);
      for (const Face& fa : A) f(*K.index_of(fa)) = rng.gaussian();
      for (const Face& fb : B) g(*K.index_of(fb)) = rng.gaussian();
      reports.push_back(slot->functional(f, g, A, B, t));
    }
    ++made;
  }
  return reports;
}

}  // namespace

SweepResult run_sweep(const SweepConfig& config) {
  const int threads = resolve_threads(config.threads);
  // Groups are over-provisioned; trials beyond the requested count are
  // trimmed so the output is independent of how many groups ran short.
  const int groups =
      (config.trials + config.trials_per_complex - 1) / config.trials_per_complex +
      4;

  std::vector<std::vector<DggReport>> per_group(
      static_cast<std::size_t>(groups));
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (;;) {
      const int g = next.fetch_add(1);
      if (g >= groups) return;
      per_group[static_cast<std::size_t>(g)] =
          run_group(config, static_cast<std::uint64_t>(g));
    }
  };
  std::vector<std::thread> pool;
  const int nthreads = std::max(1, std::min(threads, groups));
  pool.reserve(static_cast<std::size_t>(nthreads));
  for (int k = 0; k < nthreads; ++k) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  SweepResult result;
  for (auto& group : per_group) {
    if (static_cast<int>(result.reports.size()) >= config.trials) break;
    if (!group.empty()) ++result.complexes;
    for (auto& rep : group) {
      if (static_cast<int>(result.reports.size()) >= config.trials) break;
      if (!rep.pass()) ++result.violations;
      result.reports.push_back(std::move(rep));
    }
  }
  return result;
}

}  // namespace hodgeheat
