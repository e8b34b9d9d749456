#include "hodgeheat/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <queue>
#include <stdexcept>

#include "hodgeheat/numfmt.hpp"
#include "hodgeheat/operators.hpp"

namespace hodgeheat {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

double mu_from_totals(const WeightedComplex& K, int i, const PairWeights& pw,
                      int a, int b) {
  const double ra = K.weight(i, a) / pw.row_total[a];
  const double rb = K.weight(i, b) / pw.row_total[b];
  return std::min({std::sqrt(ra), std::sqrt(rb), 1.0});
}
}  // namespace

const char* metric_kind_name(MetricKind kind) {
  return kind == MetricKind::MuWeight ? "mu" : "canonical";
}

int MetricTable::index_of(const Face& f) const {
  auto it = std::lower_bound(faces.begin(), faces.end(), f);
  if (it == faces.end() || *it != f) return -1;
  return static_cast<int>(it - faces.begin());
}

double mu_weight(const WeightedComplex& K, int i, const Face& f,
                 const Face& fp) {
  const PairWeights pw = pair_weights(K, i);
  auto ia = K.index_of(f);
  auto ib = K.index_of(fp);
  if (!ia || !ib || f.dim() != i || fp.dim() != i)
    throw std::invalid_argument("faces must belong to S_i");
  if (pw.total(*ia, *ib) == 0.0)
    throw std::invalid_argument("mu_weight requires an adjacent pair");
  return mu_from_totals(K, i, pw, *ia, *ib);
}

double canonical_hop_length(const WeightedComplex& K, int i) {
  const double b = bound_b(K, i).b;
  if (!(b > 0.0)) return kInf;
  if (i == 0 && K.reduced()) return 1.0 / std::sqrt(2.0 * b);
  return 1.0 / ((i + 1) * std::sqrt(b));
}

MetricTable metric_table(const WeightedComplex& K, int i, MetricKind kind) {
  if (i < 0 || i > K.dim())
    throw std::invalid_argument("dimension out of range");
  const PairWeights pw = pair_weights(K, i);
  const int n = K.face_count(i);

  MetricTable table;
  table.dim = i;
  table.kind = kind;
  table.reduced = K.reduced();
  table.faces = K.faces(i);
  table.dist = Eigen::MatrixXd::Constant(n, n, kInf);

  double hop = 0.0;
  if (kind == MetricKind::Canonical) hop = canonical_hop_length(K, i);
  auto edge_length = [&](int a, int b) {
    return kind == MetricKind::MuWeight ? mu_from_totals(K, i, pw, a, b) : hop;
  };

  // Dijkstra from every source; adjacency graphs are sparse.
  using Item = std::pair<double, int>;
  for (int s = 0; s < n; ++s) {
    auto row = table.dist.row(s);
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    row(s) = 0.0;
    heap.emplace(0.0, s);
    while (!heap.empty()) {
      auto [d, u] = heap.top();
      heap.pop();
      if (d > row(u)) continue;
      for (const PairEntry& e : pw.rows[u]) {
        const double nd = d + edge_length(u, e.neighbor);
        if (nd < row(e.neighbor)) {
          row(e.neighbor) = nd;
          heap.emplace(nd, e.neighbor);
        }
      }
    }
  }
  // Forward/backward sums can round differently; symmetrize exactly.
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const double d = std::min(table.dist(a, b), table.dist(b, a));
      table.dist(a, b) = table.dist(b, a) = d;
    }

  table.jump = kInf;
  double worst = -1.0;
  for (int a = 0; a < n; ++a) {
    for (const PairEntry& e : pw.rows[a]) {
      if (e.neighbor > a) worst = std::max(worst, table.dist(a, e.neighbor));
    }
  }
  if (worst >= 0.0) table.jump = worst;
  return table;
}

IntrinsicReport verify_intrinsic(const WeightedComplex& K, int i,
                                 const MetricTable& table) {
  if (table.dim != i || table.faces != K.faces(i))
    throw std::invalid_argument("metric table does not match S_i of K");
  const PairWeights pw = pair_weights(K, i);
  IntrinsicReport rep;
  rep.worst_ratio = -1.0;
  for (int f = 0; f < K.face_count(i); ++f) {
    double acc = 0.0;
    for (const PairEntry& e : pw.rows[f]) {
      const double d = table.dist(f, e.neighbor);
      acc += e.total() * d * d;
    }
    const double ratio = acc / K.weight(i, f);
    if (ratio > rep.worst_ratio) {
      rep.worst_ratio = ratio;
      rep.worst_face = K.face(i, f);
    }
  }
  if (rep.worst_ratio < 0.0) rep.worst_ratio = 0.0;  // no faces
  rep.pass = rep.worst_ratio <= 1.0 + 1e-12;
  return rep;
}

double set_distance(const MetricTable& table, const std::vector<Face>& A,
                    const std::vector<Face>& B) {
  if (A.empty() || B.empty())
    throw std::invalid_argument("set_distance requires nonempty sets");
  double best = kInf;
  for (const Face& fa : A) {
    const int a = table.index_of(fa);
    if (a < 0)
      throw std::invalid_argument("face " + fa.label() + " not in metric table");
    for (const Face& fb : B) {
      const int b = table.index_of(fb);
      if (b < 0)
        throw std::invalid_argument("face " + fb.label() +
                                    " not in metric table");
      best = std::min(best, table.dist(a, b));
    }
  }
  return best;
}

void write_metric_csv(const MetricTable& table, std::ostream& out) {
  const int n = static_cast<int>(table.faces.size());
  out << "face";
  for (const Face& f : table.faces) out << ",\"" << f.label() << '"';
  out << '\n';
  for (int a = 0; a < n; ++a) {
    out << '"' << table.faces[a].label() << '"';
    for (int b = 0; b < n; ++b) out << ',' << fmt17(table.dist(a, b));
    out << '\n';
  }
}

}  // namespace hodgeheat
