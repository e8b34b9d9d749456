#include "hodgeheat/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "hodgeheat/dgg.hpp"
#include "hodgeheat/generators.hpp"
#include "hodgeheat/heat.hpp"
#include "hodgeheat/io.hpp"
#include "hodgeheat/metrics.hpp"
#include "hodgeheat/numfmt.hpp"
#include "hodgeheat/operators.hpp"
#include "hodgeheat/rng.hpp"

namespace hodgeheat {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitBoundViolated = 2;

std::vector<double> parse_time_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stod(item));
  }
  if (out.empty()) throw std::invalid_argument("empty time list");
  return out;
}

Face parse_face_token(const std::string& token) {
  if (token.size() < 2 || token.front() != '{' || token.back() != '}')
    throw std::invalid_argument("face must look like {0,1,2}: " + token);
  std::vector<VertexId> verts;
  std::stringstream ss(token.substr(1, token.size() - 2));
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    verts.push_back(std::stoi(item));
  }
  return Face(std::move(verts));  // validates ascending order
}

// Set selector: "all", "ball(FACE, R)", or a list of brace faces.
struct SetSpec {
  enum class Kind { All, Ball, List } kind = Kind::List;
  std::vector<Face> faces;
  Face center;
  double radius = 0.0;

  static SetSpec parse(const std::string& raw) {
    SetSpec spec;
    std::string s = raw;
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    if (s == "all") {
      spec.kind = Kind::All;
      return spec;
    }
    if (s.rfind("ball(", 0) == 0 && s.back() == ')') {
      const std::string inner = s.substr(5, s.size() - 6);
      const auto close = inner.find('}');
      if (close == std::string::npos || close + 1 >= inner.size() ||
          inner[close + 1] != ',')
        throw std::invalid_argument("ball selector must be ball({face}, r)");
      spec.kind = Kind::Ball;
      spec.center = parse_face_token(inner.substr(0, close + 1));
      spec.radius = std::stod(inner.substr(close + 2));
      return spec;
    }
    // list of brace-delimited faces, separated by ; or nothing
    std::size_t pos = 0;
    while (pos < s.size()) {
      if (s[pos] == ';' || s[pos] == ',') {
        ++pos;
        continue;
      }
      if (s[pos] != '{')
        throw std::invalid_argument("bad face list near \"" + s.substr(pos) +
                                    "\"");
      const auto close = s.find('}', pos);
      if (close == std::string::npos)
        throw std::invalid_argument("unbalanced brace in face list");
      spec.faces.push_back(parse_face_token(s.substr(pos, close - pos + 1)));
      pos = close + 1;
    }
    if (spec.faces.empty())
      throw std::invalid_argument("empty set specification");
    return spec;
  }

  std::vector<Face> resolve(const WeightedComplex& K, int i,
                            const std::function<const MetricTable&()>& table) const {
    switch (kind) {
      case Kind::All:
        return K.faces(i);
      case Kind::Ball: {
        const MetricTable& tbl = table();
        const int c = tbl.index_of(center);
        if (c < 0)
          throw std::invalid_argument("ball center " + center.label() +
                                      " not in S_i");
        std::vector<Face> out;
        for (std::size_t k = 0; k < tbl.faces.size(); ++k) {
          if (tbl.dist(c, static_cast<int>(k)) <= radius)
            out.push_back(tbl.faces[k]);
        }
        if (out.empty())
          throw std::invalid_argument("ball selector matched no faces");
        return out;
      }
      case Kind::List:
        for (const Face& f : faces) {
          if (f.dim() != i)
            throw std::invalid_argument("face " + f.label() +
                                        " has the wrong dimension");
          if (!K.contains(f))
            throw std::invalid_argument("face " + f.label() +
                                        " not in the complex");
        }
        return faces;
    }
    return {};
  }
};

MetricKind parse_kind(const std::string& s) {
  if (s == "mu") return MetricKind::MuWeight;
  if (s == "canonical") return MetricKind::Canonical;
  throw std::invalid_argument("metric kind must be mu or canonical");
}

class OutputTarget {
public:
  OutputTarget(const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
      stream_ = &fallback;
    } else {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::invalid_argument("cannot open output file " + path);
      stream_ = file_.get();
    }
  }
  std::ostream& stream() { return *stream_; }

private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

struct CommonOpts {
  std::string complex_path;
  int dim = 0;
  std::string out_path;
  std::string format;
};

int cmd_validate(const std::string& path, bool strict, std::optional<int> dim,
                 std::uint64_t seed, std::ostream& out) {
  const WeightedComplex K = parse_complex_file(
      path, strict ? ClosureMode::Strict : ClosureMode::AutoClose);
  out << "name: " << (K.name().empty() ? "(unnamed)" : K.name()) << '\n';
  out << "reduced: " << (K.reduced() ? "true" : "false") << '\n';
  out << "dim: " << K.dim() << '\n';
  for (int i = K.reduced() ? -1 : 0; i <= K.dim(); ++i) {
    double wsum = 0.0, dmin = 0.0, dmax = 0.0;
    for (int k = 0; k < K.face_count(i); ++k) {
      wsum += K.weight(i, k);
      const double deg = K.face_degree(i, k);
      if (k == 0) dmin = dmax = deg;
      dmin = std::min(dmin, deg);
      dmax = std::max(dmax, deg);
    }
    out << "S_" << i << ": " << K.face_count(i) << " faces, weight "
        << fmt17(wsum) << ", degree range [" << fmt17(dmin) << ", "
        << fmt17(dmax) << "]";
    if (i >= 0) {
      int ups = 0, downs = 0;
      for (const CofacePair& pr : coface_pairs(K, i)) (pr.up ? ups : downs)++;
      out << ", up pairs " << ups << ", down pairs " << downs;
    }
    out << '\n';
  }
  out << "total faces: " << K.total_face_count() << '\n';
  if (dim) {
    const int n = K.face_count(*dim);
    Rng rng(seed);
    Eigen::VectorXd f(n), g(n);
    for (int k = 0; k < n; ++k) f(k) = rng.gaussian();
    for (int k = 0; k < n; ++k) g(k) = rng.gaussian();
    const GreensCheck chk = greens_formula_check(K, *dim, f, g);
    out << "greens dim " << *dim << ": lhs " << fmt17(chk.lhs) << ", rhs "
        << fmt17(chk.rhs) << ", residual " << fmt17(chk.residual) << '\n';
  }
  out << "ok\n";
  return kExitOk;
}

int cmd_laplacian(const CommonOpts& opts, const std::string& part,
                  std::ostream& fallback) {
  const WeightedComplex K = parse_complex_file(opts.complex_path);
  SparseOperator op;
  if (part == "full") {
    op = hodge_full(K, opts.dim);
  } else if (part == "up") {
    op = hodge_up(K, opts.dim);
  } else if (part == "down") {
    op = hodge_down(K, opts.dim);
  } else if (part == "coboundary") {
    op = coboundary(K, opts.dim);
  } else if (part == "adjoint") {
    op = adjoint_coboundary(K, opts.dim);
  } else {
    throw std::invalid_argument(
        "part must be full, up, down, coboundary or adjoint");
  }
  OutputTarget target(opts.out_path, fallback);
  if (opts.format == "json") {
    nlohmann::json entries = nlohmann::json::array();
    for (int k = 0; k < op.matrix.outerSize(); ++k) {
      for (Eigen::SparseMatrix<double>::InnerIterator it(op.matrix, k); it;
           ++it)
        entries.push_back({it.row(), it.col(), it.value()});
    }
    nlohmann::json j;
    j["rows"] = op.rows();
    j["cols"] = op.cols();
    j["row_simplex_dim"] = op.row_simplex_dim;
    j["col_simplex_dim"] = op.col_simplex_dim;
    j["entries"] = std::move(entries);
    target.stream() << j.dump(2) << '\n';
  } else {
    write_matrix_market(op, target.stream());
  }
  return kExitOk;
}

int cmd_spectrum(const CommonOpts& opts, std::ostream& fallback) {
  const WeightedComplex K = parse_complex_file(opts.complex_path);
  const HeatPropagator prop(K, opts.dim);
  const SpectralData& sd = prop.spectral_bottom();
  OutputTarget target(opts.out_path, fallback);
  if (opts.format == "json") {
    target.stream() << to_json(sd).dump(2) << '\n';
  } else if (sd.eigenvalues) {
    for (int k = 0; k < sd.eigenvalues->size(); ++k)
      target.stream() << fmt17((*sd.eigenvalues)(k)) << '\n';
  } else {
    target.stream() << fmt17(sd.lambda_min) << '\n';
  }
  if (!sd.converged) return kExitInputError;
  return kExitOk;
}

int cmd_betti(const CommonOpts& opts, std::optional<int> dim,
              std::ostream& fallback) {
  const WeightedComplex K = parse_complex_file(opts.complex_path);
  OutputTarget target(opts.out_path, fallback);
  std::vector<int> dims;
  if (dim) {
    dims.push_back(*dim);
  } else {
    for (int i = 0; i <= K.dim(); ++i) dims.push_back(i);
  }
  nlohmann::json arr = nlohmann::json::array();
  if (opts.format != "json") target.stream() << "dim,betti,near_zero_eigenvalues\n";
  for (int i : dims) {
    const int betti = reduced_betti(K, i);
    const HeatPropagator prop(K, i);
    const SpectralData& sd = prop.spectral_bottom();
    int zeros = 0;
    if (sd.eigenvalues) {
      const double tol = 1e-8 * prop.operator_norm();
      for (int k = 0; k < sd.eigenvalues->size(); ++k)
        if ((*sd.eigenvalues)(k) <= tol) ++zeros;
    } else {
      zeros = -1;  // spectrum not fully available on the iterative path
    }
    if (opts.format == "json") {
      arr.push_back({{"dim", i}, {"betti", betti}, {"near_zero_eigenvalues", zeros}});
    } else {
      target.stream() << i << ',' << betti << ',' << zeros << '\n';
    }
  }
  if (opts.format == "json") target.stream() << arr.dump(2) << '\n';
  return kExitOk;
}

int cmd_metric(const CommonOpts& opts, const std::string& kind_name,
               const std::string& set_a, const std::string& set_b,
               std::ostream& fallback) {
  const WeightedComplex K = parse_complex_file(opts.complex_path);
  const MetricKind kind = parse_kind(kind_name);
  const MetricTable table = metric_table(K, opts.dim, kind);
  const IntrinsicReport intrinsic = verify_intrinsic(K, opts.dim, table);
  const DegreeBound bb = bound_b(K, opts.dim);

  std::optional<double> rho;
  if (!set_a.empty() || !set_b.empty()) {
    if (set_a.empty() || set_b.empty())
      throw std::invalid_argument("--set-a and --set-b go together");
    auto provider = [&table]() -> const MetricTable& { return table; };
    const auto A = SetSpec::parse(set_a).resolve(K, opts.dim, provider);
    const auto B = SetSpec::parse(set_b).resolve(K, opts.dim, provider);
    rho = set_distance(table, A, B);
  }

  OutputTarget target(opts.out_path, fallback);
  if (opts.format == "json") {
    nlohmann::json j;
    j["dim"] = table.dim;
    j["kind"] = metric_kind_name(table.kind);
    j["reduced"] = table.reduced;
    nlohmann::json faces = nlohmann::json::array();
    for (const Face& f : table.faces) faces.push_back(f.label());
    j["faces"] = std::move(faces);
    nlohmann::json rows = nlohmann::json::array();
    for (int a = 0; a < table.dist.rows(); ++a) {
      nlohmann::json row = nlohmann::json::array();
      for (int b = 0; b < table.dist.cols(); ++b)
        row.push_back(json_number(table.dist(a, b)));
      rows.push_back(std::move(row));
    }
    j["dist"] = std::move(rows);
    j["jump"] = json_number(table.jump);
    j["b"] = json_number(bb.b);
    j["intrinsic_pass"] = intrinsic.pass;
    j["intrinsic_max_ratio"] = json_number(intrinsic.worst_ratio);
    if (rho) j["rho"] = json_number(*rho);
    target.stream() << j.dump(2) << '\n';
  } else {
    write_metric_csv(table, target.stream());
    target.stream() << "# jump = " << fmt17(table.jump) << '\n';
    target.stream() << "# b = " << fmt17(bb.b) << " at "
                    << bb.attaining.label() << '\n';
    target.stream() << "# intrinsic max ratio = " << fmt17(intrinsic.worst_ratio)
                    << (intrinsic.pass ? " (pass)" : " (FAIL)") << '\n';
    if (rho) target.stream() << "# rho(A,B) = " << fmt17(*rho) << '\n';
  }
  return kExitOk;
}

int cmd_heat(const CommonOpts& opts, const std::string& t_list,
             const std::string& set_a, bool kernel,
             const std::string& kind_name, std::ostream& fallback) {
  const WeightedComplex K = parse_complex_file(opts.complex_path);
  const int i = opts.dim;
  const std::vector<double> times = parse_time_list(t_list);
  for (double t : times) {
    if (!(t >= 0.0)) throw std::invalid_argument("times must be nonnegative");
  }

  std::optional<MetricTable> table;  // only for ball selectors
  auto provider = [&]() -> const MetricTable& {
    if (!table) table = metric_table(K, i, parse_kind(kind_name));
    return *table;
  };
  const auto A = SetSpec::parse(set_a).resolve(K, i, provider);

  const HeatPropagator prop(K, i);
  const int n = K.face_count(i);
  Eigen::VectorXd f0 = Eigen::VectorXd::Zero(n);
  if (kernel) {
    if (A.size() != 1)
      throw std::invalid_argument("--kernel needs a single face in --set-a");
    f0(*K.index_of(A[0])) = 1.0 / K.weight_of(A[0]);
  } else {
    for (const Face& fa : A) f0(*K.index_of(fa)) = 1.0;
  }

  std::vector<HeatState> states;
  std::vector<double> energies;
  const Eigen::VectorXd zeta0 = Eigen::VectorXd::Zero(n);
  for (double t : times) {
    HeatState st;
    st.dim = i;
    st.time = t;
    st.values = prop.apply(t, f0);
    energies.push_back(energy_functional(K, i, st, zeta0));
    states.push_back(std::move(st));
  }

  OutputTarget target(opts.out_path, fallback);
  if (opts.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t k = 0; k < states.size(); ++k) {
      nlohmann::json st;
      st["t"] = json_number(states[k].time);
      nlohmann::json vals = nlohmann::json::object();
      for (int q = 0; q < n; ++q)
        vals[K.face(i, q).label()] = json_number(states[k].values(q));
      st["values"] = std::move(vals);
      st["energy"] = json_number(energies[k]);
      arr.push_back(std::move(st));
    }
    target.stream() << arr.dump(2) << '\n';
  } else {
    write_heat_csv(K, i, states, energies, target.stream());
  }
  return kExitOk;
}

int cmd_zeta(double s, double t, const std::string& r_text,
             const std::string& format, std::ostream& out) {
  const double r = r_text == "inf"
                       ? std::numeric_limits<double>::infinity()
                       : std::stod(r_text);
  const double closed = zeta_closed(s, t, r);
  const ZetaVariational var = zeta_variational(s, t, r);
  const bool agree = std::isinf(closed)
                         ? std::isinf(var.value)
                         : std::abs(closed - var.value) <=
                               1e-8 * std::max(1.0, std::abs(closed));
  if (format == "json") {
    nlohmann::json j;
    j["s"] = json_number(s);
    j["t"] = json_number(t);
    j["r"] = json_number(r);
    j["closed"] = json_number(closed);
    j["variational"] = json_number(var.value);
    j["kappa_star"] = json_number(var.kappa_star);
    j["kappa0"] = json_number(r == 0.0 || std::isinf(r)
                                  ? var.kappa_star
                                  : 2.0 / s * std::asinh(r * s / t));
    j["agree"] = agree;
    out << j.dump(2) << '\n';
  } else {
    out << fmt17(closed) << '\n';
  }
  return agree ? kExitOk : kExitInputError;
}

int cmd_dgg_check(const CommonOpts& opts, const std::string& kind_name,
                  const std::string& form, const std::string& set_a,
                  const std::string& set_b, const std::string& t_list,
                  double h, std::ostream& fallback) {
  const WeightedComplex K = parse_complex_file(opts.complex_path);
  const MetricKind kind = parse_kind(kind_name);
  const DggContext ctx(K, opts.dim, kind);
  auto provider = [&ctx]() -> const MetricTable& { return ctx.metric(); };
  const auto A = SetSpec::parse(set_a).resolve(K, opts.dim, provider);
  const auto B = SetSpec::parse(set_b).resolve(K, opts.dim, provider);
  const std::vector<double> times = parse_time_list(t_list);

  std::vector<DggReport> reports;
  std::vector<GaussianReport> gaussians;
  for (double t : times) {
    if (form == "pairing") {
      reports.push_back(ctx.pairing(A, B, t));
    } else if (form == "functional") {
      const int n = K.face_count(opts.dim);
      Eigen::VectorXd f = Eigen::VectorXd::Zero(n);
      Eigen::VectorXd g = Eigen::VectorXd::Zero(n);
      for (const Face& fa : A) f(*K.index_of(fa)) = 1.0;
      for (const Face& fb : B) g(*K.index_of(fb)) = 1.0;
      reports.push_back(ctx.functional(f, g, A, B, t));
    } else if (form == "pointwise") {
      if (A.size() != 1 || B.size() != 1)
        throw std::invalid_argument("pointwise form needs singleton sets");
      reports.push_back(ctx.pointwise(A[0], B[0], t));
    } else if (form == "gaussian") {
      gaussians.push_back(ctx.gaussian(A, B, t, h));
    } else {
      throw std::invalid_argument(
          "form must be pairing, functional, pointwise or gaussian");
    }
  }

  OutputTarget target(opts.out_path, fallback);
  bool violated = false, hypothesis_bad = false;
  if (opts.format == "csv") {
    target.stream() << kDggCsvHeader << '\n';
    for (const DggReport& rep : reports) write_dgg_csv_row(rep, target.stream());
    for (const GaussianReport& rep : gaussians) {
      target.stream() << "gaussian," << rep.dim << ',' << kind_name << ','
                      << fmt17(rep.t) << ',' << fmt17(rep.rho) << ",,"
                      << fmt17(rep.lambda) << ",," << fmt17(rep.lhs) << ','
                      << fmt17(rep.bound) << ','
                      << fmt17(rep.bound - rep.lhs) << ','
                      << (rep.pass() ? "1" : "0") << ",,\n";
    }
  } else {
    nlohmann::json arr = nlohmann::json::array();
    for (const DggReport& rep : reports) arr.push_back(to_json(rep));
    for (const GaussianReport& rep : gaussians) arr.push_back(to_json(rep));
    target.stream() << (arr.size() == 1 ? arr[0] : arr).dump(2) << '\n';
  }
  for (const DggReport& rep : reports) {
    hypothesis_bad = hypothesis_bad || !rep.hypothesis_ok;
    violated = violated || (rep.hypothesis_ok && !rep.pass());
  }
  for (const GaussianReport& rep : gaussians) violated = violated || !rep.pass();
  if (violated) return kExitBoundViolated;
  if (hypothesis_bad) return kExitInputError;
  return kExitOk;
}

int cmd_sweep(int trials, std::uint64_t seed, const std::string& kind_name,
              const std::string& format, const std::string& out_path,
              std::ostream& fallback, std::ostream& err) {
  SweepConfig cfg;
  cfg.trials = trials;
  cfg.seed = seed;
  if (kind_name == "mu") {
    cfg.canonical_kind = false;
  } else if (kind_name == "canonical") {
    cfg.mu_kind = false;
  } else if (kind_name != "both") {
    throw std::invalid_argument("kind must be mu, canonical or both");
  }
  const SweepResult result = run_sweep(cfg);

  OutputTarget target(out_path, fallback);
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const DggReport& rep : result.reports) arr.push_back(to_json(rep));
    nlohmann::json j;
    j["trials"] = result.reports.size();
    j["complexes"] = result.complexes;
    j["violations"] = result.violations;
    j["reports"] = std::move(arr);
    target.stream() << j.dump(2) << '\n';
  } else {
    target.stream() << kDggCsvHeader << '\n';
    for (const DggReport& rep : result.reports)
      write_dgg_csv_row(rep, target.stream());
  }
  err << "sweep: " << result.reports.size() << " trials over "
      << result.complexes << " complexes, " << result.violations
      << " violations\n";
  return result.violations == 0 ? kExitOk : kExitBoundViolated;
}

}  // namespace

const std::vector<CommandCoverage>& command_table() {
  static const std::vector<CommandCoverage> table = {
      {"validate",
       {"parse_complex", "build_complex", "sign", "face_degree", "coface_pairs",
        "greens_formula_check"}},
      {"laplacian",
       {"coboundary", "adjoint_coboundary", "hodge_up", "hodge_down",
        "hodge_full"}},
      {"spectrum", {"spectral_bottom"}},
      {"betti", {"reduced_betti"}},
      {"metric",
       {"pair_weights", "bound_b", "mu_weight", "metric_table",
        "verify_intrinsic", "set_distance"}},
      {"heat", {"apply_semigroup", "heat_kernel_column", "energy_functional"}},
      {"zeta", {"zeta_closed", "zeta_variational"}},
      {"dgg-check",
       {"dgg_pairing_check", "dgg_functional_check", "pointwise_kernel_check",
        "gaussian_corollary_check"}},
      {"sweep", {"generate", "run_sweep"}},
  };
  return table;
}

int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Weighted simplicial complexes, Hodge Laplacians, intrinsic "
               "metrics and heat-kernel bound verification"};
  app.set_help_flag("--help", "Print help");  // frees -h for dgg-check --h
  app.require_subcommand(1);

  // validate
  auto* validate = app.add_subcommand("validate", "Parse and validate a complex");
  std::string v_path;
  bool v_strict = false;
  std::optional<int> v_dim;
  std::uint64_t v_seed = 0;
  validate->add_option("--complex", v_path, "Complex JSON file")->required();
  validate->add_flag("--strict", v_strict, "Fail on missing sub-faces");
  validate->add_option("--dim", v_dim, "Also run a Green's formula spot check");
  validate->add_option("--seed", v_seed, "Seed for the spot-check vectors");

  // laplacian
  auto* laplacian = app.add_subcommand("laplacian", "Export an operator");
  CommonOpts l_opts;
  std::string l_part = "full";
  laplacian->add_option("--complex", l_opts.complex_path)->required();
  laplacian->add_option("--dim", l_opts.dim)->required();
  laplacian->add_option("--part", l_part,
                        "full|up|down|coboundary|adjoint (default full)");
  laplacian->add_option("--format", l_opts.format, "mm (default) or json");
  laplacian->add_option("--out", l_opts.out_path, "Output file");

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "Spectral bottom / spectrum");
  CommonOpts s_opts;
  spectrum->add_option("--complex", s_opts.complex_path)->required();
  spectrum->add_option("--dim", s_opts.dim)->required();
  spectrum->add_option("--format", s_opts.format, "text (default) or json");
  spectrum->add_option("--out", s_opts.out_path, "Output file");

  // betti
  auto* betti = app.add_subcommand("betti", "Reduced Betti numbers");
  CommonOpts b_opts;
  std::optional<int> b_dim;
  betti->add_option("--complex", b_opts.complex_path)->required();
  betti->add_option("--dim", b_dim, "Single dimension (default: all)");
  betti->add_option("--format", b_opts.format, "csv (default) or json");
  betti->add_option("--out", b_opts.out_path, "Output file");

  // metric
  auto* metric = app.add_subcommand("metric", "Intrinsic distance table");
  CommonOpts m_opts;
  std::string m_kind = "mu", m_set_a, m_set_b;
  metric->add_option("--complex", m_opts.complex_path)->required();
  metric->add_option("--dim", m_opts.dim)->required();
  metric->add_option("--kind", m_kind, "mu (default) or canonical");
  metric->add_option("--set-a", m_set_a, "Optional set for rho(A,B)");
  metric->add_option("--set-b", m_set_b, "Optional set for rho(A,B)");
  metric->add_option("--format", m_opts.format, "csv (default) or json");
  metric->add_option("--out", m_opts.out_path, "Output file");

  // heat
  auto* heat = app.add_subcommand("heat", "Evolve the heat semigroup");
  CommonOpts h_opts;
  std::string h_t, h_set_a, h_kind = "mu";
  bool h_kernel = false;
  heat->add_option("--complex", h_opts.complex_path)->required();
  heat->add_option("--dim", h_opts.dim)->required();
  heat->add_option("--t", h_t, "Comma-separated times")->required();
  heat->add_option("--set-a", h_set_a, "Initial indicator set")->required();
  heat->add_flag("--kernel", h_kernel,
                 "Treat --set-a as a single face and emit its kernel column");
  heat->add_option("--kind", h_kind, "Metric kind for ball selectors");
  heat->add_option("--format", h_opts.format, "csv (default) or json");
  heat->add_option("--out", h_opts.out_path, "Output file");

  // zeta
  auto* zeta = app.add_subcommand("zeta", "Rate function zeta_s(t, r)");
  double z_s = 1.0, z_t = 1.0;
  std::string z_r = "0", z_format;
  zeta->add_option("--s", z_s, "Jump size")->required();
  zeta->add_option("--t", z_t, "Time")->required();
  zeta->add_option("--r", z_r, "Distance (number or inf)")->required();
  zeta->add_option("--format", z_format, "text (default) or json");

  // dgg-check
  auto* dgg = app.add_subcommand("dgg-check", "Heat-kernel bound reports");
  CommonOpts d_opts;
  std::string d_kind = "mu", d_form = "pairing", d_set_a, d_set_b, d_t;
  double d_h = 1.0;
  d_opts.format = "json";
  dgg->add_option("--complex", d_opts.complex_path)->required();
  dgg->add_option("--dim", d_opts.dim)->required();
  dgg->add_option("--set-a", d_set_a)->required();
  dgg->add_option("--set-b", d_set_b)->required();
  dgg->add_option("--t", d_t, "Comma-separated times")->required();
  dgg->add_option("--kind", d_kind, "mu (default) or canonical");
  dgg->add_option("--form", d_form,
                  "pairing (default), functional, pointwise or gaussian");
  dgg->add_option("--h", d_h, "Gaussian-form parameter h > 0");
  dgg->add_option("--format", d_opts.format, "json (default) or csv");
  dgg->add_option("--out", d_opts.out_path, "Output file");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Randomized bound sweep");
  int w_trials = 2000;
  std::uint64_t w_seed = 42;
  std::string w_kind = "both", w_format = "csv", w_out;
  sweep->add_option("--trials", w_trials, "Number of trials (default 2000)");
  sweep->add_option("--seed", w_seed, "Seed (default 42)");
  sweep->add_option("--kind", w_kind, "mu, canonical or both (default)");
  sweep->add_option("--format", w_format, "csv (default) or json");
  sweep->add_option("--out", w_out, "Output file");

  std::reverse(args.begin(), args.end());  // CLI11 vector parse order
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (*validate) return cmd_validate(v_path, v_strict, v_dim, v_seed, out);
    if (*laplacian) return cmd_laplacian(l_opts, l_part, out);
    if (*spectrum) return cmd_spectrum(s_opts, out);
    if (*betti) return cmd_betti(b_opts, b_dim, out);
    if (*metric) return cmd_metric(m_opts, m_kind, m_set_a, m_set_b, out);
    if (*heat) return cmd_heat(h_opts, h_t, h_set_a, h_kernel, h_kind, out);
    if (*zeta) return cmd_zeta(z_s, z_t, z_r, z_format, out);
    if (*dgg) return cmd_dgg_check(d_opts, d_kind, d_form, d_set_a, d_set_b,
                                   d_t, d_h, out);
    if (*sweep)
      return cmd_sweep(w_trials, w_seed, w_kind, w_format, w_out, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  err << "no subcommand given\n";
  return kExitInputError;
}

}  // namespace hodgeheat
