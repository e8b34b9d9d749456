#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hodgeheat/cli.hpp"
#include "hodgeheat/dgg.hpp"
#include "hodgeheat/generators.hpp"
#include "hodgeheat/heat.hpp"
#include "hodgeheat/io.hpp"
#include "hodgeheat/metrics.hpp"
#include "hodgeheat/operators.hpp"

namespace py = pybind11;
using namespace hodgeheat;

namespace {

WeightPolicy policy_from(const std::string& s) { return parse_weight_policy(s); }

MetricKind kind_from(const std::string& s) {
  if (s == "mu") return MetricKind::MuWeight;
  if (s == "canonical") return MetricKind::Canonical;
  throw std::invalid_argument("metric kind must be 'mu' or 'canonical'");
}

Face face_from(const std::vector<VertexId>& verts) {
  return Face::from_unsorted(verts);
}

std::vector<Face> faces_from(const std::vector<std::vector<VertexId>>& sets) {
  std::vector<Face> out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.push_back(face_from(s));
  return out;
}

py::tuple triplets(const SparseOperator& op) {
  const auto nnz = op.matrix.nonZeros();
  py::array_t<int> rows(nnz), cols(nnz);
  py::array_t<double> vals(nnz);
  auto r = rows.mutable_unchecked<1>();
  auto c = cols.mutable_unchecked<1>();
  auto v = vals.mutable_unchecked<1>();
  Eigen::Index q = 0;
  for (int k = 0; k < op.matrix.outerSize(); ++k) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(op.matrix, k); it;
         ++it, ++q) {
      r(q) = static_cast<int>(it.row());
      c(q) = static_cast<int>(it.col());
      v(q) = it.value();
    }
  }
  return py::make_tuple(rows, cols, vals,
                        py::make_tuple(op.rows(), op.cols()));
}

py::dict report_dict(const DggReport& rep) {
  py::dict d;
  d["form"] = rep.form;
  d["dim"] = rep.dim;
  py::list a, b;
  for (const Face& f : rep.set_a) a.append(py::cast(f.vertices()));
  for (const Face& f : rep.set_b) b.append(py::cast(f.vertices()));
  d["set_a"] = a;
  d["set_b"] = b;
  d["t"] = rep.t;
  d["kind"] = metric_kind_name(rep.kind);
  d["rho"] = rep.rho;
  d["s"] = rep.jump;
  d["lambda"] = rep.lambda;
  d["zeta"] = rep.zeta;
  d["lhs"] = rep.lhs;
  d["rhs"] = rep.rhs;
  d["margin"] = rep.margin;
  d["hypothesis_ok"] = rep.hypothesis_ok;
  d["pass"] = rep.pass();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Weighted simplicial complexes, Hodge Laplacians, intrinsic "
            "metrics and heat-kernel bound verification";

  py::class_<WeightedComplex>(m, "WeightedComplex")
      .def_property_readonly("dim", &WeightedComplex::dim)
      .def_property_readonly("reduced", &WeightedComplex::reduced)
      .def_property_readonly("name", &WeightedComplex::name)
      .def("face_count", &WeightedComplex::face_count, py::arg("i"))
      .def("faces",
           [](const WeightedComplex& K, int i) {
             py::list out;
             for (const Face& f : K.faces(i)) out.append(py::cast(f.vertices()));
             return out;
           },
           py::arg("i"))
      .def("weight",
           [](const WeightedComplex& K, const std::vector<VertexId>& f) {
             return K.weight_of(face_from(f));
           },
           py::arg("face"))
      .def("degree",
           [](const WeightedComplex& K, const std::vector<VertexId>& f) {
             return K.face_degree(face_from(f));
           },
           py::arg("face"))
      .def("to_json",
           [](const WeightedComplex& K) { return complex_to_json(K).dump(2); })
      .def("__repr__", [](const WeightedComplex& K) {
        std::ostringstream os;
        os << "WeightedComplex(dim=" << K.dim()
           << ", faces=" << K.total_face_count()
           << ", reduced=" << (K.reduced() ? "True" : "False") << ")";
        return os.str();
      });

  m.def(
      "build_complex",
      [](const std::vector<std::pair<std::vector<VertexId>,
                                     std::optional<double>>>& faces,
         const std::string& policy, bool strict, bool reduced,
         const std::string& name) {
        std::vector<FaceSpec> specs;
        specs.reserve(faces.size());
        for (const auto& [verts, w] : faces) specs.push_back({verts, w});
        return build_complex(std::move(specs), policy_from(policy),
                             strict ? ClosureMode::Strict
                                    : ClosureMode::AutoClose,
                             reduced, name);
      },
      py::arg("faces"), py::arg("policy") = "unit", py::arg("strict") = false,
      py::arg("reduced") = true, py::arg("name") = "");

  m.def("parse_complex", [](const std::string& text) {
    return parse_complex_text(text);
  });
  m.def("parse_complex_file", [](const std::string& path) {
    return parse_complex_file(path);
  });

  m.def(
      "full_simplex",
      [](int n, const std::string& policy, bool reduced) {
        return generate_full_simplex(n, policy_from(policy), reduced);
      },
      py::arg("n"), py::arg("policy") = "unit", py::arg("reduced") = true);
  m.def(
      "sphere_boundary",
      [](int n, const std::string& policy, bool reduced) {
        return generate_sphere_boundary(n, policy_from(policy), reduced);
      },
      py::arg("n"), py::arg("policy") = "unit", py::arg("reduced") = true);
  m.def(
      "random_flag",
      [](int n, double p, std::uint64_t seed, const std::string& policy,
         bool reduced) {
        return generate_random_flag(n, p, seed, policy_from(policy), reduced);
      },
      py::arg("n"), py::arg("p"), py::arg("seed"),
      py::arg("policy") = "explicit", py::arg("reduced") = true);
  m.def(
      "graph",
      [](const std::vector<std::pair<VertexId, VertexId>>& edges,
         const std::string& policy, bool reduced, std::uint64_t seed) {
        return generate_graph(edges, policy_from(policy), reduced, seed);
      },
      py::arg("edges"), py::arg("policy") = "unit", py::arg("reduced") = true,
      py::arg("seed") = 0);

  m.def("sign",
        [](const std::vector<VertexId>& f, const std::vector<VertexId>& fbar) {
          return orientation_sign(Face(f), Face(fbar));
        });

  m.def("coboundary", [](const WeightedComplex& K, int i) {
    return triplets(coboundary(K, i));
  });
  m.def("adjoint_coboundary", [](const WeightedComplex& K, int i) {
    return triplets(adjoint_coboundary(K, i));
  });
  m.def("hodge_up", [](const WeightedComplex& K, int i) {
    return triplets(hodge_up(K, i));
  });
  m.def("hodge_down", [](const WeightedComplex& K, int i) {
    return triplets(hodge_down(K, i));
  });
  m.def("hodge_full", [](const WeightedComplex& K, int i) {
    return triplets(hodge_full(K, i));
  });
  m.def("bound_b", [](const WeightedComplex& K, int i) {
    const DegreeBound b = bound_b(K, i);
    return py::make_tuple(b.b, b.attaining.vertices());
  });
  m.def("greens_check", [](const WeightedComplex& K, int i,
                           const Eigen::VectorXd& f, const Eigen::VectorXd& g) {
    const GreensCheck chk = greens_formula_check(K, i, f, g);
    py::dict d;
    d["lhs"] = chk.lhs;
    d["rhs"] = chk.rhs;
    d["residual"] = chk.residual;
    return d;
  });
  m.def("reduced_betti", [](const WeightedComplex& K, int i) {
    return reduced_betti(K, i);
  });

  m.def(
      "metric_table",
      [](const WeightedComplex& K, int i, const std::string& kind) {
        const MetricTable tbl = metric_table(K, i, kind_from(kind));
        py::list labels;
        for (const Face& f : tbl.faces) labels.append(py::cast(f.vertices()));
        return py::make_tuple(labels, tbl.dist, tbl.jump);
      },
      py::arg("K"), py::arg("i"), py::arg("kind") = "mu");
  m.def("mu_weight", [](const WeightedComplex& K, int i,
                        const std::vector<VertexId>& f,
                        const std::vector<VertexId>& g) {
    return mu_weight(K, i, face_from(f), face_from(g));
  });
  m.def(
      "verify_intrinsic",
      [](const WeightedComplex& K, int i, const std::string& kind) {
        const MetricTable tbl = metric_table(K, i, kind_from(kind));
        const IntrinsicReport rep = verify_intrinsic(K, i, tbl);
        py::dict d;
        d["pass"] = rep.pass;
        d["worst_ratio"] = rep.worst_ratio;
        d["worst_face"] = rep.worst_face.vertices();
        return d;
      },
      py::arg("K"), py::arg("i"), py::arg("kind") = "mu");

  m.def("spectral_bottom", [](const WeightedComplex& K, int i) {
    const SpectralData sd = spectral_bottom(K, i);
    py::dict d;
    d["dim"] = sd.dim;
    d["lambda"] = sd.lambda_min;
    d["method"] = sd.method;
    d["residual"] = sd.residual;
    if (sd.eigenvalues) d["eigenvalues"] = *sd.eigenvalues;
    if (sd.eigenvectors) d["eigenvectors"] = *sd.eigenvectors;
    return d;
  });
  m.def(
      "apply_semigroup",
      [](const WeightedComplex& K, int i, double t, const Eigen::VectorXd& f) {
        HeatState st;
        st.dim = i;
        st.values = f;
        return apply_semigroup(K, i, t, st).values;
      },
      py::arg("K"), py::arg("i"), py::arg("t"), py::arg("f"));
  m.def("heat_kernel_column",
        [](const WeightedComplex& K, int i, double t,
           const std::vector<VertexId>& fp) {
          return heat_kernel_column(K, i, t, face_from(fp)).values;
        });
  m.def("energy_functional",
        [](const WeightedComplex& K, int i, const Eigen::VectorXd& values,
           const Eigen::VectorXd& zeta) {
          HeatState st;
          st.dim = i;
          st.values = values;
          return energy_functional(K, i, st, zeta);
        });

  m.def("zeta_closed", &zeta_closed, py::arg("s"), py::arg("t"), py::arg("r"));
  m.def("zeta_variational", [](double s, double t, double r) {
    const ZetaVariational zv = zeta_variational(s, t, r);
    return py::make_tuple(zv.value, zv.kappa_star);
  });
  m.def("gaussian_constant", &gaussian_constant, py::arg("h"));

  m.def(
      "dgg_pairing_check",
      [](const WeightedComplex& K, int i,
         const std::vector<std::vector<VertexId>>& A,
         const std::vector<std::vector<VertexId>>& B, double t,
         const std::string& kind) {
        return report_dict(
            dgg_pairing_check(K, i, faces_from(A), faces_from(B), t,
                              kind_from(kind)));
      },
      py::arg("K"), py::arg("i"), py::arg("A"), py::arg("B"), py::arg("t"),
      py::arg("kind") = "mu");
  m.def(
      "dgg_functional_check",
      [](const WeightedComplex& K, int i, const Eigen::VectorXd& f,
         const Eigen::VectorXd& g, const std::vector<std::vector<VertexId>>& A,
         const std::vector<std::vector<VertexId>>& B, double t,
         const std::string& kind) {
        return report_dict(dgg_functional_check(
            K, i, f, g, faces_from(A), faces_from(B), t, kind_from(kind)));
      },
      py::arg("K"), py::arg("i"), py::arg("f"), py::arg("g"), py::arg("A"),
      py::arg("B"), py::arg("t"), py::arg("kind") = "mu");
  m.def(
      "pointwise_kernel_check",
      [](const WeightedComplex& K, int i, const std::vector<VertexId>& f,
         const std::vector<VertexId>& fp, double t, const std::string& kind) {
        return report_dict(pointwise_kernel_check(K, i, face_from(f),
                                                  face_from(fp), t,
                                                  kind_from(kind)));
      },
      py::arg("K"), py::arg("i"), py::arg("F"), py::arg("Fp"), py::arg("t"),
      py::arg("kind") = "canonical");
  m.def(
      "gaussian_corollary_check",
      [](const WeightedComplex& K, int i,
         const std::vector<std::vector<VertexId>>& A,
         const std::vector<std::vector<VertexId>>& B, double t, double h,
         const std::string& kind) {
        const GaussianReport rep = gaussian_corollary_check(
            K, i, faces_from(A), faces_from(B), t, h, kind_from(kind));
        py::dict d;
        d["dim"] = rep.dim;
        d["t"] = rep.t;
        d["h"] = rep.h;
        d["rho"] = rep.rho;
        d["lambda"] = rep.lambda;
        d["C"] = rep.constant;
        d["bound"] = rep.bound;
        d["lhs"] = rep.lhs;
        d["pass"] = rep.pass();
        return d;
      },
      py::arg("K"), py::arg("i"), py::arg("A"), py::arg("B"), py::arg("t"),
      py::arg("h") = 1.0, py::arg("kind") = "mu");

  m.def(
      "run_sweep",
      [](int trials, std::uint64_t seed) {
        SweepConfig cfg;
        cfg.trials = trials;
        cfg.seed = seed;
        const SweepResult res = run_sweep(cfg);
        py::dict d;
        d["trials"] = res.reports.size();
        d["complexes"] = res.complexes;
        d["violations"] = res.violations;
        double worst = 0.0;
        for (const DggReport& rep : res.reports)
          worst = std::min(worst, rep.rhs > 0 ? rep.margin / rep.rhs : 0.0);
        d["worst_relative_margin"] = worst;
        return d;
      },
      py::arg("trials") = 200, py::arg("seed") = 42);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
