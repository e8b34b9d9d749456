#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "helpers.hpp"
#include "hodgeheat/cli.hpp"
#include "hodgeheat/generators.hpp"
#include "hodgeheat/io.hpp"
#include "hodgeheat/operators.hpp"

using namespace hodgeheat;

namespace {

const char* kTriangleJson = R"({
  "name": "tri",
  "reduced": true,
  "weight_policy": "unit",
  "faces": [ { "vertices": [0, 1, 2] } ]
})";

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = std::string("hhtest_") + name;
  std::ofstream f(path);
  f << text;
  return path;
}

bool complexes_equal(const WeightedComplex& a, const WeightedComplex& b) {
  if (a.dim() != b.dim() || a.reduced() != b.reduced()) return false;
  for (int i = -1; i <= a.dim(); ++i) {
    if (a.face_count(i) != b.face_count(i)) return false;
    for (int k = 0; k < a.face_count(i); ++k) {
      if (a.face(i, k) != b.face(i, k)) return false;
      if (a.weight(i, k) != b.weight(i, k)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE_BEGIN("cli_io");

TEST_CASE("parse the triangle file") {
  const auto K = parse_complex_text(kTriangleJson);
  CHECK(K.total_face_count() == 8);
  CHECK(K.name() == "tri");
}

TEST_CASE("schema violations carry context") {
  CHECK_THROWS_WITH_AS(
      parse_complex_text(R"({"faces":[{"vertices":[0,1],"weight":-3}]})"),
      "nonpositive weight for face {0,1}", std::invalid_argument);
  CHECK_THROWS_AS(parse_complex_text(R"({"faces":[], "shape":"odd"})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_complex_text(R"({"faces":[{"vertices":[0],"w":1}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_complex_text("{not json"), std::invalid_argument);
  CHECK_THROWS_AS(parse_complex_text(R"({"faces":"nope"})"),
                  std::invalid_argument);
}

TEST_CASE("tetrahedron boundary file") {
  const auto K = parse_complex_text(
      R"({"faces":[{"vertices":[0,1,2]},{"vertices":[0,1,3]},
                   {"vertices":[0,2,3]},{"vertices":[1,2,3]}]})");
  CHECK(K.total_face_count() == 15);
}

TEST_CASE("serialization round trip preserves the complex") {
  const auto K = parse_complex_text(
      R"({"reduced": true, "weight_policy": "normalized",
          "faces":[{"vertices":[0,1,2],"weight":2.5},{"vertices":[2,3]}]})");
  const auto round = parse_complex_text(complex_to_json(K).dump());
  CHECK(complexes_equal(K, round));
}

TEST_CASE("generators") {
  CHECK(generate_full_simplex(3, WeightPolicy::Unit, true).total_face_count() ==
        8);
  const auto sphere = generate_sphere_boundary(4, WeightPolicy::Unit, true);
  CHECK(reduced_betti(sphere, 2) == 1);
  CHECK_THROWS_AS(generate_full_simplex(0, WeightPolicy::Unit, true),
                  std::invalid_argument);
  CHECK_THROWS_AS(generate_random_flag(5, 1.5, 1, WeightPolicy::Unit, true),
                  std::invalid_argument);
  const auto g = generate_graph({{0, 1}, {1, 2}}, WeightPolicy::Unit, false);
  CHECK(g.face_count(0) == 3);
  CHECK(g.face_count(1) == 2);
}

TEST_CASE("cli: spectrum prints seventeen-significant-digit values") {
  const auto path = write_temp("tri.json", kTriangleJson);
  const CliRun run = cli({"spectrum", "--complex", path, "--dim", "1"});
  CHECK(run.code == 0);
  CHECK(run.out == "3\n3\n3\n");

  const CliRun heat = cli({"heat", "--complex", path, "--dim", "1", "--t",
                           "0.5", "--set-a", "{0,1}"});
  CHECK(heat.code == 0);
  // e^{-1.5} with 17 significant digits
  CHECK(heat.out.find("0.22313016014842982") != std::string::npos);
}

TEST_CASE("cli: zeta") {
  CHECK(cli({"zeta", "--s", "1", "--t", "1", "--r", "0"}).out == "0\n");
  const CliRun j = cli({"zeta", "--s", "1", "--t", "1", "--r", "1", "--format",
                        "json"});
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["agree"].get<bool>());
  CHECK(doc["closed"].get<double>() ==
        doctest::Approx(0.4671600246464479).epsilon(1e-14));
}

TEST_CASE("cli: dgg-check forms and exit codes") {
  const auto path = write_temp("tri2.json", kTriangleJson);
  const CliRun pairing =
      cli({"dgg-check", "--complex", path, "--dim", "1", "--set-a", "all",
           "--set-b", "all", "--t", "1"});
  CHECK(pairing.code == 0);
  const auto rep = nlohmann::json::parse(pairing.out);
  CHECK(rep["pass"].get<bool>());
  CHECK(rep["margin"].get<double>() >= 0.0);

  for (const char* form : {"functional", "pointwise", "gaussian"}) {
    const CliRun r =
        cli({"dgg-check", "--complex", path, "--dim", "1", "--set-a", "{0,1}",
             "--set-b", "{1,2}", "--t", "0.5,2", "--form", form});
    CHECK(r.code == 0);
  }

  const CliRun missing = cli({"dgg-check", "--complex", "no_such_file.json",
                              "--dim", "1", "--set-a", "all", "--set-b", "all",
                              "--t", "1"});
  CHECK(missing.code == 1);
  const CliRun bad_face =
      cli({"dgg-check", "--complex", path, "--dim", "1", "--set-a", "{9,10}",
           "--set-b", "all", "--t", "1"});
  CHECK(bad_face.code == 1);
  CHECK(bad_face.err.find("error") != std::string::npos);
}

TEST_CASE("cli: ball selector") {
  const auto path = write_temp("tri3.json", kTriangleJson);
  const CliRun run =
      cli({"metric", "--complex", path, "--dim", "1", "--set-a",
           "ball({0,1}, 0.5)", "--set-b", "{1,2}", "--format", "json"});
  CHECK(run.code == 0);
  const auto doc = nlohmann::json::parse(run.out);
  CHECK(doc["rho"].get<double>() == 0.0);  // the ball of radius 1/2 covers S_1
  CHECK(doc["jump"].get<double>() == 0.5);
}

TEST_CASE("cli: validate, laplacian, betti") {
  const auto path = write_temp("tri4.json", kTriangleJson);
  const CliRun validate =
      cli({"validate", "--complex", path, "--dim", "1", "--seed", "9"});
  CHECK(validate.code == 0);
  CHECK(validate.out.find("total faces: 8") != std::string::npos);
  CHECK(validate.out.find("greens dim 1") != std::string::npos);

  const CliRun lap =
      cli({"laplacian", "--complex", path, "--dim", "1", "--part", "full"});
  CHECK(lap.code == 0);
  CHECK(lap.out.rfind("%%MatrixMarket", 0) == 0);

  const CliRun betti = cli({"betti", "--complex", path});
  CHECK(betti.code == 0);
  CHECK(betti.out.find("0,0,0") != std::string::npos);

  const CliRun strict_bad = cli(
      {"validate", "--complex",
       write_temp("open.json", R"({"faces":[{"vertices":[0,1]}]})"), "--strict"});
  CHECK(strict_bad.code == 1);
}

TEST_CASE("cli: unknown flags and subcommands fail cleanly") {
  CHECK(cli({"frobnicate"}).code == 1);
  CHECK(cli({"zeta", "--s", "1", "--t", "1", "--r", "0", "--bogus"}).code == 1);
  CHECK(cli({}).code == 1);
}

TEST_CASE("cli: byte-identical reruns") {
  const auto path = write_temp("tri5.json", kTriangleJson);
  const std::vector<std::vector<std::string>> invocations = {
      {"validate", "--complex", path, "--dim", "0", "--seed", "3"},
      {"metric", "--complex", path, "--dim", "1", "--kind", "canonical"},
      {"dgg-check", "--complex", path, "--dim", "1", "--set-a", "all",
       "--set-b", "{0,1}", "--t", "0.25,4"},
      {"sweep", "--trials", "40", "--seed", "11"},
  };
  for (const auto& argv : invocations) {
    const CliRun first = cli(argv);
    const CliRun second = cli(argv);
    CHECK(first.code == second.code);
    CHECK(first.out == second.out);
  }
}

TEST_CASE("cli: sweep exit code and csv shape") {
  const CliRun run = cli({"sweep", "--trials", "30", "--seed", "5"});
  CHECK(run.code == 0);
  CHECK(run.out.rfind("form,dim,kind,", 0) == 0);
  const auto lines = std::count(run.out.begin(), run.out.end(), '\n');
  CHECK(lines == 31);  // header + one row per trial
}

TEST_CASE("command table covers every operation exactly once") {
  const std::set<std::string> registry = {
      // complex_core
      "build_complex", "sign", "face_degree", "coface_pairs",
      // hodge_operators
      "coboundary", "adjoint_coboundary", "hodge_up", "hodge_down",
      "hodge_full", "pair_weights", "bound_b", "greens_formula_check",
      "reduced_betti",
      // intrinsic_metrics
      "mu_weight", "metric_table", "verify_intrinsic", "set_distance",
      // heat_engine
      "spectral_bottom", "apply_semigroup", "heat_kernel_column",
      "energy_functional",
      // dgg_verifier
      "zeta_closed", "zeta_variational", "dgg_pairing_check",
      "dgg_functional_check", "pointwise_kernel_check",
      "gaussian_corollary_check", "run_sweep",
      // cli_io
      "parse_complex", "generate",
  };
  std::set<std::string> seen;
  for (const CommandCoverage& cmd : command_table()) {
    for (const std::string& op : cmd.operations) {
      CHECK_MESSAGE(registry.count(op) == 1, "unknown op ", op);
      CHECK_MESSAGE(seen.insert(op).second, "op mapped twice: ", op);
    }
  }
  CHECK(seen.size() == registry.size());
}

TEST_SUITE_END();
