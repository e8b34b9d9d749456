#include <doctest.h>

#include "helpers.hpp"
#include "hodgeheat/complex.hpp"
#include "hodgeheat/generators.hpp"

using namespace hodgeheat;

namespace {
std::vector<FaceSpec> specs(std::vector<std::vector<VertexId>> sets) {
  std::vector<FaceSpec> out;
  for (auto& s : sets) out.push_back({std::move(s), std::nullopt});
  return out;
}
}  // namespace

TEST_SUITE_BEGIN("complex_core");

TEST_CASE("triangle closure: one maximal face gives eight faces") {
  const auto K = build_complex(specs({{0, 1, 2}}), WeightPolicy::Unit,
                               ClosureMode::AutoClose, true);
  CHECK(K.dim() == 2);
  CHECK(K.face_count(-1) == 1);
  CHECK(K.face_count(0) == 3);
  CHECK(K.face_count(1) == 3);
  CHECK(K.face_count(2) == 1);
  CHECK(K.total_face_count() == 8);
  for (int i = -1; i <= 2; ++i)
    for (int k = 0; k < K.face_count(i); ++k) CHECK(K.weight(i, k) == 1.0);
}

TEST_CASE("strict mode rejects missing sub-faces") {
  CHECK_THROWS_AS(build_complex(specs({{0, 1}}), WeightPolicy::Unit,
                                ClosureMode::Strict, true),
                  std::invalid_argument);
  // listing the closure explicitly is fine
  CHECK_NOTHROW(build_complex(specs({{0, 1}, {0}, {1}}), WeightPolicy::Unit,
                              ClosureMode::Strict, true));
}

TEST_CASE("tetrahedron boundary has 15 faces") {
  const auto K = build_complex(
      specs({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}), WeightPolicy::Unit,
      ClosureMode::AutoClose, true);
  CHECK(K.dim() == 2);
  CHECK(K.face_count(-1) == 1);
  CHECK(K.face_count(0) == 4);
  CHECK(K.face_count(1) == 6);
  CHECK(K.face_count(2) == 4);
}

TEST_CASE("duplicate face entries are rejected, regardless of input order") {
  CHECK_THROWS_AS(build_complex({{{0, 1}, std::nullopt}, {{1, 0}, std::nullopt}},
                                WeightPolicy::Unit, ClosureMode::AutoClose,
                                true),
                  std::invalid_argument);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(build_complex({{{0, 0, 1}, std::nullopt}}, WeightPolicy::Unit,
                                ClosureMode::AutoClose, true),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_complex({{{-1, 2}, std::nullopt}}, WeightPolicy::Unit,
                                ClosureMode::AutoClose, true),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_complex({{{0, 1}, -2.0}}, WeightPolicy::Unit,
                                ClosureMode::AutoClose, true),
                  std::invalid_argument);
  // the empty face belongs to reduced mode only
  CHECK_THROWS_AS(build_complex({{{}, 1.0}, {{0}, 1.0}}, WeightPolicy::Explicit,
                                ClosureMode::AutoClose, false),
                  std::invalid_argument);
}

TEST_CASE("explicit policy needs every weight") {
  CHECK_THROWS_AS(build_complex({{{0, 1, 2}, 1.0}}, WeightPolicy::Explicit,
                                ClosureMode::AutoClose, true),
                  std::invalid_argument);
  const auto K = build_complex({{{}, 7.0},
                                {{0}, 1.0},
                                {{1}, 2.0},
                                {{0, 1}, 3.0}},
                               WeightPolicy::Explicit, ClosureMode::AutoClose,
                               true);
  CHECK(K.weight_of(Face({0, 1})) == 3.0);
  CHECK(K.weight_of(Face{}) == 7.0);
}

TEST_CASE("normalized policy computes degrees top-down") {
  const auto K = build_complex(specs({{0, 1, 2}}), WeightPolicy::Normalized,
                               ClosureMode::AutoClose, true);
  CHECK(K.weight_of(Face({0, 1, 2})) == 1.0);  // facet keeps its default
  CHECK(K.weight_of(Face({0, 1})) == 1.0);
  CHECK(K.weight_of(Face({0})) == 2.0);
  CHECK(K.weight_of(Face{}) == 6.0);  // sum of vertex weights

  const auto Kw = build_complex({{{0, 1, 2}, 5.0}}, WeightPolicy::Normalized,
                                ClosureMode::AutoClose, true);
  CHECK(Kw.weight_of(Face({0, 1})) == 5.0);
  CHECK(Kw.weight_of(Face({0})) == 10.0);
}

TEST_CASE("orientation sign") {
  CHECK(orientation_sign(Face({1, 2}), Face({0, 1, 2})) == 1);
  CHECK(orientation_sign(Face({0, 2}), Face({0, 1, 2})) == -1);
  CHECK(orientation_sign(Face({0, 1}), Face({0, 2, 3})) == 0);
  CHECK(orientation_sign(Face{}, Face({4})) == 1);
  CHECK(orientation_sign(Face({0, 1}), Face({0, 1})) == 0);
}

TEST_CASE("sign is nonzero for exactly dim+1 boundary faces") {
  const auto K = hhtest::random_complex(7);
  for (int i = 1; i <= K.dim(); ++i) {
    for (int c = 0; c < K.face_count(i); ++c) {
      int nonzero = 0;
      for (int f = 0; f < K.face_count(i - 1); ++f) {
        if (orientation_sign(K.face(i - 1, f), K.face(i, c)) != 0) ++nonzero;
      }
      CHECK(nonzero == i + 1);
    }
  }
}

TEST_CASE("face degree") {
  const auto tri = build_complex(specs({{0, 1, 2}}), WeightPolicy::Unit,
                                 ClosureMode::AutoClose, true);
  CHECK(tri.face_degree(Face({0, 1})) == 1.0);
  CHECK(tri.face_degree(Face({0})) == 2.0);
  const auto tetra = generate_sphere_boundary(4, WeightPolicy::Unit, true);
  CHECK(tetra.face_degree(Face({0, 1, 2})) == 0.0);  // facet
  CHECK(tetra.face_degree(Face{}) == 4.0);
}

TEST_CASE("coface pairs on the full triangle") {
  const auto reduced = build_complex(specs({{0, 1, 2}}), WeightPolicy::Unit,
                                     ClosureMode::AutoClose, true);
  const auto plain = build_complex(specs({{0, 1, 2}}), WeightPolicy::Unit,
                                   ClosureMode::AutoClose, false);
  auto count = [](const WeightedComplex& K, int i) {
    int up = 0, down = 0;
    for (const CofacePair& pr : coface_pairs(K, i)) (pr.up ? up : down)++;
    return std::pair(up, down);
  };
  CHECK(count(reduced, 1) == std::pair(3, 3));
  CHECK(count(reduced, 0) == std::pair(3, 3));  // down pairs through {}
  CHECK(count(plain, 0) == std::pair(3, 0));
}

TEST_CASE("closure invariant on generated complexes") {
  const auto K = hhtest::random_complex(11);
  for (int i = 1; i <= K.dim(); ++i) {
    for (const Face& f : K.faces(i)) {
      for (int pos = 0; pos <= i; ++pos)
        CHECK(K.contains(f.facet_omitting(pos)));
    }
  }
}

TEST_CASE("deterministic indexing and generation") {
  const auto a = generate_random_flag(10, 0.5, 42, WeightPolicy::Explicit, true);
  const auto b = generate_random_flag(10, 0.5, 42, WeightPolicy::Explicit, true);
  REQUIRE(a.dim() == b.dim());
  for (int i = -1; i <= a.dim(); ++i) {
    REQUIRE(a.face_count(i) == b.face_count(i));
    for (int k = 0; k < a.face_count(i); ++k) {
      CHECK(a.face(i, k) == b.face(i, k));
      CHECK(a.weight(i, k) == b.weight(i, k));
    }
  }
  const auto c = generate_random_flag(10, 0.5, 43, WeightPolicy::Explicit, true);
  bool differs = c.total_face_count() != a.total_face_count();
  if (!differs) {
    for (int k = 0; k < a.face_count(0); ++k)
      differs = differs || a.weight(0, k) != c.weight(0, k);
  }
  CHECK(differs);
}

TEST_SUITE_END();
