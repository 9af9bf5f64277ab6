#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "newton/errors.hpp"
#include "newton/nnd.hpp"

using namespace newton;
using namespace newton::test;

namespace {

CompactFace face_with_vertices(const StaircasePolyhedron& p,
                               std::vector<RationalPoint> verts) {
  std::sort(verts.begin(), verts.end());
  for (const CompactFace& f : compact_faces(p))
    if (f.vertices == verts) return f;
  REQUIRE(false);
  return {};
}

}  // namespace

TEST_CASE("face restriction") {
  auto I = not_nnd_ideal();
  auto gamma = newton_polyhedron(I);
  auto delta2 = face_with_vertices(gamma, {pt({2, 1}), pt({1, 2})});

  CHECK(face_restrict(I.generators[0], delta2).is_zero());
  CHECK(face_restrict(I.generators[1], delta2) == I.generators[1]);

  auto vertex = face_with_vertices(gamma, {pt({4, 0})});
  CHECK(face_restrict(I.generators[0], vertex) ==
        LocalElement::monomial(2, {4, 0}));

  CHECK_THROWS_AS(face_restrict(elem(3, {{1, 1, 1}}), delta2),
                  DimensionError);
}

TEST_CASE("edge polynomial systems") {
  auto I = not_nnd_ideal();
  auto gamma = newton_polyhedron(I);
  auto delta2 = face_with_vertices(gamma, {pt({1, 2}), pt({2, 1})});
  auto sys = edge_system(I.generators, delta2);
  CHECK(sys.start == Exponent{1, 2});
  CHECK(sys.step_x == 1);
  CHECK(sys.step_y == 1);
  REQUIRE(sys.polys.size() == 2);
  CHECK(sys.polys[0].is_zero());
  CHECK(sys.polys[1] == UniPoly({1, 1}));

  // J_3 generators on the long edge, oriented from the smallest x vertex
  auto j3 = jm_ideal(3);
  auto g3 = newton_polyhedron(j3);
  auto edge = face_with_vertices(g3, {pt({0, 3}), pt({3, 0})});
  auto sys3 = edge_system(j3.generators, edge);
  REQUIRE(sys3.polys.size() == 3);
  CHECK(sys3.polys[0] == UniPoly({1, 0, 0, 1}));  // 1 + t^3
  CHECK(sys3.polys[1] == UniPoly({0, 1}));        // x y^2 -> t
  CHECK(sys3.polys[2] == UniPoly({0, 0, 1}));     // x^2 y -> t^2

  auto circle = ideal2({elem(2, {{2, 0}, {0, 2}})});
  auto gc = newton_polyhedron(circle);
  auto ec = face_with_vertices(gc, {pt({0, 2}), pt({2, 0})});
  auto sysc = edge_system(circle.generators, ec);
  CHECK(sysc.polys[0] == UniPoly({1, 0, 1}));

  auto vtx = face_with_vertices(gc, {pt({2, 0})});
  CHECK_THROWS_AS(edge_system(circle.generators, vtx), FaceKindError);
}

TEST_CASE("nondegeneracy of edge systems") {
  CHECK_FALSE(face_nondegenerate({{UniPoly(), UniPoly({1, 1})}, {0, 0}, 1, 1}));
  CHECK(face_nondegenerate({{UniPoly({1, 1}), UniPoly({1, -1})}, {0, 0}, 1, 1}));
  CHECK(face_nondegenerate(
      {{UniPoly({1, 0, 0, 1}), UniPoly({0, 1}), UniPoly({0, 0, 1})},
       {0, 0},
       1,
       1}));
  CHECK_FALSE(face_nondegenerate({{UniPoly(), UniPoly()}, {0, 0}, 1, 1}));
  // a pure power of t has its valuation stripped before the verdict
  CHECK(face_nondegenerate({{UniPoly({0, 0, 3})}, {0, 0}, 1, 1}));
  CHECK_FALSE(face_nondegenerate({{UniPoly({0, 1, 1})}, {0, 0}, 1, 1}));
}

TEST_CASE("face-criterion certification") {
  auto cert = certify_faces(not_nnd_ideal());
  CHECK_FALSE(cert.nnd);
  REQUIRE(cert.failing_faces.size() == 1);
  CHECK(cert.failing_faces[0].vertices ==
        std::vector<RationalPoint>{pt({1, 2}), pt({2, 1})});

  CHECK_FALSE(is_nnd_face(not_nnd_ideal()));
  CHECK(is_nnd_face(ideal2({elem(2, {{2, 0}, {0, 2}}), elem(2, {{1, 1}})})));
  CHECK(is_nnd_face(jm_ideal(3)));

  IdealPresentation d3{3, {elem(3, {{1, 0, 0}}), elem(3, {{0, 1, 0}}),
                           elem(3, {{0, 0, 1}})}};
  CHECK_THROWS_AS(is_nnd_face(d3), UnsupportedDimensionError);
}

TEST_CASE("multiplicity-criterion certification") {
  CHECK_FALSE(is_nnd_multiplicity(not_nnd_ideal()));
  CHECK(is_nnd_multiplicity(
      ideal2({elem(2, {{2, 0}, {0, 2}}), elem(2, {{1, 1}})})));
  CHECK(is_nnd_multiplicity(ideal2({elem(2, {{3, 0}}), elem(2, {{1, 1}}),
                                    elem(2, {{0, 3}})})));
}

TEST_CASE("closure under certification") {
  auto c3 = closure_if_nnd(jm_ideal(3));
  REQUIRE(c3.has_value());
  CHECK(*c3 == mono({{3, 0}, {2, 1}, {1, 2}, {0, 3}}));

  auto cs = closure_if_nnd(ideal2({elem(2, {{2, 0}}), elem(2, {{0, 2}})}));
  REQUIRE(cs.has_value());
  CHECK(*cs == mono({{2, 0}, {1, 1}, {0, 2}}));

  CHECK_FALSE(closure_if_nnd(not_nnd_ideal()).has_value());
}
