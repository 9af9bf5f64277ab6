#include <doctest.h>

#include "helpers.hpp"
#include "newton/errors.hpp"
#include "newton/polyhedron.hpp"

using namespace newton;
using namespace newton::test;

TEST_CASE("hull keeps exactly the undominated extreme points") {
  auto p = hull_of({pt({1, 1}), pt({0, 2})}, 2);
  CHECK(p.vertices() == std::vector<RationalPoint>{pt({0, 2}), pt({1, 1})});

  auto single = hull_of({pt({1, 1})}, 2);
  CHECK(single.vertices() == std::vector<RationalPoint>{pt({1, 1})});

  auto dom = hull_of({pt({2, 1}), pt({1, 2}), pt({3, 3})}, 2);
  CHECK(dom.vertices() == std::vector<RationalPoint>{pt({1, 2}), pt({2, 1})});

  // collinear interior points are absorbed into the edge
  auto col = hull_of({pt({2, 0}), pt({1, 1}), pt({0, 2})}, 2);
  CHECK(col.vertices() == std::vector<RationalPoint>{pt({0, 2}), pt({2, 0})});
}

TEST_CASE("hull input validation") {
  CHECK_THROWS_AS(hull_of({}, 2), EmptyGeneratorError);
  CHECK_THROWS_AS(hull_of({pt({1})}, 2), DimensionError);
  RationalPoint neg = {Rational(-1), Rational(0)};
  CHECK_THROWS_AS(hull_of({neg}, 2), DomainError);
  CHECK_THROWS_AS(hull_of({pt({1})}, 0), DomainError);
}

TEST_CASE("hull is idempotent on its own vertex set") {
  auto p = hull_of({pt({4, 0}), pt({2, 1}), pt({1, 2}), pt({0, 4})}, 2);
  CHECK(hull_of(p.vertices(), 2) == p);

  auto q = hull_of({pt({4, 0, 0}), pt({0, 3, 1}), pt({1, 1, 3})}, 3);
  CHECK(hull_of(q.vertices(), 3) == q);
}

TEST_CASE("d = 3 hull agrees with a leave-one-out vertex oracle") {
  std::vector<RationalPoint> pts = {pt({4, 0, 0}), pt({2, 5, 4}),
                                    pt({0, 3, 1}), pt({3, 1, 2}),
                                    pt({1, 1, 3})};
  auto p = hull_of(pts, 3);

  // p is a vertex iff it escapes the hull of the remaining points
  std::vector<RationalPoint> expected;
  for (size_t i = 0; i < pts.size(); ++i) {
    std::vector<RationalPoint> rest;
    for (size_t j = 0; j < pts.size(); ++j)
      if (j != i) rest.push_back(pts[j]);
    if (!hull_of(rest, 3).contains(pts[i])) expected.push_back(pts[i]);
  }
  std::sort(expected.begin(), expected.end());
  CHECK(p.vertices() == expected);
  for (const RationalPoint& q : pts) CHECK(p.contains(q));
}

TEST_CASE("minkowski sum of staircases") {
  auto p = hull_of({pt({1, 1}), pt({0, 2})}, 2);
  auto sum = minkowski_sum(p, p);
  // (1,3) = ((0,4)+(2,2))/2 is collinear, not a vertex
  CHECK(sum.vertices() == std::vector<RationalPoint>{pt({0, 4}), pt({2, 2})});
  CHECK(sum.contains(pt({1, 3})));

  auto origin = hull_of({pt({0, 0})}, 2);
  CHECK(minkowski_sum(p, origin) == p);

  auto q = hull_of({pt({4, 0}), pt({2, 1}), pt({1, 2}), pt({0, 4})}, 2);
  CHECK(minkowski_sum(q, q) == scale(q, 2));

  auto r = hull_of({pt({3, 0}), pt({0, 1})}, 2);
  CHECK(minkowski_sum(p, r) == minkowski_sum(r, p));
  CHECK(minkowski_sum(minkowski_sum(p, q), r) ==
        minkowski_sum(p, minkowski_sum(q, r)));

  CHECK_THROWS_AS(minkowski_sum(p, hull_of({pt({1})}, 1)), DimensionError);
}

TEST_CASE("scaling") {
  auto p = hull_of({pt({2, 1}), pt({1, 2})}, 2);
  CHECK(scale(p, 3).vertices() ==
        std::vector<RationalPoint>{pt({3, 6}), pt({6, 3})});
  CHECK(scale(p, 1) == p);
  CHECK(scale(hull_of({pt({3, 0}), pt({0, 3})}, 2), Rational(1, 3)) ==
        hull_of({pt({1, 0}), pt({0, 1})}, 2));
  CHECK_THROWS_AS(scale(p, 0), DomainError);
  CHECK_THROWS_AS(scale(p, -1), DomainError);
}

TEST_CASE("membership") {
  auto p = hull_of({pt({2, 1}), pt({1, 2})}, 2);
  CHECK(p.contains(pt({2, 2})));
  CHECK_FALSE(p.contains(pt({1, 1})));
  CHECK(p.contains({Rational(3, 2), Rational(3, 2)}));
  CHECK_THROWS_AS(p.contains(pt({1})), DimensionError);
}

TEST_CASE("equality and subset") {
  CHECK(scale(hull_of({pt({2, 0}), pt({0, 2})}, 2), Rational(1, 2)) ==
        hull_of({pt({1, 0}), pt({0, 1})}, 2));
  CHECK(subset(hull_of({pt({2, 1}), pt({1, 2})}, 2),
               hull_of({pt({1, 0}), pt({0, 1})}, 2)));
  CHECK_FALSE(subset(hull_of({pt({1, 0}), pt({0, 1})}, 2),
                     hull_of({pt({2, 1}), pt({1, 2})}, 2)));
  auto p = hull_of({pt({1, 1}), pt({0, 2})}, 2);
  CHECK(p == minkowski_sum(p, hull_of({pt({0, 0})}, 2)));
}

TEST_CASE("compact faces of a d = 2 staircase") {
  auto p = hull_of({pt({4, 0}), pt({2, 1}), pt({1, 2}), pt({0, 4})}, 2);
  auto faces = compact_faces(p);
  REQUIRE(faces.size() == 7);
  int n_vertices = 0, n_edges = 0;
  for (const CompactFace& f : faces) {
    if (f.affine_dim == 0) ++n_vertices;
    if (f.affine_dim == 1) ++n_edges;
    for (const Integer& c : f.normal) CHECK(c > 0);
    // the supporting level is the minimum over the polyhedron
    for (const RationalPoint& v : p.vertices()) {
      Rational s = 0;
      for (size_t k = 0; k < v.size(); ++k) s += Rational(f.normal[k]) * v[k];
      CHECK(s >= f.level);
    }
  }
  CHECK(n_vertices == 4);
  CHECK(n_edges == 3);
  // edges run between lex-consecutive vertices
  CHECK(faces[4].vertices ==
        std::vector<RationalPoint>{pt({0, 4}), pt({1, 2})});
  CHECK(faces[5].vertices ==
        std::vector<RationalPoint>{pt({1, 2}), pt({2, 1})});
  CHECK(faces[6].vertices ==
        std::vector<RationalPoint>{pt({2, 1}), pt({4, 0})});
}

TEST_CASE("compact faces, degenerate shapes") {
  auto single = compact_faces(hull_of({pt({1, 1})}, 2));
  REQUIRE(single.size() == 1);
  CHECK(single[0].affine_dim == 0);

  auto col = compact_faces(hull_of({pt({2, 0}), pt({1, 1}), pt({0, 2})}, 2));
  REQUIRE(col.size() == 3);
  CHECK(col[2].affine_dim == 1);
  CHECK(col[2].vertices ==
        std::vector<RationalPoint>{pt({0, 2}), pt({2, 0})});
  // the absorbed lattice point still lies on the edge hyperplane
  Rational s = Rational(col[2].normal[0]) + Rational(col[2].normal[1]);
  CHECK(s == col[2].level);
}

TEST_CASE("compact faces of a d = 3 simplex staircase") {
  auto p = hull_of({pt({2, 0, 0}), pt({0, 2, 0}), pt({0, 0, 2})}, 3);
  auto faces = compact_faces(p);
  int by_dim[3] = {0, 0, 0};
  for (const CompactFace& f : faces) ++by_dim[f.affine_dim];
  CHECK(by_dim[0] == 3);
  CHECK(by_dim[1] == 3);
  CHECK(by_dim[2] == 1);
}

TEST_CASE("compact faces dimension cap") {
  CHECK_THROWS_AS(compact_faces(hull_of({pt({1, 1, 1, 1})}, 4)),
                  UnsupportedDimensionError);
}

TEST_CASE("covolume in the plane") {
  CHECK(covolume(hull_of({pt({4, 0}), pt({2, 1}), pt({1, 2}), pt({0, 4})},
                         2)) == Rational(11, 2));
  CHECK(covolume(hull_of({pt({1, 0}), pt({0, 1})}, 2)) == Rational(1, 2));
  for (long a = 1; a <= 4; ++a)
    for (long b = 1; b <= 4; ++b)
      CHECK(2 * covolume(hull_of({pt({a, 0}), pt({0, b})}, 2)) == a * b);
  CHECK_THROWS_AS(covolume(hull_of({pt({1, 1})}, 2)), NotCoFiniteError);
  CHECK_THROWS_AS(covolume(hull_of({pt({2, 1}), pt({0, 2})}, 2)),
                  NotCoFiniteError);
}

TEST_CASE("covolume in one and three dimensions") {
  CHECK(covolume(hull_of({pt({5})}, 1)) == 5);
  CHECK(covolume(hull_of({pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})}, 3)) ==
        Rational(1, 6));
  CHECK(covolume(hull_of({pt({2, 0, 0}), pt({0, 3, 0}), pt({0, 0, 4})}, 3)) ==
        4);
  // non-simplex staircase; value from inclusion-exclusion over the two
  // compact facets x+2y+z >= 3 and 2x+y+z >= 3: 9/4 + 9/4 - 3/2
  CHECK(covolume(hull_of({pt({3, 0, 0}), pt({0, 3, 0}), pt({0, 0, 3}),
                          pt({1, 1, 0})}, 3)) == 3);
  CHECK_THROWS_AS(covolume(hull_of({pt({1, 1, 1, 1})}, 4)),
                  UnsupportedDimensionError);
}

TEST_CASE("boxed covolume is box independent and matches the shoelace") {
  auto p = hull_of({pt({4, 0}), pt({2, 1}), pt({1, 2}), pt({0, 4})}, 2);
  CHECK(covolume_boxed(p, 4) == Rational(11, 2));
  CHECK(covolume_boxed(p, 10) == Rational(11, 2));
  CHECK(covolume_boxed(p, 7) == covolume(p));

  auto q = hull_of({pt({2, 0, 0}), pt({0, 3, 0}), pt({0, 0, 4})}, 3);
  CHECK(covolume_boxed(q, 4) == covolume_boxed(q, 9));
  CHECK_THROWS_AS(covolume_boxed(p, 3), DomainError);
}
