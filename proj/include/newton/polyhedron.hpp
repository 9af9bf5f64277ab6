#ifndef NEWTON_POLYHEDRON_HPP
#define NEWTON_POLYHEDRON_HPP

#include <vector>

#include "newton/rational.hpp"

namespace newton {

// One inequality <normal, x> >= offset with a primitive nonnegative
// integer normal.
struct Facet {
  std::vector<Integer> normal;
  Rational offset;

  bool operator==(const Facet& o) const = default;
};

// A polyhedron of the form conv(finite point set) + nonnegative orthant,
// kept in canonical form: vertex list sorted lexicographically, facet
// normals primitive and sorted. Structural equality is geometric equality.
class StaircasePolyhedron {
 public:
  // conv(points) + R^d_{>=0}. Throws EmptyGeneratorError / DomainError.
  static StaircasePolyhedron hull(std::vector<RationalPoint> points, int dim);

  int dim() const { return dim_; }
  const std::vector<RationalPoint>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }

  bool contains(const RationalPoint& p) const;

  bool operator==(const StaircasePolyhedron& o) const = default;

 private:
  StaircasePolyhedron() = default;

  int dim_ = 0;
  std::vector<RationalPoint> vertices_;
  std::vector<Facet> facets_;

  friend StaircasePolyhedron scale(const StaircasePolyhedron&, const Rational&);
};

StaircasePolyhedron minkowski_sum(const StaircasePolyhedron& p,
                                  const StaircasePolyhedron& q);

StaircasePolyhedron scale(const StaircasePolyhedron& p, const Rational& r);

// Q contains P (same recession cone, so vertex checks suffice).
bool subset(const StaircasePolyhedron& p, const StaircasePolyhedron& q);

// A bounded face, supported by a strictly positive normal vector:
// <normal, x> attains its minimum over the polyhedron exactly on the face.
struct CompactFace {
  std::vector<RationalPoint> vertices;  // lex sorted
  int affine_dim = 0;
  std::vector<Integer> normal;  // strictly positive, primitive
  Rational level;               // min of <normal, .> over the polyhedron
};

// All compact faces (vertices, edges, and bounded 2-faces for d = 3).
// Throws UnsupportedDimensionError for d > 3.
std::vector<CompactFace> compact_faces(const StaircasePolyhedron& p);

// Exact d-volume of the bounded complement R^d_{>=0} \ P. Requires the
// staircase to touch every coordinate axis; throws NotCoFiniteError
// otherwise. Implemented for d <= 3.
Rational covolume(const StaircasePolyhedron& p);

// Same quantity computed as M^d - vol(P intersect [0,M]^d) for an explicit
// box size M >= every vertex coordinate. The result does not depend on M.
Rational covolume_boxed(const StaircasePolyhedron& p, const Integer& box);

}  // namespace newton

#endif
