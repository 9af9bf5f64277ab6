#ifndef NEWTON_NND_HPP
#define NEWTON_NND_HPP

#include <optional>
#include <vector>

#include "newton/monomial_ideal.hpp"
#include "newton/oracle.hpp"
#include "newton/polyhedron.hpp"
#include "newton/series.hpp"
#include "newton/unipoly.hpp"

namespace newton {

// Terms of g lying on the face's supporting hyperplane.
LocalElement face_restrict(const LocalElement& g, const CompactFace& face);

// The generators' restrictions to a compact edge of a d = 2 staircase,
// written as univariate polynomials in the primitive edge parameter.
struct EdgePolynomialSystem {
  std::vector<UniPoly> polys;  // one per generator; zero when no edge terms
  Exponent start;              // lattice vertex with smallest x
  long step_x = 0;             // primitive step (step_x, -step_y)
  long step_y = 0;
};

EdgePolynomialSystem edge_system(const std::vector<LocalElement>& gens,
                                 const CompactFace& edge);

// True iff the system has no common zero with the parameter in C \ {0}.
// Decided over Q: zero polynomials are ignored in the gcd, powers of the
// parameter are stripped, and an all-zero system is degenerate.
bool face_nondegenerate(const EdgePolynomialSystem& sys);

struct FaceCertification {
  bool nnd = false;
  std::vector<CompactFace> failing_faces;
};

// Face/gcd criterion over every compact face of the Newton polyhedron.
// d = 2 only. A passing verdict is absolute; a failing one is relative to
// the presented generators.
FaceCertification certify_faces(const IdealPresentation& ideal);

bool is_nnd_face(const IdealPresentation& ideal);

// Multiplicity-equality criterion: e(I) == d! co-vol(Gamma(I)).
bool is_nnd_multiplicity(const IdealPresentation& ideal,
                         const OracleConfig& config = {});

// Monomial integral closure when the ideal certifies NND (face route first
// for d = 2, multiplicity route as the arbiter); nullopt otherwise.
std::optional<MonomialIdeal> closure_if_nnd(const IdealPresentation& ideal,
                                            const OracleConfig& config = {});

}  // namespace newton

#endif
