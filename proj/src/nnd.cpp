#include "newton/nnd.hpp"

#include <algorithm>
#include <numeric>

#include "newton/errors.hpp"

namespace newton {

namespace {

Rational face_value(const CompactFace& face, const Exponent& e) {
  Rational s = 0;
  for (size_t i = 0; i < e.size(); ++i) s += Rational(face.normal[i]) * e[i];
  return s;
}

long to_long(const Rational& q) {
  // face vertices of Newton polyhedra of ideals are lattice points
  if (q.get_den() != 1) throw DomainError("expected a lattice vertex");
  return q.get_num().get_si();
}

}  // namespace

LocalElement face_restrict(const LocalElement& g, const CompactFace& face) {
  if (g.dim() != (int)face.normal.size())
    throw DimensionError("face restriction dimension mismatch");
  LocalElement out(g.dim());
  for (const auto& [e, c] : g.terms())
    if (face_value(face, e) == face.level) out.add_term(e, c);
  return out;
}

EdgePolynomialSystem edge_system(const std::vector<LocalElement>& gens,
                                 const CompactFace& edge) {
  if (edge.normal.size() != 2)
    throw UnsupportedDimensionError("edge systems are a d = 2 construction");
  if (edge.affine_dim != 1 || edge.vertices.size() < 2)
    throw FaceKindError("edge system needs a compact edge");

  const RationalPoint& a = edge.vertices.front();  // smallest x, largest y
  const RationalPoint& b = edge.vertices.back();
  long dx = to_long(b[0] - a[0]);
  long dy = to_long(a[1] - b[1]);
  long g = std::gcd(dx, dy);

  EdgePolynomialSystem sys;
  sys.start = {to_long(a[0]), to_long(a[1])};
  sys.step_x = dx / g;
  sys.step_y = dy / g;

  for (const LocalElement& gen : gens) {
    std::vector<Rational> coeffs(g + 1, Rational(0));
    for (long k = 0; k <= g; ++k) {
      Exponent e = {sys.start[0] + k * sys.step_x,
                    sys.start[1] - k * sys.step_y};
      coeffs[k] = gen.coefficient(e);
    }
    sys.polys.emplace_back(std::move(coeffs));
  }
  return sys;
}

bool face_nondegenerate(const EdgePolynomialSystem& sys) {
  UniPoly g;
  bool any = false;
  for (const UniPoly& p : sys.polys) {
    if (p.is_zero()) continue;
    any = true;
    g = g.is_zero() ? p.monic() : gcd(g, p);
  }
  if (!any) return false;  // every restriction vanishes on the torus
  g = g.shifted_down(g.valuation());  // t = 0 lies outside the torus
  return g.degree() == 0;
}

FaceCertification certify_faces(const IdealPresentation& ideal) {
  if (ideal.dim != 2)
    throw UnsupportedDimensionError("face criterion implemented for d = 2");
  StaircasePolyhedron gamma = newton_polyhedron(ideal);
  FaceCertification cert;
  cert.nnd = true;
  for (const CompactFace& face : compact_faces(gamma)) {
    bool ok;
    if (face.affine_dim == 0) {
      // a vertex is nondegenerate iff some generator restricts to a
      // nonzero monomial there
      ok = false;
      for (const LocalElement& g : ideal.generators)
        if (!face_restrict(g, face).is_zero()) {
          ok = true;
          break;
        }
    } else {
      ok = face_nondegenerate(edge_system(ideal.generators, face));
    }
    if (!ok) {
      cert.nnd = false;
      cert.failing_faces.push_back(face);
    }
  }
  return cert;
}

bool is_nnd_face(const IdealPresentation& ideal) {
  return certify_faces(ideal).nnd;
}

bool is_nnd_multiplicity(const IdealPresentation& ideal,
                         const OracleConfig& config) {
  StaircasePolyhedron gamma = newton_polyhedron(ideal);
  Rational covol = covolume(gamma);
  long fact = 1;
  for (int k = 2; k <= ideal.dim; ++k) fact *= k;
  return Rational(multiplicity(ideal, config)) == covol * fact;
}

std::optional<MonomialIdeal> closure_if_nnd(const IdealPresentation& ideal,
                                            const OracleConfig& config) {
  bool nnd;
  if (ideal.dim == 2) {
    nnd = is_nnd_face(ideal) || is_nnd_multiplicity(ideal, config);
  } else {
    nnd = is_nnd_multiplicity(ideal, config);
  }
  if (!nnd) return std::nullopt;
  return monomial_integral_closure(ideal_I0(newton_polyhedron(ideal)));
}

}  // namespace newton
