#ifndef NEWTON_TEST_HELPERS_HPP
#define NEWTON_TEST_HELPERS_HPP

#include <initializer_list>
#include <vector>

#include "newton/monomial_ideal.hpp"
#include "newton/polyhedron.hpp"
#include "newton/series.hpp"

namespace newton::test {

inline RationalPoint pt(std::initializer_list<long> coords) {
  RationalPoint p;
  for (long c : coords) p.emplace_back(c);
  return p;
}

inline StaircasePolyhedron hull_of(std::vector<RationalPoint> pts, int dim) {
  return StaircasePolyhedron::hull(std::move(pts), dim);
}

// Element with unit coefficients at the given exponents.
inline LocalElement elem(int dim, std::vector<Exponent> exps) {
  LocalElement f(dim);
  for (const Exponent& e : exps) f.add_term(e, 1);
  return f;
}

inline IdealPresentation ideal2(std::vector<LocalElement> gens) {
  return IdealPresentation{2, std::move(gens)};
}

// (x^4 + y^4, x y^2 + x^2 y), the running not-NND example.
inline IdealPresentation not_nnd_ideal() {
  return ideal2({elem(2, {{4, 0}, {0, 4}}), elem(2, {{1, 2}, {2, 1}})});
}

// J_m = (x^m + y^m, x^i y^{m-i} for 0 < i < m).
inline IdealPresentation jm_ideal(long m) {
  std::vector<LocalElement> gens = {elem(2, {{m, 0}, {0, m}})};
  for (long i = 1; i < m; ++i) gens.push_back(elem(2, {{i, m - i}}));
  return ideal2(std::move(gens));
}

inline MonomialIdeal mono(std::vector<Exponent> gens, int dim = 2) {
  return MonomialIdeal::from_generators(std::move(gens), dim);
}

}  // namespace newton::test

#endif
