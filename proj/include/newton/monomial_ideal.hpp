#ifndef NEWTON_MONOMIAL_IDEAL_HPP
#define NEWTON_MONOMIAL_IDEAL_HPP

#include <vector>

#include "newton/polyhedron.hpp"
#include "newton/rational.hpp"
#include "newton/series.hpp"

namespace newton {

// A monomial (staircase) ideal, stored as the antichain of minimal
// generator exponents.
class MonomialIdeal {
 public:
  // Reduces the given exponent set to an antichain.
  static MonomialIdeal from_generators(std::vector<Exponent> gens, int dim);

  int dim() const { return dim_; }
  const std::vector<Exponent>& minimal_generators() const { return gens_; }

  // x^a lies in the ideal iff a dominates some minimal generator.
  bool contains(const Exponent& a) const;

  bool operator==(const MonomialIdeal& o) const = default;

 private:
  int dim_ = 0;
  std::vector<Exponent> gens_;  // lex sorted antichain
};

// The ideal generated by all lattice points of P:
// minimal generators are the minimal lattice points of P.
MonomialIdeal ideal_I0(const StaircasePolyhedron& p);

// Integral closure: lattice points of the Newton polyhedron of the ideal.
MonomialIdeal monomial_integral_closure(const MonomialIdeal& m);

// Each axis carries a pure power of the corresponding variable.
bool is_m_primary(const MonomialIdeal& m);

// Number of standard monomials (lattice points outside the staircase).
// Throws NotPrimaryError when the count is infinite.
long colength(const MonomialIdeal& m);

// View the monomial ideal as an ideal presentation.
IdealPresentation as_ideal(const MonomialIdeal& m);

}  // namespace newton

#endif
