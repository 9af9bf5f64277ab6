#ifndef NEWTON_SERIES_HPP
#define NEWTON_SERIES_HPP

#include <map>
#include <vector>

#include "newton/polyhedron.hpp"
#include "newton/rational.hpp"

namespace newton {

// A ring element modeled as a finite term list in the regular parameters.
// Every nonzero scalar coefficient is a unit, so the exact coefficient
// values only matter up to the face-restriction arithmetic downstream.
class LocalElement {
 public:
  explicit LocalElement(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponent, Rational>& terms() const { return terms_; }

  // Adds c * x^e; cancels to zero when coefficients sum to 0.
  void add_term(const Exponent& e, const Rational& c);

  Rational coefficient(const Exponent& e) const;

  static LocalElement monomial(int dim, const Exponent& e,
                               const Rational& c = 1);

  friend LocalElement operator+(const LocalElement& f, const LocalElement& g);
  friend LocalElement operator-(const LocalElement& f, const LocalElement& g);
  friend LocalElement operator*(const LocalElement& f, const LocalElement& g);
  bool operator==(const LocalElement& o) const = default;

 private:
  int dim_;
  std::map<Exponent, Rational> terms_;
};

struct IdealPresentation {
  int dim;
  std::vector<LocalElement> generators;
};

// Exponents of the unique irredundant monomial representation: the
// componentwise-minimal exponents of the term list (a divisible term folds
// into its divisor with a unit cofactor in the local model).
std::vector<Exponent> support(const LocalElement& f);

// conv(union of generator supports) + nonnegative orthant.
StaircasePolyhedron newton_polyhedron(const IdealPresentation& ideal);

IdealPresentation product_ideal(const IdealPresentation& a,
                                const IdealPresentation& b);

IdealPresentation power_ideal(const IdealPresentation& a, int n);

}  // namespace newton

#endif
