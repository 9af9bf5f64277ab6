#ifndef NEWTON_ORACLE_HPP
#define NEWTON_ORACLE_HPP

#include "newton/rational.hpp"
#include "newton/series.hpp"

namespace newton {

struct OracleConfig {
  int truncation_limit = 40;    // largest truncation degree tried
  int power_budget = 8;         // largest ideal power for finite differences
  int stabilization_window = 3; // consecutive equal values required
};

// Degree-truncated quotient data: monomials of total degree < N modulo the
// truncated span of monomial multiples of the generators. The colength it
// yields equals dim R/(I + m^N) and stabilizes to dim R/I once N is large
// enough for an m-primary I.
struct TruncatedQuotient {
  int dim = 0;
  int truncation = 0;
  long basis_size = 0;
  long span_dim = 0;

  long colength() const { return basis_size - span_dim; }
};

TruncatedQuotient truncated_quotient(const IdealPresentation& ideal, int n);

long colength_truncated(const IdealPresentation& ideal, int n);

// First truncated colength that repeats over the stabilization window.
// Throws NotPrimaryOrBudgetError when no stabilization occurs within the
// truncation limit.
long colength_stable(const IdealPresentation& ideal,
                     const OracleConfig& config = {});

// Hilbert-Samuel multiplicity. Complete intersections (d generators) use
// the colength directly; otherwise the d-th finite difference of the
// colength sequence of ideal powers, once constant over the window.
long multiplicity(const IdealPresentation& ideal,
                  const OracleConfig& config = {});

}  // namespace newton

#endif
