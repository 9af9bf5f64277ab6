#ifndef NEWTON_RATIONAL_HPP
#define NEWTON_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace newton {

using Integer = mpz_class;
using Rational = mpq_class;

// A point with exact rational coordinates.
using RationalPoint = std::vector<Rational>;

// A lattice exponent tuple.
using Exponent = std::vector<long>;

inline Rational rational_from_string(const std::string& s) {
  Rational q(s);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline RationalPoint to_point(const Exponent& e) {
  RationalPoint p;
  p.reserve(e.size());
  for (long v : e) p.emplace_back(v);
  return p;
}

// Componentwise a >= b.
inline bool dominates(const Exponent& a, const Exponent& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

inline long total_degree(const Exponent& e) {
  long d = 0;
  for (long v : e) d += v;
  return d;
}

inline Exponent operator+(const Exponent& a, const Exponent& b) {
  Exponent c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

}  // namespace newton

#endif
