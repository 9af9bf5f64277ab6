#ifndef NEWTON_PARSE_HPP
#define NEWTON_PARSE_HPP

#include <istream>
#include <string>
#include <vector>

#include "newton/family.hpp"
#include "newton/series.hpp"

namespace newton {

// Text documents describing ideals and families. The format is line based:
//
//   ideal                 (optional header)
//   vars x y              (single-letter parameter names; sets d)
//   gen x^4 + y^4         (one generator per line, infix form)
//   gen 3/2 [1,2] - [0,4] (exponent-tuple monomials are also accepted)
//
// A family document starts with "family power" or "family prefix",
// optionally followed by "period <n>" and "rule <text>", then one or more
// ideal blocks ("vars" may be declared once and is inherited).
struct IdealDocument {
  std::vector<std::string> vars;
  IdealPresentation ideal{0, {}};
};

struct FamilyDocument {
  std::vector<std::string> vars;
  FamilySpec::Kind kind = FamilySpec::Kind::Power;
  std::vector<IdealPresentation> ideals;  // one for power, prefix otherwise
  std::optional<int> period;
  std::string rule;

  FamilySpec spec() const;
};

// Infix polynomial parser. Coefficients are integers or "p/q"; monomials
// are products of declared single-letter variables with optional '^' powers
// or bracketed exponent tuples.
LocalElement parse_polynomial(const std::string& text,
                              const std::vector<std::string>& vars,
                              int line_no = 0);

IdealDocument parse_ideal_document(std::istream& in);
FamilyDocument parse_family_document(std::istream& in);

}  // namespace newton

#endif
