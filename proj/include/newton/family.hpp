#ifndef NEWTON_FAMILY_HPP
#define NEWTON_FAMILY_HPP

#include <optional>
#include <string>
#include <vector>

#include "newton/nnd.hpp"
#include "newton/oracle.hpp"
#include "newton/polyhedron.hpp"
#include "newton/series.hpp"

namespace newton {

// A graded family given either as the powers of one ideal or as an explicit
// prefix I_1..I_N with an optional declared period (the family rule that
// upgrades finite-evidence verdicts).
class FamilySpec {
 public:
  enum class Kind { Power, Prefix };

  static FamilySpec power(IdealPresentation base);
  static FamilySpec prefix(std::vector<IdealPresentation> ideals,
                           std::optional<int> period = {},
                           std::string rule = {});

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }
  std::optional<int> declared_period() const { return period_; }
  const std::string& rule() const { return rule_; }

  // I_n. Prefix families throw DomainError beyond the prefix.
  IdealPresentation member(int n) const;

  // Largest index available within the budget.
  int available(int budget) const;

 private:
  Kind kind_ = Kind::Power;
  int dim_ = 0;
  IdealPresentation base_{0, {}};
  std::vector<IdealPresentation> prefix_;
  std::optional<int> period_;
  std::string rule_;
};

struct LimitingBody {
  // scaled[n-1] = (1/n) Gamma(I_n)
  std::vector<StaircasePolyhedron> scaled;
  std::optional<int> stabilized_at;
  std::optional<StaircasePolyhedron> closure;
};

// Scaled prefix polyhedra with stabilization detection. Also spot-checks
// gradedness through the necessary polyhedral containment
// Gamma(I_p) + Gamma(I_q) inside Gamma(I_{p+q}); violations raise DomainError.
LimitingBody limiting_body(const FamilySpec& family, int budget,
                           const OracleConfig& config = {});

enum class NoetherianVerdict {
  Certified,             // stabilization + family rule (+ NND at the period)
  ConsistentUpToBudget,  // stabilization observed, rule not established
  NonPolyhedralUpToBudget
};

struct NoetherianReport {
  NoetherianVerdict verdict = NoetherianVerdict::NonPolyhedralUpToBudget;
  std::optional<int> c;
  int budget = 0;
  std::string note;
};

NoetherianReport noetherian_report(const FamilySpec& family, int budget,
                                   const OracleConfig& config = {});

// e(I_c) / c^d for a stabilized family.
Rational family_multiplicity(const FamilySpec& family, int c,
                             const OracleConfig& config = {});

struct FamilyMultVerdict {
  bool equal = false;
  Rational family_e;
  Rational d_factorial_covol;  // of the limiting-body closure
  Rational gap;                // family_e - d_factorial_covol (zero if equal)
  std::vector<CompactFace> failing_faces;  // faces of Gamma(I_c), d = 2 only
};

// The multiplicity = d! co-volume comparison at the stabilization period.
FamilyMultVerdict mult_equals_covol_check(const FamilySpec& family, int c,
                                          const OracleConfig& config = {});

}  // namespace newton

#endif
