#include "newton/family.hpp"

#include <algorithm>

#include "newton/errors.hpp"
#include "newton/monomial_ideal.hpp"

namespace newton {

namespace {

bool oracle_m_primary(const IdealPresentation& ideal,
                      const OracleConfig& config) {
  try {
    colength_stable(ideal, config);
    return true;
  } catch (const NotPrimaryOrBudgetError&) {
    return false;
  }
}

bool is_monomial_presentation(const IdealPresentation& ideal) {
  for (const LocalElement& g : ideal.generators)
    if (g.terms().size() != 1) return false;
  return true;
}

bool certify_nnd(const IdealPresentation& ideal, const OracleConfig& config) {
  if (ideal.dim == 2 && is_nnd_face(ideal)) return true;
  return is_nnd_multiplicity(ideal, config);
}

}  // namespace

FamilySpec FamilySpec::power(IdealPresentation base) {
  if (base.generators.empty())
    throw EmptyGeneratorError("power family needs a base ideal");
  FamilySpec f;
  f.kind_ = Kind::Power;
  f.dim_ = base.dim;
  f.base_ = std::move(base);
  return f;
}

FamilySpec FamilySpec::prefix(std::vector<IdealPresentation> ideals,
                              std::optional<int> period, std::string rule) {
  if (ideals.empty()) throw DomainError("family prefix is empty");
  FamilySpec f;
  f.kind_ = Kind::Prefix;
  f.dim_ = ideals.front().dim;
  for (const IdealPresentation& i : ideals)
    if (i.dim != f.dim_) throw DimensionError("family members disagree on dim");
  if (period && (*period < 1 || *period > (int)ideals.size()))
    throw DomainError("declared period outside the prefix");
  f.prefix_ = std::move(ideals);
  f.period_ = period;
  f.rule_ = std::move(rule);
  return f;
}

IdealPresentation FamilySpec::member(int n) const {
  if (n < 1) throw DomainError("family index must be positive");
  if (kind_ == Kind::Power) return power_ideal(base_, n);
  if (n > (int)prefix_.size())
    throw DomainError("family index beyond the available prefix");
  return prefix_[n - 1];
}

int FamilySpec::available(int budget) const {
  if (kind_ == Kind::Power) return budget;
  return std::min<int>(budget, (int)prefix_.size());
}

LimitingBody limiting_body(const FamilySpec& family, int budget,
                           const OracleConfig& config) {
  int n_max = family.available(budget);
  if (n_max < 1) throw DomainError("family prefix is empty");

  LimitingBody body;
  std::vector<StaircasePolyhedron> gammas;
  for (int n = 1; n <= n_max; ++n) {
    gammas.push_back(newton_polyhedron(family.member(n)));
    body.scaled.push_back(scale(gammas.back(), Rational(1, n)));
  }

  // Gradedness spot-check: I_p I_q inside I_{p+q} forces
  // Gamma(I_p) + Gamma(I_q) inside Gamma(I_{p+q}).
  // Power families are graded by construction.
  if (family.kind() == FamilySpec::Kind::Prefix) {
    for (int p = 1; p <= n_max; ++p)
      for (int q = p; p + q <= n_max; ++q)
        if (!subset(minkowski_sum(gammas[p - 1], gammas[q - 1]),
                    gammas[p + q - 1]))
          throw DomainError("family is not graded: Gamma(I_" +
                            std::to_string(p) + ") + Gamma(I_" +
                            std::to_string(q) + ") escapes Gamma(I_" +
                            std::to_string(p + q) + ")");
    // Full containment check where the prefix is monomial.
    bool monomial = true;
    for (int n = 1; n <= n_max; ++n)
      if (!is_monomial_presentation(family.member(n))) monomial = false;
    if (monomial) {
      for (int p = 1; p <= n_max; ++p)
        for (int q = p; p + q <= n_max; ++q) {
          std::vector<Exponent> gens;
          for (const LocalElement& g : family.member(p + q).generators)
            gens.push_back(g.terms().begin()->first);
          MonomialIdeal target =
              MonomialIdeal::from_generators(std::move(gens), family.dim());
          for (const LocalElement& a : family.member(p).generators)
            for (const LocalElement& b : family.member(q).generators)
              if (!target.contains(a.terms().begin()->first +
                                   b.terms().begin()->first))
                throw DomainError("monomial family is not graded at indices " +
                                  std::to_string(p) + ", " + std::to_string(q));
        }
    }
  }

  // Stabilization: (1/c) Gamma(I_c) = (1/kc) Gamma(I_kc) for all kc <= N.
  // Among the polyhedrally stable indices, prefer the first one whose ideal
  // the oracle confirms m-primary; the downstream theorems quantify over
  // that index.
  // A prefix candidate needs at least one confirmed multiple; a lone tail
  // index carries no evidence.
  int c_max = family.kind() == FamilySpec::Kind::Power ? 1 : n_max / 2;
  std::vector<int> candidates;
  for (int c = 1; c <= c_max; ++c) {
    bool ok = true;
    for (int kc = 2 * c; kc <= n_max; kc += c)
      if (!(body.scaled[c - 1] == body.scaled[kc - 1])) {
        ok = false;
        break;
      }
    if (ok) candidates.push_back(c);
  }
  if (!candidates.empty()) {
    if (family.kind() == FamilySpec::Kind::Power) {
      body.stabilized_at = 1;
    } else {
      for (int c : candidates)
        if (oracle_m_primary(family.member(c), config)) {
          body.stabilized_at = c;
          break;
        }
      if (!body.stabilized_at) body.stabilized_at = candidates.front();
    }
    body.closure = body.scaled[*body.stabilized_at - 1];
  }
  return body;
}

NoetherianReport noetherian_report(const FamilySpec& family, int budget,
                                   const OracleConfig& config) {
  LimitingBody body = limiting_body(family, budget, config);
  NoetherianReport report;
  report.budget = family.available(budget);
  if (!body.stabilized_at) {
    report.verdict = NoetherianVerdict::NonPolyhedralUpToBudget;
    report.note = "no scaled-polyhedron stabilization up to index " +
                  std::to_string(report.budget);
    return report;
  }
  report.c = body.stabilized_at;
  if (family.kind() == FamilySpec::Kind::Power) {
    report.verdict = NoetherianVerdict::Certified;
    report.note = "power family: the Rees algebra is finitely generated";
    return report;
  }
  bool rule_backed = family.declared_period().has_value();
  bool nnd_at_c = false;
  try {
    nnd_at_c = certify_nnd(family.member(*report.c), config);
  } catch (const Error&) {
    nnd_at_c = false;
  }
  if (rule_backed && nnd_at_c) {
    report.verdict = NoetherianVerdict::Certified;
    report.note = "declared period with NND stabilization index";
  } else {
    report.verdict = NoetherianVerdict::ConsistentUpToBudget;
    report.note = nnd_at_c ? "stabilization observed; no family rule declared"
                           : "stabilization observed; NND not established";
  }
  return report;
}

Rational family_multiplicity(const FamilySpec& family, int c,
                             const OracleConfig& config) {
  if (c < 1) throw DomainError("stabilization period must be positive");
  Rational e(multiplicity(family.member(c), config));
  Rational denom = 1;
  for (int k = 0; k < family.dim(); ++k) denom *= c;
  return e / denom;
}

FamilyMultVerdict mult_equals_covol_check(const FamilySpec& family, int c,
                                          const OracleConfig& config) {
  IdealPresentation ic = family.member(c);
  StaircasePolyhedron gamma = newton_polyhedron(ic);
  StaircasePolyhedron closure = scale(gamma, Rational(1, c));

  FamilyMultVerdict verdict;
  verdict.family_e = family_multiplicity(family, c, config);
  long fact = 1;
  for (int k = 2; k <= family.dim(); ++k) fact *= k;
  verdict.d_factorial_covol = covolume(closure) * fact;
  verdict.equal = verdict.family_e == verdict.d_factorial_covol;
  verdict.gap = verdict.family_e - verdict.d_factorial_covol;
  if (!verdict.equal && family.dim() == 2)
    verdict.failing_faces = certify_faces(ic).failing_faces;
  return verdict;
}

}  // namespace newton
