#include "newton/monomial_ideal.hpp"

#include <algorithm>

#include "newton/errors.hpp"

namespace newton {

namespace {

// Enumerate lattice points of the box [0, limit_0] x ... x [0, limit_{d-1}]
// and invoke fn on each.
template <typename Fn>
void for_each_lattice_point(const std::vector<long>& limits, Fn&& fn) {
  Exponent e(limits.size(), 0);
  size_t d = limits.size();
  while (true) {
    fn(e);
    size_t k = 0;
    while (k < d && e[k] == limits[k]) {
      e[k] = 0;
      ++k;
    }
    if (k == d) break;
    ++e[k];
  }
}

std::vector<Exponent> minimal_elements(std::vector<Exponent> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<Exponent> keep;
  for (const Exponent& a : pts) {
    bool minimal = true;
    for (const Exponent& b : pts)
      if (b != a && dominates(a, b)) {
        minimal = false;
        break;
      }
    if (minimal) keep.push_back(a);
  }
  return keep;
}

}  // namespace

MonomialIdeal MonomialIdeal::from_generators(std::vector<Exponent> gens,
                                             int dim) {
  if (dim < 1) throw DomainError("dimension must be positive");
  if (gens.empty()) throw EmptyGeneratorError("monomial ideal needs generators");
  for (const Exponent& g : gens) {
    if ((int)g.size() != dim) throw DimensionError("generator dimension mismatch");
    for (long v : g)
      if (v < 0) throw DomainError("negative exponent");
  }
  MonomialIdeal m;
  m.dim_ = dim;
  m.gens_ = minimal_elements(std::move(gens));
  return m;
}

bool MonomialIdeal::contains(const Exponent& a) const {
  if ((int)a.size() != dim_) throw DimensionError("exponent dimension mismatch");
  for (const Exponent& g : gens_)
    if (dominates(a, g)) return true;
  return false;
}

MonomialIdeal ideal_I0(const StaircasePolyhedron& p) {
  int d = p.dim();
  // Minimal lattice points all lie within the per-axis vertex bound.
  std::vector<long> limits(d, 0);
  for (const RationalPoint& v : p.vertices())
    for (int k = 0; k < d; ++k) {
      Integer c;
      mpz_cdiv_q(c.get_mpz_t(), v[k].get_num_mpz_t(), v[k].get_den_mpz_t());
      limits[k] = std::max(limits[k], c.get_si());
    }
  std::vector<Exponent> members;
  for_each_lattice_point(limits, [&](const Exponent& e) {
    if (p.contains(to_point(e))) members.push_back(e);
  });
  return MonomialIdeal::from_generators(std::move(members), d);
}

MonomialIdeal monomial_integral_closure(const MonomialIdeal& m) {
  std::vector<RationalPoint> pts;
  for (const Exponent& g : m.minimal_generators()) pts.push_back(to_point(g));
  return ideal_I0(StaircasePolyhedron::hull(std::move(pts), m.dim()));
}

bool is_m_primary(const MonomialIdeal& m) {
  for (int axis = 0; axis < m.dim(); ++axis) {
    bool pure = false;
    for (const Exponent& g : m.minimal_generators()) {
      bool only_axis = true;
      for (int k = 0; k < m.dim(); ++k)
        if (k != axis && g[k] != 0) only_axis = false;
      if (only_axis) {
        pure = true;
        break;
      }
    }
    if (!pure) return false;
  }
  return true;
}

long colength(const MonomialIdeal& m) {
  if (!is_m_primary(m))
    throw NotPrimaryError("colength of a non-m-primary monomial ideal");
  std::vector<long> limits(m.dim(), 0);
  for (const Exponent& g : m.minimal_generators())
    for (int k = 0; k < m.dim(); ++k) limits[k] = std::max(limits[k], g[k]);
  long count = 0;
  for_each_lattice_point(limits, [&](const Exponent& e) {
    if (!m.contains(e)) ++count;
  });
  return count;
}

IdealPresentation as_ideal(const MonomialIdeal& m) {
  IdealPresentation ideal{m.dim(), {}};
  for (const Exponent& g : m.minimal_generators())
    ideal.generators.push_back(LocalElement::monomial(m.dim(), g));
  return ideal;
}

}  // namespace newton
