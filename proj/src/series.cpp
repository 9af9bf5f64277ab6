#include "newton/series.hpp"

#include <algorithm>

#include "newton/errors.hpp"

namespace newton {

void LocalElement::add_term(const Exponent& e, const Rational& c) {
  if ((int)e.size() != dim_) throw DimensionError("exponent dimension mismatch");
  for (long v : e)
    if (v < 0) throw DomainError("negative exponent");
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational LocalElement::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

LocalElement LocalElement::monomial(int dim, const Exponent& e,
                                    const Rational& c) {
  LocalElement f(dim);
  f.add_term(e, c);
  return f;
}

LocalElement operator+(const LocalElement& f, const LocalElement& g) {
  if (f.dim_ != g.dim_) throw DimensionError("adding mismatched dimensions");
  LocalElement h = f;
  for (const auto& [e, c] : g.terms_) h.add_term(e, c);
  return h;
}

LocalElement operator-(const LocalElement& f, const LocalElement& g) {
  if (f.dim_ != g.dim_) throw DimensionError("subtracting mismatched dimensions");
  LocalElement h = f;
  for (const auto& [e, c] : g.terms_) h.add_term(e, -c);
  return h;
}

LocalElement operator*(const LocalElement& f, const LocalElement& g) {
  if (f.dim_ != g.dim_) throw DimensionError("multiplying mismatched dimensions");
  LocalElement h(f.dim_);
  for (const auto& [a, ca] : f.terms_)
    for (const auto& [b, cb] : g.terms_) h.add_term(a + b, ca * cb);
  return h;
}

std::vector<Exponent> support(const LocalElement& f) {
  std::vector<Exponent> out;
  for (const auto& [e, c] : f.terms()) {
    bool minimal = true;
    for (const auto& [e2, c2] : f.terms()) {
      if (e2 != e && dominates(e, e2)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(e);
  }
  return out;
}

StaircasePolyhedron newton_polyhedron(const IdealPresentation& ideal) {
  std::vector<RationalPoint> pts;
  for (const LocalElement& g : ideal.generators) {
    if ((int)g.dim() != ideal.dim)
      throw DimensionError("generator dimension mismatch");
    for (const Exponent& e : support(g)) pts.push_back(to_point(e));
  }
  if (pts.empty())
    throw EmptyGeneratorError("all generators are zero");
  return StaircasePolyhedron::hull(std::move(pts), ideal.dim);
}

IdealPresentation product_ideal(const IdealPresentation& a,
                                const IdealPresentation& b) {
  if (a.dim != b.dim) throw DimensionError("ideal product dimension mismatch");
  IdealPresentation out{a.dim, {}};
  for (const LocalElement& f : a.generators)
    for (const LocalElement& g : b.generators) {
      LocalElement h = f * g;
      if (!h.is_zero()) out.generators.push_back(std::move(h));
    }
  return out;
}

IdealPresentation power_ideal(const IdealPresentation& a, int n) {
  if (n <= 0) throw DomainError("ideal power must be positive");
  if (n == 1) return a;
  // all degree-n monomials in the generators, without repetition
  IdealPresentation out{a.dim, {}};
  std::vector<size_t> idx(n, 0);
  size_t s = a.generators.size();
  auto rec = [&](auto&& self, int pos, size_t start, const LocalElement& acc)
      -> void {
    if (pos == n) {
      if (!acc.is_zero()) out.generators.push_back(acc);
      return;
    }
    for (size_t i = start; i < s; ++i)
      self(self, pos + 1, i, acc * a.generators[i]);
  };
  rec(rec, 0, 0, LocalElement::monomial(a.dim, Exponent(a.dim, 0)));
  return out;
}

}  // namespace newton
