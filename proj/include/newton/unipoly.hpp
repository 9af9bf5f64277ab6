#ifndef NEWTON_UNIPOLY_HPP
#define NEWTON_UNIPOLY_HPP

#include <vector>

#include "newton/rational.hpp"

namespace newton {

// Univariate polynomial over Q, coefficients in ascending degree.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    trim();
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return (int)c_.size() - 1; }  // -1 for zero
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational coeff(int k) const {
    return k >= 0 && k < (int)c_.size() ? c_[k] : Rational(0);
  }

  // Lowest nonzero degree; 0 for the zero polynomial.
  int valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) return (int)i;
    return 0;
  }

  UniPoly shifted_down(int k) const {
    if (is_zero()) return {};
    return UniPoly(std::vector<Rational>(c_.begin() + k, c_.end()));
  }

  UniPoly monic() const {
    if (is_zero()) return {};
    std::vector<Rational> out = c_;
    Rational lead = out.back();
    for (Rational& x : out) x /= lead;
    return UniPoly(std::move(out));
  }

  friend UniPoly remainder(UniPoly a, const UniPoly& b) {
    while (!a.is_zero() && a.degree() >= b.degree()) {
      Rational f = a.c_.back() / b.c_.back();
      int shift = a.degree() - b.degree();
      for (int i = 0; i <= b.degree(); ++i)
        a.c_[i + shift] -= f * b.c_[i];
      a.trim();
    }
    return a;
  }

  friend UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
      UniPoly r = remainder(std::move(a), b);
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  bool operator==(const UniPoly& o) const = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

}  // namespace newton

#endif
