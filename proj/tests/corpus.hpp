#ifndef NEWTON_TEST_CORPUS_HPP
#define NEWTON_TEST_CORPUS_HPP

#include <random>
#include <vector>

#include "newton/monomial_ideal.hpp"
#include "newton/series.hpp"

namespace newton::test {

// Deterministic corpus of small d = 2 ideals. Polynomial members carry at
// most two generators (so the multiplicity oracle stays on the colength
// path); monomial members may carry up to four.
class Corpus {
 public:
  explicit Corpus(unsigned seed) : rng_(seed) {}

  long coeff() {
    long c = (long)(rng_() % 5) - 2;
    return c == 0 ? 1 : c;
  }

  Exponent exponent(long max_total) {
    long a = (long)(rng_() % (max_total + 1));
    long b = (long)(rng_() % (max_total + 1 - a));
    return {a, b};
  }

  LocalElement element(int terms, long max_total) {
    LocalElement f(2);
    for (int t = 0; t < terms; ++t) f.add_term(exponent(max_total), coeff());
    return f;
  }

  // Arbitrary ideal: one to two polynomial generators, degree at most 6.
  IdealPresentation random_ideal() {
    int gens = 1 + (int)(rng_() % 2);
    IdealPresentation out{2, {}};
    for (int g = 0; g < gens; ++g) {
      LocalElement f = element(1 + (int)(rng_() % 3), 6);
      if (f.is_zero()) f.add_term({1, 1}, 1);
      out.generators.push_back(std::move(f));
    }
    return out;
  }

  // Two generators carrying pure powers of x and y; usually m-primary.
  IdealPresentation random_primary_candidate() {
    long a = 1 + (long)(rng_() % 5);
    long b = 1 + (long)(rng_() % 5);
    LocalElement g1(2), g2(2);
    g1.add_term({a, 0}, 1);
    g1.add_term(exponent(6), coeff());
    g2.add_term({0, b}, 1);
    g2.add_term(exponent(6), coeff());
    return IdealPresentation{2, {g1, g2}};
  }

  // m-primary monomial ideal: pure powers plus at most one interior step.
  MonomialIdeal random_primary_monomial() {
    long a = 1 + (long)(rng_() % 4);
    long b = 1 + (long)(rng_() % 4);
    std::vector<Exponent> gens = {{a, 0}, {0, b}};
    int extra = (int)(rng_() % 2);
    for (int t = 0; t < extra; ++t) {
      long i = a > 1 ? 1 + (long)(rng_() % (a - 1)) : 1;
      long j = b > 1 ? 1 + (long)(rng_() % (b - 1)) : 1;
      gens.push_back({i, j});
    }
    return MonomialIdeal::from_generators(std::move(gens), 2);
  }

 private:
  std::mt19937 rng_;
};

}  // namespace newton::test

#endif
