#include <doctest.h>

#include "helpers.hpp"
#include "newton/errors.hpp"
#include "newton/monomial_ideal.hpp"
#include "newton/oracle.hpp"

using namespace newton;
using namespace newton::test;

TEST_CASE("truncated quotients") {
  auto maximal = ideal2({elem(2, {{1, 0}}), elem(2, {{0, 1}})});
  CHECK(colength_truncated(maximal, 5) == 1);

  auto ci = ideal2({elem(2, {{2, 0}, {0, 2}}), elem(2, {{1, 1}})});
  CHECK(colength_truncated(ci, 6) == 4);

  CHECK(colength_truncated(not_nnd_ideal(), 10) == 12);

  auto tq = truncated_quotient(maximal, 5);
  CHECK(tq.basis_size == 15);
  CHECK(tq.span_dim == 14);
  CHECK_THROWS_AS(truncated_quotient(maximal, 0), DomainError);
}

TEST_CASE("stable colength") {
  CHECK(colength_stable(ideal2({elem(2, {{3, 0}}), elem(2, {{0, 2}})})) == 6);
  CHECK(colength_stable(ideal2({elem(2, {{2, 0}, {0, 2}}),
                                elem(2, {{1, 1}})})) == 4);
  CHECK_THROWS_AS(colength_stable(ideal2({elem(2, {{1, 1}})})),
                  NotPrimaryOrBudgetError);
}

TEST_CASE("multiplicity of complete intersections") {
  for (long a = 1; a <= 4; ++a)
    for (long b = 1; b <= 3; ++b)
      CHECK(multiplicity(ideal2({elem(2, {{a, 0}}), elem(2, {{0, b}})})) ==
            a * b);
  CHECK(multiplicity(not_nnd_ideal()) == 12);
  CHECK(multiplicity(ideal2({elem(2, {{2, 0}, {0, 2}}), elem(2, {{1, 1}})})) ==
        4);
}

TEST_CASE("multiplicity through finite differences") {
  // (x, y)^2 has three generators, so the power route is exercised
  auto sq = ideal2({elem(2, {{2, 0}}), elem(2, {{1, 1}}), elem(2, {{0, 2}})});
  CHECK(multiplicity(sq) == 4);

  auto st = mono({{3, 0}, {1, 1}, {0, 3}});
  CHECK(Rational(multiplicity(as_ideal(st))) ==
        2 * covolume(newton_polyhedron(as_ideal(st))));
}

TEST_CASE("multiplicity scales with ideal powers") {
  auto I = ideal2({elem(2, {{2, 0}, {0, 2}}), elem(2, {{1, 1}})});
  long e = multiplicity(I);
  CHECK(multiplicity(power_ideal(I, 2)) == 4 * e);
}
