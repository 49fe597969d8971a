#include "doctest.h"

#include <random>

#include "klr/qseries.hpp"

using namespace klr;

namespace {

LaurentPoly q(int e) { return LaurentPoly::q(e); }

LaurentPoly random_poly(std::mt19937& rng, int lo, int hi, int coeff_bound) {
  std::uniform_int_distribution<int> c(-coeff_bound, coeff_bound);
  LaurentPoly p;
  for (int e = lo; e <= hi; ++e) p.add_term(e, c(rng));
  return p;
}

}  // namespace

TEST_CASE("quantum integers") {
  CHECK(quantum_int(0).is_zero());
  CHECK(quantum_int(2) == q(1) + q(-1));
  CHECK(quantum_int(3) == q(2) + 1 + q(-2));
  for (int n = 1; n <= 12; ++n) {
    CHECK(quantum_int(n).at_one() == n);
    CHECK(bar(quantum_int(n)) == quantum_int(n));
  }
}

TEST_CASE("quantum factorial") {
  CHECK(quantum_factorial(1) == LaurentPoly(1));
  CHECK(quantum_factorial(2) == q(1) + q(-1));
  CHECK(quantum_factorial(3) == q(3) + 2 * q(1) + 2 * q(-1) + q(-3));
  Integer fact = 1;
  for (int n = 1; n <= 9; ++n) {
    fact *= n;
    CHECK(quantum_factorial(n).at_one() == fact);
    CHECK(quantum_factorial(n).is_bar_invariant());
  }
}

TEST_CASE("bar involution") {
  CHECK(bar(q(2) + 3) == q(-2) + 3);
  CHECK(bar(quantum_int(4)) == quantum_int(4));
  CHECK(bar(LaurentPoly()).is_zero());
  const LaurentPoly x = 5 * q(-3) - q(7) + 2;
  CHECK(bar(bar(x)) == x);
}

TEST_CASE("geometric inverse") {
  const LaurentSeries g = geometric_inverse(1 - q(2), 6);
  CHECK(g.agrees_with(LaurentSeries(1 + q(2) + q(4) + q(6), 6)));
  CHECK(g.coeff(6) == 1);
  CHECK(geometric_inverse(LaurentPoly(1), 4).agrees_with(LaurentSeries(LaurentPoly(1), 4)));

  // Long division of 1 by q + q^-1 starts at q^1: q - q^3 + q^5 - ...
  const LaurentSeries h = geometric_inverse(q(1) + q(-1), 3);
  CHECK(h.coeff(1) == 1);
  CHECK(h.coeff(-1) == 0);
  CHECK(h.coeff(3) == -1);
  const LaurentSeries prod = h * LaurentSeries(q(1) + q(-1));
  CHECK(prod.truncation_degree() >= 3);
  CHECK(prod.agrees_with(LaurentSeries(LaurentPoly(1))));

  CHECK_THROWS_AS(geometric_inverse(2 + q(1), 5), std::invalid_argument);
}

TEST_CASE("geometric inverse property") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    LaurentPoly p = random_poly(rng, -2, 3, 3);
    if (p.is_zero()) continue;
    const Integer lead = p.coeff(p.min_degree());
    if (lead != 1 && lead != -1) p.add_term(p.min_degree(), 1 - lead);
    if (p.is_zero()) continue;
    const int d = 9;
    const LaurentSeries s = geometric_inverse(p, d);
    const LaurentSeries prod = s * LaurentSeries(p);
    CHECK(prod.truncation_degree() >= d);
    CHECK(prod.agrees_with(LaurentSeries(LaurentPoly(1))));
  }
}

TEST_CASE("exact polynomial division") {
  CHECK(exact_divide(q(1) + q(-1), q(1) + q(-1)) == LaurentPoly(1));
  CHECK(exact_divide(quantum_factorial(3), quantum_int(2)) == quantum_int(3));
  // q^2 + 1 = q (q + q^-1), so it divides; q^2 + 2 does not.
  CHECK(exact_divide(q(2) + 1, q(1) + q(-1)) == q(1));
  CHECK_THROWS_AS(exact_divide(q(2) + 2, q(1) + q(-1)), InexactDivision);
  CHECK_THROWS_AS(exact_divide(LaurentPoly(3), LaurentPoly(2)), InexactDivision);
}

TEST_CASE("exact division inverts multiplication") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly a = random_poly(rng, -3, 3, 4);
    const LaurentPoly b = random_poly(rng, -2, 2, 3);
    if (b.is_zero()) continue;
    CHECK(exact_divide(a * b, b) == a);
  }
}

TEST_CASE("series division inverts multiplication within the window") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const LaurentSeries a(random_poly(rng, -2, 8, 4), 6);
    LaurentPoly b = random_poly(rng, 0, 2, 2);
    if (b.is_zero()) continue;
    const Integer lead = b.coeff(b.min_degree());
    if (lead != 1 && lead != -1) b.add_term(b.min_degree(), 1 - lead);
    if (b.is_zero()) continue;
    const LaurentSeries back = exact_divide(a * LaurentSeries(b), b);
    CHECK(back.agrees_with(a));
    CHECK(back.truncation_degree() <= a.truncation_degree());
  }
}

TEST_CASE("series arithmetic respects the truncation window") {
  const LaurentSeries a(1 + q(1) + q(5), 3);  // q^5 is dropped: unknown
  CHECK(a.coefficients().size() == 2);
  CHECK_THROWS_AS(a.coeff(4), TruncationError);
  const LaurentSeries b(q(-1), 10);
  const LaurentSeries ab = a * b;
  CHECK(ab.truncation_degree() == 2);
  CHECK(ab.lower_bound() == -1);
  const LaurentSeries sum = a + b;
  CHECK(sum.truncation_degree() == 3);
  // Exact zero is a neutral element and keeps windows intact.
  CHECK((a + LaurentSeries()).truncation_degree() == 3);
  CHECK((LaurentSeries() * a).is_exact());
}

TEST_CASE("series never read above truncation") {
  // Sentinel data above the window is discarded on construction and cannot
  // influence any derived coefficient.
  std::map<int, Integer> poisoned{{0, 1}, {1, 2}, {5, Integer("999999999999999999")}};
  const LaurentSeries s(poisoned, 0, 3);
  const LaurentSeries clean(1 + 2 * q(1), 3);
  CHECK(s == clean);
  const LaurentSeries t = geometric_inverse(1 - q(2), 8);
  CHECK((s * t) == (clean * t));
  CHECK(exact_divide(s, 1 - q(1)) == exact_divide(clean, 1 - q(1)));
}

TEST_CASE("series comparison reports the window") {
  const LaurentSeries a(1 + q(2) + q(4), 4);
  const LaurentSeries b(1 + q(2) + 7 * q(6), 3);
  const auto cmp = a.compare(b);
  CHECK(cmp.equal);
  CHECK(cmp.window_high == 3);
  const LaurentSeries c(1 + 2 * q(2), 4);
  const auto bad = a.compare(c);
  CHECK_FALSE(bad.equal);
  CHECK(bad.first_mismatch == 2);
}

TEST_CASE("bar of series") {
  CHECK(bar(LaurentSeries(q(2) + 1)) == LaurentSeries(q(-2) + 1));
  CHECK_THROWS_AS(bar(LaurentSeries(q(2), 5)), TruncationError);
}

TEST_CASE("string form") {
  CHECK((q(2) - 3 * q(-1) + 1).to_string() == "q^2 + 1 - 3*q^-1");
  CHECK(LaurentSeries(1 + q(1), 4).to_string() == "q + 1 + O(q^5)");
}
