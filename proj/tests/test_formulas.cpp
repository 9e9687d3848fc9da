#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "strata/arith.hpp"
#include "strata/formulas.hpp"

using namespace strata::formulas;
using strata::arith::divisors;
using strata::arith::totient;

TEST_CASE("total walls") {
  CHECK(total_walls(1) == 0);
  CHECK(total_walls(5) == 8);   // = (5-1)^2/2 for a prime
  CHECK(total_walls(6) == 13);  // 3 + 10
}

TEST_CASE("principal walls") {
  CHECK(principal_walls(4) == 4);  // S4 - S2
  CHECK(principal_walls(5) == 8);  // S5 - S1
  CHECK(principal_walls(6) == 10); // 13 - 2 - 1 + 0
}

TEST_CASE("principal walls sum back to total walls") {
  for (std::uint64_t a = 1; a <= 500; ++a) {
    std::uint64_t sum = 0;
    for (std::uint64_t d : divisors(a)) sum += principal_walls(d);
    REQUIRE(sum == total_walls(a));
  }
}

TEST_CASE("principal chamber counts") {
  const auto c4 = principal_chamber_counts(4);
  CHECK(c4.CT == 1);
  CHECK(c4.DT == 2);
  CHECK(c4.CC == 1);
  CHECK(c4.C == 4);

  const auto c5 = principal_chamber_counts(5);
  CHECK(c5.CT == 2);
  CHECK(c5.DT == 4);
  CHECK(c5.CC == 2);
  CHECK(c5.C == 8);

  const auto c7 = principal_chamber_counts(7);
  CHECK(c7.F == 18);
  CHECK(c7.CT == 5);
  CHECK(c7.DT == 9);
  CHECK(c7.CC == 3);
  CHECK(c7.C == 17);

  CHECK_THROWS_AS(principal_chamber_counts(3), std::invalid_argument);
}

TEST_CASE("prime chamber count closed form (p-1)(5p-1)/12") {
  for (std::uint64_t p : {5, 7, 11, 13, 17, 19, 23}) {
    CHECK(principal_chamber_counts(p).C == (p - 1) * (5 * p - 1) / 12);
  }
}

TEST_CASE("divisibility identities for chamber counts") {
  for (std::uint64_t a = 4; a <= 500; ++a) {
    const std::uint64_t F = principal_walls(a);
    const std::uint64_t phi = totient(a);
    CAPTURE(a);
    REQUIRE(F % 2 == 0);
    REQUIRE((F - phi) % 2 == 0);
    const auto counts = principal_chamber_counts(a);
    REQUIRE(3 * counts.CT == F - counts.CC);
    REQUIRE(counts.C == counts.CT + counts.DT + counts.CC);
  }
}

TEST_CASE("F_a + phi(a) equals half the second Jordan totient") {
  for (std::uint64_t a = 5; a <= 500; ++a) {
    CAPTURE(a);
    REQUIRE(jordan_totient2(a) % 2 == 0);
    REQUIRE(principal_walls(a) + totient(a) == jordan_totient2(a) / 2);
  }
}

TEST_CASE("cusp counts") {
  CHECK(cusp_count(2) == 2);
  CHECK(cusp_count(3) == 2);
  CHECK(cusp_count(4) == 3);
  CHECK(cusp_count(5) == 4);
  CHECK(cusp_count(6) == 4);
  CHECK(cusp_count(11) == 10);
  CHECK_THROWS_AS(cusp_count(1), std::invalid_argument);
}

TEST_CASE("curve invariants at small levels") {
  const auto n2 = curve_invariants(2);
  CHECK(n2.genus == 0);
  CHECK(n2.cusps == 2);
  CHECK(n2.orbifold_orders == std::vector<int>{2});

  const auto n3 = curve_invariants(3);
  CHECK(n3.genus == 0);
  CHECK(n3.cusps == 2);
  CHECK(n3.orbifold_orders == std::vector<int>{3});

  const auto n4 = curve_invariants(4);
  CHECK(n4.genus == 0);
  CHECK(n4.cusps == 3);
  CHECK(n4.orbifold_orders.empty());

  const auto n6 = curve_invariants(6);
  CHECK(n6.genus == 0);
  CHECK(n6.cusps == 4);

  CHECK(curve_invariants(11).genus == 1);
  CHECK(curve_invariants(11).cusps == 10);
  CHECK(curve_invariants(13).genus == 2);
  CHECK(curve_invariants(13).cusps == 12);

  CHECK_THROWS_AS(curve_invariants(1), std::invalid_argument);
}

TEST_CASE("prime genus and cusp closed forms") {
  for (std::uint64_t p : {5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
                          47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97}) {
    const auto inv = curve_invariants(p);
    CAPTURE(p);
    REQUIRE(inv.genus == (p - 5) * (p - 7) / 24);
    REQUIRE(inv.cusps == p - 1);
  }
}

TEST_CASE("genus formula is integral and nonnegative up to 500") {
  for (std::uint64_t N = 5; N <= 500; ++N) {
    CAPTURE(N);
    REQUIRE_NOTHROW(curve_invariants(N));
  }
}

TEST_CASE("sphere levels are exactly 2..10 and 12") {
  for (std::uint64_t N = 2; N <= 500; ++N) {
    const bool sphere = (N >= 2 && N <= 10) || N == 12;
    CAPTURE(N);
    REQUIRE((curve_invariants(N).genus == 0) == sphere);
  }
}
