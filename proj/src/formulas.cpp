#include "strata/formulas.hpp"

#include <stdexcept>
#include <string>

#include "strata/arith.hpp"

namespace strata::formulas {

namespace {

std::uint64_t exact_div(std::uint64_t num, std::uint64_t den, const char* what) {
  if (num % den != 0) {
    throw std::logic_error(std::string(what) + ": expected " + std::to_string(num) +
                           " divisible by " + std::to_string(den));
  }
  return num / den;
}

// sum over d | N of phi(d) * phi(N/d)
std::uint64_t totient_convolution(std::uint64_t N) {
  std::uint64_t sum = 0;
  for (std::uint64_t d : arith::divisors(N)) {
    sum += arith::totient(d) * arith::totient(N / d);
  }
  return sum;
}

}  // namespace

std::uint64_t total_walls(std::uint64_t a) {
  if (a == 0) throw std::invalid_argument("total_walls: a must be >= 1");
  if (a == 1) return 0;
  return a / 2 + (a - 1) * (a - 2) / 2;
}

std::uint64_t principal_walls(std::uint64_t a) {
  if (a == 0) throw std::invalid_argument("principal_walls: a must be >= 1");
  std::int64_t sum = 0;
  for (std::uint64_t d : arith::divisors(a)) {
    sum += static_cast<std::int64_t>(arith::moebius(a / d)) *
           static_cast<std::int64_t>(total_walls(d));
  }
  if (sum < 0) throw std::logic_error("principal_walls: negative count");
  return static_cast<std::uint64_t>(sum);
}

ClosedFormCounts principal_chamber_counts(std::uint64_t a) {
  if (a < 4) {
    throw std::invalid_argument("principal_chamber_counts: requires a >= 4");
  }
  ClosedFormCounts counts;
  counts.a = a;
  counts.S = total_walls(a);
  counts.F = principal_walls(a);
  const std::uint64_t phi = arith::totient(a);
  counts.DT = exact_div(counts.F, 2, "DT");
  counts.CC = exact_div(phi, 2, "CC");
  counts.CT = exact_div(2 * counts.F - phi, 6, "CT");
  counts.C = exact_div(5 * counts.F + 2 * phi, 6, "C");
  if (counts.C != counts.CT + counts.DT + counts.CC) {
    throw std::logic_error("principal_chamber_counts: C != CT + DT + CC");
  }
  return counts;
}

std::uint64_t cusp_count(std::uint64_t N) {
  if (N <= 1) throw std::invalid_argument("cusp_count: requires N >= 2");
  if (N == 2 || N == 3) return 2;
  if (N == 4) return 3;
  return exact_div(totient_convolution(N), 2, "cusp_count");
}

std::uint64_t jordan_totient2(std::uint64_t N) {
  if (N == 0) throw std::invalid_argument("jordan_totient2: N must be >= 1");
  std::int64_t sum = 0;
  for (std::uint64_t d : arith::divisors(N)) {
    const std::uint64_t q = N / d;
    sum += static_cast<std::int64_t>(arith::moebius(d)) *
           static_cast<std::int64_t>(q * q);
  }
  return static_cast<std::uint64_t>(sum);
}

CurveInvariants curve_invariants(std::uint64_t N) {
  if (N <= 1) throw std::invalid_argument("curve_invariants: requires N >= 2");
  CurveInvariants inv;
  inv.level = N;
  inv.cusps = cusp_count(N);
  if (N == 2) {
    inv.genus = 0;
    inv.orbifold_orders = {2};
    return inv;
  }
  if (N == 3) {
    inv.genus = 0;
    inv.orbifold_orders = {3};
    return inv;
  }
  if (N == 4) {
    inv.genus = 0;
    return inv;
  }
  // 24g = 24 + J2(N) - 6 * sum phi(d)phi(N/d); must be exactly integral.
  const std::int64_t num = 24 + static_cast<std::int64_t>(jordan_totient2(N)) -
                           6 * static_cast<std::int64_t>(totient_convolution(N));
  if (num < 0 || num % 24 != 0) {
    throw std::logic_error("curve_invariants: genus formula not integral at N=" +
                           std::to_string(N));
  }
  inv.genus = static_cast<std::uint64_t>(num / 24);
  return inv;
}

}  // namespace strata::formulas
