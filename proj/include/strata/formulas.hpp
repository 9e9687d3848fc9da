#pragma once

#include <cstdint>
#include <vector>

namespace strata::formulas {

// Closed-form counts for the stratum of order a. S counts all discriminant
// components, F those in the principal component; CT/DT/CC are triangle,
// degenerate and cylinder chamber counts, C their total.
struct ClosedFormCounts {
  std::uint64_t a = 0;
  std::uint64_t S = 0;
  std::uint64_t F = 0;
  std::uint64_t CT = 0;
  std::uint64_t DT = 0;
  std::uint64_t CC = 0;
  std::uint64_t C = 0;
};

// Topological invariants of the curve at level N.
struct CurveInvariants {
  std::uint64_t level = 0;
  std::uint64_t genus = 0;
  std::uint64_t cusps = 0;
  std::vector<int> orbifold_orders;  // each >= 2
};

// S_a = floor(a/2) + (a-1)(a-2)/2, with S_1 = 0.
std::uint64_t total_walls(std::uint64_t a);

// F_a = sum over d | a of mu(a/d) * S_d.
std::uint64_t principal_walls(std::uint64_t a);

// Chamber counts of the principal component, valid for a >= 4:
// DT = F/2, CC = phi(a)/2, CT = F/3 - phi(a)/6, C = 5F/6 + phi(a)/3.
// All divisions must be exact; throws std::logic_error otherwise.
// Throws std::invalid_argument for a <= 3 (use enumeration there).
ClosedFormCounts principal_chamber_counts(std::uint64_t a);

// Number of cusps of the level-N curve. For N >= 5 this is
// (1/2) * sum over d | N of phi(d) * phi(N/d); N in {2,3,4} are
// table-driven exceptional values. Throws for N <= 1.
std::uint64_t cusp_count(std::uint64_t N);

// Genus, cusp count and orbifold orders of the level-N curve.
// For N >= 5 the genus comes from
//   g = 1 + N^2/24 * prod over p | N of (1 - 1/p^2) - (1/4) * sum phi(d)phi(N/d),
// evaluated in exact integer arithmetic. N in {2,3,4} are table-driven.
// Throws for N <= 1.
CurveInvariants curve_invariants(std::uint64_t N);

// N^2 * prod over p | N of (1 - 1/p^2), as an exact integer
// (= sum over d | N of mu(d) * (N/d)^2).
std::uint64_t jordan_totient2(std::uint64_t N);

}  // namespace strata::formulas
