#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace strata::arith {

// Prime factorization by trial division, as (prime, exponent) pairs in
// increasing prime order. Throws std::invalid_argument for n = 0.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

// Euler's totient: #{k : 1 <= k <= n, gcd(k,n) = 1}.
std::uint64_t totient(std::uint64_t n);

// Moebius function: 0 if n has a squared prime factor, otherwise
// (-1)^(number of prime factors).
int moebius(std::uint64_t n);

// All divisors of n in strictly increasing order, including 1 and n.
std::vector<std::uint64_t> divisors(std::uint64_t n);

}  // namespace strata::arith
