#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace strata::tripartition {

// A triple of residues mod a with x + y + z = 0 (mod a). Zero coordinates
// are allowed here; membership in the tripartition sets additionally
// requires all coordinates nonzero.
struct Triplet {
  std::uint64_t a = 0;
  std::uint64_t x = 0, y = 0, z = 0;

  auto operator<=>(const Triplet&) const = default;
};

// Validating constructor; throws std::invalid_argument if a < 2, a
// coordinate is out of range or the coordinates do not sum to 0 mod a.
Triplet make_triplet(std::uint64_t a, std::uint64_t x, std::uint64_t y,
                     std::uint64_t z);

// Coordinatewise negation mod a; involutive.
Triplet apply_s(const Triplet& t);

// Left cyclic rotation (x,y,z) -> (y,z,x); order 3.
Triplet apply_t(const Triplet& t);

bool all_nonzero(const Triplet& t);

// An orbit of a triplet with nonzero coordinates under the order-6 group
// generated by negation and rotation, named by its lexicographically
// least member. gcd_label = gcd(x, y, z, a) on representatives in 1..a-1.
struct CyclicClass {
  Triplet rep;
  std::uint64_t gcd_label = 0;

  auto operator<=>(const CyclicClass&) const = default;
};

// Full group orbit of t (up to 6 elements), sorted and deduplicated.
// Requires all coordinates nonzero.
std::vector<Triplet> orbit(const Triplet& t);

// Canonical class of t. Requires all coordinates nonzero.
CyclicClass canonical_class(const Triplet& t);

// All cyclic tripartition classes of a with gcd label k, sorted by
// representative. Requires k | a and k < a; empty when no class exists.
std::vector<CyclicClass> enumerate_classes(std::uint64_t a, std::uint64_t k);

// An ordered tripartition of a into positive integer parts.
struct OrderedTriple {
  std::uint64_t x = 0, y = 0, z = 0;

  std::uint64_t total() const { return x + y + z; }
  auto operator<=>(const OrderedTriple&) const = default;
};

std::string to_string(const OrderedTriple& t);

// The second ordered tripartition naming the same unbalanced chamber:
// (x+y, z-x, x) when z > x, (z, x-z, y+z) when x > z. Involutive.
// Throws std::invalid_argument when x = z.
OrderedTriple partner(const OrderedTriple& t);

}  // namespace strata::tripartition
