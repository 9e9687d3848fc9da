#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "strata/tripartition.hpp"

namespace strata::chamber {

enum class Kind { Cylinder, Triangle, BalancedDegenerate, UnbalancedDegenerate };

const char* kind_name(Kind kind);

// One chamber of a connected component, carrying the discrete invariant of
// its kind. Cylinder and BalancedDegenerate: an unordered pair k + kp = a
// with k <= kp. Triangle: a cyclic tripartition class. UnbalancedDegenerate:
// a pair of partner-related ordered tripartitions, t1 the lexicographic
// minimum of the two and t2 = partner(t1).
struct Chamber {
  std::uint64_t a = 0;
  Kind kind = Kind::Cylinder;
  std::uint64_t k = 0, kp = 0;
  tripartition::CyclicClass triangle;
  tripartition::OrderedTriple t1, t2;

  // Deterministic identity, e.g. "cyl:1,4", "bal:2,3", "tri:1,1,3",
  // "unb:1,1,3".
  std::string key() const;
  // Human-readable invariant, e.g. "1+4" or "(1,1,3)~(2,2,1)".
  std::string invariant_string() const;

  bool operator==(const Chamber& other) const { return key() == other.key(); }
};

Chamber make_cylinder(std::uint64_t a, std::uint64_t k);
Chamber make_balanced(std::uint64_t a, std::uint64_t k);
Chamber make_triangle(std::uint64_t a, const tripartition::CyclicClass& cls);
Chamber make_unbalanced(std::uint64_t a, const tripartition::OrderedTriple& t);

// gcd of the invariant entries together with a; a proper divisor of a.
std::uint64_t rotation_number(const Chamber& c);

// Number of boundary components of the chamber: cylinders 1; triangles 3,
// or 1 for the (b,b,b) class; balanced 2, or 1 when k = kp; unbalanced 2.
int boundary_count(const Chamber& c);

// Every chamber of the component of rotation number d inside the stratum of
// order a, sorted by key. Requires d | a and d < a.
std::vector<Chamber> enumerate_chambers(std::uint64_t a, std::uint64_t d);

// One discriminant component. Exactly one side is of degenerate kind; the
// other is a cylinder or triangle chamber. Angle magnitudes are stored in
// units of pi as diagnostics of the limiting degenerate surface.
struct Wall {
  std::string id;
  Chamber degenerate_side;
  Chamber other_side;
  std::array<std::uint64_t, 4> angle_signature{};
};

// All walls of the component, generated from the degenerate side and sorted
// by id. Preconditions as enumerate_chambers.
std::vector<Wall> enumerate_walls(std::uint64_t a, std::uint64_t d);

}  // namespace strata::chamber
