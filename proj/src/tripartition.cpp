#include "strata/tripartition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace strata::tripartition {

Triplet make_triplet(std::uint64_t a, std::uint64_t x, std::uint64_t y,
                     std::uint64_t z) {
  if (a < 2) throw std::invalid_argument("make_triplet: modulus must be >= 2");
  if (x >= a || y >= a || z >= a) {
    throw std::invalid_argument("make_triplet: coordinate out of range");
  }
  if ((x + y + z) % a != 0) {
    throw std::invalid_argument("make_triplet: coordinates must sum to 0 mod a");
  }
  return Triplet{a, x, y, z};
}

Triplet apply_s(const Triplet& t) {
  auto neg = [&](std::uint64_t v) { return v == 0 ? 0 : t.a - v; };
  return Triplet{t.a, neg(t.x), neg(t.y), neg(t.z)};
}

Triplet apply_t(const Triplet& t) { return Triplet{t.a, t.y, t.z, t.x}; }

bool all_nonzero(const Triplet& t) { return t.x != 0 && t.y != 0 && t.z != 0; }

std::vector<Triplet> orbit(const Triplet& t) {
  if (!all_nonzero(t)) {
    throw std::invalid_argument("orbit: coordinates must be nonzero");
  }
  std::vector<Triplet> elems;
  Triplet r = t;
  for (int i = 0; i < 3; ++i) {
    elems.push_back(r);
    elems.push_back(apply_s(r));
    r = apply_t(r);
  }
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return elems;
}

CyclicClass canonical_class(const Triplet& t) {
  const std::vector<Triplet> elems = orbit(t);
  const std::uint64_t g = std::gcd(std::gcd(t.x, t.y), std::gcd(t.z, t.a));
  return CyclicClass{elems.front(), g};
}

std::vector<CyclicClass> enumerate_classes(std::uint64_t a, std::uint64_t k) {
  if (a < 2) throw std::invalid_argument("enumerate_classes: requires a >= 2");
  if (k == 0 || a % k != 0 || k >= a) {
    throw std::invalid_argument("enumerate_classes: k must divide a, k < a");
  }
  std::vector<CyclicClass> classes;
  for (std::uint64_t x = 1; x < a; ++x) {
    for (std::uint64_t y = 1; y < a; ++y) {
      const std::uint64_t z = (2 * a - x - y) % a;
      if (z == 0) continue;
      const std::uint64_t g = std::gcd(std::gcd(x, y), std::gcd(z, a));
      if (g != k) continue;
      classes.push_back(canonical_class(Triplet{a, x, y, z}));
    }
  }
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  return classes;
}

std::string to_string(const OrderedTriple& t) {
  return std::to_string(t.x) + "," + std::to_string(t.y) + "," +
         std::to_string(t.z);
}

OrderedTriple partner(const OrderedTriple& t) {
  if (t.x == 0 || t.y == 0 || t.z == 0) {
    throw std::invalid_argument("partner: parts must be positive");
  }
  if (t.x == t.z) {
    throw std::invalid_argument("partner: requires x != z (balanced invariant)");
  }
  if (t.z > t.x) return OrderedTriple{t.x + t.y, t.z - t.x, t.x};
  return OrderedTriple{t.z, t.x - t.z, t.y + t.z};
}

}  // namespace strata::tripartition
