#include "strata/chamber.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace strata::chamber {

namespace tp = strata::tripartition;

const char* kind_name(Kind kind) {
  switch (kind) {
    case Kind::Cylinder: return "cylinder";
    case Kind::Triangle: return "triangle";
    case Kind::BalancedDegenerate: return "balanced";
    case Kind::UnbalancedDegenerate: return "unbalanced";
  }
  return "?";
}

namespace {

std::string pair_string(std::uint64_t k, std::uint64_t kp) {
  return std::to_string(k) + "," + std::to_string(kp);
}

void check_component(std::uint64_t a, std::uint64_t d, const char* where) {
  if (a < 2) throw std::invalid_argument(std::string(where) + ": requires a >= 2");
  if (d == 0 || a % d != 0 || d >= a) {
    throw std::invalid_argument(std::string(where) +
                                ": d must be a divisor of a with d < a");
  }
}

// Canonical triangle class of an ordered tripartition, as residues mod a.
tp::CyclicClass class_of(std::uint64_t a, const tp::OrderedTriple& t) {
  return tp::canonical_class(tp::make_triplet(a, t.x % a, t.y % a, t.z % a));
}

}  // namespace

std::string Chamber::key() const {
  switch (kind) {
    case Kind::Cylinder: return "cyl:" + pair_string(k, kp);
    case Kind::BalancedDegenerate: return "bal:" + pair_string(k, kp);
    case Kind::Triangle:
      return "tri:" + std::to_string(triangle.rep.x) + "," +
             std::to_string(triangle.rep.y) + "," + std::to_string(triangle.rep.z);
    case Kind::UnbalancedDegenerate: return "unb:" + tp::to_string(t1);
  }
  return "?";
}

std::string Chamber::invariant_string() const {
  switch (kind) {
    case Kind::Cylinder:
    case Kind::BalancedDegenerate:
      return std::to_string(k) + "+" + std::to_string(kp);
    case Kind::Triangle:
      return "(" + std::to_string(triangle.rep.x) + "," +
             std::to_string(triangle.rep.y) + "," +
             std::to_string(triangle.rep.z) + ")";
    case Kind::UnbalancedDegenerate:
      return "(" + tp::to_string(t1) + ")~(" + tp::to_string(t2) + ")";
  }
  return "?";
}

Chamber make_cylinder(std::uint64_t a, std::uint64_t k) {
  if (k == 0 || k > a - k) throw std::invalid_argument("make_cylinder: need 1 <= k <= a-k");
  Chamber c;
  c.a = a;
  c.kind = Kind::Cylinder;
  c.k = k;
  c.kp = a - k;
  return c;
}

Chamber make_balanced(std::uint64_t a, std::uint64_t k) {
  Chamber c = make_cylinder(a, k);
  c.kind = Kind::BalancedDegenerate;
  return c;
}

Chamber make_triangle(std::uint64_t a, const tp::CyclicClass& cls) {
  if (cls.rep.a != a) throw std::invalid_argument("make_triangle: modulus mismatch");
  Chamber c;
  c.a = a;
  c.kind = Kind::Triangle;
  c.triangle = cls;
  return c;
}

Chamber make_unbalanced(std::uint64_t a, const tp::OrderedTriple& t) {
  if (t.total() != a) throw std::invalid_argument("make_unbalanced: parts must sum to a");
  const tp::OrderedTriple p = tp::partner(t);
  Chamber c;
  c.a = a;
  c.kind = Kind::UnbalancedDegenerate;
  c.t1 = std::min(t, p);
  c.t2 = std::max(t, p);
  return c;
}

std::uint64_t rotation_number(const Chamber& c) {
  switch (c.kind) {
    case Kind::Cylinder:
    case Kind::BalancedDegenerate:
      return std::gcd(c.k, c.a);
    case Kind::Triangle:
      return c.triangle.gcd_label;
    case Kind::UnbalancedDegenerate:
      return std::gcd(std::gcd(c.t1.x, c.t1.y), c.t1.z);
  }
  return 0;
}

int boundary_count(const Chamber& c) {
  switch (c.kind) {
    case Kind::Cylinder: return 1;
    case Kind::Triangle:
      return (c.triangle.rep.x == c.triangle.rep.y &&
              c.triangle.rep.y == c.triangle.rep.z)
                 ? 1
                 : 3;
    case Kind::BalancedDegenerate: return c.k == c.kp ? 1 : 2;
    case Kind::UnbalancedDegenerate: return 2;
  }
  return 0;
}

std::vector<Chamber> enumerate_chambers(std::uint64_t a, std::uint64_t d) {
  check_component(a, d, "enumerate_chambers");
  std::vector<Chamber> chambers;

  // Cylinder and balanced degenerate chambers: one each per unordered
  // partition k + kp = a with gcd(k, a) = d.
  for (std::uint64_t k = 1; 2 * k <= a; ++k) {
    if (std::gcd(k, a) != d) continue;
    chambers.push_back(make_cylinder(a, k));
    chambers.push_back(make_balanced(a, k));
  }

  // Triangle chambers: one per cyclic tripartition class with gcd label d.
  if (a / d >= 3) {
    for (const auto& cls : tp::enumerate_classes(a, d)) {
      chambers.push_back(make_triangle(a, cls));
    }
  }

  // Unbalanced degenerate chambers: one per partner pair of ordered
  // tripartitions with gcd d. Keyed by the lexicographically smaller triplet.
  for (std::uint64_t x = 1; x + 2 <= a; ++x) {
    for (std::uint64_t y = 1; x + y + 1 <= a; ++y) {
      const std::uint64_t z = a - x - y;
      if (z == x) continue;
      if (std::gcd(std::gcd(x, y), z) != d) continue;
      const tp::OrderedTriple t{x, y, z};
      if (tp::partner(t) < t) continue;  // emit each pair once
      chambers.push_back(make_unbalanced(a, t));
    }
  }

  std::sort(chambers.begin(), chambers.end(),
            [](const Chamber& l, const Chamber& r) { return l.key() < r.key(); });
  return chambers;
}

std::vector<Wall> enumerate_walls(std::uint64_t a, std::uint64_t d) {
  check_component(a, d, "enumerate_walls");
  std::vector<Wall> walls;

  for (const Chamber& c : enumerate_chambers(a, d)) {
    if (c.kind == Kind::BalancedDegenerate) {
      // Wall to the cylinder chamber of the same partition. The limiting
      // surface has angles pi, 2k.pi, pi, 2kp.pi.
      Wall to_cyl;
      to_cyl.id = "wall:" + c.key() + ":cyl";
      to_cyl.degenerate_side = c;
      to_cyl.other_side = make_cylinder(a, c.k);
      to_cyl.angle_signature = {1, 2 * c.k, 1, 2 * c.kp};
      walls.push_back(std::move(to_cyl));

      // Second wall, to the triangle of class (k, k, kp - k); only when
      // k < kp. Limit angles 2k.pi, pi, 2k.pi, (2kp - 2k + 1).pi.
      if (c.k < c.kp) {
        Wall to_tri;
        to_tri.id = "wall:" + c.key() + ":tri";
        to_tri.degenerate_side = c;
        to_tri.other_side =
            make_triangle(a, class_of(a, tp::OrderedTriple{c.k, c.k, c.kp - c.k}));
        to_tri.angle_signature = {2 * c.k, 1, 2 * c.k, 2 * c.kp - 2 * c.k + 1};
        walls.push_back(std::move(to_tri));
      }
    } else if (c.kind == Kind::UnbalancedDegenerate) {
      // One wall per boundary triplet; the two may name the same triangle
      // chamber (parallel edges in the graph). Limit angles for boundary
      // triplet (x,y,z): pi, 2x.pi, (2y+1).pi, 2z.pi.
      const char* tags[2] = {":a", ":b"};
      const tp::OrderedTriple triples[2] = {c.t1, c.t2};
      for (int i = 0; i < 2; ++i) {
        Wall w;
        w.id = "wall:" + c.key() + tags[i];
        w.degenerate_side = c;
        w.other_side = make_triangle(a, class_of(a, triples[i]));
        w.angle_signature = {1, 2 * triples[i].x, 2 * triples[i].y + 1,
                             2 * triples[i].z};
        walls.push_back(std::move(w));
      }
    }
  }

  std::sort(walls.begin(), walls.end(),
            [](const Wall& l, const Wall& r) { return l.id < r.id; });
  return walls;
}

}  // namespace strata::chamber
