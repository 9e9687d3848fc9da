// Acceptance suite: prints one pass/fail line per criterion and exits
// nonzero if any fails.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "strata/arith.hpp"
#include "strata/chamber.hpp"
#include "strata/formulas.hpp"
#include "strata/graph.hpp"
#include "strata/topology.hpp"
#include "strata/tripartition.hpp"

namespace {

using namespace strata;
using chamber::Kind;

int failures = 0;

void record(int number, const char* name, bool pass, const std::string& detail) {
  std::printf("%s criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", number, name,
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) ++failures;
}

// 1. Prime genus/cusp table, genus computed from the CW complex.
void criterion_prime_table() {
  const auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool pass = true;
  for (std::uint64_t p : {5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
                          47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97}) {
    const auto report = topology::component_report(p, 1);
    if (report.genus != (p - 5) * (p - 7) / 24 || report.punctures() != p - 1) {
      pass = false;
      detail = "mismatch at p=" + std::to_string(p);
      break;
    }
  }
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  if (pass && elapsed.count() >= 5.0) {
    pass = false;
    detail = "runtime " + std::to_string(elapsed.count()) + "s >= 5s";
  }
  record(1, "prime genus/cusp table", pass, detail);
}

// 2. Closed-form vs enumeration sweep on 4..200 (cusps on 5..200).
void criterion_sweep() {
  const auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool pass = true;
  for (std::uint64_t a = 4; a <= 200 && pass; ++a) {
    const auto cf = formulas::principal_chamber_counts(a);
    std::map<Kind, std::uint64_t> by_kind;
    const auto chambers = chamber::enumerate_chambers(a, 1);
    for (const auto& c : chambers) ++by_kind[c.kind];
    const std::uint64_t dt =
        by_kind[Kind::BalancedDegenerate] + by_kind[Kind::UnbalancedDegenerate];
    if (by_kind[Kind::Triangle] != cf.CT || dt != cf.DT ||
        by_kind[Kind::Cylinder] != cf.CC || chambers.size() != cf.C ||
        chamber::enumerate_walls(a, 1).size() != cf.F) {
      pass = false;
      detail = "chamber/wall mismatch at a=" + std::to_string(a);
    }
  }
  for (std::uint64_t a = 5; a <= 200 && pass; ++a) {
    std::uint64_t conv = 0;
    for (std::uint64_t d : arith::divisors(a)) {
      conv += arith::totient(d) * arith::totient(a / d);
    }
    if (topology::cusp_classes(a).size() != (conv - arith::totient(a)) / 2) {
      pass = false;
      detail = "cusp mismatch at a=" + std::to_string(a);
    }
  }
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  if (pass && elapsed.count() >= 30.0) {
    pass = false;
    detail = "runtime " + std::to_string(elapsed.count()) + "s >= 30s";
  }
  record(2, "closed-form vs enumeration sweep 4..200", pass, detail);
}

// 3. Exceptional components (2,1), (3,1), (4,1).
void criterion_exceptional() {
  struct Expected {
    std::uint64_t a, chambers, walls, punctures;
    int orbifold_order;  // 0 = none
  };
  const Expected table[] = {
      {2, 2, 1, 2, 2}, {3, 3, 2, 2, 3}, {4, 4, 4, 3, 0}};
  bool pass = true;
  std::string detail;
  for (const auto& e : table) {
    const auto r = topology::component_report(e.a, 1);
    const bool orbifold_ok =
        e.orbifold_order == 0
            ? r.orbifold_points.empty()
            : (r.orbifold_points.size() == 1 &&
               r.orbifold_points[0].order == e.orbifold_order);
    if (r.chambers() != e.chambers || r.walls != e.walls ||
        r.punctures() != e.punctures || r.genus != 0 || !orbifold_ok) {
      pass = false;
      detail = "mismatch at a=" + std::to_string(e.a);
      break;
    }
  }
  record(3, "exceptional components (2,1), (3,1), (4,1)", pass, detail);
}

// 4. Scaling: chamber_graph(k*a, k) kind-respecting isomorphic to
//    chamber_graph(a, 1) for a*k <= 60.
void criterion_scaling() {
  const auto start = std::chrono::steady_clock::now();
  bool pass = true;
  std::string detail;
  for (std::uint64_t a = 2; a <= 30 && pass; ++a) {
    for (std::uint64_t k = 2; a * k <= 60 && pass; ++k) {
      if (!graph::are_isomorphic(graph::chamber_graph(a * k, k),
                                 graph::chamber_graph(a, 1), true)) {
        pass = false;
        detail = "not isomorphic at a=" + std::to_string(a) +
                 ", k=" + std::to_string(k);
      }
    }
  }
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  if (pass && elapsed.count() >= 60.0) {
    pass = false;
    detail = "runtime " + std::to_string(elapsed.count()) + "s >= 60s";
  }
  record(4, "scaling theorem on a*k <= 60", pass, detail);
}

// 5. Dual construction on 2..60, as identical keyed multigraphs.
void criterion_dual() {
  bool pass = true;
  std::string detail;
  for (std::uint64_t a = 2; a <= 60; ++a) {
    if (graph::chamber_graph(a, 1) != graph::decorated_triangle_graph(a, 1)) {
      pass = false;
      detail = "graphs differ at a=" + std::to_string(a);
      break;
    }
  }
  record(5, "dual construction of G_a on 2..60", pass, detail);
}

// 6. Degree law on 2..100, self-loops counted twice.
void criterion_degree_law() {
  bool pass = true;
  std::string detail;
  for (std::uint64_t a = 2; a <= 100 && pass; ++a) {
    const auto g = graph::chamber_graph(a, 1);
    for (const auto& c : chamber::enumerate_chambers(a, 1)) {
      if (graph::degree(g, c.key()) !=
          static_cast<std::uint64_t>(chamber::boundary_count(c))) {
        pass = false;
        detail = "degree mismatch at a=" + std::to_string(a) + ", " + c.key();
        break;
      }
    }
  }
  record(6, "structural degree law on 2..100", pass, detail);
}

// 7. Sphere levels: CW genus 0 exactly for N in {2..10, 12} within 2..20.
void criterion_sphere_levels() {
  bool pass = true;
  std::string detail;
  for (std::uint64_t N = 2; N <= 20; ++N) {
    const bool sphere = N <= 10 || N == 12;
    if ((topology::component_report(N, 1).genus == 0) != sphere) {
      pass = false;
      detail = "genus wrong at N=" + std::to_string(N);
      break;
    }
  }
  record(7, "sphere levels {2..10, 12}", pass, detail);
}

// 8. Property suites: arithmetic identities, group laws, partner
//    involution, connectivity of G_a and T_a for a <= 100.
void criterion_property_suites() {
  const auto start = std::chrono::steady_clock::now();
  bool pass = true;
  std::string detail;

  for (std::uint64_t n = 1; n <= 10000 && pass; ++n) {
    std::uint64_t phi_sum = 0;
    std::int64_t mu_sum = 0, inv = 0;
    for (std::uint64_t d : arith::divisors(n)) {
      phi_sum += arith::totient(d);
      mu_sum += arith::moebius(d);
      inv += arith::moebius(n / d) * static_cast<std::int64_t>(d);
    }
    if (phi_sum != n || mu_sum != (n == 1 ? 1 : 0) ||
        inv != static_cast<std::int64_t>(arith::totient(n))) {
      pass = false;
      detail = "arith identity failed at n=" + std::to_string(n);
    }
  }

  for (std::uint64_t a = 2; a <= 30 && pass; ++a) {
    for (std::uint64_t x = 0; x < a && pass; ++x) {
      for (std::uint64_t y = 0; y < a && pass; ++y) {
        const auto t = tripartition::make_triplet(a, x, y,
                                                  (2 * a - (x + y) % a) % a);
        using tripartition::apply_s;
        using tripartition::apply_t;
        if (apply_s(apply_s(t)) != t ||
            apply_t(apply_t(apply_t(t))) != t ||
            apply_s(apply_t(t)) != apply_t(apply_s(t))) {
          pass = false;
          detail = "group law failed at a=" + std::to_string(a);
        }
      }
    }
  }

  for (std::uint64_t a = 4; a <= 100 && pass; ++a) {
    for (std::uint64_t x = 1; x + 2 <= a && pass; ++x) {
      for (std::uint64_t y = 1; x + y + 1 <= a; ++y) {
        const tripartition::OrderedTriple t{x, y, a - x - y};
        if (t.x == t.z) continue;
        if (tripartition::partner(tripartition::partner(t)) != t) {
          pass = false;
          detail = "partner not involutive at a=" + std::to_string(a);
          break;
        }
      }
    }
  }

  for (std::uint64_t a = 2; a <= 100 && pass; ++a) {
    if (!graph::is_connected(graph::chamber_graph(a, 1)) ||
        !graph::is_connected(graph::triangle_graph(a, 1))) {
      pass = false;
      detail = "disconnected at a=" + std::to_string(a);
    }
  }

  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  if (pass && elapsed.count() >= 60.0) {
    pass = false;
    detail = "runtime " + std::to_string(elapsed.count()) + "s >= 60s";
  }
  record(8, "property suites (arith, group laws, connectivity)", pass, detail);
}

}  // namespace

int main() {
  criterion_prime_table();
  criterion_sweep();
  criterion_exceptional();
  criterion_scaling();
  criterion_dual();
  criterion_degree_law();
  criterion_sphere_levels();
  criterion_property_suites();
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
