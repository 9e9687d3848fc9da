#include "strata/topology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "strata/arith.hpp"
#include "strata/chamber.hpp"
#include "strata/formulas.hpp"
#include "strata/graph.hpp"

namespace strata::topology {

namespace {

using chamber::Chamber;
using chamber::Kind;

// Orbits are identified by (middle y, residue r of the orbit mod gcd(y,a)).
// The inversion pairing sends (y, r) to (a-y, -r mod gcd).
struct OrbitId {
  std::uint64_t y = 0, r = 0;

  auto operator<=>(const OrbitId&) const = default;
};

OrbitId inversion_image(std::uint64_t a, const OrbitId& id) {
  const std::uint64_t d = std::gcd(id.y, a);
  return OrbitId{a - id.y, (d - id.r % d) % d};
}

CuspClass build_class(std::uint64_t a, const OrbitId& id, bool fixed) {
  const std::uint64_t d = std::gcd(id.y, a);
  CuspClass c;
  c.a = a;
  c.middle = id.y;
  c.inversion_fixed = fixed;
  c.orbit.reserve(a / d);
  std::uint64_t x = id.r;
  for (std::uint64_t i = 0; i < a / d; ++i) {
    c.orbit.push_back(x);
    x = (x + id.y) % a;
  }
  return c;
}

}  // namespace

std::vector<CuspClass> cusp_classes(std::uint64_t a) {
  if (a < 2) throw std::invalid_argument("cusp_classes: requires a >= 2");
  std::vector<CuspClass> classes;
  for (std::uint64_t y = 1; y < a; ++y) {
    const std::uint64_t d = std::gcd(y, a);
    // Valid orbits are the cosets r + <y> with gcd(r, d) = 1; formal
    // elements x = 0 or x = -y stay inside their orbit.
    for (std::uint64_t r = 0; r < d; ++r) {
      if (std::gcd(r, d) != 1) continue;  // gcd(0, 1) == 1 covers d = 1
      const OrbitId id{y, r};
      const OrbitId image = inversion_image(a, id);
      if (image < id) continue;  // represented by its partner
      classes.push_back(build_class(a, id, image == id));
    }
  }
  return classes;
}

ComponentReport component_report(std::uint64_t a, std::uint64_t d) {
  if (a < 2) throw std::invalid_argument("component_report: requires a >= 2");
  if (d == 0 || a % d != 0 || d >= a) {
    throw std::invalid_argument(
        "component_report: d must be a divisor of a with d < a");
  }
  const std::uint64_t N = a / d;

  ComponentReport report;
  report.a = a;
  report.d = d;
  report.level = N;

  for (const Chamber& c : chamber::enumerate_chambers(N, 1)) {
    switch (c.kind) {
      case Kind::Cylinder: ++report.cylinder_chambers; break;
      case Kind::Triangle: ++report.triangle_chambers; break;
      case Kind::BalancedDegenerate: ++report.balanced_chambers; break;
      case Kind::UnbalancedDegenerate: ++report.unbalanced_chambers; break;
    }
    // Orbifold points, with the carrier invariant scaled back to (a, d).
    if (c.kind == Kind::BalancedDegenerate && c.k == c.kp) {
      report.orbifold_points.push_back(
          OrbifoldPoint{2, chamber::make_balanced(a, c.k * d).key()});
    }
    if (c.kind == Kind::Triangle && c.triangle.rep.x == c.triangle.rep.y &&
        c.triangle.rep.y == c.triangle.rep.z) {
      const auto scaled = tripartition::canonical_class(tripartition::make_triplet(
          a, c.triangle.rep.x * d, c.triangle.rep.y * d, c.triangle.rep.z * d));
      report.orbifold_points.push_back(
          OrbifoldPoint{3, chamber::make_triangle(a, scaled).key()});
    }
  }
  report.walls = chamber::enumerate_walls(N, 1).size();
  report.discriminant_cusps = cusp_classes(N).size();
  report.interior_cusps = report.cylinder_chambers;

  // CW complex: chambers are 2-cells, walls 1-cells, discriminant cusps
  // 0-cells; cylinder-interior cusps are punctures, not cells.
  report.euler_characteristic = static_cast<std::int64_t>(report.chambers()) -
                                static_cast<std::int64_t>(report.walls) +
                                static_cast<std::int64_t>(report.discriminant_cusps);
  if (report.euler_characteristic % 2 != 0 || report.euler_characteristic > 2) {
    throw std::logic_error("component_report: bad Euler characteristic at level " +
                           std::to_string(N));
  }
  report.genus = static_cast<std::uint64_t>((2 - report.euler_characteristic) / 2);

  const formulas::CurveInvariants expected = formulas::curve_invariants(N);
  std::vector<int> orders;
  for (const auto& p : report.orbifold_points) orders.push_back(p.order);
  if (report.genus != expected.genus || report.punctures() != expected.cusps ||
      orders != expected.orbifold_orders) {
    throw std::logic_error(
        "component_report: CW invariants disagree with closed form at level " +
        std::to_string(N));
  }
  return report;
}

namespace {

void check_level(std::uint64_t a, std::vector<CheckFailure>& failures,
                 std::uint64_t& checks) {
  auto fail = [&](const std::string& identity, const std::string& detail) {
    failures.push_back(CheckFailure{identity, a, detail});
  };
  auto expect = [&](const std::string& identity, std::uint64_t got,
                    std::uint64_t want) {
    ++checks;
    if (got != want) {
      fail(identity, "got " + std::to_string(got) + ", expected " +
                         std::to_string(want));
    }
  };

  const auto chambers = chamber::enumerate_chambers(a, 1);
  const auto walls = chamber::enumerate_walls(a, 1);

  std::map<Kind, std::uint64_t> by_kind;
  for (const Chamber& c : chambers) ++by_kind[c.kind];

  if (a >= 4) {
    const auto cf = formulas::principal_chamber_counts(a);
    expect("chamber-count-cylinder", by_kind[Kind::Cylinder], cf.CC);
    expect("chamber-count-triangle", by_kind[Kind::Triangle], cf.CT);
    expect("chamber-count-degenerate",
           by_kind[Kind::BalancedDegenerate] + by_kind[Kind::UnbalancedDegenerate],
           cf.DT);
    expect("chamber-count-total", chambers.size(), cf.C);
  }
  expect("wall-count", walls.size(), formulas::principal_walls(a));

  // Sum of wall counts over all components recovers S_a.
  std::uint64_t all_walls = walls.size();
  for (std::uint64_t d : arith::divisors(a)) {
    if (d == 1 || d == a) continue;
    all_walls += chamber::enumerate_walls(a, d).size();
  }
  expect("wall-count-all-components", all_walls, formulas::total_walls(a));

  // Degree law: wall incidences per chamber match boundary_count.
  std::map<std::string, std::uint64_t> incidences;
  for (const auto& w : walls) {
    ++incidences[w.degenerate_side.key()];
    ++incidences[w.other_side.key()];
  }
  ++checks;
  for (const Chamber& c : chambers) {
    if (incidences[c.key()] != static_cast<std::uint64_t>(boundary_count(c))) {
      fail("degree-law", c.key() + " has " + std::to_string(incidences[c.key()]) +
                             " walls, boundary_count " +
                             std::to_string(boundary_count(c)));
      break;
    }
  }

  // Cusp enumeration vs the closed form.
  const auto cusps = cusp_classes(a);
  if (a >= 5) {
    std::uint64_t conv = 0;
    for (std::uint64_t d : arith::divisors(a)) {
      conv += arith::totient(d) * arith::totient(a / d);
    }
    expect("cusp-count", cusps.size(), (conv - arith::totient(a)) / 2);
  }
  ++checks;
  for (const CuspClass& c : cusps) {
    if (c.orbit.size() != a / std::gcd(c.middle, a)) {
      fail("cusp-orbit-length", "middle " + std::to_string(c.middle));
      break;
    }
  }

  // CW genus and punctures against the curve invariants (the report
  // itself throws on mismatch).
  ++checks;
  try {
    const ComponentReport report = component_report(a, 1);
    expect("punctures", report.punctures(), formulas::cusp_count(a));
  } catch (const std::logic_error& e) {
    fail("cw-genus", e.what());
  }

  // Dual construction of the chamber graph.
  ++checks;
  if (graph::chamber_graph(a, 1) != graph::decorated_triangle_graph(a, 1)) {
    fail("dual-construction", "wall-derived graph differs from decorated T_a");
  }

  // Divisor scaling: component (a, d) has the chamber census of level a/d.
  for (std::uint64_t d : arith::divisors(a)) {
    if (d == 1 || d == a || a / d < 2) continue;
    std::map<Kind, std::uint64_t> scaled;
    for (const Chamber& c : chamber::enumerate_chambers(a, d)) ++scaled[c.kind];
    std::map<Kind, std::uint64_t> base;
    for (const Chamber& c : chamber::enumerate_chambers(a / d, 1)) ++base[c.kind];
    ++checks;
    if (scaled != base) {
      fail("scaling", "component (" + std::to_string(a) + "," + std::to_string(d) +
                          ") census differs from level " + std::to_string(a / d));
    }
  }
}

}  // namespace

ValidationSummary cross_validate(std::uint64_t a_min, std::uint64_t a_max,
                                 bool parallel) {
  if (a_min < 2 || a_min > a_max) {
    throw std::invalid_argument("cross_validate: requires 2 <= a_min <= a_max");
  }
  ValidationSummary summary;
  summary.a_min = a_min;
  summary.a_max = a_max;

  const std::int64_t n = static_cast<std::int64_t>(a_max - a_min + 1);
  std::vector<std::vector<CheckFailure>> failures(n);
  std::vector<std::uint64_t> checks(n, 0);

#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::int64_t i = 0; i < n; ++i) {
    check_level(a_min + static_cast<std::uint64_t>(i), failures[i], checks[i]);
  }

  for (std::int64_t i = 0; i < n; ++i) {
    summary.checks_run += checks[i];
    summary.failures.insert(summary.failures.end(), failures[i].begin(),
                            failures[i].end());
  }
  return summary;
}

}  // namespace strata::topology
