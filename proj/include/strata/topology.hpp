#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace strata::topology {

// One cusp of the walls-and-chambers CW structure: an orbit of the step
// x -> x + y mod a with the middle residue y held fixed, taken up to the
// inversion pairing (y, O) ~ (a - y, -O). Orbits may contain the formal
// elements x = 0 or z = 0.
struct CuspClass {
  std::uint64_t a = 0;
  std::uint64_t middle = 0;
  std::vector<std::uint64_t> orbit;
  bool inversion_fixed = false;
};

// Cusps separating the discriminant components of the principal component
// of the stratum of order a. Requires a >= 2.
std::vector<CuspClass> cusp_classes(std::uint64_t a);

struct OrbifoldPoint {
  int order = 0;
  std::string chamber_key;
};

// Full topological summary of the component of rotation number d in the
// stratum of order a, computed at level N = a/d and cross-checked against
// the closed-form curve invariants.
struct ComponentReport {
  std::uint64_t a = 0, d = 0, level = 0;
  std::uint64_t cylinder_chambers = 0;
  std::uint64_t triangle_chambers = 0;
  std::uint64_t balanced_chambers = 0;
  std::uint64_t unbalanced_chambers = 0;
  std::uint64_t walls = 0;
  std::uint64_t discriminant_cusps = 0;
  std::uint64_t interior_cusps = 0;
  std::int64_t euler_characteristic = 0;
  std::uint64_t genus = 0;
  std::vector<OrbifoldPoint> orbifold_points;

  std::uint64_t chambers() const {
    return cylinder_chambers + triangle_chambers + balanced_chambers +
           unbalanced_chambers;
  }
  std::uint64_t punctures() const { return discriminant_cusps + interior_cusps; }
};

// Throws std::invalid_argument for invalid (a, d) and std::logic_error if
// the CW invariants disagree with the closed-form curve invariants.
ComponentReport component_report(std::uint64_t a, std::uint64_t d);

struct CheckFailure {
  std::string identity;
  std::uint64_t a = 0;
  std::string detail;
};

struct ValidationSummary {
  std::uint64_t a_min = 0, a_max = 0;
  std::uint64_t checks_run = 0;
  std::vector<CheckFailure> failures;

  bool ok() const { return failures.empty(); }
};

// Runs every per-level identity for a in [a_min, a_max]: enumeration counts
// vs the closed forms, cusp counts, CW genus, wall degree laws, the dual
// graph construction and divisor-scaling spot checks. Failures are reported
// as data, never thrown. Levels are processed in parallel when OpenMP is
// available and `parallel` is set; the output is order-independent of that
// choice.
ValidationSummary cross_validate(std::uint64_t a_min, std::uint64_t a_max,
                                 bool parallel = true);

}  // namespace strata::topology
