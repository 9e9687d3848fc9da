#include "strata/sweep.hpp"

#include <stdexcept>

#include "strata/formulas.hpp"

namespace strata::sweep {

TableRow table_row(std::uint64_t a) {
  const topology::ComponentReport report = topology::component_report(a, 1);
  TableRow row;
  row.a = a;
  row.level = report.level;
  row.S = formulas::total_walls(a);
  row.F = formulas::principal_walls(a);
  row.CT = report.triangle_chambers;
  row.DT = report.balanced_chambers + report.unbalanced_chambers;
  row.CC = report.cylinder_chambers;
  row.C = report.chambers();
  row.cusps = report.punctures();
  row.genus = report.genus;
  return row;
}

namespace {

std::vector<TableRow> invariant_table(std::uint64_t a_min, std::uint64_t a_max,
                                      bool parallel) {
  if (a_min < 2 || a_min > a_max) {
    throw std::invalid_argument("invariant_table: requires 2 <= a_min <= a_max");
  }
  const std::int64_t n = static_cast<std::int64_t>(a_max - a_min + 1);
  std::vector<TableRow> rows(n);

#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::int64_t i = 0; i < n; ++i) {
    rows[i] = table_row(a_min + static_cast<std::uint64_t>(i));
  }
  return rows;
}

}  // namespace

std::vector<TableRow> invariant_table_serial(std::uint64_t a_min,
                                             std::uint64_t a_max) {
  return invariant_table(a_min, a_max, false);
}

std::vector<TableRow> invariant_table_parallel(std::uint64_t a_min,
                                               std::uint64_t a_max) {
  return invariant_table(a_min, a_max, true);
}

}  // namespace strata::sweep
