#pragma once

#include <cstdint>
#include <vector>

#include "strata/topology.hpp"

namespace strata::sweep {

// One row of the invariant table for the principal component at level a.
struct TableRow {
  std::uint64_t a = 0;
  std::uint64_t level = 0;
  std::uint64_t S = 0, F = 0;
  std::uint64_t CT = 0, DT = 0, CC = 0, C = 0;
  std::uint64_t cusps = 0;
  std::uint64_t genus = 0;

  bool operator==(const TableRow&) const = default;
};

TableRow table_row(std::uint64_t a);

// Rows for a in [a_min, a_max]. The parallel variant fans the levels out
// over OpenMP threads; both produce identical output.
std::vector<TableRow> invariant_table_serial(std::uint64_t a_min,
                                             std::uint64_t a_max);
std::vector<TableRow> invariant_table_parallel(std::uint64_t a_min,
                                               std::uint64_t a_max);

}  // namespace strata::sweep
