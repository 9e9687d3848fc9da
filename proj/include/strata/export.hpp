#pragma once

#include <string>
#include <vector>

#include "strata/graph.hpp"
#include "strata/sweep.hpp"
#include "strata/topology.hpp"

namespace strata::exports {

// All outputs are deterministic: equal inputs give byte-identical text.

std::string report_to_json(const topology::ComponentReport& report);
std::string report_to_text(const topology::ComponentReport& report);

std::string graph_to_json(const graph::ChamberGraph& g, std::uint64_t a,
                          std::uint64_t d);
std::string graph_to_dot(const graph::ChamberGraph& g, std::uint64_t a,
                         std::uint64_t d);

std::string table_to_csv(const std::vector<sweep::TableRow>& rows);
std::string table_to_json(const std::vector<sweep::TableRow>& rows);
std::string table_to_text(const std::vector<sweep::TableRow>& rows);

std::string validation_to_json(const topology::ValidationSummary& summary);

}  // namespace strata::exports
