// Command line front end: component reports, graph exports, invariant
// tables and validation sweeps over the walls-and-chambers structure of
// the components of PH(a,-a).
//
// Exit codes: 0 success, 1 validation failure, 2 usage error.

#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "strata/export.hpp"
#include "strata/graph.hpp"
#include "strata/sweep.hpp"
#include "strata/topology.hpp"

namespace {

constexpr int kExitValidationFailure = 1;
constexpr int kExitUsageError = 2;

struct ReportArgs {
  std::uint64_t a = 0;
  std::uint64_t d = 1;
  std::string format = "text";
};

struct GraphArgs {
  std::uint64_t a = 0;
  std::uint64_t d = 1;
  std::string which = "chambers";
  std::string format = "dot";
};

struct TableArgs {
  std::uint64_t a_min = 0;
  std::uint64_t a_max = 0;
  std::string format = "text";
  bool serial = false;
};

struct VerifyArgs {
  std::uint64_t a_min = 0;
  std::uint64_t a_max = 0;
  bool serial = false;
};

int run_report(const ReportArgs& args) {
  const auto report = strata::topology::component_report(args.a, args.d);
  if (args.format == "json") {
    std::cout << strata::exports::report_to_json(report);
  } else {
    std::cout << strata::exports::report_to_text(report);
  }
  return 0;
}

int run_graph(const GraphArgs& args) {
  const strata::graph::ChamberGraph g =
      args.which == "triangles" ? strata::graph::triangle_graph(args.a, args.d)
                                : strata::graph::chamber_graph(args.a, args.d);
  if (args.format == "json") {
    std::cout << strata::exports::graph_to_json(g, args.a, args.d);
  } else {
    std::cout << strata::exports::graph_to_dot(g, args.a, args.d);
  }
  return 0;
}

int run_table(const TableArgs& args) {
  const auto rows = args.serial
                        ? strata::sweep::invariant_table_serial(args.a_min, args.a_max)
                        : strata::sweep::invariant_table_parallel(args.a_min,
                                                                  args.a_max);
  if (args.format == "csv") {
    std::cout << strata::exports::table_to_csv(rows);
  } else if (args.format == "json") {
    std::cout << strata::exports::table_to_json(rows);
  } else {
    std::cout << strata::exports::table_to_text(rows);
  }
  return 0;
}

int run_verify(const VerifyArgs& args) {
  const auto summary =
      strata::topology::cross_validate(args.a_min, args.a_max, !args.serial);
  std::cout << strata::exports::validation_to_json(summary);
  return summary.ok() ? 0 : kExitValidationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"walls-and-chambers combinatorics of the components of PH(a,-a)"};
  app.require_subcommand(1);

  ReportArgs report_args;
  auto* report = app.add_subcommand(
      "report", "topological summary of one connected component");
  report->add_option("a", report_args.a, "stratum order (a >= 2)")->required();
  report->add_option("--component", report_args.d,
                     "rotation number d (divisor of a, d < a)");
  report->add_option("--format", report_args.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  GraphArgs graph_args;
  auto* graph = app.add_subcommand(
      "graph", "chamber adjacency graph of one connected component");
  graph->add_option("a", graph_args.a, "stratum order (a >= 2)")->required();
  graph->add_option("--component", graph_args.d,
                    "rotation number d (divisor of a, d < a)");
  graph->add_option("--which", graph_args.which, "chambers|triangles")
      ->check(CLI::IsMember({"chambers", "triangles"}));
  graph->add_option("--format", graph_args.format, "dot|json")
      ->check(CLI::IsMember({"dot", "json"}));

  TableArgs table_args;
  auto* table =
      app.add_subcommand("table", "invariant table for a range of levels");
  table->add_option("a_min", table_args.a_min, "first level (>= 2)")->required();
  table->add_option("a_max", table_args.a_max, "last level")->required();
  table->add_option("--format", table_args.format, "text|csv|json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  table->add_flag("--serial", table_args.serial,
                  "disable OpenMP fan-out over levels");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand(
      "verify", "cross-validate enumeration against the closed forms");
  verify->add_option("a_min", verify_args.a_min, "first level (>= 2)")->required();
  verify->add_option("a_max", verify_args.a_max, "last level")->required();
  verify->add_flag("--serial", verify_args.serial,
                   "disable OpenMP fan-out over levels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsageError;
  }

  try {
    if (report->parsed()) return run_report(report_args);
    if (graph->parsed()) return run_graph(graph_args);
    if (table->parsed()) return run_table(table_args);
    if (verify->parsed()) return run_verify(verify_args);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsageError;
  } catch (const std::logic_error& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kExitValidationFailure;
  }
  return kExitUsageError;
}
