#include "strata/export.hpp"

#include <sstream>

#include <json.hpp>

namespace strata::exports {

using ordered_json = nlohmann::ordered_json;

std::string report_to_json(const topology::ComponentReport& r) {
  ordered_json j;
  j["a"] = r.a;
  j["d"] = r.d;
  j["level"] = r.level;
  j["chambers"] = {{"cylinder", r.cylinder_chambers},
                   {"triangle", r.triangle_chambers},
                   {"balanced", r.balanced_chambers},
                   {"unbalanced", r.unbalanced_chambers}};
  j["walls"] = r.walls;
  j["cusps"] = {{"discriminant", r.discriminant_cusps},
                {"interior", r.interior_cusps},
                {"total", r.punctures()}};
  j["euler"] = r.euler_characteristic;
  j["genus"] = r.genus;
  j["orbifold"] = ordered_json::array();
  for (const auto& p : r.orbifold_points) {
    j["orbifold"].push_back({{"order", p.order}, {"chamber", p.chamber_key}});
  }
  return j.dump(2) + "\n";
}

std::string report_to_text(const topology::ComponentReport& r) {
  std::ostringstream out;
  out << "component (a=" << r.a << ", d=" << r.d << "), level " << r.level
      << "\n";
  out << "  chambers: " << r.chambers() << " (cylinder " << r.cylinder_chambers
      << ", triangle " << r.triangle_chambers << ", balanced "
      << r.balanced_chambers << ", unbalanced " << r.unbalanced_chambers
      << ")\n";
  out << "  walls: " << r.walls << "\n";
  out << "  cusps: " << r.punctures() << " (discriminant "
      << r.discriminant_cusps << ", interior " << r.interior_cusps << ")\n";
  out << "  euler characteristic: " << r.euler_characteristic << "\n";
  out << "  genus: " << r.genus << "\n";
  if (r.orbifold_points.empty()) {
    out << "  orbifold points: none\n";
  } else {
    out << "  orbifold points:\n";
    for (const auto& p : r.orbifold_points) {
      out << "    order " << p.order << " in " << p.chamber_key << "\n";
    }
  }
  return out.str();
}

std::string graph_to_json(const graph::ChamberGraph& g, std::uint64_t a,
                          std::uint64_t d) {
  ordered_json j;
  j["a"] = a;
  j["d"] = d;
  j["vertices"] = ordered_json::array();
  for (const auto& v : g.vertices) {
    j["vertices"].push_back({{"key", v.key},
                             {"kind", chamber::kind_name(v.kind)},
                             {"invariant", v.invariant}});
  }
  j["edges"] = ordered_json::array();
  for (const auto& e : g.edges) {
    j["edges"].push_back({{"key", e.key}, {"u", e.u}, {"v", e.v}});
  }
  return j.dump(2) + "\n";
}

std::string graph_to_dot(const graph::ChamberGraph& g, std::uint64_t a,
                         std::uint64_t d) {
  std::ostringstream out;
  out << "graph \"component_a" << a << "_d" << d << "\" {\n";
  for (const auto& v : g.vertices) {
    // Cylinders: white circles. Triangles: black circles. Degenerate
    // chambers: small black disks.
    const char* style = nullptr;
    switch (v.kind) {
      case chamber::Kind::Cylinder:
        style = "shape=circle, style=filled, fillcolor=white";
        break;
      case chamber::Kind::Triangle:
        style = "shape=circle, style=filled, fillcolor=black";
        break;
      default:
        style = "shape=point, style=filled, fillcolor=black";
        break;
    }
    out << "  \"" << v.key << "\" [" << style << ", kind=\""
        << chamber::kind_name(v.kind) << "\", invariant=\"" << v.invariant
        << "\"];\n";
  }
  for (const auto& e : g.edges) {
    out << "  \"" << e.u << "\" -- \"" << e.v << "\" [label=\"" << e.key
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

namespace {

ordered_json row_to_json(const sweep::TableRow& r) {
  return {{"a", r.a},   {"level", r.level}, {"S", r.S},
          {"F", r.F},   {"CT", r.CT},       {"DT", r.DT},
          {"CC", r.CC}, {"C", r.C},         {"cusps", r.cusps},
          {"genus", r.genus}};
}

}  // namespace

std::string table_to_csv(const std::vector<sweep::TableRow>& rows) {
  std::ostringstream out;
  out << "a,level,S,F,CT,DT,CC,C,cusps,genus\n";
  for (const auto& r : rows) {
    out << r.a << ',' << r.level << ',' << r.S << ',' << r.F << ',' << r.CT
        << ',' << r.DT << ',' << r.CC << ',' << r.C << ',' << r.cusps << ','
        << r.genus << "\n";
  }
  return out.str();
}

std::string table_to_json(const std::vector<sweep::TableRow>& rows) {
  ordered_json j = ordered_json::array();
  for (const auto& r : rows) j.push_back(row_to_json(r));
  return j.dump(2) + "\n";
}

std::string table_to_text(const std::vector<sweep::TableRow>& rows) {
  std::ostringstream out;
  out << "    a level      S      F     CT     DT     CC      C  cusps  genus\n";
  for (const auto& r : rows) {
    auto col = [&](std::uint64_t v, int width) {
      std::string s = std::to_string(v);
      out << std::string(width > static_cast<int>(s.size())
                             ? width - static_cast<int>(s.size())
                             : 1,
                         ' ')
          << s;
    };
    col(r.a, 5);
    col(r.level, 6);
    col(r.S, 7);
    col(r.F, 7);
    col(r.CT, 7);
    col(r.DT, 7);
    col(r.CC, 7);
    col(r.C, 7);
    col(r.cusps, 7);
    col(r.genus, 7);
    out << "\n";
  }
  return out.str();
}

std::string validation_to_json(const topology::ValidationSummary& s) {
  ordered_json j;
  j["a_min"] = s.a_min;
  j["a_max"] = s.a_max;
  j["checks_run"] = s.checks_run;
  j["ok"] = s.ok();
  j["failures"] = ordered_json::array();
  for (const auto& f : s.failures) {
    j["failures"].push_back(
        {{"identity", f.identity}, {"a", f.a}, {"detail", f.detail}});
  }
  return j.dump(2) + "\n";
}

}  // namespace strata::exports
