#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "strata/chamber.hpp"

namespace strata::graph {

struct Vertex {
  std::string key;
  chamber::Kind kind = chamber::Kind::Cylinder;
  std::string invariant;

  auto operator<=>(const Vertex&) const = default;
};

// Endpoints are stored with u <= v; self-loops have u == v.
struct Edge {
  std::string key;
  std::string u, v;

  auto operator<=>(const Edge&) const = default;
};

// Undirected multigraph over chamber keys. Self-loops and parallel edges
// are permitted; both lists are kept sorted.
struct ChamberGraph {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  bool operator==(const ChamberGraph&) const = default;
};

// T_a of component (a, d): vertices are triangle chambers, one edge per
// unbalanced degenerate chamber joining the classes of its two boundary
// triplets (a self-loop when they coincide). Empty below level 3.
ChamberGraph triangle_graph(std::uint64_t a, std::uint64_t d);

// G_a of component (a, d): vertices are all chambers, edges are walls.
ChamberGraph chamber_graph(std::uint64_t a, std::uint64_t d);

// The alternative construction of G_a: decorate triangle_graph(a, d) by
// adding a cylinder leaf at every triangle vertex whose class contains an
// element of the form (a-2t, t, t), then subdividing every edge with a
// degenerate vertex. Produces the same keyed multigraph as chamber_graph.
ChamberGraph decorated_triangle_graph(std::uint64_t a, std::uint64_t d);

// Multigraph isomorphism; when respect_kinds is set the bijection must
// preserve kind tags. Canonical-refinement plus backtracking.
bool are_isomorphic(const ChamberGraph& g1, const ChamberGraph& g2,
                    bool respect_kinds);

bool is_connected(const ChamberGraph& g);

// Degree of a vertex, counting self-loops twice.
std::uint64_t degree(const ChamberGraph& g, const std::string& key);

}  // namespace strata::graph
