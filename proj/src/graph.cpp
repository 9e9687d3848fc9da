#include "strata/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace strata::graph {

namespace tp = strata::tripartition;
using chamber::Chamber;
using chamber::Kind;

namespace {

Vertex vertex_of(const Chamber& c) {
  return Vertex{c.key(), c.kind, c.invariant_string()};
}

Edge make_edge(std::string key, std::string u, std::string v) {
  if (v < u) std::swap(u, v);
  return Edge{std::move(key), std::move(u), std::move(v)};
}

void sort_graph(ChamberGraph& g) {
  std::sort(g.vertices.begin(), g.vertices.end());
  std::sort(g.edges.begin(), g.edges.end());
}

// Parse "x,y,z" out of an "unb:x,y,z" key.
tp::OrderedTriple parse_unb_key(const std::string& key) {
  tp::OrderedTriple t;
  std::uint64_t* out[3] = {&t.x, &t.y, &t.z};
  std::size_t pos = key.find(':') + 1;
  for (int i = 0; i < 3; ++i) {
    std::size_t next = key.find(',', pos);
    *out[i] = std::stoull(key.substr(pos, next - pos));
    pos = next + 1;
  }
  return t;
}

std::string triangle_key_of(std::uint64_t a, const tp::OrderedTriple& t) {
  return chamber::make_triangle(
             a, tp::canonical_class(tp::make_triplet(a, t.x % a, t.y % a, t.z % a)))
      .key();
}

}  // namespace

ChamberGraph triangle_graph(std::uint64_t a, std::uint64_t d) {
  ChamberGraph g;
  for (const Chamber& c : chamber::enumerate_chambers(a, d)) {
    if (c.kind == Kind::Triangle) {
      g.vertices.push_back(vertex_of(c));
    } else if (c.kind == Kind::UnbalancedDegenerate) {
      g.edges.push_back(make_edge(c.key(), triangle_key_of(a, c.t1),
                                  triangle_key_of(a, c.t2)));
    }
  }
  sort_graph(g);
  return g;
}

ChamberGraph chamber_graph(std::uint64_t a, std::uint64_t d) {
  ChamberGraph g;
  for (const Chamber& c : chamber::enumerate_chambers(a, d)) {
    g.vertices.push_back(vertex_of(c));
  }
  for (const chamber::Wall& w : chamber::enumerate_walls(a, d)) {
    g.edges.push_back(make_edge(w.id, w.degenerate_side.key(), w.other_side.key()));
  }
  sort_graph(g);
  return g;
}

ChamberGraph decorated_triangle_graph(std::uint64_t a, std::uint64_t d) {
  if (a < 2 || d == 0 || a % d != 0 || d >= a) {
    throw std::invalid_argument("decorated_triangle_graph: invalid (a, d)");
  }
  const std::uint64_t level = a / d;
  if (level == 2) {
    // No triangle chambers; the component is the single path
    // cylinder -- balanced.
    ChamberGraph g;
    const Chamber cyl = chamber::make_cylinder(a, d);
    const Chamber bal = chamber::make_balanced(a, d);
    g.vertices = {vertex_of(cyl), vertex_of(bal)};
    g.edges = {make_edge("wall:" + bal.key() + ":cyl", bal.key(), cyl.key())};
    sort_graph(g);
    return g;
  }

  const ChamberGraph base = triangle_graph(a, d);
  ChamberGraph g;
  g.vertices = base.vertices;

  // Leaf rule: a cylinder hangs off every triangle class containing an
  // element of the form (a-2t, t, t); the connecting edge is subdivided by
  // the balanced chamber of the matching partition.
  for (const Vertex& v : base.vertices) {
    // Recover the class representative from the key ("tri:x,y,z").
    const tp::OrderedTriple rep = parse_unb_key(v.key);
    for (const tp::Triplet& e :
         tp::orbit(tp::make_triplet(a, rep.x, rep.y, rep.z))) {
      if (e.y != e.z) continue;
      const std::uint64_t k = std::min(e.y, a - e.y);
      const Chamber cyl = chamber::make_cylinder(a, k);
      const Chamber bal = chamber::make_balanced(a, k);
      g.vertices.push_back(vertex_of(cyl));
      g.vertices.push_back(vertex_of(bal));
      g.edges.push_back(
          make_edge("wall:" + bal.key() + ":cyl", bal.key(), cyl.key()));
      g.edges.push_back(make_edge("wall:" + bal.key() + ":tri", bal.key(), v.key));
      break;
    }
  }

  // Subdivision rule: each edge of T_a becomes an unbalanced vertex with one
  // wall per boundary triplet.
  for (const Edge& e : base.edges) {
    const tp::OrderedTriple t1 = parse_unb_key(e.key);
    const tp::OrderedTriple t2 = tp::partner(t1);
    const Chamber unb = chamber::make_unbalanced(a, t1);
    g.vertices.push_back(vertex_of(unb));
    g.edges.push_back(
        make_edge("wall:" + e.key + ":a", e.key, triangle_key_of(a, t1)));
    g.edges.push_back(
        make_edge("wall:" + e.key + ":b", e.key, triangle_key_of(a, t2)));
  }

  sort_graph(g);
  return g;
}

std::uint64_t degree(const ChamberGraph& g, const std::string& key) {
  std::uint64_t deg = 0;
  for (const Edge& e : g.edges) {
    if (e.u == key) ++deg;
    if (e.v == key) ++deg;
  }
  return deg;
}

bool is_connected(const ChamberGraph& g) {
  const std::size_t n = g.vertices.size();
  if (n <= 1) return true;
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[g.vertices[i].key] = i;

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : g.edges) {
    parent[find(index.at(e.u))] = find(index.at(e.v));
  }
  const std::size_t root = find(0);
  for (std::size_t i = 1; i < n; ++i) {
    if (find(i) != root) return false;
  }
  return true;
}

namespace {

// Indexed multigraph view used by the isomorphism search. Self-loops are
// stored once at adj[i][i].
struct IsoView {
  std::size_t n = 0;
  std::vector<int> kind;
  std::vector<std::map<std::size_t, std::uint64_t>> adj;
  std::vector<int> color;
};

IsoView build_view(const ChamberGraph& g, bool respect_kinds) {
  IsoView view;
  view.n = g.vertices.size();
  view.kind.resize(view.n, 0);
  view.adj.resize(view.n);
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < view.n; ++i) {
    index[g.vertices[i].key] = i;
    if (respect_kinds) view.kind[i] = static_cast<int>(g.vertices[i].kind);
  }
  for (const Edge& e : g.edges) {
    const std::size_t u = index.at(e.u);
    const std::size_t v = index.at(e.v);
    ++view.adj[u][v];
    if (u != v) ++view.adj[v][u];
  }
  return view;
}

using Signature = std::vector<std::uint64_t>;

// Jointly refine colors on both graphs until stable; returns false when the
// color histograms ever disagree (certain non-isomorphism).
bool refine_colors(IsoView& g1, IsoView& g2) {
  g1.color.assign(g1.n, 0);
  g2.color.assign(g2.n, 0);
  for (std::size_t round = 0; round < g1.n + 2; ++round) {
    std::map<Signature, int> palette;
    auto signature_of = [](const IsoView& g, std::size_t i) {
      std::vector<std::pair<std::int64_t, std::uint64_t>> nbrs;
      for (const auto& [j, mult] : g.adj[i]) {
        nbrs.emplace_back(j == i ? -1 : g.color[j], mult);
      }
      std::sort(nbrs.begin(), nbrs.end());
      Signature sig{static_cast<std::uint64_t>(g.kind[i]),
                    static_cast<std::uint64_t>(g.color[i])};
      for (const auto& [c, m] : nbrs) {
        sig.push_back(static_cast<std::uint64_t>(c + 2));
        sig.push_back(m);
      }
      return sig;
    };
    std::vector<int> next1(g1.n), next2(g2.n);
    for (std::size_t i = 0; i < g1.n; ++i) {
      next1[i] = palette.emplace(signature_of(g1, i), static_cast<int>(palette.size()))
                     .first->second;
    }
    for (std::size_t i = 0; i < g2.n; ++i) {
      auto it = palette.find(signature_of(g2, i));
      if (it == palette.end()) return false;
      next2[i] = it->second;
    }
    std::map<int, std::size_t> hist1, hist2;
    for (int c : next1) ++hist1[c];
    for (int c : next2) ++hist2[c];
    if (hist1 != hist2) return false;
    const bool stable = next1 == g1.color && next2 == g2.color;
    g1.color = std::move(next1);
    g2.color = std::move(next2);
    if (stable) break;
  }
  return true;
}

// Visit order: BFS from the rarest color, so each new vertex is pinned by
// an already-mapped neighbor whenever the graph is connected.
std::vector<std::size_t> search_order(const IsoView& g) {
  std::map<int, std::size_t> color_count;
  for (std::size_t i = 0; i < g.n; ++i) ++color_count[g.color[i]];
  std::vector<bool> seen(g.n, false);
  std::vector<std::size_t> order;
  order.reserve(g.n);
  while (order.size() < g.n) {
    std::size_t start = g.n;
    for (std::size_t i = 0; i < g.n; ++i) {
      if (seen[i]) continue;
      if (start == g.n ||
          color_count[g.color[i]] < color_count[g.color[start]]) {
        start = i;
      }
    }
    std::vector<std::size_t> queue{start};
    seen[start] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t u = queue[head];
      order.push_back(u);
      for (const auto& [v, mult] : g.adj[u]) {
        if (!seen[v]) {
          seen[v] = true;
          queue.push_back(v);
        }
      }
    }
  }
  return order;
}

bool match(const IsoView& g1, const IsoView& g2,
           const std::vector<std::size_t>& order, std::vector<std::size_t>& map12,
           std::vector<bool>& used, std::size_t step) {
  if (step == g1.n) return true;
  const std::size_t i = order[step];
  auto mult = [](const IsoView& g, std::size_t u, std::size_t v) {
    auto it = g.adj[u].find(v);
    return it == g.adj[u].end() ? std::uint64_t{0} : it->second;
  };
  for (std::size_t j = 0; j < g2.n; ++j) {
    if (used[j] || g1.color[i] != g2.color[j]) continue;
    bool ok = mult(g1, i, i) == mult(g2, j, j);
    // Multiplicities against everything already mapped.
    for (std::size_t s = 0; ok && s < step; ++s) {
      const std::size_t k = order[s];
      if (mult(g1, i, k) != mult(g2, j, map12[k])) ok = false;
    }
    if (!ok) continue;
    used[j] = true;
    map12[i] = j;
    if (match(g1, g2, order, map12, used, step + 1)) return true;
    used[j] = false;
    map12[i] = static_cast<std::size_t>(-1);
  }
  return false;
}

}  // namespace

bool are_isomorphic(const ChamberGraph& g1, const ChamberGraph& g2,
                    bool respect_kinds) {
  if (g1.vertices.size() != g2.vertices.size() ||
      g1.edges.size() != g2.edges.size()) {
    return false;
  }
  IsoView v1 = build_view(g1, respect_kinds);
  IsoView v2 = build_view(g2, respect_kinds);
  if (!refine_colors(v1, v2)) return false;
  const std::vector<std::size_t> order = search_order(v1);
  std::vector<std::size_t> map12(v1.n, static_cast<std::size_t>(-1));
  std::vector<bool> used(v2.n, false);
  return match(v1, v2, order, map12, used, 0);
}

}  // namespace strata::graph
