#include "hyperspec/families.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "hyperspec/error.hpp"

namespace hyperspec {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::invalid_argument, what);
}

struct Builder {
  int m;
  int n = 0;
  std::vector<Edge> edges;

  Vertex fresh() { return n++; }

  // Edge through `fixed`; the rest are fresh ids.  Returns the new ids.
  std::vector<Vertex> add_edge(const std::vector<Vertex>& fixed) {
    Edge e = fixed;
    std::vector<Vertex> added;
    while (static_cast<int>(e.size()) < m) {
      added.push_back(fresh());
      e.push_back(added.back());
    }
    edges.push_back(std::move(e));
    return added;
  }

  // Edge v -> new core vertex; the new core is the last id.
  Vertex step(Vertex from) {
    Edge e{from};
    for (int i = 0; i < m - 2; ++i) e.push_back(fresh());
    Vertex to = fresh();
    e.push_back(to);
    edges.push_back(std::move(e));
    return to;
  }

  // Loose cycle of length l through `anchor`; returns cores, anchor first.
  std::vector<Vertex> add_cycle(Vertex anchor, int l) {
    std::vector<Vertex> cores{anchor};
    for (int i = 1; i < l; ++i) cores.push_back(step(cores.back()));
    Edge last{cores.back()};
    for (int i = 0; i < m - 2; ++i) last.push_back(fresh());
    last.push_back(anchor);
    edges.push_back(std::move(last));
    return cores;
  }

  void add_pendants(Vertex v, int count) {
    for (int i = 0; i < count; ++i) add_edge({v});
  }

  Hypergraph build() { return Hypergraph::make(m, n, std::move(edges)); }
};

void check_counts(const AttachmentSpec& spec, int lo, int hi, const char* family) {
  for (auto [pos, count] : spec) {
    require(pos >= lo && pos <= hi, std::string(family) + ": attachment position " + std::to_string(pos) +
                                        " outside " + std::to_string(lo) + ".." + std::to_string(hi));
    require(count >= 0, std::string(family) + ": negative pendant count");
  }
}

}  // namespace

Hypergraph loose_path(int m, int l) {
  require(m >= 2, "loose_path: m must be at least 2");
  require(l >= 1, "loose_path: length must be at least 1");
  Builder b{m, 0, {}};
  Vertex v = b.fresh();
  for (int i = 0; i < l; ++i) v = b.step(v);
  return b.build();
}

Hypergraph loose_cycle(int m, int l) {
  require(m >= 2, "loose_cycle: m must be at least 2");
  if (l < 3) throw Error(ErrorCode::linearity, "loose_cycle: length " + std::to_string(l) +
                                                   " makes two edges share two vertices");
  Builder b{m, 0, {}};
  b.add_cycle(b.fresh(), l);
  return b.build();
}

Hypergraph hypertree_Td(int m, int d, const AttachmentSpec& spec) {
  require(m >= 2, "hypertree_Td: m must be at least 2");
  require(d >= 2, "hypertree_Td: diameter must be at least 2");
  check_counts(spec, 2, d, "hypertree_Td");
  Builder b{m, 0, {}};
  Vertex v = b.fresh();
  for (int i = 0; i < d; ++i) v = b.step(v);
  for (auto [pos, count] : spec) b.add_pendants(core_vertex(m, pos), count);
  return b.build();
}

Hypergraph hyperstar(int m, int k) {
  require(k >= 1, "hyperstar: needs at least one edge");
  if (k == 1) return loose_path(m, 1);
  return hypertree_Td(m, 2, {{2, k - 2}});
}

Hypergraph unicyclic_UC(int m, int l, const AttachmentSpec& spec) {
  require(m >= 2, "unicyclic_UC: m must be at least 2");
  if (l < 3) throw Error(ErrorCode::linearity, "unicyclic_UC: cycle length must be at least 3");
  check_counts(spec, 1, l, "unicyclic_UC");
  Builder b{m, 0, {}};
  b.add_cycle(b.fresh(), l);
  for (auto [pos, count] : spec) b.add_pendants(core_vertex(m, pos), count);
  return b.build();
}

Hypergraph unicyclic_UlC(int m, int l, int c1) {
  require(c1 >= 1, "unicyclic_UlC: needs a pendant edge to extend (c1 >= 1)");
  if (l < 3) throw Error(ErrorCode::linearity, "unicyclic_UlC: cycle length must be at least 3");
  Builder b{m, 0, {}};
  b.add_cycle(b.fresh(), l);
  std::vector<Vertex> first = b.add_edge({0});
  b.add_pendants(0, c1 - 1);
  b.add_edge({first.front()});
  return b.build();
}

namespace {

std::vector<Vertex> build_b2c(Builder& b, int l1, int l2) {
  Vertex center = b.fresh();
  auto first = b.add_cycle(center, 3);
  auto second = b.add_cycle(center, 3);
  b.add_pendants(center, l1);
  b.add_pendants(first[1], l2);
  return {center, first[1], first[2], second[1], second[2]};
}

std::vector<Vertex> build_t1c(Builder& b, const std::array<int, 4>& l) {
  Vertex v1 = b.fresh();
  auto tri = b.add_cycle(v1, 3);  // e1, e2, e3 = {v3, .., v1}
  Vertex v4 = b.step(tri[2]);     // e4
  Edge e5{v4};
  for (int i = 0; i < b.m - 2; ++i) e5.push_back(b.fresh());
  e5.push_back(v1);
  b.edges.push_back(std::move(e5));
  std::vector<Vertex> cores{v1, tri[1], tri[2], v4};
  for (int i = 0; i < 4; ++i) b.add_pendants(cores[i], l[i]);
  return cores;
}

std::vector<Vertex> build_t2c(Builder& b, const std::array<int, 7>& c) {
  Vertex v1 = b.fresh();
  std::vector<Vertex> cores{v1};
  for (int t = 0; t < 3; ++t) {
    auto tri = b.add_cycle(v1, 3);
    cores.push_back(tri[1]);
    cores.push_back(tri[2]);
  }
  for (int i = 0; i < 7; ++i) b.add_pendants(cores[i], c[i]);
  return cores;
}

}  // namespace

std::vector<Vertex> bc_core_vertices(int m) {
  Builder b{m, 0, {}};
  return build_b2c(b, 0, 0);
}

Hypergraph bicyclic_BC(int m, int l1) { return bicyclic_B2C(m, l1, 0); }

Hypergraph bicyclic_B2C(int m, int l1, int l2) {
  require(m >= 2, "bicyclic: m must be at least 2");
  require(l1 >= 0 && l2 >= 0, "bicyclic: negative pendant count");
  Builder b{m, 0, {}};
  build_b2c(b, l1, l2);
  return b.build();
}

std::vector<Vertex> t1c_core_vertices(int m) {
  Builder b{m, 0, {}};
  return build_t1c(b, {0, 0, 0, 0});
}

Hypergraph tricyclic_T1C(int m, const std::array<int, 4>& l) {
  require(m >= 2, "tricyclic_T1C: m must be at least 2");
  for (int c : l) require(c >= 0, "tricyclic_T1C: negative pendant count");
  Builder b{m, 0, {}};
  build_t1c(b, l);
  return b.build();
}

std::vector<Vertex> t2c_core_vertices(int m) {
  Builder b{m, 0, {}};
  return build_t2c(b, {0, 0, 0, 0, 0, 0, 0});
}

Hypergraph tricyclic_T2C(int m, const std::array<int, 7>& c) {
  require(m >= 2, "tricyclic_T2C: m must be at least 2");
  for (int x : c) require(x >= 0, "tricyclic_T2C: negative pendant count");
  Builder b{m, 0, {}};
  build_t2c(b, c);
  return b.build();
}

Hypergraph power_hypergraph(const SimpleGraph& g, int m) {
  require(m >= 2, "power_hypergraph: m must be at least 2");
  std::set<std::pair<int, int>> seen;
  std::vector<int> deg(g.n, 0);
  for (auto [u, v] : g.edges) {
    if (u < 0 || v < 0 || u >= g.n || v >= g.n)
      throw Error(ErrorCode::unknown_vertex, "power_hypergraph: graph edge uses an unknown vertex");
    if (u == v) throw Error(ErrorCode::non_simple, "power_hypergraph: graph has a loop");
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second)
      throw Error(ErrorCode::non_simple, "power_hypergraph: graph has a repeated edge");
    ++deg[u];
    ++deg[v];
  }
  for (int v = 0; v < g.n; ++v)
    if (deg[v] == 0) throw Error(ErrorCode::isolated_vertex, "power_hypergraph: graph vertex " + std::to_string(v) + " is isolated");
  std::vector<Edge> edges;
  int next = g.n;
  for (auto [u, v] : g.edges) {
    Edge e{u, v};
    for (int i = 0; i < m - 2; ++i) e.push_back(next++);
    edges.push_back(std::move(e));
  }
  return Hypergraph::make(m, next, std::move(edges));
}

}  // namespace hyperspec
