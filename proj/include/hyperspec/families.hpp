#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

// position -> number of pendant edges attached at that core vertex
using AttachmentSpec = std::map<int, int>;

struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

// Labeling: core vertex v_i (1-based, as in the family definitions) of a
// loose path or cycle is (i-1)(m-1); edge i holds v_i, the m-2 ids between
// them, and v_{i+1}.  Attached pendant edges take fresh ids afterwards, in
// increasing position order, each laid out as {v_p, next m-1 ids}.
Hypergraph loose_path(int m, int l);
Hypergraph loose_cycle(int m, int l);

// Core vertex id of v_i in loose_path / loose_cycle / hypertree_Td / unicyclic_UC.
inline Vertex core_vertex(int m, int i) { return (i - 1) * (m - 1); }

Hypergraph hypertree_Td(int m, int d, const AttachmentSpec& spec);
Hypergraph hyperstar(int m, int k);
Hypergraph unicyclic_UC(int m, int l, const AttachmentSpec& spec);
// UC_l(c_1) plus one edge glued at the first fresh vertex of the first pendant edge.
Hypergraph unicyclic_UlC(int m, int l, int c1);

// Bicyclic and tricyclic cores are built from loose triangles through the
// centre v_1 = 0.  BC: triangles (v1,v2,v3) and (v1,v4,v5).  B2C attaches l2
// pendant edges at v2 = m-1.
Hypergraph bicyclic_BC(int m, int l1);
Hypergraph bicyclic_B2C(int m, int l1, int l2);
// Triangles v1 e1 v2 e2 v3 e3 v1 and v1 e3 v3 e4 v4 e5 v1; l_i pendant edges at v_i.
Hypergraph tricyclic_T1C(int m, const std::array<int, 4>& l);
// Three triangles at v1 with the remaining core vertices numbered v2..v7
// triangle by triangle; c_i pendant edges at v_i.
Hypergraph tricyclic_T2C(int m, const std::array<int, 7>& c);

// Graph vertices keep their ids; edge j gets the fresh ids
// n + j(m-2) .. n + (j+1)(m-2) - 1.  m = 2 returns G itself.
Hypergraph power_hypergraph(const SimpleGraph& g, int m);

// The 2-uniform hypergraph of g (vertex ids unchanged).
inline Hypergraph as_hypergraph(const SimpleGraph& g) { return power_hypergraph(g, 2); }

// Core vertex ids of the bicyclic / tricyclic families, v_1 first.
std::vector<Vertex> bc_core_vertices(int m);
std::vector<Vertex> t1c_core_vertices(int m);
std::vector<Vertex> t2c_core_vertices(int m);

}  // namespace hyperspec
