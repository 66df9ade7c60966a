#pragma once

#include <string>
#include <vector>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

struct EdgeMove {
  int edge;
  Vertex from;
};

// e' = (e \ {from}) ∪ {to} for every listed edge.  Throws if `to` already
// lies in an edge, `from` does not, or the result is not a valid linear
// hypergraph (duplicate edges are never merged).
Hypergraph move_edges(const Hypergraph& h, const std::vector<EdgeMove>& moves, Vertex to);

// X_to >= max X_from: the condition under which moving is certified to
// increase the spectral radius.
bool move_condition(const std::vector<double>& perron, const std::vector<EdgeMove>& moves, Vertex to);

// Re-glue every edge meeting `edge` outside `at` onto `at`.
Hypergraph release_edge(const Hypergraph& h, int edge, Vertex at);

struct ReleaseResult {
  Hypergraph result;
  Vertex at;
};

// Release at the vertex of `edge` with the largest Perron entry; entries
// within a relative 1e-10 count as tied and the lowest id wins.
ReleaseResult release_edge_at_max(const Hypergraph& h, int edge);

struct SpreadGroup {
  Vertex source;
  std::vector<int> edges;       // E(u_s)
  std::vector<Vertex> targets;  // V_s, targets[t] replaces source in edges[t]
};

using SpreadPlan = std::vector<SpreadGroup>;

struct SpreadCheck {
  Vertex source;
  bool all_pendant;  // every edge of the group is pendant at the source
  char hypothesis;   // 'A' (sum condition) or 'B' (pointwise condition)
  bool holds;
  double lhs;  // A: sum of target entries; B: smallest target entry
  double rhs;  // A: |E(u_s)| X_source;   B: X_source
};

struct SpreadResult {
  Hypergraph result;
  std::vector<SpreadCheck> checks;
  bool guaranteed;  // every group satisfies its hypothesis
};

Hypergraph apply_spread(const Hypergraph& h, const SpreadPlan& plan);
std::vector<SpreadCheck> check_spread(const Hypergraph& h, const SpreadPlan& plan, const std::vector<double>& perron);
// Applies the plan and evaluates the hypotheses against the Perron vector of h.
SpreadResult spread_edges(const Hypergraph& h, const SpreadPlan& plan);

}  // namespace hyperspec
