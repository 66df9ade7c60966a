#include "hyperspec/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "hyperspec/error.hpp"
#include "hyperspec/spectral.hpp"

namespace hyperspec {

namespace {

void check_vertex(const Hypergraph& h, Vertex v) {
  if (v < 0 || v >= h.num_vertices()) throw Error(ErrorCode::unknown_vertex, "vertex " + std::to_string(v) + " not in hypergraph");
}

void check_edge(const Hypergraph& h, int e) {
  if (e < 0 || e >= h.num_edges()) throw Error(ErrorCode::invalid_argument, "edge index " + std::to_string(e) + " out of range");
}

struct Replacement {
  int edge;
  Vertex from;
  Vertex to;
};

Hypergraph replace(const Hypergraph& h, const std::vector<Replacement>& reps) {
  std::vector<Edge> edges = h.edges();
  std::set<int> touched;
  for (const auto& r : reps) {
    check_edge(h, r.edge);
    check_vertex(h, r.from);
    check_vertex(h, r.to);
    if (!touched.insert(r.edge).second)
      throw Error(ErrorCode::invalid_argument, "edge " + std::to_string(r.edge) + " listed twice");
    if (!h.contains(r.edge, r.from))
      throw Error(ErrorCode::invalid_argument, "vertex " + std::to_string(r.from) + " is not in edge " + std::to_string(r.edge));
    if (h.contains(r.edge, r.to))
      throw Error(ErrorCode::invalid_argument, "vertex " + std::to_string(r.to) + " already lies in edge " + std::to_string(r.edge));
    auto& e = edges[r.edge];
    *std::find(e.begin(), e.end(), r.from) = r.to;
  }
  return Hypergraph::make(h.m(), h.num_vertices(), std::move(edges));
}

}  // namespace

Hypergraph move_edges(const Hypergraph& h, const std::vector<EdgeMove>& moves, Vertex to) {
  std::vector<Replacement> reps;
  for (const auto& mv : moves) reps.push_back({mv.edge, mv.from, to});
  return replace(h, reps);
}

bool move_condition(const std::vector<double>& perron, const std::vector<EdgeMove>& moves, Vertex to) {
  // ties within a relative 1e-10 count as equal
  for (const auto& mv : moves)
    if (perron.at(mv.from) > perron.at(to) * (1 + 1e-10)) return false;
  return true;
}

Hypergraph release_edge(const Hypergraph& h, int edge, Vertex at) {
  check_edge(h, edge);
  check_vertex(h, at);
  if (!h.contains(edge, at))
    throw Error(ErrorCode::invalid_argument, "vertex " + std::to_string(at) + " is not in edge " + std::to_string(edge));
  if (is_pendant_edge(h, edge) || std::none_of(h.edge(edge).begin(), h.edge(edge).end(),
                                               [&](Vertex v) { return h.edge_degree(v) >= 2; }))
    throw Error(ErrorCode::pendant_edge, "edge " + std::to_string(edge) + " is pendant; nothing to release");
  std::vector<Replacement> reps;
  for (Vertex v : h.edge(edge)) {
    if (v == at) continue;
    for (int f : h.incident_edges(v))
      if (f != edge) reps.push_back({f, v, at});
  }
  return replace(h, reps);
}

ReleaseResult release_edge_at_max(const Hypergraph& h, int edge) {
  check_edge(h, edge);
  auto x = spectral_radius(h).perron_vector;
  double best = 0;
  for (Vertex v : h.edge(edge)) best = std::max(best, x[v]);
  Vertex at = -1;
  for (Vertex v : h.edge(edge))  // edges are sorted, so the first hit is the lowest id
    if (x[v] >= best * (1 - 1e-10)) {
      at = v;
      break;
    }
  return {release_edge(h, edge, at), at};
}

Hypergraph apply_spread(const Hypergraph& h, const SpreadPlan& plan) {
  std::vector<Replacement> reps;
  for (const auto& g : plan) {
    if (g.edges.size() != g.targets.size())
      throw Error(ErrorCode::invalid_argument, "spread group at vertex " + std::to_string(g.source) +
                                                   " has " + std::to_string(g.edges.size()) + " edges but " +
                                                   std::to_string(g.targets.size()) + " targets");
    if (g.edges.empty()) throw Error(ErrorCode::invalid_argument, "empty spread group");
    for (std::size_t t = 0; t < g.edges.size(); ++t) reps.push_back({g.edges[t], g.source, g.targets[t]});
  }
  return replace(h, reps);
}

std::vector<SpreadCheck> check_spread(const Hypergraph& h, const SpreadPlan& plan, const std::vector<double>& x) {
  std::vector<SpreadCheck> out;
  for (const auto& g : plan) {
    SpreadCheck c{};
    c.source = g.source;
    c.all_pendant = std::all_of(g.edges.begin(), g.edges.end(), [&](int e) {
      for (Vertex v : h.edge(e))
        if (v != g.source && h.edge_degree(v) >= 2) return false;
      return h.edge_degree(g.source) >= 2;
    });
    if (c.all_pendant) {
      c.hypothesis = 'A';
      c.lhs = 0;
      for (Vertex v : g.targets) c.lhs += x.at(v);
      c.rhs = double(g.edges.size()) * x.at(g.source);
    } else {
      c.hypothesis = 'B';
      c.lhs = x.at(g.targets.front());
      for (Vertex v : g.targets) c.lhs = std::min(c.lhs, x.at(v));
      c.rhs = x.at(g.source);
    }
    c.holds = c.lhs >= c.rhs;
    out.push_back(c);
  }
  return out;
}

SpreadResult spread_edges(const Hypergraph& h, const SpreadPlan& plan) {
  SpreadResult r{apply_spread(h, plan), {}, true};
  r.checks = check_spread(h, plan, spectral_radius(h).perron_vector);
  r.guaranteed = std::all_of(r.checks.begin(), r.checks.end(), [](const SpreadCheck& c) { return c.holds; });
  return r;
}

}  // namespace hyperspec
