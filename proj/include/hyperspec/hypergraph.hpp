#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace hyperspec {

using Vertex = int;
using Edge = std::vector<Vertex>;

// Edges are kept sorted; their order in the edge list is preserved because
// generators and transforms refer to edges by index.
class Hypergraph {
 public:
  Hypergraph() = default;

  // Checked construction: throws unless the result is m-uniform, simple,
  // linear and free of isolated vertices.
  static Hypergraph make(int m, int n, std::vector<Edge> edges);

  // Only checks that every edge has m distinct in-range ids.  Used for
  // inspecting malformed input.
  static Hypergraph make_unchecked(int m, int n, std::vector<Edge> edges);

  int m() const { return m_; }
  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_.at(e); }
  const std::vector<int>& incident_edges(Vertex v) const;
  int edge_degree(Vertex v) const { return static_cast<int>(incident_edges(v).size()); }
  bool contains(int e, Vertex v) const;

  // Labeled equality: same m, n and the same edge list in the same order.
  bool operator==(const Hypergraph& other) const {
    return m_ == other.m_ && n_ == other.n_ && edges_ == other.edges_;
  }

  // Same edge set regardless of edge order.
  bool same_edge_set(const Hypergraph& other) const;

 private:
  int m_ = 0;
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incidence_;
};

enum class ViolationKind {
  wrong_size,
  repeated_vertex,
  vertex_out_of_range,
  nonlinear_pair,
  duplicate_edge,
  isolated_vertex,
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<int> edges;  // offending edge indices
  Vertex vertex = -1;      // offending vertex, when there is one
  std::string message;
};

struct ValidationReport {
  bool uniform = true;
  bool linear = true;
  bool simple = true;
  bool no_isolated = true;
  bool connected = true;
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
};

// Diagnostic: never throws for structurally odd input, it lists it.
ValidationReport validate(int m, int n, const std::vector<Edge>& edges);
ValidationReport validate(const Hypergraph& h);

using Rational = boost::rational<long long>;

Rational degree(const Hypergraph& h, Vertex v);

bool is_connected(const Hypergraph& h);
std::vector<std::vector<Vertex>> connected_components(const Hypergraph& h);

// Shortest path lengths counted in edges from `source`; -1 if unreachable.
std::vector<int> edge_distances(const Hypergraph& h, Vertex source);
int diameter(const Hypergraph& h);

// Vertices lying in at least two edges.
std::vector<bool> non_pendant_vertices(const Hypergraph& h);
// Edges with exactly one non-pendant vertex.
bool is_pendant_edge(const Hypergraph& h, int e);

struct LooseCycle {
  std::vector<Vertex> core_vertices;  // v_i = edges[i-1] ∩ edges[i]
  std::vector<int> edges;
  int length() const { return static_cast<int>(edges.size()); }
};

std::vector<LooseCycle> enumerate_loose_cycles(const Hypergraph& h, int max_edges = 64);

enum class Cyclicity {
  acyclic,
  unicyclic,
  bicyclic,
  tricyclic_type_i,
  tricyclic_type_ii,
  tricyclic_untyped,
  higher,
};

const char* to_string(Cyclicity c);

struct CyclicityReport {
  int loose_cycle_count = 0;
  Cyclicity classification = Cyclicity::acyclic;
  int cyclomatic_number = 0;  // k*m - n - k + 1
  int n = 0;
  // Vertex counts the loose-cycle count predicts (two values for tricyclic,
  // none beyond that).
  std::vector<long long> expected_n;
  bool identity_consistent = true;
  std::string note;
};

CyclicityReport classify_cyclicity(const Hypergraph& h, int max_edges = 64);

}  // namespace hyperspec
