#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hyperspec/families.hpp"
#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

// Isomorphism-invariant string: equal for two hypergraphs iff they are
// isomorphic.  Hanging trees of the incidence graph are encoded bottom-up;
// the remaining 2-core is labelled by colour refinement with
// individualisation.
std::string canonical_form(const Hypergraph& h);

// Each edge holds at most two non-pendant vertices.
bool is_hypertree(const Hypergraph& h);
// k(m-1) - n + 1 for a connected hypergraph.
int cyclomatic_number(const Hypergraph& h);

enum class FamilyClass { supertree, hypertree, unicyclic, bicyclic, tricyclic };
std::string to_string(FamilyClass c);
FamilyClass family_class_from_string(const std::string& s);

struct EnumerationOptions {
  int max_edges = 12;              // exhaustive generation beyond this is refused
  long long budget = 3'000'000;    // cap on canonical shapes kept at any level
  std::optional<int> diameter;     // trees: keep exactly this diameter
  std::optional<int> cycle_length; // unicyclic: keep this loose-cycle length
  bool power_only = false;         // only power hypergraphs P(G) of graphs G
};

// Every connected linear m-uniform hypergraph of the class with k edges, one
// per isomorphism class.  Built by adding one edge at a time to canonical
// representatives and deduplicating by canonical_form.
std::vector<Hypergraph> enumerate_class(FamilyClass cls, int m, int k, const EnumerationOptions& opts = {});

// P(G) for a 2-uniform hypergraph G.
Hypergraph lift_graph(const Hypergraph& g, int m);

// A generated candidate with the name it carries in reports.
struct Candidate {
  std::string name;
  Hypergraph graph;
};

// Structured candidate sets for sizes beyond exhaustive reach.
// Caterpillars T_d(c_2..c_d) with every distribution of the k-d pendant
// edges, d in [d_min, d_max].
std::vector<Candidate> caterpillar_candidates(int m, int k, int d_min, int d_max);
// Every hypertree of diameter exactly 4: a centre vertex with branches, branch
// i an edge at the centre carrying a_i pendant edges on one other vertex.
std::vector<Candidate> diameter4_candidates(int m, int k);
// Unicyclic UC_l with pendant edges at core vertices, at most `loaded`
// positions carrying pendant edges, plus the U_lC shapes.
std::vector<Candidate> unicyclic_candidates(int m, int k, int l, int loaded);
// Hypergraphs formed by hanging the missing k - k0 pendant edges on one
// vertex of each base, or on two vertices with at most `second` at the
// lighter one.
std::vector<Candidate> pendant_extensions(const std::vector<Candidate>& bases, int k, int second = 2);

// Pendant-free hypergraphs built from `cycles` loose cycles of lengths
// 3..max_length, each new cycle sharing one vertex with the earlier part or,
// when `bridges` is set, joined to it by one extra edge.
std::vector<Candidate> cactus_cores(int m, int cycles, int max_length, bool bridges);

// Keeps the first candidate of each isomorphism class.
std::vector<Candidate> dedupe(std::vector<Candidate> candidates);

}  // namespace hyperspec
