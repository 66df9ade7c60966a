#pragma once

// Independent oracles used by the unit tests.  None of these share code with
// the library routines they check.

#include <vector>

#include <Eigen/Dense>

#include "hyperspec/hypergraph.hpp"

namespace oracle {

using hyperspec::Hypergraph;

// A built entry by entry from the edge list, no shared helpers.
Eigen::MatrixXd adjacency(const Hypergraph& h);
double largest_eigenvalue(const Hypergraph& h);
std::vector<double> eigenvalues(const Hypergraph& h);

// Loose cycles by trying every edge subset in every cyclic order (k <= 10).
int count_loose_cycles(const Hypergraph& h);

// All-pairs edge distances by Floyd-Warshall.
int diameter(const Hypergraph& h);

// Backtracking isomorphism test for small hypergraphs.
bool isomorphic(const Hypergraph& a, const Hypergraph& b);

// Deterministic pseudo-random unit vectors.
std::vector<std::vector<double>> random_unit_vectors(int dim, int count, unsigned seed);

}  // namespace oracle
