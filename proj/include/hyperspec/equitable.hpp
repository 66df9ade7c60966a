#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "hyperspec/families.hpp"
#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

using Partition = std::vector<std::vector<Vertex>>;

// Throws not_partition unless the parts are non-empty, disjoint and cover V.
void check_partition(const Hypergraph& h, const Partition& parts);
// part_of[v] = index of the part holding v.
std::vector<int> part_index(const Hypergraph& h, const Partition& parts);

struct EquitableWitness {
  Vertex first;
  Vertex second;  // same part as `first`
  int part;       // the part both send different weight into
  long long first_sum;   // row sums of (m-1)A into `part`
  long long second_sum;
};

struct EquitableCheck {
  bool equitable = true;
  std::optional<EquitableWitness> witness;
};

EquitableCheck is_equitable(const Hypergraph& h, const Partition& parts);

// B_pq = sum over j in C_q of A_ij for any i in C_p; stored scaled by (m-1).
class QuotientMatrix {
 public:
  QuotientMatrix(int size, int denominator, std::vector<long long> scaled);

  int size() const { return k_; }
  int denominator() const { return denom_; }
  long long scaled(int p, int q) const { return scaled_[std::size_t(p) * k_ + q]; }
  double operator()(int p, int q) const { return double(scaled(p, q)) / denom_; }

  Eigen::MatrixXd dense() const;
  std::vector<std::vector<long long>> scaled_rows() const;

 private:
  int k_;
  int denom_;
  std::vector<long long> scaled_;
};

QuotientMatrix quotient_matrix(const Hypergraph& h, const Partition& parts);

constexpr int quotient_cap = 64;
// Real eigenvalues of B, ascending.  Throws if an imaginary part exceeds 1e-10.
std::vector<double> quotient_eigenvalues(const QuotientMatrix& b);
double quotient_spectral_radius(const QuotientMatrix& b);
bool is_irreducible(const QuotientMatrix& b);

// Greedy multiset matching: every value of `sub` is paired with a distinct
// value of `super` within `tol`.
bool spectrum_contained(const std::vector<double>& sub, const std::vector<double>& super, double tol = 1e-8);

// U1: singletons of non-pendant graph vertices.  U2: the fresh vertices of
// each non-pendant graph edge.  U3: for each support vertex, the fresh and
// pendant vertices of all pendant edges there.  Vertex ids follow
// power_hypergraph(g, m).  A single-edge graph gives one part.
Partition canonical_power_partition(const SimpleGraph& g, int m);

// Coarsest equitable partition refining `seed`, by weighted colour
// refinement.  Parts are ordered by their smallest vertex.
Partition coarsest_equitable_refinement(const Hypergraph& h, const Partition& seed);

}  // namespace hyperspec
