#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "hyperspec/hypergraph.hpp"
#include "hyperspec/polynomial.hpp"

namespace hyperspec {

// Stores (m-1)A as integers; A = scaled / (m-1).
class SymmetricMatrix {
 public:
  SymmetricMatrix(int order, int denominator, std::vector<std::int32_t> scaled, bool nonlinear);

  int order() const { return n_; }
  int denominator() const { return denom_; }
  std::int32_t scaled(int i, int j) const { return scaled_[std::size_t(i) * n_ + j]; }
  double operator()(int i, int j) const { return double(scaled(i, j)) / denom_; }
  // Set when some pair of vertices shares more than one edge.
  bool flagged_nonlinear() const { return nonlinear_; }
  std::int64_t scaled_row_sum(int i) const;

  Eigen::MatrixXd dense() const;
  std::vector<std::vector<long long>> scaled_rows() const;

 private:
  int n_;
  int denom_;
  std::vector<std::int32_t> scaled_;
  bool nonlinear_;
};

SymmetricMatrix adjacency_matrix(const Hypergraph& h);

struct SpectralResult {
  double lambda1 = 0;
  std::vector<double> perron_vector;
  double residual = 0;
  int iterations = 0;
};

constexpr double default_tolerance = 1e-12;

SpectralResult spectral_radius(const Hypergraph& h, double tol = default_tolerance, int max_iterations = 2000000);

// y = A x without forming A.
std::vector<double> apply_adjacency(const Hypergraph& h, const std::vector<double>& x);

constexpr int full_spectrum_cap = 512;
// Ascending, with multiplicity.
std::vector<double> full_spectrum(const Hypergraph& h);

double rayleigh_quotient(const Hypergraph& h, const std::vector<double>& x);

constexpr int char_poly_cap = 64;
// det(xI - (m-1)A).
IntPoly char_poly_oracle(const Hypergraph& h);
// Largest root of the oracle polynomial divided by (m-1).
double char_poly_radius(const Hypergraph& h);

}  // namespace hyperspec
