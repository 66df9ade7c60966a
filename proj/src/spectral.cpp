#include "hyperspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hyperspec/error.hpp"

namespace hyperspec {

SymmetricMatrix::SymmetricMatrix(int order, int denominator, std::vector<std::int32_t> scaled, bool nonlinear)
    : n_(order), denom_(denominator), scaled_(std::move(scaled)), nonlinear_(nonlinear) {}

std::int64_t SymmetricMatrix::scaled_row_sum(int i) const {
  std::int64_t s = 0;
  for (int j = 0; j < n_; ++j) s += scaled(i, j);
  return s;
}

Eigen::MatrixXd SymmetricMatrix::dense() const {
  Eigen::MatrixXd a(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) a(i, j) = (*this)(i, j);
  return a;
}

std::vector<std::vector<long long>> SymmetricMatrix::scaled_rows() const {
  std::vector<std::vector<long long>> out(n_, std::vector<long long>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[i][j] = scaled(i, j);
  return out;
}

SymmetricMatrix adjacency_matrix(const Hypergraph& h) {
  const int n = h.num_vertices();
  std::vector<std::int32_t> s(std::size_t(n) * n, 0);
  bool nonlinear = false;
  for (const auto& e : h.edges())
    for (Vertex a : e)
      for (Vertex b : e)
        if (a != b && ++s[std::size_t(a) * n + b] > 1) nonlinear = true;
  return SymmetricMatrix(n, h.m() - 1, std::move(s), nonlinear);
}

std::vector<double> apply_adjacency(const Hypergraph& h, const std::vector<double>& x) {
  std::vector<double> y(h.num_vertices(), 0.0);
  const double scale = 1.0 / (h.m() - 1);
  for (const auto& e : h.edges()) {
    double sum = 0;
    for (Vertex v : e) sum += x[v];
    for (Vertex v : e) y[v] += (sum - x[v]) * scale;
  }
  return y;
}

namespace {

double norm2(const std::vector<double>& v) {
  return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
}

}  // namespace

SpectralResult spectral_radius(const Hypergraph& h, double tol, int max_iterations) {
  if (!(tol > 0)) throw Error(ErrorCode::invalid_argument, "tolerance must be positive");
  const int n = h.num_vertices();
  if (n == 0) throw Error(ErrorCode::invalid_argument, "empty hypergraph");
  if (!is_connected(h)) throw Error(ErrorCode::disconnected, "spectral radius needs a connected hypergraph");

  double shift = 0;
  for (Vertex v = 0; v < n; ++v) shift = std::max(shift, boost::rational_cast<double>(degree(h, v)));

  std::vector<double> x(n, 1.0 / std::sqrt(double(n)));
  SpectralResult r;
  for (int it = 1; it <= max_iterations; ++it) {
    auto ax = apply_adjacency(h, x);
    double lambda = std::inner_product(x.begin(), x.end(), ax.begin(), 0.0);
    double res = 0;
    for (int i = 0; i < n; ++i) res = std::max(res, std::fabs(ax[i] - lambda * x[i]));
    if (res <= tol) {
      r.lambda1 = lambda;
      r.residual = res;
      r.iterations = it;
      r.perron_vector = std::move(x);
      return r;
    }
    for (int i = 0; i < n; ++i) ax[i] += shift * x[i];
    double nrm = norm2(ax);
    for (int i = 0; i < n; ++i) x[i] = ax[i] / nrm;
  }
  throw Error(ErrorCode::not_converged, "power iteration did not reach residual " + std::to_string(tol) +
                                            " within " + std::to_string(max_iterations) + " iterations");
}

std::vector<double> full_spectrum(const Hypergraph& h) {
  if (h.num_vertices() > full_spectrum_cap)
    throw Error(ErrorCode::size_cap, "full spectrum limited to " + std::to_string(full_spectrum_cap) + " vertices");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adjacency_matrix(h).dense(), Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

double rayleigh_quotient(const Hypergraph& h, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != h.num_vertices())
    throw Error(ErrorCode::invalid_argument, "vector length does not match vertex count");
  double xx = std::inner_product(x.begin(), x.end(), x.begin(), 0.0);
  if (xx == 0) throw Error(ErrorCode::invalid_argument, "Rayleigh quotient of the zero vector");
  auto ax = apply_adjacency(h, x);
  return std::inner_product(x.begin(), x.end(), ax.begin(), 0.0) / xx;
}

IntPoly char_poly_oracle(const Hypergraph& h) {
  if (h.num_vertices() > char_poly_cap)
    throw Error(ErrorCode::size_cap, "characteristic polynomial limited to " + std::to_string(char_poly_cap) + " vertices");
  return characteristic_polynomial(adjacency_matrix(h).scaled_rows());
}

double char_poly_radius(const Hypergraph& h) {
  auto a = adjacency_matrix(h);
  std::int64_t bound = 0;
  for (int i = 0; i < a.order(); ++i) bound = std::max(bound, a.scaled_row_sum(i));
  auto p = char_poly_oracle(h);
  return p.largest_real_root(double(bound) + 1.0) / (h.m() - 1);
}

}  // namespace hyperspec
