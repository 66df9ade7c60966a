#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

namespace oracle {

Eigen::MatrixXd adjacency(const Hypergraph& h) {
  const int n = h.num_vertices();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : h.edges())
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = 0; j < e.size(); ++j)
        if (i != j) a(e[i], e[j]) += 1.0 / (double(e.size()) - 1.0);
  return a;
}

std::vector<double> eigenvalues(const Hypergraph& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> s(adjacency(h));
  return {s.eigenvalues().data(), s.eigenvalues().data() + s.eigenvalues().size()};
}

double largest_eigenvalue(const Hypergraph& h) { return eigenvalues(h).back(); }

namespace {

std::vector<int> common(const Hypergraph& h, int a, int b) {
  std::vector<int> out;
  for (int x : h.edge(a))
    for (int y : h.edge(b))
      if (x == y) out.push_back(x);
  return out;
}

// Is this cyclic order of edges a loose cycle?
bool loose(const Hypergraph& h, const std::vector<int>& order) {
  const int l = static_cast<int>(order.size());
  std::vector<int> cores;
  for (int i = 0; i < l; ++i) {
    auto c = common(h, order[i], order[(i + 1) % l]);
    if (c.size() != 1) return false;
    cores.push_back(c[0]);
  }
  std::set<int> cs(cores.begin(), cores.end());
  if (static_cast<int>(cs.size()) != l) return false;
  for (int e : order) {
    int inside = 0;
    for (int v : h.edge(e)) inside += cs.count(v);
    if (inside != 2) return false;
  }
  return true;
}

}  // namespace

int count_loose_cycles(const Hypergraph& h) {
  const int k = h.num_edges();
  int total = 0;
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<int> subset;
    for (int i = 0; i < k; ++i)
      if (mask >> i & 1) subset.push_back(i);
    if (subset.size() < 2) continue;
    // Fix the first edge; each undirected cycle then appears twice (l >= 3).
    std::vector<int> rest(subset.begin() + 1, subset.end());
    int found = 0;
    do {
      std::vector<int> order{subset[0]};
      order.insert(order.end(), rest.begin(), rest.end());
      found += loose(h, order);
    } while (std::next_permutation(rest.begin(), rest.end()));
    total += subset.size() == 2 ? found : found / 2;
  }
  return total;
}

int diameter(const Hypergraph& h) {
  const int n = h.num_vertices();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (const auto& e : h.edges())
    for (int a : e)
      for (int b : e)
        if (a != b) d[a][b] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  int best = 0;
  for (auto& row : d)
    for (int x : row) best = std::max(best, x);
  return best;
}

namespace {

struct Iso {
  const Hypergraph& a;
  const Hypergraph& b;
  std::set<std::vector<int>> edges_b;
  std::vector<int> map, used;

  bool consistent(int v) {
    // Every edge of a whose vertices are all mapped must map to an edge of b.
    for (int e : a.incident_edges(v)) {
      std::vector<int> img;
      for (int x : a.edge(e)) {
        if (map[x] < 0) break;
        img.push_back(map[x]);
      }
      if (img.size() != a.edge(e).size()) continue;
      std::sort(img.begin(), img.end());
      if (!edges_b.count(img)) return false;
    }
    return true;
  }

  bool search(int v) {
    if (v == a.num_vertices()) return true;
    for (int w = 0; w < b.num_vertices(); ++w) {
      if (used[w] || a.edge_degree(v) != b.edge_degree(w)) continue;
      map[v] = w;
      used[w] = 1;
      if (consistent(v) && search(v + 1)) return true;
      used[w] = 0;
      map[v] = -1;
    }
    return false;
  }
};

}  // namespace

bool isomorphic(const Hypergraph& a, const Hypergraph& b) {
  if (a.m() != b.m() || a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  Iso iso{a, b, {}, std::vector<int>(a.num_vertices(), -1), std::vector<int>(b.num_vertices(), 0)};
  for (const auto& e : b.edges()) iso.edges_b.insert(e);
  return iso.search(0);
}

std::vector<std::vector<double>> random_unit_vectors(int dim, int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss;
  std::vector<std::vector<double>> out;
  for (int c = 0; c < count; ++c) {
    std::vector<double> v(dim);
    for (auto& x : v) x = gauss(rng);
    double nrm = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
    for (auto& x : v) x /= nrm;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace oracle
