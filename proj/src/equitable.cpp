#include "hyperspec/equitable.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>

#include "hyperspec/error.hpp"

namespace hyperspec {

std::vector<int> part_index(const Hypergraph& h, const Partition& parts) {
  std::vector<int> idx(h.num_vertices(), -1);
  for (int p = 0; p < static_cast<int>(parts.size()); ++p) {
    if (parts[p].empty()) throw Error(ErrorCode::not_partition, "part " + std::to_string(p) + " is empty");
    for (Vertex v : parts[p]) {
      if (v < 0 || v >= h.num_vertices())
        throw Error(ErrorCode::not_partition, "vertex " + std::to_string(v) + " is not in the hypergraph");
      if (idx[v] >= 0)
        throw Error(ErrorCode::not_partition, "vertex " + std::to_string(v) + " lies in two parts");
      idx[v] = p;
    }
  }
  for (Vertex v = 0; v < h.num_vertices(); ++v)
    if (idx[v] < 0) throw Error(ErrorCode::not_partition, "vertex " + std::to_string(v) + " is in no part");
  return idx;
}

void check_partition(const Hypergraph& h, const Partition& parts) { part_index(h, parts); }

namespace {

// rows[v][q] = sum over j in C_q of (m-1)A_vj
std::vector<std::vector<long long>> part_sums(const Hypergraph& h, const std::vector<int>& idx, int k) {
  std::vector<std::vector<long long>> rows(h.num_vertices(), std::vector<long long>(k, 0));
  for (const auto& e : h.edges())
    for (Vertex a : e)
      for (Vertex b : e)
        if (a != b) ++rows[a][idx[b]];
  return rows;
}

}  // namespace

EquitableCheck is_equitable(const Hypergraph& h, const Partition& parts) {
  auto idx = part_index(h, parts);
  const int k = static_cast<int>(parts.size());
  auto rows = part_sums(h, idx, k);
  EquitableCheck out;
  for (const auto& part : parts) {
    Vertex first = part.front();
    for (Vertex v : part) {
      for (int q = 0; q < k; ++q) {
        if (rows[v][q] != rows[first][q]) {
          out.equitable = false;
          out.witness = EquitableWitness{first, v, q, rows[first][q], rows[v][q]};
          return out;
        }
      }
    }
  }
  return out;
}

QuotientMatrix::QuotientMatrix(int size, int denominator, std::vector<long long> scaled)
    : k_(size), denom_(denominator), scaled_(std::move(scaled)) {}

Eigen::MatrixXd QuotientMatrix::dense() const {
  Eigen::MatrixXd b(k_, k_);
  for (int p = 0; p < k_; ++p)
    for (int q = 0; q < k_; ++q) b(p, q) = (*this)(p, q);
  return b;
}

std::vector<std::vector<long long>> QuotientMatrix::scaled_rows() const {
  std::vector<std::vector<long long>> out(k_, std::vector<long long>(k_));
  for (int p = 0; p < k_; ++p)
    for (int q = 0; q < k_; ++q) out[p][q] = scaled(p, q);
  return out;
}

QuotientMatrix quotient_matrix(const Hypergraph& h, const Partition& parts) {
  auto check = is_equitable(h, parts);
  if (!check.equitable) {
    const auto& w = *check.witness;
    throw Error(ErrorCode::not_equitable, "partition is not equitable: vertices " + std::to_string(w.first) + " and " +
                                              std::to_string(w.second) + " send " + std::to_string(w.first_sum) +
                                              " and " + std::to_string(w.second_sum) + " into part " +
                                              std::to_string(w.part));
  }
  auto idx = part_index(h, parts);
  const int k = static_cast<int>(parts.size());
  auto rows = part_sums(h, idx, k);
  std::vector<long long> scaled(std::size_t(k) * k);
  for (int p = 0; p < k; ++p)
    for (int q = 0; q < k; ++q) scaled[std::size_t(p) * k + q] = rows[parts[p].front()][q];
  return QuotientMatrix(k, h.m() - 1, std::move(scaled));
}

std::vector<double> quotient_eigenvalues(const QuotientMatrix& b) {
  if (b.size() > quotient_cap)
    throw Error(ErrorCode::size_cap, "quotient eigenvalues limited to " + std::to_string(quotient_cap) + " parts");
  Eigen::EigenSolver<Eigen::MatrixXd> solver(b.dense(), false);
  std::vector<double> out;
  for (int i = 0; i < b.size(); ++i) {
    std::complex<double> z = solver.eigenvalues()[i];
    if (std::fabs(z.imag()) > 1e-10)
      throw Error(ErrorCode::not_converged, "quotient eigenvalue with imaginary part " + std::to_string(z.imag()));
    out.push_back(z.real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

double quotient_spectral_radius(const QuotientMatrix& b) { return quotient_eigenvalues(b).back(); }

bool is_irreducible(const QuotientMatrix& b) {
  const int k = b.size();
  auto reach = [&](bool transpose) {
    std::vector<bool> seen(k, false);
    std::deque<int> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
      int p = queue.front();
      queue.pop_front();
      for (int q = 0; q < k; ++q) {
        long long w = transpose ? b.scaled(q, p) : b.scaled(p, q);
        if (w != 0 && !seen[q]) {
          seen[q] = true;
          queue.push_back(q);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool s) { return s; });
  };
  return k > 0 && reach(false) && reach(true);
}

bool spectrum_contained(const std::vector<double>& sub, const std::vector<double>& super, double tol) {
  std::vector<double> pool = super;
  std::vector<bool> used(pool.size(), false);
  std::vector<double> want = sub;
  std::sort(want.begin(), want.end());
  for (double x : want) {
    int best = -1;
    for (int i = 0; i < static_cast<int>(pool.size()); ++i) {
      if (used[i] || std::fabs(pool[i] - x) > tol) continue;
      if (best < 0 || std::fabs(pool[i] - x) < std::fabs(pool[best] - x)) best = i;
    }
    if (best < 0) return false;
    used[best] = true;
  }
  return true;
}

Partition canonical_power_partition(const SimpleGraph& g, int m) {
  if (g.edges.empty()) throw Error(ErrorCode::invalid_argument, "graph has no edges");
  auto h = power_hypergraph(g, m);  // validates g
  if (g.edges.size() == 1) {
    Partition one(1);
    for (Vertex v = 0; v < h.num_vertices(); ++v) one[0].push_back(v);
    return one;
  }
  std::vector<int> deg(g.n, 0);
  for (auto [u, v] : g.edges) {
    ++deg[u];
    ++deg[v];
  }
  auto fresh = [&](int j) {
    std::vector<Vertex> out;
    for (int i = 0; i < m - 2; ++i) out.push_back(g.n + j * (m - 2) + i);
    return out;
  };

  Partition parts;
  for (int v = 0; v < g.n; ++v)
    if (deg[v] >= 2) parts.push_back({v});
  std::map<int, std::vector<Vertex>> by_support;
  for (int j = 0; j < static_cast<int>(g.edges.size()); ++j) {
    auto [u, v] = g.edges[j];
    bool pendant = (deg[u] == 1) != (deg[v] == 1);
    if (!pendant) {
      auto f = fresh(j);
      if (!f.empty()) parts.push_back(f);
      continue;
    }
    int support = deg[u] == 1 ? v : u;
    int leaf = deg[u] == 1 ? u : v;
    auto& cls = by_support[support];
    auto f = fresh(j);
    cls.insert(cls.end(), f.begin(), f.end());
    cls.push_back(leaf);
  }
  for (auto& [support, cls] : by_support) {
    std::sort(cls.begin(), cls.end());
    parts.push_back(cls);
  }
  return parts;
}

Partition coarsest_equitable_refinement(const Hypergraph& h, const Partition& seed) {
  auto color = part_index(h, seed);
  const int n = h.num_vertices();
  int classes = static_cast<int>(seed.size());
  while (true) {
    // signature: own colour, then (neighbour colour, weight) pairs
    std::vector<std::vector<long long>> sig(n);
    std::vector<std::map<int, long long>> weight(n);
    for (const auto& e : h.edges())
      for (Vertex a : e)
        for (Vertex b : e)
          if (a != b) ++weight[a][color[b]];
    for (Vertex v = 0; v < n; ++v) {
      sig[v].push_back(color[v]);
      for (auto [c, w] : weight[v]) {
        sig[v].push_back(c);
        sig[v].push_back(w);
      }
    }
    std::map<std::vector<long long>, int> ids;
    for (Vertex v = 0; v < n; ++v) ids.emplace(sig[v], 0);
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    for (Vertex v = 0; v < n; ++v) color[v] = ids[sig[v]];
    if (next == classes) break;
    classes = next;
  }
  std::map<int, std::vector<Vertex>> grouped;
  for (Vertex v = 0; v < n; ++v) grouped[color[v]].push_back(v);
  Partition out;
  for (auto& [c, vs] : grouped) out.push_back(std::move(vs));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

}  // namespace hyperspec
