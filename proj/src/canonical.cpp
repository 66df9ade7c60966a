#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "hyperspec/enumerate.hpp"

namespace hyperspec {

namespace {

// Incidence graph: vertices 0..n-1, edge e is node n+e.
struct Incidence {
  int n = 0;
  int nodes = 0;
  std::vector<std::vector<int>> adj;
};

Incidence incidence_graph(const Hypergraph& h) {
  Incidence g;
  g.n = h.num_vertices();
  g.nodes = g.n + h.num_edges();
  g.adj.resize(g.nodes);
  for (int e = 0; e < h.num_edges(); ++e)
    for (Vertex v : h.edge(e)) {
      g.adj[v].push_back(g.n + e);
      g.adj[g.n + e].push_back(v);
    }
  return g;
}

std::string join_sorted(std::vector<std::string> parts) {
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (auto& p : parts) out += p;
  return out;
}

// Colour refinement on the 2-core followed by individualisation; returns the
// smallest certificate over all leaves of the search tree.
class CoreCanon {
 public:
  CoreCanon(std::vector<std::string> labels, std::vector<std::vector<int>> adj)
      : labels_(std::move(labels)), adj_(std::move(adj)) {}

  std::string run() {
    std::vector<std::string> sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<long long> colour(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i)
      colour[i] = std::lower_bound(sorted.begin(), sorted.end(), labels_[i]) - sorted.begin();
    search(refine(std::move(colour)));
    return best_;
  }

 private:
  std::vector<long long> refine(std::vector<long long> colour) const {
    const int n = static_cast<int>(colour.size());
    int classes = count_classes(colour);
    while (true) {
      std::vector<std::pair<std::vector<long long>, int>> sig(n);
      for (int v = 0; v < n; ++v) {
        std::vector<long long> s{colour[v]};
        std::vector<long long> nb;
        for (int u : adj_[v]) nb.push_back(colour[u]);
        std::sort(nb.begin(), nb.end());
        s.insert(s.end(), nb.begin(), nb.end());
        sig[v] = {std::move(s), v};
      }
      std::sort(sig.begin(), sig.end());
      std::vector<long long> next(n);
      long long c = 0;
      for (int i = 0; i < n; ++i) {
        if (i > 0 && sig[i].first != sig[i - 1].first) ++c;
        next[sig[i].second] = c;
      }
      int now = static_cast<int>(c) + 1;
      colour = std::move(next);
      if (now == classes) return colour;
      classes = now;
    }
  }

  static int count_classes(const std::vector<long long>& colour) {
    std::vector<long long> c = colour;
    std::sort(c.begin(), c.end());
    return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
  }

  void search(const std::vector<long long>& colour) {
    const int n = static_cast<int>(colour.size());
    std::map<long long, std::vector<int>> cells;
    for (int v = 0; v < n; ++v) cells[colour[v]].push_back(v);
    const std::vector<int>* target = nullptr;
    for (auto& [c, members] : cells)
      if (members.size() > 1 && (!target || members.size() < target->size())) target = &members;
    if (!target) {
      std::string cert = certificate(colour);
      if (best_.empty() || cert < best_) best_ = std::move(cert);
      return;
    }
    for (int chosen : *target) {
      std::vector<long long> next(n);
      for (int v = 0; v < n; ++v) next[v] = 2 * colour[v];
      next[chosen] += 1;
      search(refine(std::move(next)));
    }
  }

  std::string certificate(const std::vector<long long>& colour) const {
    const int n = static_cast<int>(colour.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return colour[a] < colour[b]; });
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    std::string out;
    for (int v : order) out += labels_[v] + ";";
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v)
      for (int u : adj_[v])
        if (pos[v] < pos[u]) edges.emplace_back(pos[v], pos[u]);
    std::sort(edges.begin(), edges.end());
    out += "|";
    for (auto [a, b] : edges) out += std::to_string(a) + "-" + std::to_string(b) + ",";
    return out;
  }

  std::vector<std::string> labels_;
  std::vector<std::vector<int>> adj_;
  std::string best_;
};

}  // namespace

std::string canonical_form(const Hypergraph& h) {
  const Incidence g = incidence_graph(h);
  const int N = g.nodes;
  std::string head = std::to_string(h.m()) + ":" + std::to_string(h.num_edges()) + ":";
  if (N == 0) return head;

  auto type = [&](int u) { return u < g.n ? 'v' : 'e'; };
  std::vector<int> deg(N);
  for (int u = 0; u < N; ++u) deg[u] = static_cast<int>(g.adj[u].size());
  std::vector<bool> removed(N, false);
  std::vector<std::vector<std::string>> hanging(N);
  std::vector<std::string> code(N);
  int remaining = N;

  std::vector<int> layer;
  for (int u = 0; u < N; ++u)
    if (deg[u] <= 1) layer.push_back(u);
  while (!layer.empty() && remaining > 2) {
    std::vector<int> next;
    for (int u : layer) {
      removed[u] = true;
      --remaining;
      code[u] = std::string(1, type(u)) + "(" + join_sorted(hanging[u]) + ")";
    }
    for (int u : layer)
      for (int w : g.adj[u]) {
        if (removed[w]) continue;
        hanging[w].push_back(code[u]);
        if (--deg[w] == 1) next.push_back(w);
      }
    layer = std::move(next);
  }

  std::vector<int> core;
  for (int u = 0; u < N; ++u)
    if (!removed[u]) core.push_back(u);

  auto rooted = [&](int u, const std::string* extra) {
    std::vector<std::string> kids = hanging[u];
    if (extra) kids.push_back(*extra);
    return std::string(1, type(u)) + "(" + join_sorted(std::move(kids)) + ")";
  };

  if (core.size() == 1) return head + "T" + rooted(core[0], nullptr);
  if (core.size() == 2) {
    std::string a = rooted(core[0], nullptr), b = rooted(core[1], nullptr);
    return head + "T" + std::min(rooted(core[0], &b), rooted(core[1], &a));
  }

  std::vector<int> index(N, -1);
  for (std::size_t i = 0; i < core.size(); ++i) index[core[i]] = static_cast<int>(i);
  std::vector<std::string> labels;
  std::vector<std::vector<int>> adj(core.size());
  for (std::size_t i = 0; i < core.size(); ++i) {
    labels.push_back(rooted(core[i], nullptr));
    for (int w : g.adj[core[i]])
      if (index[w] >= 0) adj[i].push_back(index[w]);
  }
  return head + "C" + CoreCanon(std::move(labels), std::move(adj)).run();
}

int cyclomatic_number(const Hypergraph& h) {
  return h.num_edges() * (h.m() - 1) - h.num_vertices() + 1;
}

bool is_hypertree(const Hypergraph& h) {
  if (h.num_edges() == 0 || !is_connected(h) || cyclomatic_number(h) != 0) return false;
  for (const Edge& e : h.edges()) {
    int inner = 0;
    for (Vertex v : e)
      if (h.edge_degree(v) >= 2) ++inner;
    if (inner > 2) return false;
  }
  return true;
}

}  // namespace hyperspec
