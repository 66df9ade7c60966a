#include "hyperspec/hypergraph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "hyperspec/error.hpp"

namespace hyperspec {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::unknown_vertex: return "unknown_vertex";
    case ErrorCode::disconnected: return "disconnected";
    case ErrorCode::not_converged: return "not_converged";
    case ErrorCode::size_cap: return "size_cap";
    case ErrorCode::linearity: return "linearity";
    case ErrorCode::non_simple: return "non_simple";
    case ErrorCode::isolated_vertex: return "isolated_vertex";
    case ErrorCode::pendant_edge: return "pendant_edge";
    case ErrorCode::not_equitable: return "not_equitable";
    case ErrorCode::not_partition: return "not_partition";
    case ErrorCode::budget_exceeded: return "budget_exceeded";
    case ErrorCode::parse_error: return "parse_error";
  }
  return "unknown";
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::wrong_size: return "wrong_size";
    case ViolationKind::repeated_vertex: return "repeated_vertex";
    case ViolationKind::vertex_out_of_range: return "vertex_out_of_range";
    case ViolationKind::nonlinear_pair: return "nonlinear_pair";
    case ViolationKind::duplicate_edge: return "duplicate_edge";
    case ViolationKind::isolated_vertex: return "isolated_vertex";
  }
  return "unknown";
}

const char* to_string(Cyclicity c) {
  switch (c) {
    case Cyclicity::acyclic: return "acyclic";
    case Cyclicity::unicyclic: return "unicyclic";
    case Cyclicity::bicyclic: return "bicyclic";
    case Cyclicity::tricyclic_type_i: return "tricyclic-type-I";
    case Cyclicity::tricyclic_type_ii: return "tricyclic-type-II";
    case Cyclicity::tricyclic_untyped: return "tricyclic-untyped";
    case Cyclicity::higher: return "higher";
  }
  return "unknown";
}

namespace {

std::string edge_text(const Edge& e) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < e.size(); ++i) out << (i ? "," : "") << e[i];
  out << '}';
  return out.str();
}

}  // namespace

Hypergraph Hypergraph::make_unchecked(int m, int n, std::vector<Edge> edges) {
  if (m < 2) throw Error(ErrorCode::invalid_argument, "edge size m must be at least 2");
  if (n < 0) throw Error(ErrorCode::invalid_argument, "negative vertex count");
  Hypergraph h;
  h.m_ = m;
  h.n_ = n;
  h.incidence_.assign(n, {});
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    if (static_cast<int>(e.size()) != m)
      throw Error(ErrorCode::invalid_argument, "edge " + edge_text(e) + " does not have " +
                                                   std::to_string(m) + " vertices");
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw Error(ErrorCode::invalid_argument, "edge " + edge_text(e) + " repeats a vertex");
    if (e.front() < 0 || e.back() >= n)
      throw Error(ErrorCode::unknown_vertex, "edge " + edge_text(e) + " has an id outside 0.." +
                                                 std::to_string(n - 1));
  }
  h.edges_ = std::move(edges);
  for (int i = 0; i < h.num_edges(); ++i)
    for (Vertex v : h.edges_[i]) h.incidence_[v].push_back(i);
  return h;
}

Hypergraph Hypergraph::make(int m, int n, std::vector<Edge> edges) {
  auto report = validate(m, n, edges);
  for (const auto& v : report.violations) {
    switch (v.kind) {
      case ViolationKind::nonlinear_pair: throw Error(ErrorCode::linearity, v.message);
      case ViolationKind::duplicate_edge: throw Error(ErrorCode::non_simple, v.message);
      case ViolationKind::isolated_vertex: throw Error(ErrorCode::isolated_vertex, v.message);
      case ViolationKind::vertex_out_of_range: throw Error(ErrorCode::unknown_vertex, v.message);
      default: throw Error(ErrorCode::invalid_argument, v.message);
    }
  }
  return make_unchecked(m, n, std::move(edges));
}

const std::vector<int>& Hypergraph::incident_edges(Vertex v) const {
  if (v < 0 || v >= n_) throw Error(ErrorCode::unknown_vertex, "vertex " + std::to_string(v) + " not in hypergraph");
  return incidence_[v];
}

bool Hypergraph::contains(int e, Vertex v) const {
  const auto& ed = edges_.at(e);
  return std::binary_search(ed.begin(), ed.end(), v);
}

bool Hypergraph::same_edge_set(const Hypergraph& other) const {
  if (m_ != other.m_ || n_ != other.n_ || num_edges() != other.num_edges()) return false;
  auto a = edges_;
  auto b = other.edges_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

ValidationReport validate(int m, int n, const std::vector<Edge>& raw) {
  ValidationReport r;
  std::vector<Edge> edges;
  std::vector<int> index;  // edges that are well formed, with their original index
  for (int i = 0; i < static_cast<int>(raw.size()); ++i) {
    Edge e = raw[i];
    std::sort(e.begin(), e.end());
    bool ok = true;
    if (static_cast<int>(e.size()) != m) {
      r.uniform = false;
      ok = false;
      r.violations.push_back({ViolationKind::wrong_size, {i}, -1,
                              "edge " + std::to_string(i) + " " + edge_text(e) + " has size " +
                                  std::to_string(e.size()) + ", expected " + std::to_string(m)});
    }
    auto rep = std::adjacent_find(e.begin(), e.end());
    if (rep != e.end()) {
      ok = false;
      r.violations.push_back({ViolationKind::repeated_vertex, {i}, *rep,
                              "edge " + std::to_string(i) + " repeats vertex " + std::to_string(*rep)});
    }
    for (Vertex v : e) {
      if (v < 0 || v >= n) {
        ok = false;
        r.violations.push_back({ViolationKind::vertex_out_of_range, {i}, v,
                                "edge " + std::to_string(i) + " uses vertex " + std::to_string(v) +
                                    " outside 0.." + std::to_string(n - 1)});
      }
    }
    if (ok) {
      edges.push_back(std::move(e));
      index.push_back(i);
    }
  }

  std::map<Edge, int> seen;
  std::vector<std::vector<int>> inc(std::max(n, 0));
  for (std::size_t a = 0; a < edges.size(); ++a) {
    auto [it, fresh] = seen.emplace(edges[a], index[a]);
    if (!fresh) {
      r.simple = false;
      r.violations.push_back({ViolationKind::duplicate_edge, {it->second, index[a]}, -1,
                              "edges " + std::to_string(it->second) + " and " + std::to_string(index[a]) +
                                  " are both " + edge_text(edges[a])});
      continue;
    }
    for (Vertex v : edges[a]) inc[v].push_back(static_cast<int>(a));
  }

  // Pairs of edges meeting in two or more vertices.
  std::set<std::pair<int, int>> reported;
  for (Vertex v = 0; v < n; ++v) {
    const auto& list = inc[v];
    for (std::size_t x = 0; x < list.size(); ++x) {
      for (std::size_t y = x + 1; y < list.size(); ++y) {
        int a = list[x], b = list[y];
        if (reported.count({a, b})) continue;
        Edge common;
        std::set_intersection(edges[a].begin(), edges[a].end(), edges[b].begin(), edges[b].end(),
                              std::back_inserter(common));
        if (common.size() >= 2) {
          reported.insert({a, b});
          r.linear = false;
          r.violations.push_back({ViolationKind::nonlinear_pair, {index[a], index[b]}, -1,
                                  "edges " + edge_text(edges[a]) + " and " + edge_text(edges[b]) +
                                      " share " + std::to_string(common.size()) + " vertices"});
        }
      }
    }
  }

  for (Vertex v = 0; v < n; ++v) {
    if (inc[v].empty()) {
      r.no_isolated = false;
      r.violations.push_back({ViolationKind::isolated_vertex, {}, v,
                              "vertex " + std::to_string(v) + " lies in no edge"});
    }
  }

  // Connectivity over the well-formed edges.
  if (n > 0) {
    std::vector<bool> seen_v(n, false), seen_e(edges.size(), false);
    std::deque<Vertex> queue{0};
    seen_v[0] = true;
    int reached = 1;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (int e : inc[v]) {
        if (seen_e[e]) continue;
        seen_e[e] = true;
        for (Vertex w : edges[e]) {
          if (!seen_v[w]) {
            seen_v[w] = true;
            ++reached;
            queue.push_back(w);
          }
        }
      }
    }
    r.connected = reached == n;
  }
  return r;
}

ValidationReport validate(const Hypergraph& h) { return validate(h.m(), h.num_vertices(), h.edges()); }

Rational degree(const Hypergraph& h, Vertex v) {
  // Row sum of A: every incident edge contributes (|e|-1) neighbours at 1/(m-1).
  const auto& inc = h.incident_edges(v);
  Rational sum = 0;
  for (int e : inc) sum += Rational(static_cast<long long>(h.edge(e).size()) - 1, h.m() - 1);
  return sum;
}

std::vector<int> edge_distances(const Hypergraph& h, Vertex source) {
  const int n = h.num_vertices();
  if (source < 0 || source >= n) throw Error(ErrorCode::unknown_vertex, "vertex " + std::to_string(source) + " not in hypergraph");
  std::vector<int> dist(n, -1);
  std::vector<bool> used(h.num_edges(), false);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (int e : h.incident_edges(v)) {
      if (used[e]) continue;
      used[e] = true;
      for (Vertex w : h.edge(e)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return dist;
}

std::vector<std::vector<Vertex>> connected_components(const Hypergraph& h) {
  std::vector<std::vector<Vertex>> comps;
  std::vector<bool> seen(h.num_vertices(), false);
  for (Vertex s = 0; s < h.num_vertices(); ++s) {
    if (seen[s]) continue;
    auto dist = edge_distances(h, s);
    comps.emplace_back();
    for (Vertex v = 0; v < h.num_vertices(); ++v)
      if (dist[v] >= 0) {
        seen[v] = true;
        comps.back().push_back(v);
      }
  }
  return comps;
}

bool is_connected(const Hypergraph& h) {
  if (h.num_vertices() == 0) return true;
  auto dist = edge_distances(h, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

int diameter(const Hypergraph& h) {
  int best = 0;
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    auto dist = edge_distances(h, v);
    for (int d : dist) {
      if (d < 0) throw Error(ErrorCode::disconnected, "diameter of a disconnected hypergraph");
      best = std::max(best, d);
    }
  }
  return best;
}

std::vector<bool> non_pendant_vertices(const Hypergraph& h) {
  std::vector<bool> out(h.num_vertices());
  for (Vertex v = 0; v < h.num_vertices(); ++v) out[v] = h.edge_degree(v) >= 2;
  return out;
}

bool is_pendant_edge(const Hypergraph& h, int e) {
  int count = 0;
  for (Vertex v : h.edge(e)) count += h.edge_degree(v) >= 2;
  return count == 1;
}

namespace {

Vertex shared_vertex(const Hypergraph& h, int a, int b) {
  const auto& x = h.edge(a);
  const auto& y = h.edge(b);
  Vertex found = -1;
  int count = 0;
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i] < y[j]) ++i;
    else if (y[j] < x[i]) ++j;
    else {
      found = x[i];
      ++count;
      ++i;
      ++j;
    }
  }
  return count == 1 ? found : -1;
}

struct CycleSearch {
  const Hypergraph& h;
  int start = 0;
  std::vector<int> path;        // edges; path[0] == start
  std::vector<Vertex> cores;    // cores[i] = path[i] ∩ path[i+1]
  std::vector<bool> edge_used;
  std::vector<bool> core_used;
  std::vector<LooseCycle>& out;

  void extend() {
    int last = path.back();
    for (Vertex v : h.edge(last)) {
      if (core_used[v]) continue;
      if (path.size() >= 2 && v == cores.back()) continue;
      for (int f : h.incident_edges(v)) {
        if (f == last) continue;
        if (f == start && path.size() >= 2) {
          // closing vertex v = last ∩ start must differ from cores[0]
          if (v != cores.front() && shared_vertex(h, last, start) == v) close(v);
          continue;
        }
        if (f <= start || edge_used[f]) continue;
        if (shared_vertex(h, last, f) != v) continue;
        edge_used[f] = true;
        core_used[v] = true;
        path.push_back(f);
        cores.push_back(v);
        extend();
        path.pop_back();
        cores.pop_back();
        core_used[v] = false;
        edge_used[f] = false;
      }
    }
  }

  void close(Vertex closing) {
    // Each cycle is met once per direction; keep one of them.
    if (path[1] > path.back()) return;
    LooseCycle c;
    c.edges = path;
    c.core_vertices.push_back(closing);
    c.core_vertices.insert(c.core_vertices.end(), cores.begin(), cores.end());
    std::set<Vertex> core_set(c.core_vertices.begin(), c.core_vertices.end());
    if (core_set.size() != c.core_vertices.size()) return;
    // An edge of the cycle may hold only its own two core vertices.
    const int l = c.length();
    for (int i = 0; i < l; ++i) {
      int inside = 0;
      for (Vertex v : h.edge(c.edges[i])) inside += core_set.count(v);
      if (inside != 2) return;
    }
    out.push_back(std::move(c));
  }
};

}  // namespace

std::vector<LooseCycle> enumerate_loose_cycles(const Hypergraph& h, int max_edges) {
  if (h.num_edges() > max_edges)
    throw Error(ErrorCode::size_cap, "loose-cycle enumeration capped at " + std::to_string(max_edges) +
                                         " edges, got " + std::to_string(h.num_edges()));
  std::vector<LooseCycle> out;
  for (int s = 0; s < h.num_edges(); ++s) {
    CycleSearch search{h, s, {s}, {}, std::vector<bool>(h.num_edges(), false),
                       std::vector<bool>(h.num_vertices(), false), out};
    search.edge_used[s] = true;
    // The first core is chosen here; the closing core is found at the end.
    for (Vertex v : h.edge(s)) {
      for (int f : h.incident_edges(v)) {
        if (f <= s || shared_vertex(h, s, f) != v) continue;
        search.edge_used[f] = true;
        search.core_used[v] = true;
        search.path.push_back(f);
        search.cores.push_back(v);
        search.extend();
        search.path.pop_back();
        search.cores.pop_back();
        search.core_used[v] = false;
        search.edge_used[f] = false;
      }
    }
  }
  return out;
}

CyclicityReport classify_cyclicity(const Hypergraph& h, int max_edges) {
  if (!is_connected(h)) throw Error(ErrorCode::disconnected, "cyclicity needs a connected hypergraph");
  CyclicityReport r;
  const long long k = h.num_edges();
  const long long m = h.m();
  r.n = h.num_vertices();
  long long pins = 0;
  for (const auto& e : h.edges()) pins += static_cast<long long>(e.size());
  r.cyclomatic_number = static_cast<int>(pins - r.n - k + 1);
  r.loose_cycle_count = static_cast<int>(enumerate_loose_cycles(h, max_edges).size());

  const long long base = k * (m - 1);
  switch (r.loose_cycle_count) {
    case 0:
      r.classification = Cyclicity::acyclic;
      r.expected_n = {base + 1};
      break;
    case 1:
      r.classification = Cyclicity::unicyclic;
      r.expected_n = {base};
      break;
    case 2:
      r.classification = Cyclicity::bicyclic;
      r.expected_n = {base - 1};
      break;
    case 3:
      r.expected_n = {base - 1, base - 2};
      if (r.n == base - 1) r.classification = Cyclicity::tricyclic_type_i;
      else if (r.n == base - 2) r.classification = Cyclicity::tricyclic_type_ii;
      else r.classification = Cyclicity::tricyclic_untyped;
      break;
    default:
      r.classification = Cyclicity::higher;
      break;
  }
  if (!r.expected_n.empty()) {
    r.identity_consistent =
        std::find(r.expected_n.begin(), r.expected_n.end(), r.n) != r.expected_n.end();
    if (!r.identity_consistent) {
      std::ostringstream msg;
      msg << r.loose_cycle_count << " loose cycles but n=" << r.n << " (expected";
      for (auto e : r.expected_n) msg << ' ' << e;
      msg << ")";
      r.note = msg.str();
    }
  }
  return r;
}

}  // namespace hyperspec
