#include "hyperspec/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "hyperspec/error.hpp"

namespace hyperspec {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::invalid_argument, what);
}

int cyclomatic_cap(FamilyClass cls) {
  switch (cls) {
    case FamilyClass::supertree:
    case FamilyClass::hypertree: return 0;
    case FamilyClass::unicyclic: return 1;
    case FamilyClass::bicyclic: return 2;
    case FamilyClass::tricyclic: return 3;
  }
  return 0;
}

// New edge through the existing vertices `shared`, padded with fresh ids.
Hypergraph with_edge(const Hypergraph& h, const std::vector<Vertex>& shared) {
  std::vector<Edge> edges = h.edges();
  Edge e = shared;
  int n = h.num_vertices();
  while (static_cast<int>(e.size()) < h.m()) e.push_back(n++);
  edges.push_back(std::move(e));
  return Hypergraph::make(h.m(), n, std::move(edges));
}

// Every way to add one edge meeting the graph in t <= max_shared vertices,
// no two of them already in a common edge.
void extensions(const Hypergraph& h, int max_shared, const std::function<void(Hypergraph)>& emit) {
  const int n = h.num_vertices();
  std::vector<Vertex> chosen;
  std::function<void(Vertex)> rec = [&](Vertex from) {
    if (!chosen.empty()) emit(with_edge(h, chosen));
    if (static_cast<int>(chosen.size()) == max_shared) return;
    for (Vertex v = from; v < n; ++v) {
      bool ok = true;
      for (Vertex u : chosen)
        for (int e : h.incident_edges(v))
          if (h.contains(e, u)) ok = false;
      if (!ok) continue;
      chosen.push_back(v);
      rec(v + 1);
      chosen.pop_back();
    }
  };
  rec(0);
}

std::string spec_name(const std::string& family, const AttachmentSpec& spec, const char* var = "c") {
  std::string out = family + "(";
  bool first = true;
  for (auto [pos, count] : spec) {
    if (count == 0) continue;
    if (!first) out += ",";
    out += var + std::to_string(pos) + "=" + std::to_string(count);
    first = false;
  }
  return out + ")";
}

// Calls f for every way to put `total` items in `slots` ordered bins.
void compositions(int total, int slots, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> bins(slots, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == slots - 1) {
      bins[i] = left;
      f(bins);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      bins[i] = c;
      rec(i + 1, left - c);
    }
  };
  if (slots == 0) {
    if (total == 0) f(bins);
    return;
  }
  rec(0, total);
}

Hypergraph add_pendants(const Hypergraph& h, const std::vector<std::pair<Vertex, int>>& at) {
  std::vector<Edge> edges = h.edges();
  int n = h.num_vertices();
  for (auto [v, count] : at)
    for (int i = 0; i < count; ++i) {
      Edge e{v};
      while (static_cast<int>(e.size()) < h.m()) e.push_back(n++);
      edges.push_back(std::move(e));
    }
  return Hypergraph::make(h.m(), n, std::move(edges));
}

}  // namespace

std::string to_string(FamilyClass c) {
  switch (c) {
    case FamilyClass::supertree: return "supertree";
    case FamilyClass::hypertree: return "hypertree";
    case FamilyClass::unicyclic: return "unicyclic";
    case FamilyClass::bicyclic: return "bicyclic";
    case FamilyClass::tricyclic: return "tricyclic";
  }
  return "?";
}

FamilyClass family_class_from_string(const std::string& s) {
  for (auto c : {FamilyClass::supertree, FamilyClass::hypertree, FamilyClass::unicyclic, FamilyClass::bicyclic,
                 FamilyClass::tricyclic})
    if (to_string(c) == s) return c;
  throw Error(ErrorCode::invalid_argument, "unknown class '" + s + "'");
}

std::vector<Hypergraph> enumerate_class(FamilyClass cls, int m, int k, const EnumerationOptions& opts) {
  require(m >= 2 && k >= 1, "enumerate_class: needs m >= 2 and k >= 1");
  if (k > opts.max_edges)
    throw Error(ErrorCode::budget_exceeded, "enumerate_class: k = " + std::to_string(k) +
                                                " exceeds the exhaustive limit of " + std::to_string(opts.max_edges));
  if (opts.power_only && m > 2) {
    EnumerationOptions o = opts;
    o.power_only = false;
    std::vector<Hypergraph> out;
    for (const Hypergraph& g : enumerate_class(cls, 2, k, o)) out.push_back(lift_graph(g, m));
    return out;
  }
  const int cap = cyclomatic_cap(cls);
  const bool tree = cap == 0;
  const bool cycle_seeded = cls == FamilyClass::unicyclic;

  auto keep = [&](const Hypergraph& h) {
    if (cyclomatic_number(h) > cap) return false;
    if (cls == FamilyClass::hypertree && !is_hypertree(h)) return false;
    if (tree && opts.diameter && diameter(h) > *opts.diameter) return false;
    return true;
  };

  std::vector<Hypergraph> level;
  int size = 1;
  if (cycle_seeded) {
    int l0 = opts.cycle_length.value_or(3);
    require(l0 >= 3, "enumerate_class: cycle length must be at least 3");
    if (l0 > k) return {};
    level.push_back(loose_cycle(m, l0));
    size = l0;
  } else {
    level.push_back(loose_path(m, 1));
  }

  while (size < k) {
    std::unordered_set<std::string> seen;
    std::vector<Hypergraph> next;
    auto emit = [&](Hypergraph h) {
      if (!keep(h)) return;
      if (!seen.insert(canonical_form(h)).second) return;
      if (static_cast<long long>(next.size()) >= opts.budget)
        throw Error(ErrorCode::budget_exceeded,
                    "enumerate_class: more than " + std::to_string(opts.budget) + " shapes at " +
                        std::to_string(size + 1) + " edges");
      next.push_back(std::move(h));
    };
    for (const Hypergraph& h : level) {
      int slack = cycle_seeded ? 0 : cap - cyclomatic_number(h);
      extensions(h, std::min(m, 1 + slack), emit);
    }
    ++size;
    if (cycle_seeded && !opts.cycle_length && size >= 3 && size <= k) emit(loose_cycle(m, size));
    level = std::move(next);
  }

  std::vector<Hypergraph> out;
  for (Hypergraph& h : level) {
    if (tree && opts.diameter && diameter(h) != *opts.diameter) continue;
    if (cls == FamilyClass::bicyclic || cls == FamilyClass::tricyclic) {
      int r = static_cast<int>(enumerate_loose_cycles(h).size());
      if (r != cap) continue;
    }
    out.push_back(std::move(h));
  }
  return out;
}

Hypergraph lift_graph(const Hypergraph& g, int m) {
  require(g.m() == 2, "lift_graph: needs a 2-uniform hypergraph");
  SimpleGraph sg;
  sg.n = g.num_vertices();
  for (const Edge& e : g.edges()) sg.edges.emplace_back(e[0], e[1]);
  return power_hypergraph(sg, m);
}

std::vector<Candidate> dedupe(std::vector<Candidate> candidates) {
  std::unordered_set<std::string> seen;
  std::vector<Candidate> out;
  for (auto& c : candidates)
    if (seen.insert(canonical_form(c.graph)).second) out.push_back(std::move(c));
  return out;
}

std::vector<Candidate> caterpillar_candidates(int m, int k, int d_min, int d_max) {
  require(d_min >= 2 && d_min <= d_max, "caterpillar_candidates: needs 2 <= d_min <= d_max");
  std::vector<Candidate> out;
  for (int d = d_min; d <= std::min(d_max, k); ++d)
    compositions(k - d, d - 1, [&](const std::vector<int>& c) {
      AttachmentSpec spec;
      for (int i = 0; i < d - 1; ++i)
        if (c[i] > 0) spec[i + 2] = c[i];
      out.push_back({spec_name("T_" + std::to_string(d), spec), hypertree_Td(m, d, spec)});
    });
  return dedupe(std::move(out));
}

std::vector<Candidate> diameter4_candidates(int m, int k) {
  require(m >= 2, "diameter4_candidates: m must be at least 2");
  std::vector<Candidate> out;
  std::vector<int> parts;  // branch sizes 1 + a_i, non-increasing
  std::function<void(int, int)> rec = [&](int left, int largest) {
    if (left == 0) {
      if (parts.size() < 2 || parts[1] < 2) return;
      std::vector<Edge> edges;
      int n = 1;
      std::string name = "D_4(";
      for (std::size_t i = 0; i < parts.size(); ++i) {
        Edge e{0};
        while (static_cast<int>(e.size()) < m) e.push_back(n++);
        Vertex support = e[1];
        edges.push_back(std::move(e));
        for (int j = 1; j < parts[i]; ++j) {
          Edge p{support};
          while (static_cast<int>(p.size()) < m) p.push_back(n++);
          edges.push_back(std::move(p));
        }
        name += (i ? "," : "") + std::to_string(parts[i] - 1);
      }
      out.push_back({name + ")", Hypergraph::make(m, n, std::move(edges))});
      return;
    }
    for (int s = std::min(left, largest); s >= 1; --s) {
      parts.push_back(s);
      rec(left - s, s);
      parts.pop_back();
    }
  };
  rec(k, k);
  return out;
}

std::vector<Candidate> unicyclic_candidates(int m, int k, int l, int loaded) {
  require(l >= 3 && k >= l, "unicyclic_candidates: needs 3 <= l <= k");
  require(loaded >= 1, "unicyclic_candidates: needs at least one loaded position");
  std::vector<Candidate> out;
  const int extra = k - l;
  compositions(extra, l, [&](const std::vector<int>& c) {
    int used = 0;
    for (int x : c) used += x > 0;
    if (used > loaded) return;
    AttachmentSpec spec;
    for (int i = 0; i < l; ++i)
      if (c[i] > 0) spec[i + 1] = c[i];
    out.push_back({spec_name("UC_" + std::to_string(l), spec), unicyclic_UC(m, l, spec)});
  });
  if (extra >= 2) out.push_back({"U_" + std::to_string(l) + "C(c1=" + std::to_string(extra - 1) + ")",
                                 unicyclic_UlC(m, l, extra - 1)});
  return dedupe(std::move(out));
}

std::vector<Candidate> pendant_extensions(const std::vector<Candidate>& bases, int k, int second) {
  std::vector<Candidate> out;
  for (const Candidate& b : bases) {
    const int r = k - b.graph.num_edges();
    if (r < 0) continue;
    if (r == 0) {
      out.push_back(b);
      continue;
    }
    const int n = b.graph.num_vertices();
    for (Vertex v = 0; v < n; ++v) {
      out.push_back({b.name + "+" + std::to_string(r) + "@" + std::to_string(v), add_pendants(b.graph, {{v, r}})});
      for (int j = 1; j <= std::min(second, r - 1); ++j)
        for (Vertex w = 0; w < n; ++w) {
          if (w == v) continue;
          out.push_back({b.name + "+" + std::to_string(r - j) + "@" + std::to_string(v) + "+" + std::to_string(j) +
                             "@" + std::to_string(w),
                         add_pendants(b.graph, {{v, r - j}, {w, j}})});
        }
    }
  }
  return dedupe(std::move(out));
}

std::vector<Candidate> cactus_cores(int m, int cycles, int max_length, bool bridges) {
  require(m >= 2 && cycles >= 1 && max_length >= 3, "cactus_cores: needs m >= 2, cycles >= 1, max_length >= 3");
  std::vector<Candidate> level;
  for (int l = 3; l <= max_length; ++l) level.push_back({"C" + std::to_string(l), loose_cycle(m, l)});
  for (int step = 1; step < cycles; ++step) {
    std::vector<Candidate> next;
    for (const Candidate& base : level)
      for (int l = 3; l <= max_length; ++l) {
        const Hypergraph ring = loose_cycle(m, l);
        const int ring_n = ring.num_vertices();
        for (Vertex a = 0; a < base.graph.num_vertices(); ++a)
          for (Vertex q = 0; q < ring_n; ++q)
            for (int bridged = 0; bridged <= (bridges ? 1 : 0); ++bridged) {
              std::vector<Edge> edges = base.graph.edges();
              int n = base.graph.num_vertices();
              std::vector<Vertex> map(ring_n);
              for (Vertex x = 0; x < ring_n; ++x) map[x] = (x == q && !bridged) ? a : n++;
              for (const Edge& e : ring.edges()) {
                Edge f;
                for (Vertex x : e) f.push_back(map[x]);
                edges.push_back(std::move(f));
              }
              if (bridged) {
                Edge f{a, map[q]};
                while (static_cast<int>(f.size()) < m) f.push_back(n++);
                edges.push_back(std::move(f));
              }
              next.push_back({base.name + (bridged ? "-" : "+") + "C" + std::to_string(l),
                              Hypergraph::make(m, n, std::move(edges))});
            }
      }
    level = dedupe(std::move(next));
  }
  return level;
}

}  // namespace hyperspec
