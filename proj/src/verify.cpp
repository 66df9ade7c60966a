#include "hyperspec/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <unordered_map>

#include "hyperspec/closed_forms.hpp"
#include "hyperspec/enumerate.hpp"
#include "hyperspec/error.hpp"
#include "hyperspec/families.hpp"
#include "hyperspec/spectral.hpp"

namespace hyperspec {

namespace {

std::string str(long long v) { return std::to_string(v); }

std::string td_name(int d, const AttachmentSpec& spec) {
  std::string out = "T_" + str(d) + "(";
  bool first = true;
  for (auto [pos, c] : spec) {
    if (c == 0) continue;
    out += (first ? "c" : ",c") + str(pos) + "=" + str(c);
    first = false;
  }
  return out + ")";
}

std::string uc_name(int l, const AttachmentSpec& spec) {
  std::string out = "UC_" + str(l) + "(";
  bool first = true;
  for (auto [pos, c] : spec) {
    if (c == 0) continue;
    out += (first ? "c" : ",c") + str(pos) + "=" + str(c);
    first = false;
  }
  return out + ")";
}

Candidate td(int m, int d, const AttachmentSpec& spec) { return {td_name(d, spec), hypertree_Td(m, d, spec)}; }
Candidate uc(int m, int l, const AttachmentSpec& spec) { return {uc_name(l, spec), unicyclic_UC(m, l, spec)}; }
Candidate ulc(int m, int l, int c1) {
  return {"U_" + str(l) + "C(c1=" + str(c1) + ")", unicyclic_UlC(m, l, c1)};
}
Candidate bc(int m, int l1) { return {"BC(" + str(l1) + ")", bicyclic_BC(m, l1)}; }
Candidate b2c(int m, int l1, int l2) {
  return {"B2C(" + str(l1) + "," + str(l2) + ")", bicyclic_B2C(m, l1, l2)};
}
Candidate t1c(int m, const std::array<int, 4>& l) {
  return {"T1C(" + str(l[0]) + "," + str(l[1]) + "," + str(l[2]) + "," + str(l[3]) + ")", tricyclic_T1C(m, l)};
}
Candidate t2c(int m, const std::array<int, 7>& c) {
  std::string name = "T2C(";
  bool first = true;
  for (int i = 0; i < 7; ++i) {
    if (c[i] == 0) continue;
    name += (first ? "c" : ",c") + str(i + 1) + "=" + str(c[i]);
    first = false;
  }
  return {name + ")", tricyclic_T2C(m, c)};
}

std::vector<Candidate> named(std::vector<Hypergraph> graphs, const std::string& prefix) {
  std::vector<Candidate> out;
  for (std::size_t i = 0; i < graphs.size(); ++i) out.push_back({prefix + "#" + str(i), std::move(graphs[i])});
  return out;
}

void append(std::vector<Candidate>& to, std::vector<Candidate> from) {
  for (auto& c : from) to.push_back(std::move(c));
}

// A candidate pool and whether it is the whole class.
struct Pool {
  std::vector<Candidate> items;
  bool exhaustive = true;
  std::string note;
};

struct Scored {
  std::string name;
  Hypergraph graph;
  double lambda = 0;
  double residual = 0;
};

class Run {
 public:
  Run(std::string id, std::string statement, const VerifyParams& p) : p_(p), start_(clock::now()) {
    r_.theorem_id = std::move(id);
    r_.statement = std::move(statement);
  }

  const VerifyParams& params() const { return p_; }
  double tol() const { return p_.tol; }

  void param(const std::string& key, const std::string& value) { r_.parameters.emplace_back(key, value); }
  void param(const std::string& key, long long value) { param(key, str(value)); }
  void note(const std::string& s) { r_.notes.push_back(s); }

  void hypotheses(bool met, const std::string& why) {
    if (!met) {
      r_.hypotheses_met = false;
      note("outside stated hypotheses: " + why);
    }
  }

  Scored score(const Candidate& c, bool record = true) {
    auto it = cache_.find(c.name);
    SpectralResult s = spectral_radius(c.graph);
    Scored out{c.name, c.graph, s.lambda1, s.residual};
    if (record && it == cache_.end()) {
      r_.instances.push_back({c.name, c.graph.m(), c.graph.num_vertices(), c.graph.num_edges(), s.lambda1, s.residual});
      cache_.emplace(c.name, 0);
    }
    return out;
  }

  // Claims lhs > rhs by more than tol.
  bool greater(const std::string& claim, double lhs, double rhs, const Hypergraph* counter = nullptr,
               const std::string& counter_name = "") {
    return record(claim, lhs, rhs, lhs - rhs > p_.tol, counter, counter_name);
  }

  // Claims lhs > rhs up to a fixed slack; used where ties are tolerated.
  bool at_least(const std::string& claim, double lhs, double rhs, double slack, const Hypergraph* counter,
                const std::string& counter_name) {
    return record(claim, lhs, rhs, lhs - rhs > -slack, counter, counter_name);
  }

  bool holds(const std::string& claim, bool ok, const Hypergraph* counter = nullptr, const std::string& name = "") {
    return greater(claim, ok ? 1 : 0, ok ? 0 : 1, counter, name);
  }

  // Named graphs in strictly decreasing order, then every other pool member
  // strictly below the last one.
  void ordered_top(const std::vector<Candidate>& chain, const Pool& pool) {
    std::vector<Scored> top;
    std::vector<std::string> canon;
    for (const Candidate& c : chain) {
      top.push_back(score(c));
      canon.push_back(canonical_form(c.graph));
    }
    for (std::size_t i = 0; i + 1 < top.size(); ++i)
      greater("lambda1(" + top[i].name + ") > lambda1(" + top[i + 1].name + ")", top[i].lambda, top[i + 1].lambda,
              &top[i + 1].graph, top[i + 1].name);
    std::vector<bool> found(chain.size(), false);
    std::optional<Scored> rival;
    for (const Candidate& c : pool.items) {
      std::string form = canonical_form(c.graph);
      auto pos = std::find(canon.begin(), canon.end(), form);
      if (pos != canon.end()) {
        found[pos - canon.begin()] = true;
        continue;
      }
      Scored s = score(c);
      if (!rival || s.lambda > rival->lambda) rival = s;
    }
    for (std::size_t i = 0; i < chain.size(); ++i)
      if (!found[i]) {
        if (pool.exhaustive) holds(chain[i].name + " occurs in the enumerated class", false, &chain[i].graph, chain[i].name);
        else note(chain[i].name + " is not in the generated pool; compared directly");
      }
    note(str(pool.items.size()) + (pool.exhaustive ? " shapes, whole class" : " shapes, structured candidates"));
    if (!pool.note.empty()) note(pool.note);
    if (rival)
      greater("lambda1(" + top.back().name + ") > every other member (best: " + rival->name + ")", top.back().lambda,
              rival->lambda, &rival->graph, rival->name);
  }

  bool record(const std::string& claim, double lhs, double rhs, bool ok, const Hypergraph* counter,
              const std::string& counter_name) {
    Assertion a;
    a.claim = claim;
    a.lhs = lhs;
    a.rhs = rhs;
    a.margin = lhs - rhs;
    a.holds = ok;
    a.observation = !r_.hypotheses_met;
    if (!a.holds && !a.observation && counter && !r_.counter_instance) {
      r_.counter_instance = *counter;
      r_.counter_name = counter_name;
    }
    r_.assertions.push_back(std::move(a));
    return ok;
  }

  VerificationReport finish() {
    r_.wall_seconds = std::chrono::duration<double>(clock::now() - start_).count();
    if (!r_.hypotheses_met) {
      r_.status = Status::vacuous;
    } else {
      r_.status = Status::pass;
      for (const Assertion& a : r_.assertions)
        if (!a.holds && !a.observation) r_.status = Status::fail;
    }
    if (r_.status != Status::fail) {
      r_.counter_instance.reset();
      r_.counter_name.reset();
    }
    return std::move(r_);
  }

 private:
  using clock = std::chrono::steady_clock;
  VerifyParams p_;
  VerificationReport r_;
  clock::time_point start_;
  std::unordered_map<std::string, int> cache_;
};

// ---- candidate pools ----
// The cyclic statements range over power hypergraphs P(G); pools are built
// on graphs and lifted.

std::vector<Candidate> lift(std::vector<Candidate> graphs, int m) {
  std::vector<Candidate> out;
  for (auto& g : dedupe(std::move(graphs))) out.push_back({g.name, m == 2 ? g.graph : lift_graph(g.graph, m)});
  return out;
}

std::vector<Candidate> graphs_of(FamilyClass cls, int k, const VerifyParams& p, EnumerationOptions o = {}) {
  o.max_edges = std::max(p.exhaustive_trees, p.exhaustive_cyclic);
  o.budget = p.budget;
  return named(enumerate_class(cls, 2, k, o), "G_" + to_string(cls) + "[k=" + str(k) + "]");
}

std::vector<Candidate> exhaustive(FamilyClass cls, int m, int k, const VerifyParams& p, EnumerationOptions o = {}) {
  return lift(graphs_of(cls, k, p, o), m);
}

Pool trees_with_diameter(int m, int k, int d, const VerifyParams& p) {
  Pool pool;
  if (k <= p.exhaustive_trees) {
    EnumerationOptions o;
    o.diameter = d;
    pool.items = exhaustive(FamilyClass::hypertree, m, k, p, o);
  } else if (d == 2) {
    pool.items.push_back({"T_2(c2=" + str(k - 2) + ")", hyperstar(m, k)});
  } else if (d == 3) {
    pool.items = caterpillar_candidates(m, k, 3, 3);
  } else if (d == 4) {
    pool.items = diameter4_candidates(m, k);
  } else {
    pool.items = caterpillar_candidates(m, k, d, d);
    pool.exhaustive = false;
    pool.note = "diameter " + str(d) + " beyond exhaustive size: caterpillars T_" + str(d) + " only";
  }
  return pool;
}

Pool all_hypertrees(int m, int k, const VerifyParams& p) {
  Pool pool;
  if (k <= p.exhaustive_trees) {
    pool.items = exhaustive(FamilyClass::hypertree, m, k, p);
    return pool;
  }
  pool.exhaustive = false;
  pool.items.push_back({"T_2(c2=" + str(k - 2) + ")", hyperstar(m, k)});
  append(pool.items, caterpillar_candidates(m, k, 3, 3));
  append(pool.items, diameter4_candidates(m, k));
  append(pool.items, caterpillar_candidates(m, k, 5, 5));
  for (int d = 6; d <= k; ++d)
    for (int q = 2; q <= d / 2 + 1; ++q) pool.items.push_back(td(m, d, {{q, k - d}}));
  pool.note =
      "diameters 2-4 complete, diameter 5 caterpillars, diameters >= 6 represented by their per-diameter "
      "maximiser candidates T_d(c_p=k-d)";
  return pool;
}

// Graph bases up to single_upto edges get all missing pendant edges on one
// vertex; bases up to pair_upto edges may also split them over two.
std::vector<Candidate> extend_bases(const std::vector<Candidate>& bases, int k, int single_upto, int pair_upto) {
  std::vector<Candidate> singles, pairs;
  for (const Candidate& b : bases) {
    if (b.graph.num_edges() <= pair_upto) pairs.push_back(b);
    else if (b.graph.num_edges() <= single_upto) singles.push_back(b);
  }
  auto out = pendant_extensions(singles, k, 0);
  append(out, pendant_extensions(pairs, k, 2));
  return out;
}

std::vector<Candidate> graph_bases(FamilyClass cls, int k_lo, int k_hi, const VerifyParams& p,
                                   EnumerationOptions o = {}) {
  std::vector<Candidate> out;
  for (int k0 = k_lo; k0 <= k_hi; ++k0) append(out, graphs_of(cls, k0, p, o));
  return out;
}

constexpr int base_single = 9;
constexpr int base_pair = 8;

std::string base_note(const std::string& what) {
  return what + ", plus every graph shape of the class with at most " + str(base_single) +
         " edges completed by pendant edges on one vertex (or on two, at most two on the lighter, up to " +
         str(base_pair) + " edges)";
}

Pool unicyclic(int m, int k, std::optional<int> l, const VerifyParams& p) {
  Pool pool;
  EnumerationOptions o;
  o.cycle_length = l;
  if (k <= p.exhaustive_trees) {
    pool.items = exhaustive(FamilyClass::unicyclic, m, k, p, o);
    return pool;
  }
  pool.exhaustive = false;
  std::vector<Candidate> g;
  int lo = l.value_or(3), hi = l.value_or(k);
  for (int len = lo; len <= hi; ++len) append(g, unicyclic_candidates(2, k, len, 2));
  append(g, extend_bases(graph_bases(FamilyClass::unicyclic, lo, base_single, p, o), k, base_single, base_pair));
  pool.items = lift(std::move(g), m);
  pool.note = base_note("UC_l with pendant edges on at most two cycle vertices and U_lC");
  return pool;
}

bool tricyclic_type(const Hypergraph& h, int type) {
  const long long want = static_cast<long long>(h.num_edges()) * (h.m() - 1) - type;
  return h.num_vertices() == want;
}

Pool bicyclic(int m, int k, const VerifyParams& p) {
  Pool pool;
  if (k <= p.exhaustive_cyclic) {
    pool.items = exhaustive(FamilyClass::bicyclic, m, k, p);
    return pool;
  }
  pool.exhaustive = false;
  std::vector<Candidate> g;
  for (int a = 0; a <= k - 6; ++a) g.push_back({"B2C(" + str(a) + "," + str(k - 6 - a) + ")", bicyclic_B2C(2, a, k - 6 - a)});
  append(g, extend_bases(graph_bases(FamilyClass::bicyclic, 6, base_single, p), k, base_single, base_pair));
  std::vector<Candidate> cores;
  for (auto& c : cactus_cores(2, 2, 5, true))
    if (c.graph.num_edges() <= k) cores.push_back(std::move(c));
  append(g, extend_bases(cores, k, 11, 11));
  pool.items = lift(std::move(g), m);
  pool.note = base_note("B2C(a,b) and two-cycle cactus cores (cycles up to length 5, glued or bridged) with pendant "
                        "edges on one or two vertices");
  return pool;
}

Pool tricyclic(int m, int k, int type, const VerifyParams& p) {
  Pool pool;
  auto keep_type = [&](std::vector<Candidate> in) {
    std::vector<Candidate> out;
    for (auto& c : in)
      if (tricyclic_type(c.graph, type)) out.push_back(std::move(c));
    return out;
  };
  if (k <= p.exhaustive_cyclic) {
    pool.items = keep_type(exhaustive(FamilyClass::tricyclic, m, k, p));
    return pool;
  }
  pool.exhaustive = false;
  std::vector<Candidate> g;
  if (type == 1) {
    const int extra = k - 5;
    for (int a = 0; a <= extra; ++a)
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
          if (j == i && a != extra) continue;
          std::array<int, 4> l{};
          l[i] += extra - a;
          l[j] += a;
          g.push_back(t1c(2, l));
        }
    append(g, extend_bases(keep_type(graph_bases(FamilyClass::tricyclic, 5, base_single, p)), k, base_single,
                           base_pair));
    pool.note = base_note("T1C with pendant edges on at most two core vertices");
  } else {
    const int extra = k - 9;
    if (extra >= 0)
      for (int a = 0; a <= extra; ++a)
        for (int i = 0; i < 7; ++i)
          for (int j = 0; j < 7; ++j) {
            if (j == i && a != extra) continue;
            std::array<int, 7> c{};
            c[i] += extra - a;
            c[j] += a;
            g.push_back(t2c(2, c));
          }
    append(g, extend_bases(keep_type(graph_bases(FamilyClass::tricyclic, 9, base_single, p)), k, base_single,
                           base_pair));
    std::vector<Candidate> cores;
    for (auto& c : cactus_cores(2, 3, 4, true))
      if (c.graph.num_edges() <= k && tricyclic_type(c.graph, 2)) cores.push_back(std::move(c));
    append(g, extend_bases(cores, k, 14, 11));
    pool.note = base_note("T2C with pendant edges on at most two core vertices and three-cycle cactus cores (cycles "
                          "up to length 4, glued or bridged) with pendant edges on one or two vertices");
  }
  pool.items = lift(std::move(g), m);
  return pool;
}

// ---- entries ----

int param_m(const VerifyParams& p) { return p.m.value_or(3); }

void common(Run& run, int m, int k) {
  run.param("m", m);
  run.param("k", k);
  run.param("tol", std::to_string(run.tol()));
}

VerificationReport th1_order(Run run) {
  const auto& p = run.params();
  const int m = param_m(p), k = p.k.value_or(10), d = p.d.value_or(6);
  common(run, m, k);
  run.param("d", d);
  run.hypotheses(d >= 3 && k >= 2, "needs d >= 3");
  std::vector<Scored> best;
  for (int i = 2; i <= std::min(d - 1, k); ++i) {
    std::optional<Scored> top;
    for (int q = 2; q <= i / 2 + 1; ++q) {
      Scored s = run.score(td(m, i, {{q, k - i}}));
      if (!top || s.lambda > top->lambda) top = s;
    }
    if (k <= p.exhaustive_trees) {
      Pool pool = trees_with_diameter(m, k, i, p);
      std::optional<Scored> any;
      for (const Candidate& c : pool.items) {
        Scored s = run.score(c);
        if (!any || s.lambda > any->lambda) any = s;
      }
      run.at_least("diameter " + str(i) + ": max over all " + str(pool.items.size()) +
                       " hypertrees is attained by a T_i(c_p=k-i) form",
                   top->lambda, any->lambda, 1e-9, &any->graph, any->name);
    }
    best.push_back(*top);
  }
  for (std::size_t i = 0; i + 1 < best.size(); ++i)
    run.greater("lambda1(T*_" + str(i + 2) + ") > lambda1(T*_" + str(i + 3) + ")", best[i].lambda, best[i + 1].lambda,
                &best[i + 1].graph, best[i + 1].name);
  Scored path = run.score({"P_L(" + str(d) + ")", loose_path(m, d)});
  if (!best.empty())
    run.greater("lambda1(T*_" + str(best.size() + 1) + ") > lambda1(P_L(" + str(d) + "))", best.back().lambda,
                path.lambda, &best.back().graph, best.back().name);
  if (k > p.exhaustive_trees) run.note("maxima taken over the T_i(c_p=k-i) forms only");
  return run.finish();
}

VerificationReport extremal_diameter(Run run, bool odd) {
  const auto& p = run.params();
  const int m = param_m(p);
  const int d = p.d.value_or(odd ? 5 : 4);
  const int k = p.k.value_or(odd ? 9 : 32);
  common(run, m, k);
  run.param("d", d);
  if ((d % 2 == 1) != odd) throw Error(ErrorCode::invalid_argument, odd ? "d must be odd" : "d must be even");
  const int half = d / 2;
  if (odd)
    run.hypotheses(static_cast<long long>(k - d - 1) * (m - 1) >= 6, "(k-d-1)(m-1) < 6");
  else
    run.hypotheses(4LL * k >= (4LL * d * d - 1) * (m - 1) + 2, "k < ((4d^2-1)(m-1)+2)/4");
  if (k < d) throw Error(ErrorCode::invalid_argument, "needs k >= d");
  Candidate top = td(m, d, {{half + 1, k - d}});
  run.ordered_top({top}, trees_with_diameter(m, k, d, p));
  if (!odd) {
    BoundsReport b = even_diameter_bound(m, k, d);
    if (b.applicable) {
      Scored s = run.score(top);
      run.greater("lambda1(" + top.name + ") < even-diameter bound", *b.upper, s.lambda, &top.graph, top.name);
    }
  }
  return run.finish();
}

VerificationReport ratio_3a(Run run) {
  const auto& p = run.params();
  const int m = param_m(p);
  run.param("m", m);
  const double threshold = ratio_lemma_threshold(m);
  run.param("threshold", std::to_string(threshold));
  struct Base {
    std::string name;
    Hypergraph h;
    Vertex at;
  };
  std::vector<Base> bases;
  for (int s = 1; s <= 5; ++s) bases.push_back({"S_" + str(s), hyperstar(m, s), s == 1 ? 0 : core_vertex(m, 2)});
  bases.push_back({"C_L(3)", loose_cycle(m, 3), 0});
  bases.push_back({"C_L(4)", loose_cycle(m, 4), 0});
  bases.push_back({"UC_3(c1=2)", unicyclic_UC(m, 3, {{1, 2}}), 0});
  int checked = 0;
  for (const Base& b : bases)
    for (int l = 3; l <= 7; ++l) {
      std::vector<Edge> edges = b.h.edges();
      int n = b.h.num_vertices();
      std::vector<Vertex> path(l + 2);
      for (int i = 1; i <= l; ++i) path[i] = n++;
      path[l + 1] = b.at;
      for (int i = 1; i <= l; ++i) {
        Edge e{path[i], path[i + 1]};
        while (static_cast<int>(e.size()) < m) e.push_back(n++);
        edges.push_back(std::move(e));
      }
      Candidate c{b.name + "+P_L(" + str(l) + ")", Hypergraph::make(m, n, std::move(edges))};
      SpectralResult s = spectral_radius(c.graph);
      run.score(c);
      if (s.lambda1 < threshold) continue;
      ++checked;
      const auto& X = s.perron_vector;
      auto ratio = [&](int i) { return X[path[i]] / X[path[i + 1]]; };
      for (int i = 2; i <= l - 1; ++i) {
        run.at_least(c.name + ": X" + str(i) + "/X" + str(i + 1) + " < 1", 1, ratio(i), 1e-10, &c.graph, c.name);
        run.at_least(c.name + ": X" + str(i) + "/X" + str(i + 1) + " > X" + str(i - 1) + "/X" + str(i), ratio(i),
                     ratio(i - 1), 1e-10, &c.graph, c.name);
      }
    }
  run.note(str(checked) + " attached paths meet the lambda1 threshold");
  run.hypotheses(checked > 0, "no instance reaches the lambda1 threshold");
  return run.finish();
}

// Inward Perron ratios along the spine of T_d(c_q=k-d) increase towards v_q.
void ratio_chain(Run& run, int m, int d, int q, int k) {
  Candidate c = td(m, d, {{q, k - d}});
  SpectralResult s = spectral_radius(c.graph);
  run.score(c);
  const auto& X = s.perron_vector;
  auto x = [&](int i) { return X[core_vertex(m, i)]; };
  const double slack = 1e-10;
  std::vector<double> left;  // X_i / X_{i+1}, i = 1..q-1
  for (int i = 1; i <= q - 1; ++i) left.push_back(x(i) / x(i + 1));
  for (std::size_t i = 0; i < left.size(); ++i) {
    run.at_least(c.name + ": X" + str(i + 1) + "/X" + str(i + 2) + " < 1", 1, left[i], slack, &c.graph, c.name);
    if (i > 0)
      run.at_least(c.name + ": X" + str(i + 1) + "/X" + str(i + 2) + " > X" + str(i) + "/X" + str(i + 1), left[i],
                   left[i - 1], slack, &c.graph, c.name);
  }
  std::vector<double> right;  // X_{i+1} / X_i, i = q..d
  for (int i = q; i <= d; ++i) right.push_back(x(i + 1) / x(i));
  for (std::size_t j = 0; j < right.size(); ++j) {
    int i = q + static_cast<int>(j);
    run.at_least(c.name + ": X" + str(i + 1) + "/X" + str(i) + " < 1", 1, right[j], slack, &c.graph, c.name);
    if (j > 0)
      run.at_least(c.name + ": X" + str(i + 1) + "/X" + str(i) + " < X" + str(i) + "/X" + str(i - 1), right[j - 1],
                   right[j], slack, &c.graph, c.name);
  }
}

VerificationReport ratio_3b(Run run) {
  const auto& p = run.params();
  std::vector<int> ms = p.m ? std::vector<int>{*p.m} : std::vector<int>{3, 4, 5};
  int count = 0;
  for (int m : ms)
    for (int d = 3; d <= 8; ++d) {
      if (p.d && *p.d != d) continue;
      int kmin = d + 1 + (6 + m - 2) / (m - 1);
      for (int k : {kmin, kmin + 4}) {
        if (p.k && *p.k != k) continue;
        if (static_cast<long long>(k - d - 1) * (m - 1) < 6) continue;
        for (int q = 2; q <= d; ++q) {
          ratio_chain(run, m, d, q, k);
          ++count;
        }
      }
    }
  run.param("instances", count);
  run.hypotheses(count > 0, "no T_d(c_p=k-d) instance meets (k-d-1)(m-1) >= 6");
  run.note("right of v_p the ratios are read outward, X_{i+1}/X_i");
  return run.finish();
}

VerificationReport second_diam(Run run) {
  const auto& p = run.params();
  const int m = param_m(p), d = p.d.value_or(4), k = p.k.value_or(31);
  common(run, m, k);
  run.param("d", d);
  run.hypotheses(static_cast<long long>(k - d - 6) * (m - 1) >= 42, "(k-d-6)(m-1) < 42");
  const int half = d / 2;
  run.ordered_top({td(m, d, {{half + 1, k - d}}), td(m, d, {{half, k - d}})}, trees_with_diameter(m, k, d, p));
  return run.finish();
}

VerificationReport top7(Run run) {
  const auto& p = run.params();
  const int m = param_m(p), k = p.k.value_or(31);
  common(run, m, k);
  run.hypotheses(static_cast<long long>(k - 10) * (m - 1) >= 42, "(k-10)(m-1) < 42");
  run.ordered_top({td(m, 2, {{2, k - 2}}), td(m, 3, {{2, k - 3}}), td(m, 3, {{2, k - 4}, {3, 1}}),
                   td(m, 4, {{3, k - 4}}), td(m, 4, {{2, k - 4}}), td(m, 3, {{2, k - 5}, {3, 2}}),
                   td(m, 4, {{2, 1}, {3, k - 5}})},
                  all_hypertrees(m, k, p));
  return run.finish();
}

VerificationReport uct1(Run run) {
  const auto& p = run.params();
  const int m = param_m(p), k = p.k.value_or(8);
  common(run, m, k);
  run.hypotheses(k >= 3 && m >= 3, "needs k >= 3 and m >= 3");
  std::vector<Scored> tops;
  for (int l = 3; l <= k; ++l) {
    if (p.l && *p.l != l) continue;
    Candidate top = l == k ? Candidate{"C_L(" + str(k) + ")", loose_cycle(m, k)} : uc(m, l, {{1, k - l}});
    run.ordered_top({top}, unicyclic(m, k, l, p));
    Scored s = run.score(top);
    tops.push_back(s);
    BoundsReport b = unicyclic_bounds(m, k, l);
    if (b.lower && l < k)
      run.greater("lambda1(" + top.name + ") > unicyclic lower bound", s.lambda, *b.lower, &top.graph, top.name);
    if (b.upper)
      run.greater("lambda1(" + top.name + ") < unicyclic upper bound", *b.upper, s.lambda, &top.graph, top.name);
  }
  for (std::size_t i = 0; i + 1 < tops.size(); ++i)
    run.greater("lambda1(" + tops[i].name + ") > lambda1(" + tops[i + 1].name + ")", tops[i].lambda,
                tops[i + 1].lambda, &tops[i + 1].graph, tops[i + 1].name);
  const double cycle = loose_cycle_radius(m);
  for (const Scored& s : tops)
    if (s.name.rfind("C_L", 0) != 0)
      run.greater("lambda1(" + s.name + ") > lambda1(C_L)", s.lambda, cycle, &s.graph, s.name);
  return run.finish();
}

VerificationReport uct2(Run run) {
  const auto& p = run.params();
  const int m = param_m(p), l = p.l.value_or(3), k = p.k.value_or(19);
  common(run, m, k);
  run.param("l", l);
  run.hypotheses(static_cast<long long>(k - l - 6) * (m - 1) >= 20, "(k-l-6)(m-1) < 20");
  Candidate top = uc(m, l, {{1, k - l}}), second = uc(m, l, {{1, k - l - 1}, {2, 1}});
  run.ordered_top({top, second}, unicyclic(m, k, l, p));
  Scored s = run.score(second);
  double bound = (m + std::sqrt(double(m) * m + 4.0 * (k - l + 1) * (m - 1))) / (2.0 * m - 2);
  run.greater("lambda1(" + second.name + ") < second-largest bound", bound, s.lambda, &second.graph, second.name);
  return run.finish();
}

VerificationReport uct3(Run run) {
  const auto& p = run.params();
  const int m = param_m(p), l = p.l.value_or(3), k = p.k.value_or(14);
  common(run, m, k);
  run.param("l", l);
  run.hypotheses(static_cast<long long>(k - l - 5) * (m - 1) >= 12, "(k-l-5)(m-1) < 12");
  run.ordered_top({uc(m, l, {{1, k - l}}), uc(m, l, {{1, k - l - 1}, {2, 1}}), ulc(m, l, k - l - 1)},
                  unicyclic(m, k, l, p));
  return run.finish();
}

VerificationReport top3_uni(Run run) {
  const auto& p = run.params();
  const int m = param_m(p), k = p.k.value_or(17);
  common(run, m, k);
  run.hypotheses(static_cast<long long>(k - 7) * (m - 1) >= 20, "(k-7)(m-1) < 20");
  run.ordered_top({uc(m, 3, {{1, k - 3}}), uc(m, 3, {{1, k - 4}, {2, 1}}), ulc(m, 3, k - 4)},
                  unicyclic(m, k, std::nullopt, p));
  return run.finish();
}

VerificationReport bc_top(Run run) {
  const auto& p = run.params();
  const int m = param_m(p), k = p.k.value_or(8);
  common(run, m, k);
  run.hypotheses(k >= 6, "needs k >= 6");
  if (k < 6) return run.finish();
  run.ordered_top({bc(m, k - 6)}, bicyclic(m, k, p));
  PolyRoot root = bc_char_poly(m, k);
  Scored s = run.score(bc(m, k - 6));
  run.at_least("BC polynomial root matches lambda1 within 1e-9", 1e-9, std::fabs(root.radius - s.lambda), 0, &s.graph,
               s.name);
  if (root.bounds.lower)
    run.greater("|beta| above the lower bound", std::fabs(root.root), *root.bounds.lower, &s.graph, s.name);
  if (root.bounds.upper)
    run.greater("|beta| below the upper bound", *root.bounds.upper, std::fabs(root.root), &s.graph, s.name);
  return run.finish();
}

VerificationReport b2c_second(Run run) {
  const auto& p = run.params();
  const int m = param_m(p), k = p.k.value_or(40);
  common(run, m, k);
  run.hypotheses(k >= 8 && static_cast<long long>(k - 12) * (m - 1) >= 56, "needs k >= 8 and (k-12)(m-1) >= 56");
  if (k < 8) return run.finish();
  run.ordered_top({b2c(m, k - 6, 0), b2c(m, k - 7, 1)}, bicyclic(m, k, p));
  return run.finish();
}

VerificationReport tri_prop(Run run) {
  const auto& p = run.params();
  const int m = param_m(p), k = p.k.value_or(7);
  common(run, m, k);
  auto check = [&](const Candidate& c) {
    run.score(c);
    const long long base = static_cast<long long>(c.graph.num_edges()) * (c.graph.m() - 1);
    const long long n = c.graph.num_vertices();
    run.holds(c.name + ": n = k(m-1)-1 or k(m-1)-2", n == base - 1 || n == base - 2, &c.graph, c.name);
    bool shares = true;
    auto cycles = enumerate_loose_cycles(c.graph);
    for (std::size_t i = 0; i < cycles.size(); ++i)
      for (std::size_t j = i + 1; j < cycles.size(); ++j) {
        bool common_edge = false;
        for (int e : cycles[i].edges)
          if (std::find(cycles[j].edges.begin(), cycles[j].edges.end(), e) != cycles[j].edges.end()) common_edge = true;
        shares = shares && common_edge;
      }
    run.holds(c.name + ": Type I exactly when every two cycles share an edge", shares == (n == base - 1), &c.graph,
              c.name);
  };
  auto all = exhaustive(FamilyClass::tricyclic, m, k, p);
  for (const auto& c : all) check(c);
  run.note(str(all.size()) + " tricyclic shapes with k = " + str(k));
  Hypergraph ex = Hypergraph::make(4, 14, {{0, 1, 2, 3}, {3, 4, 5, 6}, {6, 7, 8, 9}, {9, 10, 11, 0}, {6, 12, 13, 0}});
  Candidate c{"example(m=4,n=14,k=5)", ex};
  check(c);
  run.holds(c.name + ": exactly three loose cycles", enumerate_loose_cycles(ex).size() == 3, &ex, c.name);
  return run.finish();
}

VerificationReport t1c_top(Run run, bool second) {
  const auto& p = run.params();
  const int m = param_m(p), k = p.k.value_or(second ? 32 : 8);
  common(run, m, k);
  run.hypotheses(k >= (second ? 6 : 5), second ? "needs k >= 6" : "needs k >= 5");
  if (k < (second ? 6 : 5)) return run.finish();
  std::vector<Candidate> chain{t1c(m, {k - 5, 0, 0, 0})};
  if (second) chain.push_back(t1c(m, {k - 6, 0, 1, 0}));
  run.ordered_top(chain, tricyclic(m, k, 1, p));
  if (!second) {
    BoundsReport b = t1c_bound(m, k);
    Scored s = run.score(chain[0]);
    if (b.upper) run.greater("lambda1(" + s.name + ") < T1C bound", *b.upper, s.lambda, &s.graph, s.name);
  }
  return run.finish();
}

VerificationReport t2c_top(Run run, bool second) {
  const auto& p = run.params();
  const int m = param_m(p), k = p.k.value_or(second ? 36 : 12);
  common(run, m, k);
  if (second)
    run.hypotheses(static_cast<long long>(k - 13) * (m - 1) >= 46, "(k-13)(m-1) < 46");
  else
    run.hypotheses(k >= 9, "needs k >= 9");
  if (k < (second ? 10 : 9)) return run.finish();
  std::vector<Candidate> chain{t2c(m, {k - 9, 0, 0, 0, 0, 0, 0})};
  if (second) chain.push_back(t2c(m, {k - 10, 1, 0, 0, 0, 0, 0}));
  run.ordered_top(chain, tricyclic(m, k, 2, p));
  if (!second) {
    PolyRoot root = t2c_char_poly(m, k);
    Scored s = run.score(chain[0]);
    run.at_least("T2C polynomial root matches lambda1 within 1e-9", 1e-9, std::fabs(root.radius - s.lambda), 0,
                 &s.graph, s.name);
    if (root.bounds.upper)
      run.greater("gamma below the T2C bound", *root.bounds.upper, std::fabs(root.root), &s.graph, s.name);
  }
  return run.finish();
}

std::pair<int, int> k_range(const VerifyParams& p, int lo, int hi) {
  int a = p.k.value_or(lo);
  int b = p.k_to.value_or(p.k ? a : hi);
  return {a, b};
}

VerificationReport remark_bt(Run run) {
  const auto& p = run.params();
  const int m = param_m(p);
  auto [k0, k1] = k_range(p, 6, 12);
  run.param("m", m);
  run.param("k", str(k0) + ".." + str(k1));
  run.hypotheses(k0 >= 6, "needs k >= 6");
  for (int k = std::max(k0, 6); k <= k1; ++k) {
    Scored top = run.score(t1c(m, {k - 5, 0, 0, 0}));
    Scored b = run.score(bc(m, k - 6));
    run.greater("k=" + str(k) + ": lambda1(" + top.name + ") > lambda1(" + b.name + ")", top.lambda, b.lambda, &b.graph,
                b.name);
    if (k < 7) continue;
    Scored t = run.score(t1c(m, {k - 6, 0, 1, 0}));
    Scored x = run.score(b2c(m, 0, k - 6));
    Scored y = run.score(b2c(m, k - 7, 1));
    const Scored& hi = x.lambda > y.lambda ? x : y;
    run.greater("k=" + str(k) + ": lambda1(" + t.name + ") > max(lambda1(" + x.name + "), lambda1(" + y.name + "))",
                t.lambda, hi.lambda, &hi.graph, hi.name);
  }
  return run.finish();
}

VerificationReport uc0(Run run) {
  const auto& p = run.params();
  const int m = param_m(p);
  run.param("m", m);
  for (int l = 4; l <= 9; ++l) {
    if (p.l && *p.l != l) continue;
    for (int c = 0; c <= 8; ++c) {
      Candidate a = c == 0 ? Candidate{"C_L(" + str(l) + ")", loose_cycle(m, l)} : uc(m, l, {{1, c}});
      Candidate b = uc(m, l - 1, {{1, c + 1}});
      Scored sa = run.score(a), sb = run.score(b);
      run.greater("lambda1(" + sb.name + ") > lambda1(" + sa.name + ")", sb.lambda, sa.lambda, &a.graph, a.name);
    }
  }
  return run.finish();
}

VerificationReport ucl1(Run run) {
  const auto& p = run.params();
  const int m = param_m(p);
  run.param("m", m);
  for (int l = 3; l <= 6; ++l) {
    if (p.l && *p.l != l) continue;
    for (int i = 1; i <= l; ++i)
      for (int j = 1; j <= l; ++j) {
        if (i == j) continue;
        for (int a = 1; a <= 5; ++a)
          for (int b = 1; b <= a; ++b) {
            Candidate lo = uc(m, l, {{i, a}, {j, b}});
            AttachmentSpec s{{i, a + 1}};
            if (b > 1) s[j] = b - 1;
            Candidate hi = uc(m, l, s);
            Scored x = run.score(lo), y = run.score(hi);
            run.greater("lambda1(" + y.name + ") > lambda1(" + x.name + ")", y.lambda, x.lambda, &lo.graph, lo.name);
          }
      }
  }
  return run.finish();
}

VerificationReport ucl7(Run run) {
  const auto& p = run.params();
  const int m = param_m(p);
  run.param("m", m);
  int asserted = 0;
  for (int l = 5; l <= 9; ++l) {
    if (p.l && *p.l != l) continue;
    const int q = (l + 1) / 2;
    for (int b = 1; b <= 8; ++b)
      for (int a = 1; a <= b; ++a) {
        Scored base = run.score(uc(m, l, {{1, b}, {q, a}}));
        double threshold = (m + std::sqrt(double(m) * m + 4.0 * (a + 2) * (m - 1))) / (2.0 * m - 2);
        if (base.lambda < threshold) continue;
        for (int i = 3; i <= q; ++i) {
          Scored far = run.score(uc(m, l, {{1, b}, {i, a}}));
          Scored near = run.score(uc(m, l, {{1, b}, {i - 1, a}}));
          run.greater("lambda1(" + near.name + ") > lambda1(" + far.name + ")", near.lambda, far.lambda, &far.graph,
                      far.name);
          ++asserted;
        }
      }
  }
  run.note("i runs over 3..p: at i = 2 both sides name pendant edges at v_1");
  run.hypotheses(asserted > 0, "no instance meets the lambda1 threshold");
  return run.finish();
}

VerificationReport b2c_lemma(Run run) {
  const auto& p = run.params();
  const int m = param_m(p);
  run.param("m", m);
  for (int total = 1; total <= 10; ++total)
    for (int l2 = 0; l2 <= total; ++l2) {
      int l1 = total - l2;
      if (l1 >= l2 && l2 >= 1) {
        Scored x = run.score(b2c(m, l1, l2)), y = run.score(b2c(m, l1 + 1, l2 - 1));
        run.greater("lambda1(" + y.name + ") > lambda1(" + x.name + ")", y.lambda, x.lambda, &x.graph, x.name);
      }
      if (l1 > l2) {
        Scored x = run.score(b2c(m, l2, l1)), y = run.score(b2c(m, l1, l2));
        run.greater("lambda1(" + y.name + ") > lambda1(" + x.name + ")", y.lambda, x.lambda, &x.graph, x.name);
      }
    }
  return run.finish();
}

struct Entry {
  TheoremInfo info;
  std::function<VerificationReport(Run)> run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> list = {
      {{"TH1_ORDER", "per-diameter hypertree maxima strictly decrease with the diameter and stay above the loose path",
        "m=3 k=10 d=6"},
       th1_order},
      {{"TH3_ODD", "odd diameter d=2p+1: T_d(c_{p+1}=k-d) is the unique maximiser", "m=3 d=5 k=9"},
       [](Run r) { return extremal_diameter(std::move(r), true); }},
      {{"TH4_EVEN", "even diameter d=2p, k large: T_d(c_{p+1}=k-d) is the unique maximiser, below the bound",
        "m=3 d=4 k=32"},
       [](Run r) { return extremal_diameter(std::move(r), false); }},
      {{"RATIO_3A", "Perron ratios along a hanging loose path increase towards the attachment vertex", "m=3"},
       ratio_3a},
      {{"RATIO_3B", "Perron ratios along the spine of T_d(c_p=k-d) increase towards v_p from both ends",
        "m=3,4,5 d=3..8"},
       ratio_3b},
      {{"SECOND_DIAM", "second-largest hypertree with diameter d is T_d(c_p=k-d), p=[d/2]", "m=3 d=4 k=31"},
       second_diam},
      {{"TOP7_TREES", "the seven hypertrees with the largest spectral radii, in order", "m=3 k=31"}, top7},
      {{"UCT1", "UC_l(c_1=k-l) maximises each cycle length; maxima decrease in l and are bracketed", "m=3 k=8"}, uct1},
      {{"UCT2_SECOND", "second-largest unicyclic with cycle length l is UC_l(c_1=k-l-1,c_2=1)", "m=3 l=3 k=19"}, uct2},
      {{"UCT3_THIRD", "third-largest unicyclic with cycle length l is U_lC(c_1=k-l-1)", "m=3 l=3 k=14"}, uct3},
      {{"TOP3_UNI", "top three unicyclic: UC_3(c_1=k-3), UC_3(c_1=k-4,c_2=1), U_3C(c_1=k-4)", "m=3 k=17"}, top3_uni},
      {{"BC_TOP", "BC(k-6) is the unique bicyclic maximiser; its polynomial root and bounds", "m=3 k=8"}, bc_top},
      {{"B2C_SECOND", "second-largest bicyclic is B2C(k-7,1)", "m=3 k=40"}, b2c_second},
      {{"TRI_PROP", "tricyclic vertex counts are k(m-1)-1 or k(m-1)-2; the 14-vertex example", "m=3 k=7"}, tri_prop},
      {{"T1C_TOP", "T1C(k-5,0,0,0) is the unique Type I maximiser, below its bound", "m=3 k=8"},
       [](Run r) { return t1c_top(std::move(r), false); }},
      {{"T1C_SECOND", "second-largest Type I tricyclic is T1C(k-6,0,1,0)", "m=3 k=32"},
       [](Run r) { return t1c_top(std::move(r), true); }},
      {{"T2C_TOP", "T2C(c_1=k-9) is the unique Type II maximiser; its polynomial root and bound", "m=3 k=12"},
       [](Run r) { return t2c_top(std::move(r), false); }},
      {{"T2C_SECOND", "second-largest Type II tricyclic is T2C(c_1=k-10,c_2=1)", "m=3 k=36"},
       [](Run r) { return t2c_top(std::move(r), true); }},
      {{"REMARK_BT", "tricyclic extremes beat the bicyclic ones: BC(k-6) < T1C(k-5,0,0,0) and more", "m=3 k=6..12"},
       remark_bt},
      {{"UC0", "UC_l(c_1=p) < UC_{l-1}(c_1=p+1)", "m=3 l=4..9"}, uc0},
      {{"UCL1", "moving one pendant edge to the heavier vertex of UC_l increases lambda1", "m=3 l=3..6"}, ucl1},
      {{"UCL7", "UC_l(c_1=b,c_i=a) decreases as i moves away from v_1, above the threshold", "m=3 l=5..9"}, ucl7},
      {{"B2C_LEMMA", "B2C(l1,l2) grows as pendant edges move to the centre", "m=3"}, b2c_lemma},
  };
  return list;
}

}  // namespace

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::vacuous: return "vacuous";
  }
  return "?";
}

const std::vector<TheoremInfo>& theorem_registry() {
  static const std::vector<TheoremInfo> infos = [] {
    std::vector<TheoremInfo> out;
    for (const Entry& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

VerificationReport verify(const std::string& theorem_id, const VerifyParams& params) {
  for (const Entry& e : entries())
    if (e.info.id == theorem_id) return e.run(Run(e.info.id, e.info.statement, params));
  throw Error(ErrorCode::invalid_argument, "unknown theorem id '" + theorem_id + "'");
}

int exit_code(const VerificationReport& r) {
  switch (r.status) {
    case Status::pass: return 0;
    case Status::fail: return 1;
    case Status::vacuous: return 2;
  }
  return 1;
}

}  // namespace hyperspec
