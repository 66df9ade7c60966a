#include <gtest/gtest.h>

#include "hyperspec/error.hpp"
#include "hyperspec/families.hpp"
#include "support.hpp"

using namespace hyperspec;

namespace {

void expect_valid(const Hypergraph& h) {
  auto r = validate(h);
  EXPECT_TRUE(r.valid());
  EXPECT_TRUE(r.connected);
}

int cycles(const Hypergraph& h) { return classify_cyclicity(h).loose_cycle_count; }

SimpleGraph path_graph(int n) {
  SimpleGraph g{n, {}};
  for (int i = 0; i + 1 < n; ++i) g.edges.push_back({i, i + 1});
  return g;
}

SimpleGraph star_graph(int leaves) {
  SimpleGraph g{leaves + 1, {}};
  for (int i = 1; i <= leaves; ++i) g.edges.push_back({0, i});
  return g;
}

}  // namespace

TEST(LoosePath, Examples) {
  auto one = loose_path(3, 1);
  EXPECT_EQ(one.num_vertices(), 3);
  EXPECT_EQ(one.num_edges(), 1);

  auto two = loose_path(3, 2);
  EXPECT_EQ(two.edges(), (std::vector<Edge>{{0, 1, 2}, {2, 3, 4}}));

  auto h = loose_path(4, 3);
  EXPECT_EQ(h.num_vertices(), 10);
  EXPECT_EQ(h.num_edges(), 3);
  EXPECT_EQ(diameter(h), 3);
  EXPECT_THROW(loose_path(3, 0), Error);
}

TEST(LooseCycle, Examples) {
  auto c = loose_cycle(3, 3);
  EXPECT_EQ(c.num_vertices(), 6);
  EXPECT_EQ(cycles(c), 1);
  EXPECT_EQ(loose_cycle(4, 3).num_vertices(), 9);
  try {
    loose_cycle(3, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::linearity);
  }
  // last edge closes back onto vertex 0
  EXPECT_EQ(loose_cycle(3, 4).edge(3), (Edge{0, 6, 7}));
}

TEST(HypertreeTd, Examples) {
  EXPECT_TRUE(oracle::isomorphic(hypertree_Td(3, 2, {{2, 3}}), hyperstar(3, 5)));
  auto h = hypertree_Td(3, 4, {{3, 2}});
  EXPECT_EQ(h.num_edges(), 6);
  EXPECT_EQ(h.num_vertices(), 13);
  EXPECT_EQ(diameter(h), 4);
  EXPECT_EQ(hypertree_Td(3, 3, {}), loose_path(3, 3));
  EXPECT_THROW(hypertree_Td(3, 4, {{1, 1}}), Error);
  EXPECT_THROW(hypertree_Td(3, 4, {{5, 1}}), Error);
}

TEST(HypertreeTd, DiameterStaysD) {
  for (int m : {3, 4, 5})
    for (int d = 2; d <= 6; ++d)
      for (int p = 2; p <= d; ++p) {
        auto h = hypertree_Td(m, d, {{p, 3}});
        EXPECT_EQ(diameter(h), d);
        EXPECT_EQ(h.num_edges(), d + 3);
        EXPECT_EQ(h.num_vertices(), (d + 3) * (m - 1) + 1);
        EXPECT_EQ(cycles(h), 0);
      }
}

TEST(UnicyclicUC, Examples) {
  auto a = unicyclic_UC(3, 3, {{1, 2}});
  EXPECT_EQ(a.num_edges(), 5);
  EXPECT_EQ(a.num_vertices(), 10);
  EXPECT_EQ(unicyclic_UC(3, 3, {}), loose_cycle(3, 3));
  auto b = unicyclic_UC(4, 4, {{1, 1}, {2, 1}});
  EXPECT_EQ(b.num_edges(), 6);
  EXPECT_EQ(b.num_vertices(), 18);
  EXPECT_THROW(unicyclic_UC(3, 3, {{4, 1}}), Error);
}

TEST(UnicyclicUlC, Examples) {
  auto a = unicyclic_UlC(3, 3, 1);
  EXPECT_EQ(a.num_edges(), 5);
  EXPECT_EQ(cycles(a), 1);
  EXPECT_EQ(diameter(a), 4);
  EXPECT_EQ(unicyclic_UlC(3, 3, 3).num_edges(), 7);
  auto b = unicyclic_UlC(4, 4, 2);
  EXPECT_EQ(b.num_edges(), 7);
  EXPECT_EQ(b.num_vertices(), 21);
  EXPECT_THROW(unicyclic_UlC(3, 3, 0), Error);
}

TEST(Bicyclic, Examples) {
  auto bc0 = bicyclic_BC(3, 0);
  EXPECT_EQ(bc0.num_edges(), 6);
  EXPECT_EQ(bc0.num_vertices(), 11);
  EXPECT_EQ(bicyclic_BC(3, 2).num_vertices(), 15);
  auto bc1 = bicyclic_BC(4, 1);
  EXPECT_EQ(bc1.num_edges(), 7);
  EXPECT_EQ(bc1.num_vertices(), 20);

  EXPECT_EQ(bicyclic_B2C(3, 0, 0), bicyclic_BC(3, 0));
  auto b = bicyclic_B2C(3, 2, 1);
  EXPECT_EQ(b.num_edges(), 9);
  EXPECT_EQ(classify_cyclicity(b).classification, Cyclicity::bicyclic);
  auto c = bicyclic_B2C(3, 0, 2);
  EXPECT_EQ(c.edge_degree(bc_core_vertices(3)[1]), 4);
}

TEST(Bicyclic, CoreVerticesShareCentre) {
  for (int m : {3, 4}) {
    auto h = bicyclic_BC(m, 0);
    auto cores = bc_core_vertices(m);
    EXPECT_EQ(h.edge_degree(cores[0]), 4);
    for (int i = 1; i < 5; ++i) EXPECT_EQ(h.edge_degree(cores[i]), 2);
  }
}

TEST(TricyclicT1C, Examples) {
  auto a = tricyclic_T1C(3, {0, 0, 0, 0});
  EXPECT_EQ(a.num_edges(), 5);
  EXPECT_EQ(a.num_vertices(), 9);
  std::vector<int> lengths;
  for (const auto& c : enumerate_loose_cycles(a)) lengths.push_back(c.length());
  std::sort(lengths.begin(), lengths.end());
  EXPECT_EQ(lengths, (std::vector<int>{3, 3, 4}));

  auto b = tricyclic_T1C(4, {1, 0, 0, 0});
  EXPECT_EQ(b.num_edges(), 6);
  EXPECT_EQ(b.num_vertices(), 17);
  EXPECT_EQ(classify_cyclicity(b).classification, Cyclicity::tricyclic_type_i);

  auto t = t1c_core_vertices(3);
  auto c = tricyclic_T1C(3, {2, 0, 0, 0});
  EXPECT_EQ(c.num_edges(), 7);
  EXPECT_EQ(c.edge_degree(t[0]), 5);
  EXPECT_EQ(c.edge_degree(t[2]), 3);
}

TEST(TricyclicT2C, Examples) {
  auto a = tricyclic_T2C(3, {0, 0, 0, 0, 0, 0, 0});
  EXPECT_EQ(a.num_edges(), 9);
  EXPECT_EQ(a.num_vertices(), 16);
  EXPECT_EQ(cycles(a), 3);
  EXPECT_EQ(classify_cyclicity(a).classification, Cyclicity::tricyclic_type_ii);
  auto b = tricyclic_T2C(3, {3, 0, 0, 0, 0, 0, 0});
  EXPECT_EQ(b.num_edges(), 12);
  EXPECT_EQ(b.num_vertices(), 22);
  auto c = tricyclic_T2C(4, {0, 1, 0, 0, 0, 0, 0});
  EXPECT_EQ(c.num_edges(), 10);
  EXPECT_EQ(c.num_vertices(), 28);
}

TEST(TricyclicT2C, EveryPositionReachesADistinctCoreVertex) {
  auto cores = t2c_core_vertices(3);
  for (int i = 0; i < 7; ++i) {
    std::array<int, 7> c{};
    c[i] = 1;
    auto h = tricyclic_T2C(3, c);
    EXPECT_EQ(h.edge_degree(cores[i]), i == 0 ? 7 : 3);
  }
}

TEST(Families, CountsAndCyclicityOverSweeps) {
  for (int m : {3, 4, 5}) {
    for (int a = 0; a <= 3; ++a) {
      for (int b = 0; b <= 2; ++b) {
        auto uc = unicyclic_UC(m, 4, {{1, a}, {3, b}});
        expect_valid(uc);
        EXPECT_EQ(uc.num_vertices(), uc.num_edges() * (m - 1));
        EXPECT_EQ(classify_cyclicity(uc).classification, Cyclicity::unicyclic);

        auto b2 = bicyclic_B2C(m, a, b);
        expect_valid(b2);
        EXPECT_EQ(b2.num_edges(), 6 + a + b);
        EXPECT_EQ(b2.num_vertices(), b2.num_edges() * (m - 1) - 1);
        EXPECT_EQ(classify_cyclicity(b2).classification, Cyclicity::bicyclic);

        auto t1 = tricyclic_T1C(m, {a, 0, b, 0});
        expect_valid(t1);
        EXPECT_EQ(t1.num_edges(), 5 + a + b);
        EXPECT_EQ(classify_cyclicity(t1).classification, Cyclicity::tricyclic_type_i);

        auto t2 = tricyclic_T2C(m, {a, b, 0, 0, 0, 0, 0});
        expect_valid(t2);
        EXPECT_EQ(t2.num_edges(), 9 + a + b);
        EXPECT_EQ(classify_cyclicity(t2).classification, Cyclicity::tricyclic_type_ii);
      }
      auto ulc = unicyclic_UlC(m, 3, a + 1);
      expect_valid(ulc);
      EXPECT_EQ(ulc.num_edges(), 3 + a + 2);
      EXPECT_EQ(classify_cyclicity(ulc).classification, Cyclicity::unicyclic);
    }
  }
}

TEST(PowerHypergraph, Examples) {
  EXPECT_TRUE(oracle::isomorphic(power_hypergraph(path_graph(3), 3), loose_path(3, 2)));
  SimpleGraph triangle{3, {{0, 1}, {1, 2}, {2, 0}}};
  auto c = power_hypergraph(triangle, 4);
  EXPECT_EQ(c.num_vertices(), 9);
  EXPECT_TRUE(oracle::isomorphic(c, loose_cycle(4, 3)));
  EXPECT_TRUE(oracle::isomorphic(power_hypergraph(star_graph(4), 3), hyperstar(3, 4)));
}

TEST(PowerHypergraph, VertexCountAndIdentityAtTwo) {
  SimpleGraph g{5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}}};
  for (int m = 2; m <= 5; ++m) {
    auto h = power_hypergraph(g, m);
    EXPECT_EQ(h.num_vertices(), 5 + 5 * (m - 2));
    expect_valid(h);
  }
  auto same = power_hypergraph(g, 2);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    auto [u, v] = g.edges[i];
    EXPECT_EQ(same.edge(int(i)), (Edge{std::min(u, v), std::max(u, v)}));
  }
}

TEST(PowerHypergraph, RejectsNonSimpleGraphs) {
  EXPECT_THROW(power_hypergraph(SimpleGraph{2, {{0, 1}, {1, 0}}}, 3), Error);
  EXPECT_THROW(power_hypergraph(SimpleGraph{2, {{0, 0}, {0, 1}}}, 3), Error);
  EXPECT_THROW(power_hypergraph(SimpleGraph{3, {{0, 1}}}, 3), Error);
}
