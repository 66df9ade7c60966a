#include <gtest/gtest.h>

#include <algorithm>

#include "hyperspec/error.hpp"
#include "hyperspec/families.hpp"
#include "hyperspec/hypergraph.hpp"
#include "support.hpp"

using namespace hyperspec;

namespace {

// Five edges on fourteen vertices, m = 4: three loose cycles (3, 3, 4) with
// two of them sharing an edge.
Hypergraph fourteen_vertex_example() {
  return Hypergraph::make(4, 14, {{0, 1, 2, 3}, {3, 4, 5, 6}, {6, 7, 8, 9}, {9, 10, 11, 0}, {6, 12, 13, 0}});
}

std::vector<Hypergraph> small_family_sample() {
  std::vector<Hypergraph> out;
  for (int m : {3, 4}) {
    for (int l = 1; l <= 5; ++l) out.push_back(loose_path(m, l));
    for (int l = 3; l <= 6; ++l) out.push_back(loose_cycle(m, l));
    out.push_back(hypertree_Td(m, 4, {{2, 1}, {3, 2}}));
    out.push_back(unicyclic_UC(m, 3, {{1, 2}, {2, 1}}));
    out.push_back(unicyclic_UC(m, 4, {{3, 1}}));
    out.push_back(unicyclic_UlC(m, 3, 2));
    out.push_back(bicyclic_BC(m, 1));
    out.push_back(bicyclic_B2C(m, 1, 2));
    out.push_back(tricyclic_T1C(m, {1, 0, 1, 0}));
    out.push_back(tricyclic_T2C(m, {0, 0, 0, 0, 0, 0, 0}));
  }
  out.push_back(fourteen_vertex_example());
  return out;
}

}  // namespace

TEST(Validate, SingleEdgeIsValid) {
  auto r = validate(3, 3, {{0, 1, 2}});
  EXPECT_TRUE(r.valid());
  EXPECT_TRUE(r.connected);
}

TEST(Validate, NonlinearPairHasWitness) {
  auto r = validate(3, 4, {{0, 1, 2}, {1, 2, 3}});
  EXPECT_FALSE(r.linear);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].kind, ViolationKind::nonlinear_pair);
  EXPECT_EQ(r.violations[0].edges, (std::vector<int>{0, 1}));
}

TEST(Validate, FourteenVertexExample) {
  auto h = fourteen_vertex_example();
  auto r = validate(h);
  EXPECT_TRUE(r.valid());
  EXPECT_TRUE(r.connected);
  EXPECT_EQ(h.num_vertices(), 14);
  EXPECT_EQ(h.num_edges(), 5);
}

TEST(Validate, ListsEveryKindOfViolation) {
  auto r = validate(3, 8, {{0, 1}, {2, 2, 3}, {0, 1, 9}, {4, 5, 6}, {6, 5, 4}});
  std::vector<ViolationKind> kinds;
  for (const auto& v : r.violations) kinds.push_back(v.kind);
  auto has = [&](ViolationKind k) { return std::count(kinds.begin(), kinds.end(), k) > 0; };
  EXPECT_TRUE(has(ViolationKind::wrong_size));
  EXPECT_TRUE(has(ViolationKind::repeated_vertex));
  EXPECT_TRUE(has(ViolationKind::vertex_out_of_range));
  EXPECT_TRUE(has(ViolationKind::duplicate_edge));
  EXPECT_TRUE(has(ViolationKind::isolated_vertex));
  EXPECT_FALSE(r.uniform);
  EXPECT_FALSE(r.simple);
  EXPECT_FALSE(r.connected);
}

TEST(Validate, DisconnectedIsReportedNotRejected) {
  auto r = validate(3, 6, {{0, 1, 2}, {3, 4, 5}});
  EXPECT_TRUE(r.valid());
  EXPECT_FALSE(r.connected);
}

TEST(Construct, CheckedConstructionRejects) {
  EXPECT_THROW(Hypergraph::make(3, 4, {{0, 1, 2}, {1, 2, 3}}), Error);
  try {
    Hypergraph::make(3, 4, {{0, 1, 2}, {1, 2, 3}});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::linearity);
  }
  try {
    Hypergraph::make(3, 3, {{0, 1, 2}, {2, 1, 0}});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::non_simple);
  }
  try {
    Hypergraph::make(3, 4, {{0, 1, 2}});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::isolated_vertex);
  }
  EXPECT_THROW(Hypergraph::make(1, 1, {{0}}), Error);
}

TEST(Degree, Examples) {
  auto star = hyperstar(3, 4);
  EXPECT_EQ(degree(star, core_vertex(3, 2)), Rational(4));
  EXPECT_EQ(degree(star, 1), Rational(1));
  auto path = loose_path(3, 2);
  EXPECT_EQ(degree(path, core_vertex(3, 2)), Rational(2));
  try {
    degree(path, 99);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::unknown_vertex);
  }
}

TEST(Degree, IntegralAndEqualToIncidenceCount) {
  for (const auto& h : small_family_sample())
    for (Vertex v = 0; v < h.num_vertices(); ++v) {
      auto d = degree(h, v);
      EXPECT_EQ(d.denominator(), 1);
      EXPECT_EQ(d.numerator(), h.edge_degree(v));
    }
}

TEST(LooseCycles, Examples) {
  auto c4 = enumerate_loose_cycles(loose_cycle(3, 4));
  ASSERT_EQ(c4.size(), 1u);
  EXPECT_EQ(c4[0].length(), 4);
  EXPECT_TRUE(enumerate_loose_cycles(loose_path(3, 5)).empty());

  auto cycles = enumerate_loose_cycles(fourteen_vertex_example());
  std::vector<int> lengths;
  for (const auto& c : cycles) lengths.push_back(c.length());
  std::sort(lengths.begin(), lengths.end());
  EXPECT_EQ(lengths, (std::vector<int>{3, 3, 4}));
}

TEST(LooseCycles, RepresentationInvariants) {
  for (const auto& h : small_family_sample()) {
    for (const auto& c : enumerate_loose_cycles(h)) {
      const int l = c.length();
      ASSERT_GE(l, 3);
      for (int i = 0; i < l; ++i) {
        // core v_i sits in edges i-1 and i
        EXPECT_TRUE(h.contains(c.edges[i], c.core_vertices[i]));
        EXPECT_TRUE(h.contains(c.edges[(i + l - 1) % l], c.core_vertices[i]));
      }
      std::set<Vertex> distinct(c.core_vertices.begin(), c.core_vertices.end());
      EXPECT_EQ(int(distinct.size()), l);
    }
  }
}

TEST(LooseCycles, AgreesWithSubsetOracle) {
  for (const auto& h : small_family_sample()) {
    if (h.num_edges() > 10) continue;
    EXPECT_EQ(int(enumerate_loose_cycles(h).size()), oracle::count_loose_cycles(h));
  }
}

TEST(LooseCycles, SizeCap) {
  auto h = loose_path(3, 10);
  try {
    enumerate_loose_cycles(h, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::size_cap);
  }
}

TEST(Cyclicity, Examples) {
  auto c3 = classify_cyclicity(loose_cycle(3, 3));
  EXPECT_EQ(c3.classification, Cyclicity::unicyclic);
  EXPECT_EQ(c3.n, 6);
  EXPECT_TRUE(c3.identity_consistent);

  auto bc = classify_cyclicity(bicyclic_BC(3, 0));
  EXPECT_EQ(bc.classification, Cyclicity::bicyclic);
  EXPECT_EQ(bc.n, 11);

  auto ex = classify_cyclicity(fourteen_vertex_example());
  EXPECT_EQ(ex.loose_cycle_count, 3);
  EXPECT_EQ(ex.classification, Cyclicity::tricyclic_type_i);
  EXPECT_EQ(ex.n, 5 * 3 - 1);
  EXPECT_TRUE(ex.identity_consistent);
}

TEST(Cyclicity, DisconnectedRejected) {
  auto h = Hypergraph::make(3, 6, {{0, 1, 2}, {3, 4, 5}});
  try {
    classify_cyclicity(h);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::disconnected);
  }
}

TEST(Cyclicity, AcyclicIffTreeVertexCount) {
  for (const auto& h : small_family_sample()) {
    auto r = classify_cyclicity(h);
    const int k = h.num_edges();
    EXPECT_EQ(r.loose_cycle_count == 0, h.num_vertices() == k * (h.m() - 1) + 1);
  }
}

TEST(Diameter, Examples) {
  EXPECT_EQ(diameter(loose_path(5, 1)), 1);
  EXPECT_EQ(diameter(loose_path(3, 4)), 4);
  EXPECT_EQ(diameter(hypertree_Td(3, 3, {{2, 2}})), 3);
  EXPECT_THROW(diameter(Hypergraph::make(3, 6, {{0, 1, 2}, {3, 4, 5}})), Error);
}

TEST(Diameter, AgreesWithFloydWarshall) {
  for (const auto& h : small_family_sample()) EXPECT_EQ(diameter(h), oracle::diameter(h));
}

TEST(Pendant, EdgeClassification) {
  auto h = hypertree_Td(3, 3, {{2, 1}});
  // edges 0..2 form the path, edge 3 hangs at v2
  EXPECT_TRUE(is_pendant_edge(h, 0));
  EXPECT_FALSE(is_pendant_edge(h, 1));
  EXPECT_TRUE(is_pendant_edge(h, 2));
  EXPECT_TRUE(is_pendant_edge(h, 3));
}
