#include <gtest/gtest.h>

#include <functional>
#include <optional>

#include "hyperspec/error.hpp"
#include "hyperspec/families.hpp"
#include "hyperspec/spectral.hpp"
#include "hyperspec/transforms.hpp"
#include "support.hpp"

using namespace hyperspec;

namespace {

double lambda(const Hypergraph& h) { return oracle::largest_eigenvalue(h); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::invalid_argument;
}

std::vector<Hypergraph> sample() {
  std::vector<Hypergraph> out;
  for (int m : {3, 4}) {
    out.push_back(loose_path(m, 4));
    out.push_back(loose_cycle(m, 5));
    out.push_back(hypertree_Td(m, 5, {{3, 2}, {4, 1}}));
    out.push_back(unicyclic_UC(m, 4, {{1, 2}, {3, 1}}));
    out.push_back(unicyclic_UlC(m, 4, 2));
    out.push_back(bicyclic_B2C(m, 2, 1));
    out.push_back(tricyclic_T1C(m, {1, 1, 0, 0}));
  }
  return out;
}

}  // namespace

TEST(Move, SymmetricRelabelHasFalseFlag) {
  const int m = 3;
  auto h = hypertree_Td(m, 3, {{2, 1}});
  auto x = spectral_radius(h).perron_vector;
  Vertex v2 = core_vertex(m, 2), v3 = core_vertex(m, 3);
  EXPECT_LT(x[v3], x[v2]);
  std::vector<EdgeMove> moves{{3, v2}};
  EXPECT_FALSE(move_condition(x, moves, v3));
  auto out = move_edges(h, moves, v3);
  EXPECT_TRUE(oracle::isomorphic(out, hypertree_Td(m, 3, {{3, 1}})));
  EXPECT_NEAR(lambda(out), lambda(h), 1e-12);
}

TEST(Move, HyperstarToPendantDecreases) {
  const int m = 3;
  auto h = hyperstar(m, 3);
  Vertex center = core_vertex(m, 2);
  auto x = spectral_radius(h).perron_vector;
  int e = h.incident_edges(center).back();
  Vertex leaf = 0;
  ASSERT_FALSE(h.contains(e, leaf));
  std::vector<EdgeMove> moves{{e, center}};
  EXPECT_FALSE(move_condition(x, moves, leaf));
  EXPECT_LT(lambda(move_edges(h, moves, leaf)), lambda(h) - 1e-9);
}

TEST(Move, PathEndEdgeTowardsMiddleIncreases) {
  const int m = 3;
  auto h = loose_path(m, 3);
  Vertex v2 = core_vertex(m, 2), v3 = core_vertex(m, 3);
  auto x = spectral_radius(h).perron_vector;
  std::vector<EdgeMove> moves{{2, v3}};
  EXPECT_TRUE(move_condition(x, moves, v2));
  auto out = move_edges(h, moves, v2);
  EXPECT_GT(lambda(out), lambda(h) + 1e-9);
  EXPECT_TRUE(oracle::isomorphic(out, hyperstar(m, 3)));
}

TEST(Move, Errors) {
  auto h = loose_path(3, 3);
  EXPECT_EQ(code_of([&] { move_edges(h, {{0, 0}}, 1); }), ErrorCode::invalid_argument);  // target already in edge
  EXPECT_EQ(code_of([&] { move_edges(h, {{0, 3}}, 5); }), ErrorCode::invalid_argument);  // source not in edge
  EXPECT_EQ(code_of([&] { move_edges(h, {{0, 0}}, 42); }), ErrorCode::unknown_vertex);
  // {0,1,2} and {2,3,4}: moving the second from 4 to 1 breaks linearity
  EXPECT_EQ(code_of([&] { move_edges(h, {{1, 4}}, 1); }), ErrorCode::linearity);
}

TEST(Move, DuplicateEdgeIsAnErrorNotAMerge) {
  auto g = Hypergraph::make(2, 3, {{0, 1}, {1, 2}});
  EXPECT_THROW(move_edges(g, {{1, 2}}, 0), Error);
  SpreadPlan plan{{2, {1}, {0}}};
  EXPECT_THROW(spread_edges(g, plan), Error);
}

TEST(Release, PathMiddleGivesHyperstar) {
  const int m = 3;
  auto h = loose_path(m, 3);
  auto out = release_edge(h, 1, core_vertex(m, 2));
  EXPECT_TRUE(oracle::isomorphic(out, hyperstar(m, 3)));
  EXPECT_NEAR(spectral_radius(out).lambda1, 1.5, 1e-12);
}

TEST(Release, ShortensCycleAndGrowsCluster) {
  for (int m : {3, 4})
    for (int p : {0, 1, 3}) {
      auto h = unicyclic_UC(m, 4, {{1, p}});
      auto out = release_edge(h, 0, core_vertex(m, 1));
      EXPECT_TRUE(oracle::isomorphic(out, unicyclic_UC(m, 3, {{1, p + 1}})));
      EXPECT_GT(lambda(out), lambda(h) + 1e-9);
    }
}

TEST(Release, LooseCycleOfFour) {
  auto h = loose_cycle(3, 4);
  for (int e = 0; e < 4; ++e)
    for (Vertex u : h.edge(e)) {
      if (h.edge_degree(u) < 2) continue;
      auto out = release_edge(h, e, u);
      EXPECT_TRUE(oracle::isomorphic(out, unicyclic_UC(3, 3, {{1, 1}})));
      EXPECT_GT(lambda(out), lambda(h) + 1e-9);
    }
}

TEST(Release, TriangleEdgeBreaksLinearity) {
  auto tri = loose_cycle(3, 3);
  EXPECT_EQ(code_of([&] { release_edge(tri, 0, 0); }), ErrorCode::linearity);
  auto bc = bicyclic_BC(3, 2);
  EXPECT_EQ(code_of([&] { release_edge(bc, 0, 0); }), ErrorCode::linearity);
  EXPECT_EQ(code_of([&] { release_edge_at_max(bc, 1); }), ErrorCode::linearity);
}

TEST(Release, PendantEdgeRejected) {
  auto h = loose_path(3, 3);
  EXPECT_EQ(code_of([&] { release_edge(h, 0, core_vertex(3, 2)); }), ErrorCode::pendant_edge);
  EXPECT_EQ(code_of([&] { release_edge(loose_path(3, 1), 0, 0); }), ErrorCode::pendant_edge);
}

TEST(ReleaseAtMax, TieGoesToLowerId) {
  const int m = 3;
  auto h = loose_path(m, 3);
  auto r = release_edge_at_max(h, 1);
  EXPECT_EQ(r.at, core_vertex(m, 2));
  EXPECT_TRUE(oracle::isomorphic(r.result, release_edge(h, 1, core_vertex(m, 3))));
}

TEST(ReleaseAtMax, PicksInteriorVertex) {
  const int m = 3;
  auto h = hypertree_Td(m, 4, {{2, 2}});
  auto x = oracle::adjacency(h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(x);
  Eigen::VectorXd perron = es.eigenvectors().col(x.rows() - 1).cwiseAbs();
  Vertex v3 = core_vertex(m, 3), v4 = core_vertex(m, 4);
  EXPECT_GT(perron[v3], perron[v4]);
  auto r = release_edge_at_max(h, 2);
  EXPECT_EQ(r.at, v3);
  EXPECT_GT(lambda(r.result), lambda(h) + 1e-9);
}

TEST(Spread, HypertreeStep) {
  const int m = 3, d = 5, p = 3, k = 9;
  auto h = hypertree_Td(m, d - 1, {{p - 1, 2}, {p, k - d - 1}});
  Vertex vp1 = core_vertex(m, p - 1), vp = core_vertex(m, p), end = core_vertex(m, d);
  std::vector<int> pendants;
  for (int e : h.incident_edges(vp1))
    if (e >= d - 1) pendants.push_back(e);  // the path takes edges 0..d-2
  ASSERT_EQ(pendants.size(), 2u);
  SpreadPlan plan{{vp1, pendants, {end, vp}}};
  auto r = spread_edges(h, plan);
  EXPECT_TRUE(oracle::isomorphic(r.result, hypertree_Td(m, d, {{p, k - d}})));
  ASSERT_EQ(r.checks.size(), 1u);
  const auto& c = r.checks[0];
  EXPECT_TRUE(c.all_pendant);
  EXPECT_EQ(c.hypothesis, 'A');
  auto x = spectral_radius(h).perron_vector;
  EXPECT_NEAR(c.lhs, x[end] + x[vp], 1e-12);
  EXPECT_NEAR(c.rhs, 2 * x[vp1], 1e-12);
  EXPECT_EQ(r.guaranteed, x[end] + x[vp] >= 2 * x[vp1]);
  if (r.guaranteed) {
    EXPECT_GT(lambda(r.result), lambda(h) + 1e-9);
  }
}

TEST(Spread, SinglePendantEdgeTowardsCentre) {
  const int m = 3;
  auto h = hypertree_Td(m, 3, {{2, 3}});
  Vertex v2 = core_vertex(m, 2), v3 = core_vertex(m, 3);
  auto x = spectral_radius(h).perron_vector;
  int moved = -1;
  for (int e : h.incident_edges(v3))
    if (!h.contains(e, v2)) moved = e;
  ASSERT_GE(moved, 0);
  SpreadPlan plan{{v3, {moved}, {v2}}};
  auto r = spread_edges(h, plan);
  EXPECT_EQ(r.checks[0].hypothesis, 'A');
  EXPECT_EQ(r.guaranteed, x[v2] >= x[v3]);
  ASSERT_TRUE(r.guaranteed);
  EXPECT_GT(lambda(r.result), lambda(h) + 1e-9);
}

TEST(Spread, NonPendantGroupUsesPointwiseHypothesis) {
  const int m = 3;
  auto h = unicyclic_UC(m, 4, {{1, 2}});
  Vertex v1 = core_vertex(m, 1), v2 = core_vertex(m, 2), v3 = core_vertex(m, 3);
  // cycle edge {v2, .., v3} re-glued at v1 turns C4 into a triangle
  SpreadPlan plan{{v2, {1}, {v1}}};
  auto r = spread_edges(h, plan);
  auto x = spectral_radius(h).perron_vector;
  EXPECT_EQ(r.checks[0].hypothesis, 'B');
  EXPECT_FALSE(r.checks[0].all_pendant);
  EXPECT_NEAR(r.checks[0].lhs, x[v1], 1e-12);
  EXPECT_NEAR(r.checks[0].rhs, x[v2], 1e-12);
  ASSERT_TRUE(r.guaranteed);
  EXPECT_TRUE(h.contains(1, v3));
  EXPECT_GT(lambda(r.result), lambda(h) + 1e-9);
}

TEST(Spread, DegenerateEqualsMove) {
  for (const auto& h : sample()) {
    for (int e = 0; e < h.num_edges(); ++e) {
      for (Vertex from : h.edge(e)) {
        for (Vertex to = 0; to < h.num_vertices(); ++to) {
          if (h.contains(e, to)) continue;
          std::optional<Hypergraph> moved;
          try {
            moved = move_edges(h, {{e, from}}, to);
          } catch (const Error&) {
            EXPECT_THROW(apply_spread(h, {{from, {e}, {to}}}), Error);
            continue;
          }
          auto spread = apply_spread(h, {{from, {e}, {to}}});
          EXPECT_TRUE(spread == *moved);
        }
      }
    }
  }
}

TEST(Spread, MalformedPlans) {
  auto h = hyperstar(3, 3);
  Vertex c = core_vertex(3, 2);
  EXPECT_EQ(code_of([&] { apply_spread(h, {{c, {0, 1}, {0}}}); }), ErrorCode::invalid_argument);
  EXPECT_EQ(code_of([&] { apply_spread(h, {{c, {}, {}}}); }), ErrorCode::invalid_argument);
  EXPECT_EQ(code_of([&] { apply_spread(h, {{c, {0}, {6}}, {c, {0}, {5}}}); }), ErrorCode::invalid_argument);
}

TEST(Properties, ReleasePreservesSizeAndIncreasesRadius) {
  int checked = 0;
  for (const auto& h : sample()) {
    const double before = lambda(h);
    for (int e = 0; e < h.num_edges(); ++e) {
      if (is_pendant_edge(h, e)) continue;
      for (Vertex u : h.edge(e)) {
        std::optional<Hypergraph> out;
        try {
          out = release_edge(h, e, u);
        } catch (const Error& err) {
          EXPECT_TRUE(err.code() == ErrorCode::linearity || err.code() == ErrorCode::pendant_edge) << err.what();
          continue;
        }
        EXPECT_EQ(out->num_vertices(), h.num_vertices());
        EXPECT_EQ(out->num_edges(), h.num_edges());
        EXPECT_TRUE(validate(*out).valid());
        EXPECT_TRUE(validate(*out).connected);
        EXPECT_GT(lambda(*out), before + 1e-9);
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 50);
}

TEST(Properties, CertifiedMovesIncreaseRadius) {
  int certified = 0;
  for (const auto& h : sample()) {
    const double before = lambda(h);
    auto x = spectral_radius(h).perron_vector;
    for (int e = 0; e < h.num_edges(); ++e)
      for (Vertex from : h.edge(e))
        for (Vertex to = 0; to < h.num_vertices(); ++to) {
          if (h.contains(e, to)) continue;
          std::vector<EdgeMove> moves{{e, from}};
          if (!move_condition(x, moves, to)) continue;
          std::optional<Hypergraph> out;
          try {
            out = move_edges(h, moves, to);
          } catch (const Error&) {
            continue;
          }
          EXPECT_EQ(out->num_vertices(), h.num_vertices());
          EXPECT_EQ(out->num_edges(), h.num_edges());
          if (!validate(*out).connected) continue;
          if (out->same_edge_set(h)) continue;
          EXPECT_GT(lambda(*out), before + 1e-9);
          ++certified;
        }
  }
  EXPECT_GT(certified, 50);
}
