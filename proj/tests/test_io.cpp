#include <gtest/gtest.h>

#include <filesystem>
#include <functional>

#include "hyperspec/error.hpp"
#include "hyperspec/families.hpp"
#include "hyperspec/io.hpp"
#include "support.hpp"

using namespace hyperspec;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::invalid_argument;
}

}  // namespace

TEST(Json, HypergraphRoundTrip) {
  for (const auto& h : {loose_cycle(3, 5), hyperstar(4, 6), bicyclic_B2C(3, 2, 1), tricyclic_T2C(4, {1, 0, 0, 2, 0, 0, 0})}) {
    for (int indent : {-1, 2}) {
      Hypergraph g = hypergraph_from_json(hypergraph_to_json(h, indent));
      EXPECT_EQ(g.m(), h.m());
      EXPECT_EQ(g.num_vertices(), h.num_vertices());
      EXPECT_EQ(g.edges(), h.edges());
    }
  }
}

TEST(Json, CompactLayout) {
  Hypergraph h = Hypergraph::make(3, 5, {{0, 1, 2}, {2, 3, 4}});
  EXPECT_EQ(hypergraph_to_json(h), R"({"edges":[[0,1,2],[2,3,4]],"m":3,"n":5})");
}

TEST(Json, StrictRejectsWhatLenientAccepts) {
  // two edges sharing two vertices
  const std::string nonlinear = R"({"m":3,"n":4,"edges":[[0,1,2],[0,1,3]]})";
  EXPECT_EQ(code_of([&] { hypergraph_from_json(nonlinear); }), ErrorCode::linearity);
  Hypergraph g = hypergraph_from_json(nonlinear, LoadMode::lenient);
  EXPECT_EQ(g.num_edges(), 2);
  const std::string isolated = R"({"m":3,"n":4,"edges":[[0,1,2]]})";
  EXPECT_EQ(code_of([&] { hypergraph_from_json(isolated); }), ErrorCode::isolated_vertex);
  EXPECT_NO_THROW(hypergraph_from_json(isolated, LoadMode::lenient));
}

TEST(Json, LenientStillChecksRanges) {
  EXPECT_THROW(hypergraph_from_json(R"({"m":3,"n":3,"edges":[[0,1,5]]})", LoadMode::lenient), Error);
  EXPECT_THROW(hypergraph_from_json(R"({"m":3,"n":3,"edges":[[0,1]]})", LoadMode::lenient), Error);
}

TEST(Json, ParseErrors) {
  for (const char* bad : {"", "{", "[1,2]", R"({"n":3,"edges":[]})", R"({"m":3,"edges":[]})", R"({"m":3,"n":3})",
                          R"({"m":3,"n":3,"edges":[[0,1,"x"]]})", R"({"m":3.5,"n":3,"edges":[]})",
                          R"({"m":3,"n":3,"edges":[5]})"})
    EXPECT_EQ(code_of([&] { parse_hypergraph_data(bad); }), ErrorCode::parse_error) << bad;
}

TEST(Json, RawDataKeepsInputOrder) {
  auto d = parse_hypergraph_data(R"({"m":3,"n":5,"edges":[[4,3,2],[2,1,0]]})");
  EXPECT_EQ(d.m, 3);
  EXPECT_EQ(d.n, 5);
  ASSERT_EQ(d.edges.size(), 2u);
  EXPECT_EQ(d.edges[0], (Edge{4, 3, 2}));
}

TEST(Json, PartitionRoundTrip) {
  Partition p = {{0, 3}, {1, 2, 4}, {5}};
  EXPECT_EQ(partition_from_json(partition_to_json(p)), p);
  EXPECT_EQ(partition_to_json(p), "[[0,3],[1,2,4],[5]]");
  EXPECT_EQ(code_of([] { partition_from_json(R"({"a":1})"); }), ErrorCode::parse_error);
  EXPECT_EQ(code_of([] { partition_from_json("[[0,1],2]"); }), ErrorCode::parse_error);
}

TEST(Files, WriteThenRead) {
  auto dir = std::filesystem::temp_directory_path() / "hyperspec_io_test";
  std::filesystem::create_directories(dir);
  std::string path = (dir / "h.json").string();
  Hypergraph h = loose_cycle(3, 4);
  write_text_file(path, hypergraph_to_json(h, 2));
  std::string text = read_text_file(path);
  EXPECT_EQ(text.back(), '\n');
  EXPECT_EQ(hypergraph_from_json(text).edges(), h.edges());
  std::filesystem::remove_all(dir);
  EXPECT_EQ(code_of([&] { read_text_file(path); }), ErrorCode::invalid_argument);
}
