#include "moduli/metric_graph.hpp"

#include <gtest/gtest.h>

#include <random>

#include "moduli/errors.hpp"
#include "moduli/harness.hpp"
#include "test_support.hpp"

namespace moduli {
namespace {

using testing::GraphBuilder;
using testing::R;

MetricGraph single_loop() { return GraphBuilder().vertex("v", {1}).edge("e", "v", "v", "1").build(); }

MetricGraph triangle(const char* l1 = "1", const char* l2 = "1", const char* l3 = "1") {
  return GraphBuilder()
      .vertex("a", {1})
      .vertex("b")
      .vertex("c")
      .edge("ab", "a", "b", l1)
      .edge("bc", "b", "c", l2)
      .edge("ca", "c", "a", l3)
      .build();
}

TEST(Rational, ParsesAndFormats) {
  EXPECT_EQ(parse_rational("3/2"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-4"), Rational(-4));
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(format_rational(Rational(6, 4)), "3/2");
  EXPECT_EQ(format_rational(Rational(5)), "5");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("1.5"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
  EXPECT_THROW(parse_rational("1/-2"), ParseError);
}

TEST(Rational, FloorAndFraction) {
  EXPECT_EQ(floor_of(Rational(-1, 2)), -1);
  EXPECT_EQ(floor_of(Rational(7, 2)), 3);
  EXPECT_EQ(fractional_part(Rational(-1, 4)), Rational(3, 4));
  EXPECT_EQ(fractional_part(Rational(1)), Rational(0));
}

TEST(Validate, MinimalGraphIsValid) { EXPECT_TRUE(validate(single_loop()).empty()); }

TEST(Validate, ZeroLengthReported) {
  const auto g = GraphBuilder().vertex("v", {1}).edge("e", "v", "v", "0").build();
  const auto vs = validate(g);
  ASSERT_EQ(vs.size(), 1u);
  EXPECT_EQ(vs[0].code, ViolationCode::NonPositiveLength);
}

TEST(Validate, DuplicateMarkReported) {
  const auto g = GraphBuilder()
                     .vertex("a", {1, 2})
                     .vertex("b", {2})
                     .edge("e", "a", "b", "1")
                     .build();
  const auto vs = validate(g);
  ASSERT_EQ(vs.size(), 1u);
  EXPECT_EQ(vs[0].code, ViolationCode::DuplicateMark);
  EXPECT_EQ(vs[0].mark, 2);
}

TEST(Validate, StructuralViolations) {
  const auto g = GraphBuilder()
                     .vertex("a", {1, 3})
                     .vertex("a")
                     .edge("e", "a", "zz", "1")
                     .edge("e", "a", "a", "-1/2")
                     .build();
  std::set<ViolationCode> codes;
  for (const auto& v : validate(g)) codes.insert(v.code);
  EXPECT_EQ(codes, (std::set<ViolationCode>{ViolationCode::DuplicateVertexId, ViolationCode::DuplicateEdgeId,
                                            ViolationCode::UnknownEndpoint, ViolationCode::NonPositiveLength,
                                            ViolationCode::MissingMark}));
}

TEST(Genus, Examples) {
  EXPECT_EQ(genus(single_loop()), 1);
  EXPECT_EQ(genus(triangle()), 1);
  const auto theta = GraphBuilder()
                         .vertex("a", {1})
                         .vertex("b")
                         .edge("x", "a", "b", "1")
                         .edge("y", "a", "b", "1")
                         .edge("z", "a", "b", "1")
                         .build();
  EXPECT_EQ(genus(theta), 2);
  const auto path = GraphBuilder()
                        .vertex("a")
                        .vertex("b")
                        .vertex("c")
                        .vertex("d")
                        .edge("1", "a", "b", "1")
                        .edge("2", "b", "c", "1")
                        .edge("3", "c", "d", "1")
                        .build();
  EXPECT_EQ(genus(path), 0);
}

TEST(Genus, RejectsInvalidGraph) {
  const auto g = GraphBuilder().vertex("v", {2}).edge("e", "v", "v", "1").build();
  EXPECT_THROW(genus(g), DomainError);
}

TEST(Connectivity, Examples) {
  EXPECT_TRUE(is_connected(triangle()));
  const auto two_loops = GraphBuilder()
                             .vertex("a", {1})
                             .vertex("b")
                             .edge("x", "a", "a", "1")
                             .edge("y", "b", "b", "1")
                             .build();
  EXPECT_FALSE(is_connected(two_loops));
  EXPECT_EQ(components(two_loops).size(), 2u);
  const auto lone = GraphBuilder().vertex("a").build();
  EXPECT_TRUE(is_connected(lone));
  EXPECT_EQ(components(lone), (std::vector<std::vector<std::string>>{{"a"}}));
}

TEST(TotalLength, ExactSums) {
  EXPECT_EQ(total_length(GraphBuilder().vertex("v", {1}).edge("e", "v", "v", "3/2").build()), R("3/2"));
  EXPECT_EQ(total_length(triangle("1/2", "1/3", "1/6")), R("1"));
  const auto two = GraphBuilder().vertex("a").vertex("b").edge("x", "a", "b", "1").edge("y", "a", "b", "1").build();
  EXPECT_EQ(total_length(two), R("2"));
  EXPECT_THROW(total_length(GraphBuilder().vertex("a").build()), DomainError);
}

TEST(ContractEdge, MergesMarksIntoSmallerId) {
  const auto g = GraphBuilder().vertex("b", {2}).vertex("a", {1}).edge("e", "a", "b", "1").build();
  const auto h = contract_edge(g, "e");
  ASSERT_EQ(h.vertices.size(), 1u);
  EXPECT_EQ(h.vertices[0].id, "a");
  EXPECT_EQ(h.vertices[0].marks, (MarkSet{1, 2}));
  EXPECT_TRUE(h.edges.empty());
}

TEST(ContractEdge, TriangleBecomesDigon) {
  const auto h = contract_edge(triangle(), "ab");
  EXPECT_EQ(h.vertices.size(), 2u);
  EXPECT_EQ(h.edges.size(), 2u);
  EXPECT_EQ(genus(h), 1);
  for (const auto& e : h.edges) EXPECT_FALSE(e.is_loop());
}

TEST(ContractEdge, ParallelEdgeBecomesLoop) {
  const auto g = GraphBuilder().vertex("a", {1}).vertex("b").edge("x", "a", "b", "1").edge("y", "a", "b", "2").build();
  const auto h = contract_edge(g, "x");
  ASSERT_EQ(h.edges.size(), 1u);
  EXPECT_TRUE(h.edges[0].is_loop());
  EXPECT_EQ(genus(h), 1);
}

TEST(ContractEdge, LoopRejected) {
  EXPECT_THROW(contract_edge(single_loop(), "e"), DomainError);
  EXPECT_THROW(contract_edge(single_loop(), "missing"), DomainError);
}

TEST(GraphJson, FieldNamesAreExact) {
  const auto g = GraphBuilder().vertex("a", {1, 3}).vertex("b", {2}).edge("e1", "a", "b", "3/2").build();
  const auto j = graph_to_json(g);
  EXPECT_EQ(j.dump(),
            R"({"edges":[{"ends":["a","b"],"id":"e1","length":"3/2"}],)"
            R"("vertices":[{"id":"a","marks":[1,3]},{"id":"b","marks":[2]}]})");
  EXPECT_EQ(graph_from_json(j), g);
}

TEST(GraphJson, IntegerLengthStringsAccepted) {
  const auto j = nlohmann::json::parse(
      R"({"vertices":[{"id":"v","marks":[1]}],"edges":[{"id":"e","ends":["v","v"],"length":"2"}]})");
  EXPECT_EQ(graph_from_json(j).edges[0].length, Rational(2));
}

TEST(GraphJson, MalformedInputsRejected) {
  using nlohmann::json;
  EXPECT_THROW(graph_from_json(json::parse(R"({"vertices":[]})")), ParseError);
  EXPECT_THROW(graph_from_json(json::parse(
                   R"({"vertices":[{"id":"v","marks":[1]}],"edges":[{"id":"e","ends":["v"],"length":"1"}]})")),
               ParseError);
  EXPECT_THROW(graph_from_json(json::parse(
                   R"({"vertices":[{"id":"v","marks":[1]}],"edges":[{"id":"e","ends":["v","v"],"length":1.5}]})")),
               ParseError);
  EXPECT_THROW(graph_from_json(json::parse(R"({"vertices":[{"id":"v","marks":[1,1]}],"edges":[]})")), ParseError);
}

// Contraction keeps genus and the mark partition, on random multigraphs.
TEST(ContractEdge, RandomGraphsKeepGenusAndMarks) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 200; ++i) {
    const MetricGraph g = random_connected_graph(rng, 8, 12, 5);
    ASSERT_TRUE(is_valid(g));
    for (const auto& e : g.edges) {
      if (e.is_loop()) continue;
      const MetricGraph h = contract_edge(g, e.id);
      ASSERT_TRUE(is_valid(h));
      EXPECT_EQ(genus(h), genus(g));
      EXPECT_EQ(mark_count(h), mark_count(g));
    }
    EXPECT_EQ(graph_from_json(nlohmann::json::parse(graph_to_json(g).dump())), g);
  }
}

}  // namespace
}  // namespace moduli
