#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "kuramoto/error.hpp"
#include "kuramoto/generators.hpp"
#include "kuramoto/graph.hpp"
#include "kuramoto/graph_io.hpp"
#include "oracles.hpp"

using namespace kuramoto;

namespace {

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no kuramoto::Error thrown";
    return ErrorCode::IoError;
}

} // namespace

TEST(Graph, FromEdgeListPath) {
    const auto g = Graph::from_edge_list(3, {{1, 2}, {2, 3}});
    EXPECT_EQ(g.size(), 3u);
    EXPECT_EQ(g.edge_count(), 2u);
    EXPECT_EQ(g.degree(0), 1u);
    EXPECT_EQ(g.degree(1), 2u);
    EXPECT_TRUE(g.adjacent(0, 1));
    EXPECT_TRUE(g.adjacent(1, 0));
    EXPECT_FALSE(g.adjacent(0, 2));
    const std::vector<std::size_t> mid{0, 2};
    EXPECT_EQ(std::vector<std::size_t>(g.neighbours(1).begin(), g.neighbours(1).end()), mid);
}

TEST(Graph, DuplicateAndReversedEdgesCollapse) {
    const auto g = Graph::from_edge_list(2, {{1, 2}, {2, 1}, {1, 2}});
    EXPECT_EQ(g.edge_count(), 1u);
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{1, 2}}));
}

TEST(Graph, SingleVertex) {
    const auto g = Graph::from_edge_list(1, {});
    EXPECT_EQ(g.size(), 1u);
    EXPECT_EQ(g.edge_count(), 0u);
}

TEST(Graph, Errors) {
    EXPECT_EQ(code_of([] { Graph::from_edge_list(0, {}); }), ErrorCode::EmptyGraph);
    EXPECT_EQ(code_of([] { Graph::from_edge_list(2, {{1, 1}, {1, 2}}); }), ErrorCode::SelfLoop);
    EXPECT_EQ(code_of([] { Graph::from_edge_list(2, {{1, 3}}); }), ErrorCode::VertexOutOfRange);
    EXPECT_EQ(code_of([] { Graph::from_edge_list(2, {{0, 1}}); }), ErrorCode::VertexOutOfRange);
    EXPECT_EQ(code_of([] { Graph::from_edge_list(4, {{1, 2}, {3, 4}}); }), ErrorCode::Disconnected);
    EXPECT_EQ(code_of([] { Graph::from_edge_list(2, {}); }), ErrorCode::Disconnected);
}

TEST(Graph, RegularDegree) {
    EXPECT_EQ(cycle_graph(5).regular_degree(), 2u);
    EXPECT_EQ(complete_graph(4).regular_degree(), 3u);
    EXPECT_EQ(petersen_graph().regular_degree(), 3u);
    EXPECT_FALSE(path_graph(3).regular_degree().has_value());
}

TEST(Generators, LinearFamilySizes) {
    const auto p4 = linear_family_graph(4);
    EXPECT_EQ(p4.graph.size(), 9u);
    EXPECT_EQ(p4.graph.edge_count(), 10u);
    const auto p6 = linear_family_graph(6);
    EXPECT_EQ(p6.graph.size(), 13u);
    EXPECT_EQ(p6.graph.edge_count(), 15u);
    EXPECT_EQ(p4.partition.to_string(), "{{1},{2,3,4,5,6,7,8,9}}");
    EXPECT_EQ(code_of([] { linear_family_graph(5); }), ErrorCode::BadParameter);
    EXPECT_EQ(code_of([] { linear_family_graph(2); }), ErrorCode::BadParameter);
}

TEST(Generators, LatoroProfileDegrees) {
    const auto gp = latoro_profile_graph();
    EXPECT_EQ(gp.graph.size(), 7u);
    EXPECT_EQ(gp.graph.degree(0), 4u);
    for (std::size_t v = 1; v < 7; ++v) EXPECT_EQ(gp.graph.degree(v), 2u) << v;
}

TEST(Generators, PetersenShape) {
    const auto g = petersen_graph();
    EXPECT_EQ(g.size(), 10u);
    EXPECT_EQ(g.edge_count(), 15u);
    // Girth 5: no triangles and no 4-cycles, so adjacent vertices share no
    // neighbour and non-adjacent ones share exactly one.
    for (std::size_t u = 0; u < 10; ++u)
        for (std::size_t v = u + 1; v < 10; ++v) {
            int common = 0;
            for (std::size_t w = 0; w < 10; ++w) common += g.adjacent(u, w) && g.adjacent(v, w);
            EXPECT_EQ(common, g.adjacent(u, v) ? 0 : 1) << u << "," << v;
        }
}

TEST(GraphProperty, DegreeSumIsTwiceEdgeCount) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = 1 + rng() % 12;
        const auto g = oracle::random_connected_graph(n, 0.3, rng);
        std::size_t sum = 0;
        for (std::size_t v = 0; v < n; ++v) {
            sum += g.degree(v);
            for (auto w : g.neighbours(v)) EXPECT_TRUE(g.adjacent(w, v));
        }
        EXPECT_EQ(sum, 2 * g.edge_count());
    }
}

TEST(GraphIo, ParseEdgeList) {
    const auto g = parse_edge_list("# triangle\nn 3\n1 2\n\n2 3\n  3 1\n");
    EXPECT_EQ(g, complete_graph(3));
    EXPECT_EQ(parse_edge_list("1 2\n2 3\n").size(), 3u);
}

TEST(GraphIo, ParseErrors) {
    EXPECT_EQ(code_of([] { parse_edge_list("1 2 3\n"); }), ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { parse_edge_list("1 x\n"); }), ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { parse_edge_list("n 2\n1 3\n"); }), ErrorCode::VertexOutOfRange);
    EXPECT_EQ(code_of([] { parse_edge_list("n 4\n1 2\n2 3\n"); }), ErrorCode::Disconnected);
}

TEST(GraphIo, EdgeListRoundTrip) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const auto g = oracle::random_connected_graph(2 + rng() % 9, 0.4, rng);
        EXPECT_EQ(parse_edge_list(format_edge_list(g)), g);
    }
}

TEST(GraphIo, PartitionJson) {
    const auto p = parse_partition(R"({"blocks": [[2, 4], [1, 3]]})", 4);
    EXPECT_EQ(p.to_string(), "{{1,3},{2,4}}");
    EXPECT_EQ(parse_partition(partition_to_json(p).dump(), 4), p);
    EXPECT_EQ(code_of([] { parse_partition("{\"blocks\": [[1, 2]]}", 3); }), ErrorCode::PartitionMismatch);
    EXPECT_EQ(code_of([] { parse_partition("not json", 3); }), ErrorCode::ParseError);
}
