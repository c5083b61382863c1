#include <gtest/gtest.h>

#include <sstream>

#include "support.hpp"

using namespace mindecomp;
using namespace testing_support;

TEST(VertexSet, BasicOperations) {
    VertexSet a(70, {1, 5, 69});
    VertexSet b(70, {5, 6});
    EXPECT_EQ(a.size(), 3u);
    EXPECT_TRUE(a.contains(69));
    EXPECT_EQ((a & b), VertexSet(70, {5}));
    EXPECT_EQ((a | b).size(), 4u);
    EXPECT_EQ((a - b), VertexSet(70, {1, 69}));
    EXPECT_TRUE(VertexSet(70, {5}).is_subset_of(b));
    EXPECT_TRUE(a.intersects(b));
    EXPECT_EQ(a.first(), 1u);
    EXPECT_EQ(VertexSet(70).first(), 70u);
    EXPECT_EQ(a.members(), (std::vector<Vertex>{1, 5, 69}));
}

TEST(VertexSet, LexOrderOnMembers) {
    EXPECT_TRUE(lex_less(VertexSet(5, {1, 2}), VertexSet(5, {1, 3})));
    EXPECT_TRUE(lex_less(VertexSet(5, {1, 3}), VertexSet(5, {2})));
    EXPECT_TRUE(lex_less(VertexSet(5), VertexSet(5, {0})));
    EXPECT_FALSE(lex_less(VertexSet(5, {2}), VertexSet(5, {2})));
}

TEST(Graph, ParsePath) {
    const auto g = parse_graph("p tw 3 2\n1 2\n2 3");
    EXPECT_EQ(g.order(), 3u);
    EXPECT_EQ(g.edge_count(), 2u);
    EXPECT_TRUE(g.adjacent(0, 1));
    EXPECT_TRUE(g.adjacent(2, 1));
    EXPECT_FALSE(g.adjacent(0, 2));
}

TEST(Graph, ParseIsolatedAndDuplicates) {
    const auto iso = parse_graph("p tw 2 0");
    EXPECT_EQ(iso.order(), 2u);
    EXPECT_EQ(iso.edge_count(), 0u);
    const auto k2 = parse_graph("c comment\np tw 2 2\n1 2\n1 2\n");
    EXPECT_EQ(k2.edge_count(), 1u);
}

TEST(Graph, ParseErrorsCarryLine) {
    try {
        parse_graph("p tw 3 1\n1 1\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
    }
    EXPECT_THROW(parse_graph("p tw 3 1\n1 4\n"), ParseError);
    EXPECT_THROW(parse_graph("1 2\n"), ParseError);
    EXPECT_THROW(parse_graph("p td 3 1\n"), ParseError);
    EXPECT_THROW(parse_graph("p tw 3 1\n1 x\n"), ParseError);
    EXPECT_THROW(parse_graph(""), ParseError);
}

TEST(Graph, AddEdgeRejectsLoops) {
    Graph g(2);
    EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
    EXPECT_THROW(g.add_edge(0, 2), std::out_of_range);
    EXPECT_TRUE(g.add_edge(0, 1));
    EXPECT_FALSE(g.add_edge(1, 0));
}

TEST(Graph, WriteRoundTrip) {
    const auto g = spider(3, 2);
    std::ostringstream out;
    write_graph(out, g);
    EXPECT_EQ(parse_graph(out.str()), g);
}

TEST(Graph, ComponentsExcluding) {
    const auto p3 = path_graph(3);
    EXPECT_EQ(components_excluding(p3, vs(3, {2})), (std::vector<VertexSet>{vs(3, {1}), vs(3, {3})}));
    const auto k3 = complete_graph(3);
    EXPECT_EQ(components_excluding(k3, k3.empty_set()), (std::vector<VertexSet>{vs(3, {1, 2, 3})}));
    const auto s = star(3);
    EXPECT_EQ(components_excluding(s, vs(4, {1})).size(), 3u);
}

TEST(Graph, InducedSubgraph) {
    const auto k2 = induced_subgraph(complete_graph(3), vs(3, {1, 2}));
    EXPECT_EQ(k2.graph, complete_graph(2));
    EXPECT_EQ(induced_subgraph(path_graph(4), VertexSet(4)).graph.order(), 0u);
    const auto sub = induced_subgraph(path_graph(4), vs(4, {1, 3, 4}));
    EXPECT_EQ(sub.graph.edge_count(), 1u);
    EXPECT_TRUE(sub.graph.adjacent(1, 2));
    EXPECT_EQ(sub.original, (std::vector<Vertex>{0, 2, 3}));
}

TEST(Graph, SymmetricAdjacencyProperty) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = random_partial_ktree(15, 3, 0.6, rng());
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex v = 0; v < g.order(); ++v) EXPECT_EQ(g.adjacent(u, v), g.adjacent(v, u));
    }
}
