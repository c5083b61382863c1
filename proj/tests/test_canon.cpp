#include <gtest/gtest.h>

#include "support.hpp"

using namespace mindecomp;
using namespace testing_support;

TEST(Certificate, RelabelledTriangleMatches) {
    const auto a = complete_graph(3);
    const auto b = relabel(a, {2, 0, 1});
    EXPECT_EQ(certificate({a, {1, 2, 3}}), certificate({b, {3, 1, 2}}));
}

TEST(Certificate, DistinguishesShapesAndColours) {
    EXPECT_NE(graph_certificate(complete_graph(3)), graph_certificate(path_graph(3)));
    const auto p3 = path_graph(3);
    EXPECT_NE(certificate({p3, {1, 2, 1}}), certificate({p3, {2, 1, 2}}));
}

TEST(Certificate, ConnectedGraphCounts) {
    // numbers of connected graphs on 1..7 vertices up to isomorphism
    const std::vector<std::size_t> expected{0, 1, 1, 2, 6, 21, 112, 853};
    const auto by_n = connected_graphs_up_to(7);
    for (std::size_t n = 1; n <= 7; ++n) EXPECT_EQ(by_n[n].size(), expected[n]) << "n=" << n;
}

TEST(Certificate, InvariantUnderRandomRelabelling) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const auto g = random_partial_ktree(18, 2 + trial % 3, 0.7, rng());
        std::vector<Color> colour(g.order());
        for (auto& c : colour) c = static_cast<Color>(rng() % 3);
        const auto perm = random_permutation(g.order(), rng);
        std::vector<Color> moved(g.order());
        for (Vertex v = 0; v < g.order(); ++v) moved[perm[v]] = colour[v];
        EXPECT_EQ(certificate({g, colour}), certificate({relabel(g, perm), moved}));
    }
}

TEST(Certificate, SymmetricGraphsAreFast) {
    // many interchangeable legs must not blow up the search
    const auto g = spider(40, 3);
    std::size_t leaves = 0;
    const auto in = detail::make_canon_input(g, g.all_vertices(), [](Vertex v) { return v == 0 ? Color{1} : Color{0}; });
    detail::Canonizer canon(in);
    canon.run(&leaves);
    EXPECT_LT(leaves, 2000u);
}

TEST(CanonKey, Examples) {
    const auto s = star(3);
    EXPECT_EQ(canon_key(s, {vs(4, {1}), vs(4, {2})}), canon_key(s, {vs(4, {1}), vs(4, {3})}));
    const auto p3 = path_graph(3);
    EXPECT_NE(canon_key(p3, {vs(3, {2}), vs(3, {1})}), canon_key(p3, {vs(3, {2}), vs(3, {1, 3})}));
    const auto p4 = path_graph(4);
    EXPECT_NE(canon_key(p4, {vs(4, {2}), vs(4, {1})}), canon_key(p4, {vs(4, {3}), vs(4, {4})}));
}

TEST(CanonKey, AnonymizedForgetsIdentity) {
    const auto p4 = path_graph(4);
    EXPECT_EQ(canon_key(p4, {vs(4, {2}), vs(4, {1})}, KeyMode::anonymized),
              canon_key(p4, {vs(4, {3}), vs(4, {4})}, KeyMode::anonymized));
}

TEST(CanonKey, RejectsBadPairs) {
    const auto p3 = path_graph(3);
    EXPECT_THROW(canon_key(p3, {vs(3, {1}), vs(3, {3})}), std::invalid_argument);
    EXPECT_THROW(canon_key(p3, {vs(3, {1, 2}), vs(3, {2, 3})}), std::invalid_argument);
}

TEST(CanonKey, MatchesFixedPointIsomorphism) {
    // Equal keys exactly when some bijection fixing X maps one W onto the other.
    const auto g = spider(3, 2);
    const VertexSet x = vs(7, {1});
    std::vector<VertexSet> ws;
    for (std::uint32_t mask = 1; mask < (1U << 6); ++mask) {
        VertexSet w(7);
        for (Vertex v = 0; v < 6; ++v)
            if ((mask >> v) & 1U) w.insert(v + 1);
        if (is_good_pair(g, {x, w})) ws.push_back(w);
    }
    auto legs_of = [&](const VertexSet& w) {
        std::vector<int> shape;
        for (Vertex leg = 0; leg < 3; ++leg)
            shape.push_back((w.contains(1 + 2 * leg) ? 1 : 0) + (w.contains(2 + 2 * leg) ? 2 : 0));
        std::sort(shape.begin(), shape.end());
        return shape;
    };
    for (const auto& a : ws)
        for (const auto& b : ws)
            EXPECT_EQ(canon_key(g, {x, a}) == canon_key(g, {x, b}), legs_of(a) == legs_of(b));
}

TEST(ComponentClasses, Examples) {
    const auto s = star(3);
    const auto one = component_classes(s, {vs(4, {1}), vs(4, {2, 3, 4})});
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].count(), 3u);
    EXPECT_EQ(one[0].members.front(), vs(4, {2}));

    const auto g = make_graph(5, {{1, 2}, {1, 3}, {1, 4}, {4, 5}});
    const auto two = component_classes(g, {vs(5, {1}), vs(5, {2, 3, 4, 5})});
    ASSERT_EQ(two.size(), 2u);
    std::vector<std::size_t> counts{two[0].count(), two[1].count()};
    std::sort(counts.begin(), counts.end());
    EXPECT_EQ(counts, (std::vector<std::size_t>{1, 2}));

    const auto tri = make_graph(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}});
    const auto three = component_classes(tri, {VertexSet(6), tri.all_vertices()});
    ASSERT_EQ(three.size(), 1u);
    EXPECT_EQ(three[0].count(), 2u);
}
