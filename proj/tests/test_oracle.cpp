#include <gtest/gtest.h>

#include "support.hpp"

using namespace mindecomp;
using namespace testing_support;

TEST(SubsetDp, Examples) {
    EXPECT_EQ(oracle_mspd_subsetdp(path_graph(3), 1), BagCount(2));
    EXPECT_FALSE(oracle_mspd_subsetdp(complete_graph(3), 1).feasible());
    EXPECT_EQ(oracle_mspd_subsetdp(star(3), 1), BagCount(3));
    EXPECT_EQ(oracle_mspd_subsetdp(Graph(0), 0), BagCount(1));
    EXPECT_THROW(oracle_mspd_subsetdp(path_graph(20), 1), GuardExceeded);
}

TEST(SubsetDp, EdgelessAndPaths) {
    // n isolated vertices fit into ceil(n / (k+1)) bags; a path on n vertices needs n-1 at width 1
    for (std::size_t n = 1; n <= 7; ++n) {
        for (std::size_t k = 0; k <= 3; ++k)
            EXPECT_EQ(oracle_mspd_subsetdp(Graph(n), k), BagCount((n + k) / (k + 1)));
        if (n >= 2) {
            EXPECT_EQ(oracle_mspd_subsetdp(path_graph(n), 1), BagCount(n - 1));
        }
    }
}

TEST(PlainTree, Examples) {
    EXPECT_EQ(oracle_mstd_plain(complete_graph(4), 3).size, BagCount(1));
    EXPECT_EQ(oracle_mstd_plain(star(3), 1).size, BagCount(3));
    EXPECT_EQ(oracle_mstd_plain(spider(3, 2), 1).size, BagCount(6));
    EXPECT_THROW(oracle_mstd_plain(spider(6, 3), 1, 10), GuardExceeded);
}

TEST(PlainTree, EntriesBoundCanonicalSolver) {
    for (const auto& g : small_suite(5))
        for (std::size_t k = 0; k <= 2; ++k) {
            Solver solver(g, k, DecompositionKind::tree);
            const auto mine = solver.solve_all().size;
            const auto ref = oracle_mstd_plain(g, k);
            EXPECT_EQ(mine, ref.size);
            EXPECT_LE(solver.stats().memo_entries, ref.memo_entries);
        }
}

TEST(Implements, CliqueChainFiveFive) {
    const auto ch = clique_chain({6, {5, 5}});
    const auto r = oracle_implements_check(ch.graph, 6, 2, {5, 5});
    EXPECT_TRUE(r.size_r_trees_are_paths);
    EXPECT_EQ(r.minimal_fingerprints, (std::vector<Fingerprint>{{5, 5}}));
    EXPECT_TRUE(r.implements(2));
}

TEST(Implements, WrongVectorMismatch) {
    const auto ch = clique_chain({6, {5, 5}});
    const auto r = oracle_implements_check(ch.graph, 6, 2, {5, 6});
    EXPECT_FALSE(r.fingerprints_match);
    EXPECT_FALSE(r.implements(2));
}

TEST(Implements, TriangleOneBag) {
    const auto r = oracle_implements_check(complete_graph(3), 3, 1, {3});
    EXPECT_TRUE(r.size_r_trees_are_paths);
    EXPECT_EQ(r.minimal_fingerprints, (std::vector<Fingerprint>{{3}}));
    EXPECT_TRUE(r.implements(1));
}

TEST(Implements, DetectsBranchingTrees) {
    // a star of three triangles on a shared vertex admits a branching 4-bag decomposition
    const auto g = make_graph(7, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {1, 5}, {4, 5}, {1, 6}, {1, 7}, {6, 7}});
    const auto r = oracle_implements_check(g, 3, 4, {3, 3, 3, 3});
    EXPECT_FALSE(r.size_r_trees_are_paths);
    EXPECT_EQ(r.min_tree_size, 3u);
}

TEST(Implements, NonPalindromeAcceptsReverse) {
    const auto ch = clique_chain({9, {7, 9}});
    const auto r = oracle_implements_check(ch.graph, 9, 2, {9, 7});
    EXPECT_TRUE(r.implements(2));
}

TEST(MatchingBruteForce, ThreeDm) {
    EXPECT_TRUE(solve_3dm({2, {{0, 0, 0}, {1, 1, 1}}}).has_value());
    EXPECT_FALSE(solve_3dm({2, {{0, 0, 0}, {1, 0, 1}}}).has_value());
    EXPECT_TRUE(solve_3dm({0, {}}).has_value());
    EXPECT_FALSE(solve_3dm({1, {}}).has_value());
    const auto s = solve_3dm({2, {{0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 0, 1}}});
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(s->size(), 2u);
}

TEST(MatchingBruteForce, StringGroups) {
    const S3GInstance yes{{"10", "01"}, {"01", "00"}, {"00", "10"}};
    const auto g = solve_s3g(yes);
    ASSERT_TRUE(g.has_value());
    for (std::size_t i = 0; i < 2; ++i) EXPECT_TRUE(fits(yes.a[i], yes.b[g->b_of[i]], yes.c[g->c_of[i]]));
    const S3GInstance no{{"11", "01"}, {"01", "00"}, {"00", "00"}};
    EXPECT_FALSE(solve_s3g(no).has_value());
}
