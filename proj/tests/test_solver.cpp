#include <gtest/gtest.h>

#include "support.hpp"

using namespace mindecomp;
using namespace testing_support;

TEST(BagCount, InfeasibleAbsorbs) {
    const auto inf = BagCount::infeasible();
    EXPECT_EQ(BagCount(3) + inf, inf);
    EXPECT_EQ(min(inf, BagCount(4)), BagCount(4));
    EXPECT_EQ(glue(BagCount(3), BagCount(2)), BagCount(4));
    EXPECT_EQ(glue(inf, BagCount(2)), inf);
    EXPECT_THROW((void)inf.value(), std::logic_error);
}

TEST(PdK, Examples) {
    MemoTable memo;
    const auto p3 = path_graph(3);
    EXPECT_EQ(pd_k(p3, 1, {vs(3, {2, 3}), vs(3, {1})}, memo), BagCount(2));
    MemoTable memo2;
    EXPECT_FALSE(pd_k(complete_graph(2), 0, {vs(2, {1}), vs(2, {2})}, memo2).feasible());
}

TEST(PdK, BaseCaseAnyX) {
    const auto g = complete_graph(5);
    MemoTable memo;
    EXPECT_EQ(pd_k(g, 4, {g.all_vertices(), g.empty_set()}, memo), BagCount(1));
    EXPECT_EQ(td_k(g, 4, {g.all_vertices(), g.empty_set()}, memo), BagCount(1));
    EXPECT_THROW(pd_k(g, 3, {g.all_vertices(), g.empty_set()}, memo), std::invalid_argument);
}

TEST(TdK, Examples) {
    // X is the root bag itself, so the lone centre costs one bag on top of the edge bags
    MemoTable m1, m2;
    const auto s = star(3);
    EXPECT_EQ(td_k(s, 1, {vs(4, {1}), vs(4, {2, 3, 4})}, m1), BagCount(4));
    EXPECT_EQ(oracle_mstd_plain(s, 1, 1000, {vs(4, {1})}).size, BagCount(4));
    const auto sp = spider(3, 2);
    EXPECT_EQ(td_k(sp, 1, {vs(7, {1}), sp.all_vertices() - vs(7, {1})}, m2), BagCount(7));
    EXPECT_EQ(oracle_mstd_plain(sp, 1, 1000, {vs(7, {1})}).size, BagCount(7));
    MemoTable m3;
    EXPECT_EQ(td_k(s, 1, {vs(4, {1, 2}), vs(4, {3, 4})}, m3), BagCount(3));
}

TEST(Drivers, Examples) {
    const auto k3 = complete_graph(3);
    EXPECT_EQ(mspd(k3, 2), BagCount(1));
    EXPECT_FALSE(mspd(k3, 1).feasible());
    EXPECT_EQ(mspd(star(3), 1), BagCount(3));
    EXPECT_FALSE(mspd(spider(3, 2), 1).feasible());
    EXPECT_EQ(mstd(complete_graph(4), 3), BagCount(1));
    EXPECT_EQ(mstd(spider(3, 2), 1), BagCount(6));
    EXPECT_EQ(mstd(path_graph(3), 1), BagCount(2));
    EXPECT_EQ(mspd(Graph(0), 0), BagCount(1));
    EXPECT_EQ(mstd(Graph(0), 2), BagCount(1));
}

TEST(CandidateBags, Examples) {
    const auto p3 = path_graph(3);
    EXPECT_EQ(enumerate_candidate_bags(p3, {vs(3, {2, 3}), vs(3, {1})}, 1),
              (std::vector<VertexSet>{vs(3, {2}), vs(3, {1, 2})}));
    const auto k2 = complete_graph(2);
    const auto c = enumerate_candidate_bags(k2, {vs(2, {1, 2}), VertexSet(2)}, 1);
    EXPECT_EQ(c, (std::vector<VertexSet>{VertexSet(2), vs(2, {1}), vs(2, {2})}));
}

TEST(CandidateBags, ExactlyTheDefinedSet) {
    // compare against a filter over all subsets of X ∪ W
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const auto g = random_partial_ktree(8, 2, 0.7, rng());
        const std::size_t k = 1 + trial % 3;
        for (std::uint32_t xm = 0; xm < 256; xm += 7) {
            VertexSet x(8);
            for (Vertex v = 0; v < 8; ++v)
                if ((xm >> v) & 1U) x.insert(v);
            if (x.size() > k + 1) continue;
            for (const auto& comp : components_excluding(g, x)) {
                const GoodPair p{x, comp};
                if (!is_good_pair(g, p)) continue;
                std::vector<VertexSet> expected;
                const auto pool = (x | comp).members();
                for (std::uint32_t ym = 0; ym < (1U << pool.size()); ++ym) {
                    VertexSet y(8);
                    for (std::size_t i = 0; i < pool.size(); ++i)
                        if ((ym >> i) & 1U) y.insert(pool[i]);
                    if (y == x || y.size() > k + 1) continue;
                    if (g.neighbourhood(x - y).intersects(comp)) continue;
                    expected.push_back(y);
                }
                auto got = enumerate_candidate_bags(g, p, k);
                for (const auto& y : got) EXPECT_TRUE(is_good_pair(g, {y, comp - y}));
                for (std::size_t i = 1; i < got.size(); ++i) {
                    const bool ordered = got[i - 1].size() < got[i].size() ||
                                         (got[i - 1].size() == got[i].size() && lex_less(got[i - 1], got[i]));
                    EXPECT_TRUE(ordered);
                }
                std::sort(got.begin(), got.end());
                std::sort(expected.begin(), expected.end());
                EXPECT_EQ(got, expected);
            }
        }
    }
}

TEST(BranchSplits, Examples) {
    const auto s = star(3);
    const auto splits = enumerate_branch_splits(s, {vs(4, {1}), vs(4, {2, 3, 4})});
    ASSERT_EQ(splits.size(), 2u);
    EXPECT_EQ(splits[0].first, vs(4, {2}));
    EXPECT_EQ(splits[0].second, vs(4, {3, 4}));
    EXPECT_EQ(splits[1].first, vs(4, {2, 3}));
    EXPECT_EQ(splits[1].second, vs(4, {4}));

    const auto g = make_graph(4, {{1, 2}, {1, 3}, {3, 4}});
    EXPECT_EQ(enumerate_branch_splits(g, {vs(4, {1}), vs(4, {2, 3, 4})}).size(), 2u);
    EXPECT_TRUE(enumerate_branch_splits(path_graph(3), {vs(3, {1}), vs(3, {2, 3})}).empty());
}

TEST(Reconstruct, Examples) {
    {
        const auto s = star(3);
        Solver solver(s, 1, DecompositionKind::path);
        const auto r = solver.solve_all();
        ASSERT_EQ(r.size, BagCount(3));
        const auto pd = solver.reconstruct_path(*r.root, r.size);
        EXPECT_TRUE(validate_path(s, pd, 1, 3).valid());
        EXPECT_EQ(pd.bags.size(), 3u);
    }
    {
        const auto k3 = complete_graph(3);
        Solver solver(k3, 2, DecompositionKind::path);
        const auto r = solver.solve_all();
        const auto pd = solver.reconstruct_path(*r.root, r.size);
        EXPECT_EQ(pd.bags, (std::vector<VertexSet>{k3.all_vertices()}));
    }
    {
        const auto sp = spider(3, 2);
        Solver solver(sp, 1, DecompositionKind::tree);
        const auto r = solver.solve_all();
        ASSERT_EQ(r.size, BagCount(6));
        const auto td = solver.reconstruct_tree(*r.root, r.size);
        EXPECT_TRUE(validate_tree(sp, td, 1, 6).valid());
        EXPECT_EQ(td.bags.size(), 6u);
    }
}

TEST(Solver, StatsInvariant) {
    const auto g = spider(5, 2);
    Solver solver(g, 1, DecompositionKind::tree);
    solver.solve_all();
    const auto& st = solver.stats();
    EXPECT_LE(st.memo_hits + st.memo_entries, st.subproblem_calls);
    EXPECT_GT(st.canon_calls, 0u);
}

TEST(Solver, MemoIsPureCache) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const auto g = random_partial_ktree(9, 2, 0.8, rng());
        MemoTable shared;
        const auto all = g.all_vertices();
        for (Vertex v = 0; v < g.order(); ++v) {
            const GoodPair p{VertexSet(g.order(), {v}), all - VertexSet(g.order(), {v})};
            MemoTable fresh;
            EXPECT_EQ(pd_k(g, 2, p, shared), pd_k(g, 2, p, fresh));
            MemoTable fresh_tree, shared_tree;
            EXPECT_EQ(td_k(g, 2, p, shared_tree), td_k(g, 2, p, fresh_tree));
        }
    }
}

TEST(Solver, PoliciesAndKeyingsAgree) {
    const auto suite = small_suite(6);
    for (const auto& g : suite)
        for (std::size_t k = 0; k <= 2; ++k)
            for (auto kind : {DecompositionKind::path, DecompositionKind::tree}) {
                const auto base = Solver(g, k, kind).solve_all().size;
                SolveOptions pruned;
                pruned.candidates = CandidatePolicy::normalized;
                SolveOptions plain;
                plain.keying = MemoKeying::plain;
                SolveOptions anon;
                anon.key_mode = KeyMode::anonymized;
                SolveOptions nocache;
                nocache.raw_cache = false;
                EXPECT_EQ(Solver(g, k, kind, pruned).solve_all().size, base);
                EXPECT_EQ(Solver(g, k, kind, plain).solve_all().size, base);
                EXPECT_EQ(Solver(g, k, kind, anon).solve_all().size, base);
                EXPECT_EQ(Solver(g, k, kind, nocache).solve_all().size, base);
            }
}

TEST(Solver, IsomorphismInvariance) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 15; ++trial) {
        const auto g = random_partial_ktree(10, 2, 0.75, rng());
        const auto h = relabel(g, random_permutation(g.order(), rng));
        EXPECT_EQ(mspd(g, 2), mspd(h, 2));
        EXPECT_EQ(mstd(g, 2), mstd(h, 2));
    }
}

TEST(Solver, UserRoots) {
    const Graph g = star(3);
    SolveOptions o;
    o.roots = {vs(4, {1})};
    EXPECT_EQ(Solver(g, 1, DecompositionKind::tree, o).solve_all().size, BagCount(4));
    o.roots = {vs(4, {1}), vs(4, {1, 3})};
    const auto r = Solver(g, 1, DecompositionKind::tree, o).solve_all();
    EXPECT_EQ(r.size, BagCount(3));
    EXPECT_EQ(r.root, vs(4, {1, 3}));
    o.roots = {vs(4, {1, 2, 3})};
    EXPECT_THROW(Solver(g, 1, DecompositionKind::tree, o).solve_all(), std::invalid_argument);
}

TEST(Solver, WitnessesValidate) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t k = 1 + trial % 3;
        const auto g = random_partial_ktree(9 + trial % 4, k, 0.7, rng());
        for (auto kind : {DecompositionKind::path, DecompositionKind::tree}) {
            Solver solver(g, k, kind);
            const auto r = solver.solve_all();
            if (!r.size.feasible()) continue;
            if (kind == DecompositionKind::path)
                EXPECT_TRUE(validate_path(g, solver.reconstruct_path(*r.root, r.size), k, r.size.value()).valid());
            else {
                const auto td = solver.reconstruct_tree(*r.root, r.size);
                EXPECT_EQ(td.bags.size(), r.size.value());
                EXPECT_TRUE(validate_tree(g, td, k).valid());
            }
        }
    }
}

TEST(Solver, RepeatedComponentsMatchOracles) {
    // disjoint copies of small pieces make many components of G[W] interchangeable
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 4 + rng() % 7;
        Graph g(n);
        for (Vertex v = 0; v + 1 < n; ++v)
            if (rng() % 3 == 0) g.add_edge(v, v + 1);
        if (n > 5 && rng() % 2) g.add_edge(0, 2);
        for (std::size_t k : {1, 2}) {
            const auto path_ref = oracle_mspd_subsetdp(g, k);
            const auto tree_ref = oracle_mstd_plain(g, k).size;
            for (auto policy : {CandidatePolicy::exhaustive, CandidatePolicy::normalized}) {
                SolveOptions o;
                o.candidates = policy;
                EXPECT_EQ(mspd(g, k, o), path_ref) << "n=" << n << " k=" << k;
                EXPECT_EQ(mstd(g, k, o), tree_ref) << "n=" << n << " k=" << k;
            }
        }
    }
}
