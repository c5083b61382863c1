#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "mindecomp/gadgets.hpp"
#include "mindecomp/graph.hpp"
#include "mindecomp/solver.hpp"

// Brute-force references. They share graph I/O with the solver but none of its
// enumeration, keying or recursion code.

namespace mindecomp {

class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace oracle_detail {

using Mask = std::uint64_t;

inline std::vector<Mask> adjacency_masks(const Graph& g) {
    std::vector<Mask> adj(g.order(), 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= Mask{1} << v;
        adj[v] |= Mask{1} << u;
    }
    return adj;
}

inline Mask neighbours_of(const std::vector<Mask>& adj, Mask s) {
    Mask out = 0;
    for (Mask t = s; t; t &= t - 1) out |= adj[static_cast<std::size_t>(std::countr_zero(t))];
    return out;
}

/// Every submask of `pool` with at most `limit` members, each passed as base | sub.
template <class F>
void for_each_small_submask(Mask base, Mask pool, std::size_t limit, F&& f) {
    std::vector<int> bits;
    for (Mask t = pool; t; t &= t - 1) bits.push_back(std::countr_zero(t));
    std::function<void(std::size_t, Mask, std::size_t)> rec = [&](std::size_t from, Mask acc, std::size_t left) {
        f(base | acc);
        if (left == 0) return;
        for (std::size_t i = from; i < bits.size(); ++i) rec(i + 1, acc | (Mask{1} << bits[i]), left - 1);
    };
    rec(0, 0, limit);
}

struct PairHash {
    std::size_t operator()(const std::pair<Mask, Mask>& p) const {
        return std::hash<Mask>{}(p.first * 0x9e3779b97f4a7c15ULL ^ p.second);
    }
};

}  // namespace oracle_detail

/// Shortest width-k path decomposition by breadth-first search forward over
/// (covered, last) states; starts from every bag of size ≤ k+1.
inline BagCount oracle_mspd_subsetdp(const Graph& g, std::size_t width, std::size_t max_vertices = 16) {
    using namespace oracle_detail;
    const std::size_t n = g.order();
    if (n > max_vertices || n > 63) throw GuardExceeded("subset DP limited to " + std::to_string(max_vertices) + " vertices");
    if (n == 0) return BagCount(1);
    const auto adj = adjacency_masks(g);
    const Mask all = (Mask{1} << n) - 1;
    const std::size_t cap = width + 1;

    std::unordered_set<std::pair<Mask, Mask>, PairHash> seen;
    std::deque<std::pair<Mask, Mask>> frontier;
    for_each_small_submask(0, all, cap, [&](Mask x) {
        if (seen.insert({x, x}).second) frontier.emplace_back(x, x);
    });
    std::size_t bags = 1;
    while (!frontier.empty()) {
        std::deque<std::pair<Mask, Mask>> next;
        for (auto [covered, last] : frontier) {
            if (covered == all) return BagCount(bags);
            const Mask fresh = all & ~covered;
            // a vertex may only be dropped once all its neighbours have appeared
            Mask keep = 0;
            for (Mask t = last; t; t &= t - 1) {
                const auto v = static_cast<std::size_t>(std::countr_zero(t));
                if (adj[v] & fresh) keep |= Mask{1} << v;
            }
            if (static_cast<std::size_t>(std::popcount(keep)) > cap) continue;
            for_each_small_submask(keep, (last | fresh) & ~keep, cap - static_cast<std::size_t>(std::popcount(keep)),
                                   [&](Mask y) {
                                       const std::pair<Mask, Mask> s{covered | y, y};
                                       if (seen.insert(s).second) next.push_back(s);
                                   });
        }
        frontier = std::move(next);
        ++bags;
    }
    return BagCount::infeasible();
}

struct PlainTreeResult {
    BagCount size;
    std::size_t memo_entries = 0;
};

/// Tree recurrence evaluated with raw (X, W) keys; branches over every proper
/// nonempty subset of the components of G[W].
inline PlainTreeResult oracle_mstd_plain(const Graph& g, std::size_t width, std::size_t max_states = 20'000'000,
                                         const std::vector<VertexSet>& roots = {}) {
    using namespace oracle_detail;
    const std::size_t n = g.order();
    if (n > 63) throw GuardExceeded("plain tree oracle limited to 63 vertices");
    const auto adj = adjacency_masks(g);
    const Mask all = n == 0 ? 0 : (Mask{1} << n) - 1;
    const std::size_t cap = width + 1;
    std::unordered_map<std::pair<Mask, Mask>, BagCount, PairHash> memo;

    auto components = [&](Mask w) {
        std::vector<Mask> out;
        while (w) {
            Mask comp = w & (~w + 1), grow = comp;
            while (grow) {
                const Mask add = neighbours_of(adj, grow) & w & ~comp;
                comp |= add;
                grow = add;
            }
            out.push_back(comp);
            w &= ~comp;
        }
        return out;
    };

    std::function<BagCount(Mask, Mask)> f = [&](Mask x, Mask w) -> BagCount {
        if (w == 0) return static_cast<std::size_t>(std::popcount(x)) <= cap ? BagCount(1) : BagCount::infeasible();
        if (auto it = memo.find({x, w}); it != memo.end()) return it->second;
        if (memo.size() >= max_states) throw GuardExceeded("plain tree oracle state guard exceeded");
        BagCount best = BagCount::infeasible();
        Mask needed = 0;
        for (Mask t = x; t; t &= t - 1) {
            const auto v = static_cast<std::size_t>(std::countr_zero(t));
            if (adj[v] & w) needed |= Mask{1} << v;
        }
        const auto nn = static_cast<std::size_t>(std::popcount(needed));
        if (nn <= cap)
            for_each_small_submask(needed, (x | w) & ~needed, cap - nn, [&](Mask y) {
                if (y == x) return;
                best = min(best, BagCount(1) + f(y, w & ~y));
            });
        const auto comps = components(w);
        const std::size_t c = comps.size();
        if (c >= 2 && c < 63) {
            for (Mask sub = 1; sub + 1 < (Mask{1} << c); ++sub) {
                Mask w1 = 0;
                for (std::size_t i = 0; i < c; ++i)
                    if ((sub >> i) & 1U) w1 |= comps[i];
                best = min(best, glue(f(x, w1), f(x, w & ~w1)));
            }
        }
        memo.emplace(std::pair{x, w}, best);
        return best;
    };

    BagCount best = BagCount::infeasible();
    if (!roots.empty()) {
        for (const auto& r : roots) {
            Mask x = 0;
            r.for_each([&](Vertex v) { x |= Mask{1} << v; });
            best = min(best, f(x, all & ~x));
        }
    } else {
        for_each_small_submask(0, all, cap, [&](Mask x) { best = min(best, f(x, all & ~x)); });
    }
    return {best, memo.size()};
}

// ---------------------------------------------------------------------------
// k-implements verification

struct ImplementsReport {
    /// Every tree decomposition with exactly r bags is path-shaped.
    bool size_r_trees_are_paths = true;
    /// Fewest bags of any tree decomposition within capacity, if some has ≤ r bags.
    std::optional<std::size_t> min_tree_size;
    /// Fewest bags of any path decomposition within capacity, if some has ≤ r bags.
    std::optional<std::size_t> min_path_size;
    /// ⪯-minimal fingerprints among path decompositions with r bags, both orientations.
    std::vector<Fingerprint> minimal_fingerprints;
    /// Every minimal fingerprint is w or its reverse.
    bool fingerprints_match = false;
    std::size_t decompositions_seen = 0;

    bool implements(std::size_t r) const {
        return size_r_trees_are_paths && min_path_size == r && min_tree_size == r && !minimal_fingerprints.empty() &&
               fingerprints_match;
    }
};

namespace oracle_detail {

/// Labelled trees on t nodes as edge lists (Prüfer decoding).
inline std::vector<std::vector<std::pair<std::size_t, std::size_t>>> labelled_trees(std::size_t t) {
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> out;
    if (t == 1) return {{}};
    if (t == 2) return {{{0, 1}}};
    std::vector<std::size_t> seq(t - 2, 0);
    while (true) {
        std::vector<std::size_t> degree(t, 1);
        for (auto s : seq) ++degree[s];
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (auto s : seq) {
            std::size_t leaf = 0;
            while (degree[leaf] != 1) ++leaf;
            edges.emplace_back(leaf, s);
            --degree[leaf];
            --degree[s];
        }
        std::size_t u = t, v = t;
        for (std::size_t i = 0; i < t; ++i)
            if (degree[i] == 1) (u == t ? u : v) = i;
        edges.emplace_back(u, v);
        out.push_back(std::move(edges));
        std::size_t i = 0;
        while (i < seq.size() && ++seq[i] == t) seq[i++] = 0;
        if (i == seq.size()) break;
    }
    return out;
}

/// Vertices grouped into classes of pairwise twins (equal closed or equal open neighbourhoods).
inline std::vector<std::vector<Vertex>> twin_classes(const Graph& g) {
    std::vector<std::vector<Vertex>> out;
    std::vector<bool> used(g.order(), false);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (used[v]) continue;
        std::vector<Vertex> cls{v};
        used[v] = true;
        VertexSet closed = g.neighbourhood(v);
        closed.insert(v);
        for (Vertex u = v + 1; u < g.order(); ++u) {
            if (used[u]) continue;
            VertexSet cu = g.neighbourhood(u);
            cu.insert(u);
            if (cu == closed) {
                cls.push_back(u);
                used[u] = true;
            }
        }
        if (cls.size() == 1) {
            for (Vertex u = v + 1; u < g.order(); ++u)
                if (!used[u] && g.neighbourhood(u) == g.neighbourhood(v)) {
                    cls.push_back(u);
                    used[u] = true;
                }
        }
        out.push_back(std::move(cls));
    }
    return out;
}

}  // namespace oracle_detail

/// Enumerates every tree decomposition of g with at most r bags of size at most
/// `capacity` (twins interchanged only once) and checks both clauses of the
/// implements property for w.
inline ImplementsReport oracle_implements_check(const Graph& g, std::size_t capacity, std::size_t r, const Fingerprint& w,
                                                std::size_t max_vertices = 24, std::size_t max_bags = 6) {
    using namespace oracle_detail;
    if (g.order() > max_vertices) throw GuardExceeded("implements check limited to " + std::to_string(max_vertices) + " vertices");
    if (r == 0 || r > max_bags) throw GuardExceeded("implements check needs 1 <= r <= " + std::to_string(max_bags));

    ImplementsReport report;
    std::set<Fingerprint> size_r_prints;

    // Classes ordered so each one (after the first) touches an earlier one where possible.
    auto classes = twin_classes(g);
    {
        std::vector<std::vector<Vertex>> ordered;
        std::vector<bool> taken(classes.size(), false);
        VertexSet placed(g.order());
        for (std::size_t step = 0; step < classes.size(); ++step) {
            std::size_t pick = classes.size();
            for (std::size_t i = 0; i < classes.size() && pick == classes.size(); ++i)
                if (!taken[i] && g.neighbourhood(classes[i].front()).intersects(placed)) pick = i;
            if (pick == classes.size())
                for (std::size_t i = 0; i < classes.size(); ++i)
                    if (!taken[i]) {
                        pick = i;
                        break;
                    }
            taken[pick] = true;
            for (auto v : classes[pick]) placed.insert(v);
            ordered.push_back(classes[pick]);
        }
        classes = std::move(ordered);
    }
    std::vector<std::size_t> position(g.order());
    {
        std::size_t p = 0;
        for (const auto& c : classes)
            for (auto v : c) position[v] = p++;
    }

    for (std::size_t t = 1; t <= r; ++t) {
        bool found_tree = false, found_path = false;
        for (const auto& edges : labelled_trees(t)) {
            std::vector<std::vector<std::size_t>> nbr(t);
            for (auto [a, b] : edges) {
                nbr[a].push_back(b);
                nbr[b].push_back(a);
            }
            bool path_shaped = true;
            for (const auto& nb : nbr) path_shaped = path_shaped && nb.size() <= 2;
            // connected node subsets
            std::vector<Mask> subtrees;
            for (Mask s = 1; s < (Mask{1} << t); ++s) {
                Mask reach = s & (~s + 1), grow = reach;
                while (grow) {
                    Mask add = 0;
                    for (Mask q = grow; q; q &= q - 1)
                        for (auto y : nbr[static_cast<std::size_t>(std::countr_zero(q))]) add |= Mask{1} << y;
                    add &= s & ~reach;
                    reach |= add;
                    grow = add;
                }
                if (reach == s) subtrees.push_back(s);
            }
            std::vector<std::size_t> load(t, 0);
            std::vector<Mask> assigned(g.order(), 0);

            auto record = [&] {
                found_tree = true;
                ++report.decompositions_seen;
                if (t == r && !path_shaped) report.size_r_trees_are_paths = false;
                if (!path_shaped) return;
                found_path = true;
                if (t != r) return;
                // walk the path from one end
                std::size_t end = 0;
                while (nbr[end].size() > 1) ++end;
                Fingerprint fp;
                std::size_t prev = t, cur = end;
                for (std::size_t step = 0; step < t; ++step) {
                    fp.push_back(load[cur]);
                    std::size_t nxt = t;
                    for (auto y : nbr[cur])
                        if (y != prev) nxt = y;
                    prev = cur;
                    cur = nxt;
                }
                size_r_prints.insert(fp);
                size_r_prints.insert(Fingerprint(fp.rbegin(), fp.rend()));
            };

            std::function<void(std::size_t, std::size_t, std::size_t)> place =
                [&](std::size_t cls, std::size_t member, std::size_t min_choice) {
                    if (t < r && found_path && found_tree) return;  // only existence matters below r
                    if (cls == classes.size()) {
                        record();
                        return;
                    }
                    if (member == classes[cls].size()) {
                        place(cls + 1, 0, 0);
                        return;
                    }
                    const Vertex v = classes[cls][member];
                    for (std::size_t ch = min_choice; ch < subtrees.size(); ++ch) {
                        const Mask s = subtrees[ch];
                        bool ok = true;
                        for (Mask q = s; q && ok; q &= q - 1)
                            ok = load[static_cast<std::size_t>(std::countr_zero(q))] < capacity;
                        if (!ok) continue;
                        for (auto u : g.neighbours(v))
                            if (position[u] < position[v] && (assigned[u] & s) == 0) {
                                ok = false;
                                break;
                            }
                        if (!ok) continue;
                        for (Mask q = s; q; q &= q - 1) ++load[static_cast<std::size_t>(std::countr_zero(q))];
                        assigned[v] = s;
                        place(cls, member + 1, ch);
                        assigned[v] = 0;
                        for (Mask q = s; q; q &= q - 1) --load[static_cast<std::size_t>(std::countr_zero(q))];
                    }
                };
            place(0, 0, 0);
        }
        if (found_tree && !report.min_tree_size) report.min_tree_size = t;
        if (found_path && !report.min_path_size) report.min_path_size = t;
    }

    for (const auto& fp : size_r_prints) {
        bool dominated = false;
        for (const auto& other : size_r_prints) {
            if (other == fp) continue;
            bool le = true;
            for (std::size_t i = 0; i < fp.size() && le; ++i) le = other[i] <= fp[i];
            if (le) {
                dominated = true;
                break;
            }
        }
        if (!dominated) report.minimal_fingerprints.push_back(fp);
    }
    const Fingerprint rev(w.rbegin(), w.rend());
    report.fingerprints_match = std::all_of(report.minimal_fingerprints.begin(), report.minimal_fingerprints.end(),
                                            [&](const Fingerprint& fp) { return fp == w || fp == rev; });
    return report;
}

// ---------------------------------------------------------------------------
// Brute force for the matching problems

/// Some n triples covering every element exactly once, by backtracking over P.
inline std::optional<std::vector<std::size_t>> solve_3dm(const TripleSystem& t) {
    t.check();
    std::vector<std::vector<std::size_t>> by_p(t.n);
    for (std::size_t i = 0; i < t.triples.size(); ++i) by_p[t.triples[i][0]].push_back(i);
    std::vector<bool> q_used(t.n, false), r_used(t.n, false);
    std::vector<std::size_t> chosen;
    std::function<bool(std::size_t)> rec = [&](std::size_t p) {
        if (p == t.n) return true;
        for (auto i : by_p[p]) {
            const auto& tr = t.triples[i];
            if (q_used[tr[1]] || r_used[tr[2]]) continue;
            q_used[tr[1]] = r_used[tr[2]] = true;
            chosen.push_back(i);
            if (rec(p + 1)) return true;
            chosen.pop_back();
            q_used[tr[1]] = r_used[tr[2]] = false;
        }
        return false;
    };
    if (rec(0)) return chosen;
    return std::nullopt;
}

/// A grouping with a^i + b^{b_of[i]} + c^{c_of[i]} ⪯ 1 for all i, by backtracking over A.
inline std::optional<Grouping> solve_s3g(const S3GInstance& s) {
    s.check();
    const std::size_t n = s.n();
    std::vector<bool> b_used(n, false), c_used(n, false);
    Grouping gr{std::vector<std::size_t>(n), std::vector<std::size_t>(n)};
    std::function<bool(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) return true;
        for (std::size_t j = 0; j < n; ++j) {
            if (b_used[j]) continue;
            // skip b strings identical to an unused one already tried at this level
            bool dup = false;
            for (std::size_t jj = 0; jj < j && !dup; ++jj) dup = !b_used[jj] && s.b[jj] == s.b[j];
            if (dup) continue;
            const std::string zero(s.length(), '0');
            if (!fits(s.a[i], s.b[j], zero)) continue;
            b_used[j] = true;
            for (std::size_t l = 0; l < n; ++l) {
                if (c_used[l] || !fits(s.a[i], s.b[j], s.c[l])) continue;
                bool dupc = false;
                for (std::size_t ll = 0; ll < l && !dupc; ++ll) dupc = !c_used[ll] && s.c[ll] == s.c[l];
                if (dupc) continue;
                c_used[l] = true;
                gr.b_of[i] = j;
                gr.c_of[i] = l;
                if (rec(i + 1)) return true;
                c_used[l] = false;
            }
            b_used[j] = false;
        }
        return false;
    };
    if (rec(0)) return gr;
    return std::nullopt;
}

}  // namespace mindecomp
