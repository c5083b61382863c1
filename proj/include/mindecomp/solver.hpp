#pragma once

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mindecomp/canon.hpp"
#include "mindecomp/decomposition.hpp"
#include "mindecomp/graph.hpp"

namespace mindecomp {

/// Number of bags, or infeasible. Infeasible absorbs under + and loses every min.
class BagCount {
public:
    constexpr BagCount() = default;
    constexpr explicit BagCount(std::size_t v) : value_(v) {}
    static constexpr BagCount infeasible() { return BagCount(); }

    constexpr bool feasible() const { return value_ != kInf; }
    constexpr std::size_t value() const {
        if (!feasible()) throw std::logic_error("value() of an infeasible BagCount");
        return value_;
    }
    constexpr std::size_t raw() const { return value_; }

    friend constexpr BagCount operator+(BagCount a, BagCount b) {
        if (!a.feasible() || !b.feasible()) return infeasible();
        return BagCount(a.value_ + b.value_);
    }
    /// a + b - 1: gluing two decompositions along their shared root bag.
    friend constexpr BagCount glue(BagCount a, BagCount b) {
        if (!a.feasible() || !b.feasible()) return infeasible();
        return BagCount(a.value_ + b.value_ - 1);
    }
    friend constexpr BagCount min(BagCount a, BagCount b) { return a.value_ <= b.value_ ? a : b; }
    friend constexpr bool operator==(BagCount, BagCount) = default;
    friend constexpr auto operator<=>(BagCount a, BagCount b) { return a.value_ <=> b.value_; }

    friend std::ostream& operator<<(std::ostream& os, BagCount c) {
        if (c.feasible()) return os << c.value_;
        return os << "INFEASIBLE";
    }

private:
    static constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
    std::size_t value_ = kInf;
};

enum class DecompositionKind { path, tree };

/// Which predecessor bags Y the recurrence tries at a good pair (X, W).
enum class CandidatePolicy {
    /// Every Y ⊆ X ∪ W with Y ≠ X, |Y| ≤ k+1 and N(X \ Y) ∩ W = ∅.
    exhaustive,
    /// Only Y with Y ∩ X = {x ∈ X : N(x) ∩ W ≠ ∅} and either |Y| = k+1 or W ⊆ Y.
    /// Some optimal decomposition always has this shape, so values are unchanged;
    /// roots are likewise restricted to |X| = min(k+1, n).
    normalized,
};

enum class MemoKeying {
    canonical,  ///< isomorphism-class keys
    plain,      ///< raw (X, W) keys
};

struct SolveOptions {
    CandidatePolicy candidates = CandidatePolicy::exhaustive;
    MemoKeying keying = MemoKeying::canonical;
    KeyMode key_mode = KeyMode::per_x;
    /// Raw (X, W) lookups in front of the canonical table; a pure cache.
    bool raw_cache = true;
    /// Restrict the driver's root bags; empty means all admissible roots.
    std::vector<VertexSet> roots;
};

struct SolveStats {
    std::size_t memo_entries = 0;
    std::size_t memo_hits = 0;
    std::size_t subproblem_calls = 0;
    std::size_t canon_calls = 0;
    std::size_t candidate_bags_enumerated = 0;
    std::size_t branch_splits_enumerated = 0;
    double canon_seconds = 0;
    double solve_seconds = 0;
    double reconstruct_seconds = 0;

    void write(std::ostream& os) const {
        os << "memo_entries=" << memo_entries << '\n'
           << "memo_hits=" << memo_hits << '\n'
           << "subproblem_calls=" << subproblem_calls << '\n'
           << "canon_calls=" << canon_calls << '\n'
           << "candidate_bags_enumerated=" << candidate_bags_enumerated << '\n'
           << "branch_splits_enumerated=" << branch_splits_enumerated << '\n'
           << "canon_seconds=" << canon_seconds << '\n'
           << "solve_seconds=" << solve_seconds << '\n'
           << "reconstruct_seconds=" << reconstruct_seconds << '\n';
    }
};

struct RawKey {
    VertexSet x;
    VertexSet w;
    friend bool operator==(const RawKey&, const RawKey&) = default;
};

/// Borrowed form of a RawKey, for lookups without copying the sets.
struct RawKeyRef {
    const VertexSet& x;
    const VertexSet& w;
};

struct RawKeyHash {
    using is_transparent = void;
    std::size_t operator()(const RawKey& k) const { return k.x.hash() * 31 + k.w.hash(); }
    std::size_t operator()(const RawKeyRef& k) const { return k.x.hash() * 31 + k.w.hash(); }
};

struct RawKeyEqual {
    using is_transparent = void;
    bool operator()(const RawKey& a, const RawKey& b) const { return a == b; }
    bool operator()(const RawKeyRef& a, const RawKey& b) const { return a.x == b.x && a.w == b.w; }
    bool operator()(const RawKey& a, const RawKeyRef& b) const { return a.x == b.x && a.w == b.w; }
};

/// Memo store shared across calls on one (graph, width, kind). Values stored
/// under a key equal the optimum of every good pair with that key.
class MemoTable {
public:
    std::unordered_map<CanonKey, BagCount, CanonKeyHash> store;
    std::unordered_map<RawKey, BagCount, RawKeyHash, RawKeyEqual> raw;
    SolveStats stats;

    // Interned certificates of basic good pairs (X, C), C a component.
    std::unordered_map<RawKey, std::uint32_t, RawKeyHash, RawKeyEqual> component_ids;
    std::map<Certificate, std::uint32_t> cert_ids;
    std::vector<const Certificate*> certs;

    std::size_t entries(MemoKeying keying) const { return keying == MemoKeying::plain ? raw.size() : store.size(); }
};

// ---------------------------------------------------------------------------
// Enumeration of recursion steps

namespace detail {

/// Calls f(combination) for every size-r subset of pool, in lexicographic order.
/// Stops early when f returns false; returns false in that case.
template <class F>
bool for_each_combination(const std::vector<Vertex>& pool, std::size_t r, F&& f) {
    if (r > pool.size()) return true;
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    std::vector<Vertex> pick(r);
    while (true) {
        for (std::size_t i = 0; i < r; ++i) pick[i] = pool[idx[i]];
        if (!f(pick)) return false;
        std::size_t i = r;
        while (i > 0 && idx[i - 1] == pool.size() - r + (i - 1)) --i;
        if (i == 0) return true;
        ++idx[i - 1];
        for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// X vertices with a neighbour in W; every predecessor bag must keep them.
inline VertexSet attached(const Graph& g, const GoodPair& p) {
    VertexSet out(g.order());
    p.x.for_each([&](Vertex v) {
        if (g.neighbourhood(v).intersects(p.w)) out.insert(v);
    });
    return out;
}

}  // namespace detail

namespace detail {

/// Vertex filter for component symmetry: an automorphism fixing X pointwise may permute
/// the components inside a class, so it suffices that Y touches a prefix of each class.
class ClassPrefixFilter {
public:
    ClassPrefixFilter(std::size_t order, const std::vector<std::vector<VertexSet>>& classes, std::size_t max_touch)
        : cls_(order, -1), rank_(order, -1), reachable_(order) {
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (std::size_t i = 0; i < classes[c].size() && i < max_touch; ++i) {
                reachable_ |= classes[c][i];
                classes[c][i].for_each([&](Vertex v) {
                    cls_[v] = static_cast<int>(c);
                    rank_[v] = static_cast<int>(i);
                });
            }
    }

    /// W vertices lying in a component some admissible Y can touch.
    const VertexSet& reachable() const { return reachable_; }

    bool admits(const std::vector<Vertex>& pick) {
        touched_.clear();
        for (auto v : pick)
            if (cls_[v] >= 0) touched_.emplace_back(cls_[v], rank_[v]);
        std::sort(touched_.begin(), touched_.end());
        touched_.erase(std::unique(touched_.begin(), touched_.end()), touched_.end());
        for (std::size_t i = 0; i < touched_.size(); ++i) {
            const bool first = i == 0 || touched_[i - 1].first != touched_[i].first;
            if (touched_[i].second != (first ? 0 : touched_[i - 1].second + 1)) return false;
        }
        return true;
    }

private:
    std::vector<int> cls_, rank_;
    VertexSet reachable_;
    std::vector<std::pair<int, int>> touched_;
};

}  // namespace detail

/// Streams the predecessor bags Y of (X, W) by increasing |Y|, then lexicographically.
/// f returns false to stop; the function then returns false.
/// When `classes` (components of G[W] grouped by isomorphism over X) is given, bags
/// that differ from an emitted one only by permuting components within a class are skipped.
template <class F>
bool for_each_candidate_bag(const Graph& g, const GoodPair& p, std::size_t width, CandidatePolicy policy, F&& f,
                            const std::vector<std::vector<VertexSet>>* classes = nullptr) {
    const VertexSet needed = detail::attached(g, p);
    const std::size_t cap = width + 1;
    const std::size_t base = needed.size();
    if (base > cap) return true;
    std::optional<detail::ClassPrefixFilter> filter;
    VertexSet w_pool = p.w;
    const bool symmetric =
        classes && std::any_of(classes->begin(), classes->end(), [](const auto& c) { return c.size() > 1; });
    if (symmetric) {
        filter.emplace(g.order(), *classes, cap - base);
        w_pool = filter->reachable();
    }
    auto emit = [&](const std::vector<Vertex>& pick) {
        if (filter && !filter->admits(pick)) return true;
        VertexSet y = needed;
        for (auto v : pick) y.insert(v);
        if (y == p.x) return true;
        return f(y);
    };
    if (policy == CandidatePolicy::exhaustive) {
        const auto pool = ((p.x - needed) | w_pool).members();
        for (std::size_t r = 0; base + r <= cap && r <= pool.size(); ++r)
            if (!detail::for_each_combination(pool, r, emit)) return false;
        return true;
    }
    const std::size_t r = base + p.w.size() <= cap ? p.w.size() : cap - base;
    return detail::for_each_combination(w_pool.members(), r, emit);
}

inline std::vector<VertexSet> enumerate_candidate_bags(const Graph& g, const GoodPair& p, std::size_t width,
                                                       CandidatePolicy policy = CandidatePolicy::exhaustive) {
    require_good_pair(g, p);
    std::vector<VertexSet> out;
    for_each_candidate_bag(g, p, width, policy, [&](const VertexSet& y) {
        out.push_back(y);
        return true;
    });
    return out;
}

/// Streams (W1, W \ W1) for every count vector y with 0 ≤ y ≤ (c_1..c_l), y ≠ 0, y ≠ c,
/// where W1 takes the first y_i members of class i. With `halve`, only y ≤lex c - y.
template <class Members, class F>
bool for_each_branch_split(const std::vector<Members>& classes, const VertexSet& w, bool halve, F&& f) {
    const std::size_t l = classes.size();
    std::vector<std::size_t> c(l), y(l, 0);
    std::size_t total = 0;
    for (std::size_t i = 0; i < l; ++i) {
        c[i] = classes[i].size();
        total += c[i];
    }
    if (total < 2) return true;
    while (true) {
        // odometer increment
        std::size_t i = 0;
        while (i < l && y[i] == c[i]) y[i++] = 0;
        if (i == l) return true;
        ++y[i];
        if (y == c) continue;
        if (halve) {
            bool mirror_smaller = false;
            for (std::size_t j = 0; j < l; ++j) {
                const std::size_t m = c[j] - y[j];
                if (m != y[j]) {
                    mirror_smaller = m < y[j];
                    break;
                }
            }
            if (mirror_smaller) continue;
        }
        VertexSet w1(w.universe());
        for (std::size_t j = 0; j < l; ++j)
            for (std::size_t t = 0; t < y[j]; ++t) w1 |= classes[j][t];
        if (!f(w1, w - w1)) return false;
    }
}

inline std::vector<std::pair<VertexSet, VertexSet>> enumerate_branch_splits(const Graph& g, const GoodPair& p) {
    const auto classes = component_classes(g, p);
    std::vector<std::vector<VertexSet>> members;
    for (const auto& c : classes) members.push_back(c.members);
    std::vector<std::pair<VertexSet, VertexSet>> out;
    for_each_branch_split(members, p.w, false, [&](const VertexSet& a, const VertexSet& b) {
        out.emplace_back(a, b);
        return true;
    });
    return out;
}

// ---------------------------------------------------------------------------

struct SolveResult {
    BagCount size;
    std::optional<VertexSet> root;  ///< a last/root bag attaining the optimum
};

/// Memoized evaluation of the good-pair recurrences for one graph and width.
class Solver {
public:
    Solver(const Graph& g, std::size_t width, DecompositionKind kind, SolveOptions options = {},
           MemoTable* memo = nullptr)
        : g_(g), width_(width), kind_(kind), options_(std::move(options)), memo_(memo ? memo : &own_memo_) {}

    /// The solver keeps a reference to the graph.
    Solver(Graph&&, std::size_t, DecompositionKind, SolveOptions = {}, MemoTable* = nullptr) = delete;
    Solver(const Solver&) = delete;
    Solver& operator=(const Solver&) = delete;

    const SolveStats& stats() const { return memo_->stats; }
    MemoTable& memo() { return *memo_; }
    std::size_t width() const { return width_; }
    DecompositionKind kind() const { return kind_; }

    /// Minimum size of a decomposition of G[X ∪ W] with X as last (path) or root (tree) bag.
    BagCount solve(const GoodPair& p) {
        require_good_pair(g_, p);
        if (p.x.size() > width_ + 1) throw std::invalid_argument("root bag exceeds width + 1");
        const auto t0 = Clock::now();
        const auto r = value(p.x, p.w);
        memo_->stats.solve_seconds += seconds_since(t0);
        return r;
    }

    /// Minimum over admissible root bags X of solve((X, V \ X)).
    SolveResult solve_all() {
        const auto t0 = Clock::now();
        SolveResult best{BagCount::infeasible(), std::nullopt};
        const VertexSet all = g_.all_vertices();
        for_each_root([&](const VertexSet& x) {
            const auto v = value(x, all - x);
            if (v < best.size) best = {v, x};
        });
        memo_->stats.solve_seconds += seconds_since(t0);
        return best;
    }

    PathDecomposition reconstruct_path(const VertexSet& root, BagCount target) {
        if (kind_ != DecompositionKind::path) throw std::logic_error("reconstruct_path on a tree solver");
        const auto t0 = Clock::now();
        PathDecomposition pd;
        VertexSet x = root;
        VertexSet w = g_.all_vertices() - root;
        BagCount m = target;
        if (value(x, w) != m) throw std::logic_error("reconstruct_path: root does not attain the target size");
        std::vector<VertexSet> reversed{x};
        while (!w.empty()) {
            std::optional<VertexSet> next;
            for_each_candidate_bag(g_, GoodPair{x, w}, width_, options_.candidates, [&](const VertexSet& y) {
                if (BagCount(1) + value(y, w - y) == m) {
                    next = y;
                    return false;
                }
                return true;
            });
            if (!next) throw std::logic_error("reconstruct_path: no child attains the memoized value");
            w -= *next;
            x = *next;
            m = BagCount(m.value() - 1);
            reversed.push_back(x);
        }
        pd.bags.assign(reversed.rbegin(), reversed.rend());
        memo_->stats.reconstruct_seconds += seconds_since(t0);
        return pd;
    }

    TreeDecomposition reconstruct_tree(const VertexSet& root, BagCount target) {
        if (kind_ != DecompositionKind::tree) throw std::logic_error("reconstruct_tree on a path solver");
        const auto t0 = Clock::now();
        TreeDecomposition td;
        td.bags.push_back(root);
        td.parent.push_back(-1);
        build_tree(td, 0, root, g_.all_vertices() - root, target);
        memo_->stats.reconstruct_seconds += seconds_since(t0);
        return td;
    }

    /// Calls f(X) for each root bag the driver tries, smallest first.
    template <class F>
    void for_each_root(F&& f) const {
        if (!options_.roots.empty()) {
            for (const auto& x : options_.roots) {
                if (x.universe() != g_.order() || x.size() > width_ + 1)
                    throw std::invalid_argument("root bag outside the graph or wider than width + 1");
                f(x);
            }
            return;
        }
        const auto all = g_.all_vertices().members();
        const std::size_t cap = std::min(width_ + 1, all.size());
        const std::size_t lo = options_.candidates == CandidatePolicy::normalized ? cap : 0;
        for (std::size_t r = lo; r <= cap; ++r)
            detail::for_each_combination(all, r, [&](const std::vector<Vertex>& pick) {
                f(VertexSet::from_range(g_.order(), pick));
                return true;
            });
    }

private:
    using Clock = std::chrono::steady_clock;
    static double seconds_since(Clock::time_point t0) {
        return std::chrono::duration<double>(Clock::now() - t0).count();
    }

    BagCount value(const VertexSet& x, const VertexSet& w) {
        if (w.empty()) return x.size() <= width_ + 1 ? BagCount(1) : BagCount::infeasible();
        auto& st = memo_->stats;
        ++st.subproblem_calls;

        const bool plain = options_.keying == MemoKeying::plain;
        if (plain || options_.raw_cache) {
            if (auto it = memo_->raw.find(RawKeyRef{x, w}); it != memo_->raw.end()) {
                ++st.memo_hits;
                return it->second;
            }
        }
        CanonKey key;
        std::vector<Labelled> parts;
        const bool anonymized = options_.key_mode == KeyMode::anonymized;
        if (!plain) {
            if (!anonymized) parts = labelled_components(x, w);
            key = anonymized ? anonymized_key(x, w) : per_x_key(x, parts);
            if (auto it = memo_->store.find(key); it != memo_->store.end()) {
                ++st.memo_hits;
                if (options_.raw_cache) memo_->raw.emplace(RawKey{x, w}, it->second);
                return it->second;
            }
        }

        BagCount best = BagCount::infeasible();
        const GoodPair p{x, w};
        // plain keying stays free of canonization outside the tree splits
        std::vector<std::vector<VertexSet>> classes;
        if (kind_ == DecompositionKind::tree) {
            if (parts.empty()) parts = labelled_components(x, w);
            classes = group_classes(std::move(parts));
        } else if (!plain) {
            if (parts.empty()) parts = labelled_components(x, w);
            if (has_repeated_class(parts)) classes = group_classes(std::move(parts));
        }
        for_each_candidate_bag(
            g_, p, width_, options_.candidates,
            [&](const VertexSet& y) {
                ++st.candidate_bags_enumerated;
                const VertexSet rest = w - y;
                assert((y | rest).size() < (x | w).size() || rest.size() < w.size());
                best = min(best, BagCount(1) + value(y, rest));
                return true;
            },
            plain || classes.empty() ? nullptr : &classes);
        if (kind_ == DecompositionKind::tree) {
            for_each_branch_split(classes, w, true, [&](const VertexSet& w1, const VertexSet& w2) {
                ++st.branch_splits_enumerated;
                best = min(best, glue(value(x, w1), value(x, w2)));
                return true;
            });
        }

        if (plain) {
            memo_->raw.emplace(RawKey{x, w}, best);
            st.memo_entries = memo_->raw.size();
        } else {
            memo_->store.emplace(std::move(key), best);
            st.memo_entries = memo_->store.size();
            if (options_.raw_cache) memo_->raw.emplace(RawKey{x, w}, best);
        }
        return best;
    }

    std::uint32_t intern_component(const VertexSet& x, const VertexSet& comp) {
        if (auto it = memo_->component_ids.find(RawKeyRef{x, comp}); it != memo_->component_ids.end())
            return it->second;
        const auto t0 = Clock::now();
        ++memo_->stats.canon_calls;
        auto key = canon_key_unchecked(g_, GoodPair{x, comp});
        memo_->stats.canon_seconds += seconds_since(t0);
        auto [it, inserted] =
            memo_->cert_ids.emplace(std::move(key.cert), static_cast<std::uint32_t>(memo_->certs.size()));
        if (inserted) memo_->certs.push_back(&it->first);
        memo_->component_ids.emplace(RawKey{x, comp}, it->second);
        return it->second;
    }

    /// Components of G[W] with their interned class ids.
    using Labelled = std::pair<std::uint32_t, VertexSet>;

    std::vector<Labelled> labelled_components(const VertexSet& x, const VertexSet& w) {
        std::vector<Labelled> out;
        for (auto& comp : components_within(g_, w)) {
            const auto id = intern_component(x, comp);
            out.emplace_back(id, std::move(comp));
        }
        return out;
    }

    CanonKey anonymized_key(const VertexSet& x, const VertexSet& w) {
        const auto t0 = Clock::now();
        ++memo_->stats.canon_calls;
        auto key = canon_key_unchecked(g_, GoodPair{x, w}, KeyMode::anonymized);
        memo_->stats.canon_seconds += seconds_since(t0);
        return key;
    }

    /// Per-X keys are the multiset of component classes: an isomorphism fixing X
    /// pointwise permutes the components of G[W], and conversely.
    static CanonKey per_x_key(const VertexSet& x, const std::vector<Labelled>& parts) {
        std::vector<std::uint32_t> ids;
        ids.reserve(parts.size());
        for (const auto& part : parts) ids.push_back(part.first);
        std::sort(ids.begin(), ids.end());
        CanonKey key;
        key.x_sorted = x.members();
        key.cert.bytes.resize(ids.size() * sizeof(std::uint32_t));
        if (!ids.empty()) std::memcpy(key.cert.bytes.data(), ids.data(), key.cert.bytes.size());
        return key;
    }

    static bool has_repeated_class(const std::vector<Labelled>& parts) {
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = i + 1; j < parts.size(); ++j)
                if (parts[i].first == parts[j].first) return true;
        return false;
    }

    /// Components grouped by class, classes ordered by certificate bytes.
    std::vector<std::vector<VertexSet>> group_classes(std::vector<Labelled> parts) const {
        std::stable_sort(parts.begin(), parts.end(), [&](const Labelled& a, const Labelled& b) {
            return a.first != b.first && *memo_->certs[a.first] < *memo_->certs[b.first];
        });
        std::vector<std::vector<VertexSet>> out;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i == 0 || parts[i].first != parts[i - 1].first) out.emplace_back();
            out.back().push_back(std::move(parts[i].second));
        }
        return out;
    }

    std::vector<std::vector<VertexSet>> classes_of(const VertexSet& x, const VertexSet& w) {
        return group_classes(labelled_components(x, w));
    }

    void build_tree(TreeDecomposition& td, std::size_t node, const VertexSet& x, const VertexSet& w, BagCount m) {
        if (w.empty()) return;
        bool done = false;
        for_each_candidate_bag(g_, GoodPair{x, w}, width_, options_.candidates, [&](const VertexSet& y) {
            if (BagCount(1) + value(y, w - y) != m) return true;
            td.bags.push_back(y);
            td.parent.push_back(static_cast<int>(node));
            build_tree(td, td.bags.size() - 1, y, w - y, BagCount(m.value() - 1));
            done = true;
            return false;
        });
        if (done) return;
        const auto classes = classes_of(x, w);
        for_each_branch_split(classes, w, true, [&](const VertexSet& w1, const VertexSet& w2) {
            const auto a = value(x, w1);
            const auto b = value(x, w2);
            if (glue(a, b) != m) return true;
            // both halves hang below the same root bag
            build_tree(td, node, x, w1, a);
            build_tree(td, node, x, w2, b);
            done = true;
            return false;
        });
        if (!done) throw std::logic_error("reconstruct_tree: no extension or split attains the memoized value");
    }

    const Graph& g_;
    std::size_t width_;
    DecompositionKind kind_;
    SolveOptions options_;
    MemoTable own_memo_;
    MemoTable* memo_;
};

inline BagCount pd_k(const Graph& g, std::size_t width, const GoodPair& p, MemoTable& memo,
                     const SolveOptions& options = {}) {
    return Solver(g, width, DecompositionKind::path, options, &memo).solve(p);
}

inline BagCount td_k(const Graph& g, std::size_t width, const GoodPair& p, MemoTable& memo,
                     const SolveOptions& options = {}) {
    return Solver(g, width, DecompositionKind::tree, options, &memo).solve(p);
}

inline BagCount mspd(const Graph& g, std::size_t width, const SolveOptions& options = {}) {
    return Solver(g, width, DecompositionKind::path, options).solve_all().size;
}

inline BagCount mstd(const Graph& g, std::size_t width, const SolveOptions& options = {}) {
    return Solver(g, width, DecompositionKind::tree, options).solve_all().size;
}

}  // namespace mindecomp
